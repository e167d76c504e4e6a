#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "krs/aks.hpp"

namespace krs {

struct GeneratorParams {
    int n_terms = 4;
    int n_stacks = 4;
    double pole_density = 0.3;
    int qp_seed_size = 1;
    std::uint64_t rng_seed = 1;
};

// Random push/app tables, a random quasi-proof seed closed under app, a
// pole seeded at the given density and then saturated. Identical params
// give identical instances.
inline Aks gen_random_aks(const GeneratorParams& p) {
    if (p.n_terms < 1 || p.n_stacks < 1) throw structural_error("sizes must be at least 1");
    if (p.pole_density < 0.0 || p.pole_density > 1.0)
        throw structural_error("pole density must lie in [0,1]");
    if (p.qp_seed_size < 0) throw structural_error("qp seed size must be nonnegative");
    Rng rng(p.rng_seed);
    const int nt = p.n_terms, ns = p.n_stacks;
    std::vector<int> push(static_cast<std::size_t>(nt) * ns);
    for (int& v : push) v = rng.below(ns);
    std::vector<int> app(static_cast<std::size_t>(nt) * nt);
    for (int& v : app) v = rng.below(nt);
    int k = rng.below(nt);
    int s = rng.below(nt);
    Subset qp(nt);
    for (int i = 0; i < p.qp_seed_size; ++i) qp.set(rng.below(nt));
    std::vector<uint8_t> pole(static_cast<std::size_t>(nt) * ns, 0);
    for (auto& cell : pole) cell = rng.chance(p.pole_density) ? 1 : 0;
    RealizabilityLattice rl(Carrier(nt), Carrier(ns), std::move(pole), std::move(push));
    Aks raw(std::move(rl), std::move(app), std::move(qp), k, s);
    return saturate(raw);
}

struct VectorPolarityParams {
    int prime = 2;  // 2 or 3; the carrier is F_p^3
    std::optional<std::array<int, 3>> shift;  // push uses <v, w - shift> when set
};

// F_p^3 with the inner-product pole <t,pi> = 0 and
// push(v,w) = <v,w> (v x w), or <v, w - w0> (v x w) for the shifted form.
// Vector (x,y,z) has index x p^2 + y p + z.
inline RealizabilityLattice gen_vector_polarity(const VectorPolarityParams& params) {
    const int p = params.prime;
    if (p != 2 && p != 3) throw structural_error("unsupported prime (expected 2 or 3)");
    if (params.shift)
        for (int c : *params.shift)
            if (c < 0 || c >= p) throw structural_error("shift vector out of range");
    const int n = p * p * p;
    auto decode = [&](int i) {
        return std::array<int, 3>{i / (p * p), (i / p) % p, i % p};
    };
    auto encode = [&](const std::array<int, 3>& v) { return v[0] * p * p + v[1] * p + v[2]; };
    auto dot = [&](const std::array<int, 3>& u, const std::array<int, 3>& v) {
        return (u[0] * v[0] + u[1] * v[1] + u[2] * v[2]) % p;
    };
    auto cross = [&](const std::array<int, 3>& u, const std::array<int, 3>& v) {
        return std::array<int, 3>{((u[1] * v[2] - u[2] * v[1]) % p + p) % p,
                                  ((u[2] * v[0] - u[0] * v[2]) % p + p) % p,
                                  ((u[0] * v[1] - u[1] * v[0]) % p + p) % p};
    };
    std::vector<uint8_t> pole(static_cast<std::size_t>(n) * n);
    std::vector<int> push(static_cast<std::size_t>(n) * n);
    for (int t = 0; t < n; ++t) {
        auto v = decode(t);
        for (int q = 0; q < n; ++q) {
            auto w = decode(q);
            pole[static_cast<std::size_t>(t) * n + q] = dot(v, w) == 0;
            auto w_eff = w;
            if (params.shift)
                for (int c = 0; c < 3; ++c) w_eff[c] = ((w[c] - (*params.shift)[c]) % p + p) % p;
            int scalar = dot(v, w_eff);
            auto cr = cross(v, w);
            for (int c = 0; c < 3; ++c) cr[c] = cr[c] * scalar % p;
            push[static_cast<std::size_t>(t) * n + q] = encode(cr);
        }
    }
    return RealizabilityLattice(Carrier(n), Carrier(n), std::move(pole), std::move(push));
}

inline int vector_index(int prime, int x, int y, int z) {
    return x * prime * prime + y * prime + z;
}

}  // namespace krs
