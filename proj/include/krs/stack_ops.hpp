#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "krs/polarity.hpp"
#include "krs/report.hpp"

namespace krs {

// Which of the three push/conductor flavours to use: the raw operation,
// the hat-closed one, or the bar-closed one.
enum class Variant { Plain, Bullet, Perp };

inline const char* to_string(Variant v) {
    switch (v) {
        case Variant::Plain: return "plain";
        case Variant::Bullet: return "bullet";
        case Variant::Perp: return "perp";
    }
    return "?";
}

// L ~> P = { t.pi : t in L, pi in P }, then hat / bar for the variants.
inline Subset push_set(const RealizabilityLattice& rl, const Subset& L, const Subset& P,
                       Variant v = Variant::Plain) {
    require_carrier(L, rl.terms(), "push_set L");
    require_carrier(P, rl.stacks(), "push_set P");
    Subset image(rl.stacks().size());
    for (auto t = L.find_first(); t != Subset::npos; t = L.find_next(t))
        for (auto p = P.find_first(); p != Subset::npos; p = P.find_next(p))
            image.set(rl.push(static_cast<int>(t), static_cast<int>(p)));
    switch (v) {
        case Variant::Plain: return image;
        case Variant::Bullet: return rl.closure_hat(image);
        case Variant::Perp: return rl.closure_bar(image);
    }
    return image;
}

// P * L = { pi : L.pi subseteq P }; the bullet variant conditions on the
// whole of bar{pi} and equals tilde(P * L); the perp variant is bar(P * L).
inline Subset conduct(const RealizabilityLattice& rl, const Subset& P, const Subset& L,
                      Variant v = Variant::Plain) {
    require_carrier(P, rl.stacks(), "conduct P");
    require_carrier(L, rl.terms(), "conduct L");
    Subset plain(rl.stacks().size());
    for (int p = 0; p < rl.stacks().size(); ++p) {
        bool in = true;
        for (auto t = L.find_first(); t != Subset::npos; t = L.find_next(t))
            if (!P.test(rl.push(static_cast<int>(t), p))) {
                in = false;
                break;
            }
        if (in) plain.set(p);
    }
    switch (v) {
        case Variant::Plain: return plain;
        case Variant::Bullet: return rl.interior_tilde(plain);
        case Variant::Perp: return rl.closure_bar(plain);
    }
    return plain;
}

// P -> Q = ^perp P ~> Q
inline Subset imp_pi(const RealizabilityLattice& rl, const Subset& P, const Subset& Q,
                     Variant v = Variant::Plain) {
    require_carrier(P, rl.stacks(), "imp_pi P");
    return push_set(rl, rl.perp_of_stacks(P), Q, v);
}

// P o Q = P * ^perp Q
inline Subset app_pi(const RealizabilityLattice& rl, const Subset& P, const Subset& Q,
                     Variant v = Variant::Plain) {
    require_carrier(Q, rl.stacks(), "app_pi Q");
    return conduct(rl, P, rl.perp_of_stacks(Q), v);
}

namespace detail {

// Visit (L, P, R) triples: exhaustively when 2^|Lambda| * 4^|Pi| fits the
// budget, otherwise `samples` seeded random triples.
template <class F>
std::pair<long long, bool> for_each_triple(const RealizabilityLattice& rl,
                                           const CheckOptions& opt, F&& body) {
    const int nl = rl.terms().size();
    const int ns = rl.stacks().size();
    long double total = std::pow(2.0L, nl) * std::pow(2.0L, 2 * ns);
    long long cases = 0;
    if (total <= static_cast<long double>(opt.exhaustive_budget)) {
        const std::uint64_t lm = std::uint64_t{1} << nl, sm = std::uint64_t{1} << ns;
        for (std::uint64_t a = 0; a < lm; ++a) {
            Subset L(nl);
            for (int i = 0; i < nl; ++i)
                if (a >> i & 1) L.set(i);
            for (std::uint64_t b = 0; b < sm; ++b) {
                Subset P(ns);
                for (int i = 0; i < ns; ++i)
                    if (b >> i & 1) P.set(i);
                for (std::uint64_t c = 0; c < sm; ++c) {
                    Subset R(ns);
                    for (int i = 0; i < ns; ++i)
                        if (c >> i & 1) R.set(i);
                    body(L, P, R);
                    ++cases;
                }
            }
        }
        return {cases, false};
    }
    Rng rng(opt.seed);
    for (long long i = 0; i < opt.samples; ++i) {
        body(rng.subset(rl.terms()), rng.subset(rl.stacks()), rng.subset(rl.stacks()));
        ++cases;
    }
    return {cases, true};
}

}  // namespace detail

// Adjunction laws between the conductor and push families.
//   plain:  L ~> R <= P  iff  R <= P * L            (all subsets)
//   bullet: same with the bullet pair, P and R hat-closed
//   perp:   direction 1 must hold for bar-closed P, R; the converse can
//           fail and every failure is recorded as a note, not an error.
inline LawCheck check_adjunction(const RealizabilityLattice& rl, Variant v,
                                 const CheckOptions& opt = {}) {
    LawCheck law;
    law.name = std::string("adjunction/") + to_string(v);
    auto witness = [&](const Subset& L, const Subset& P, const Subset& R) {
        return "L=" + subset_to_string(L) + " P=" + subset_to_string(P) +
               " R=" + subset_to_string(R);
    };
    auto [cases, sampled] = detail::for_each_triple(rl, opt, [&](Subset L, Subset P, Subset R) {
        switch (v) {
            case Variant::Plain: {
                bool lhs = push_set(rl, L, R).is_subset_of(P);
                bool rhs = R.is_subset_of(conduct(rl, P, L));
                if (lhs != rhs) law.fail(witness(L, P, R));
                break;
            }
            case Variant::Bullet: {
                P = rl.closure_hat(P);
                R = rl.closure_hat(R);
                bool lhs = push_set(rl, L, R, Variant::Bullet).is_subset_of(P);
                bool rhs = R.is_subset_of(conduct(rl, P, L, Variant::Bullet));
                if (lhs != rhs) law.fail(witness(L, P, R));
                break;
            }
            case Variant::Perp: {
                P = rl.closure_bar(P);
                R = rl.closure_bar(R);
                bool lhs = push_set(rl, L, R, Variant::Perp).is_subset_of(P);
                bool rhs = R.is_subset_of(conduct(rl, P, L, Variant::Perp));
                if (lhs && !rhs) law.fail(witness(L, P, R));
                if (rhs && !lhs) law.note("direction 2 fails at " + witness(L, P, R));
                break;
            }
        }
    });
    law.cases = cases;
    law.sampled = sampled;
    return law;
}

// The inclusion tables that hold in any realizability lattice:
//   P *b L <= P * L <= P *p L   and   L ~> P <= L ~>b P <= L ~>p P,
// plus the arrow chain P -> Q <= P ->b Q <= P ->p Q.
inline LawCheck check_inclusion_tables(const RealizabilityLattice& rl,
                                       const CheckOptions& opt = {}) {
    LawCheck law;
    law.name = "inclusion-tables";
    auto [cases, sampled] = detail::for_each_triple(rl, opt, [&](Subset L, Subset P, Subset Q) {
        Subset c_b = conduct(rl, P, L, Variant::Bullet);
        Subset c_p = conduct(rl, P, L, Variant::Plain);
        Subset c_perp = conduct(rl, P, L, Variant::Perp);
        if (!c_b.is_subset_of(c_p) || !c_p.is_subset_of(c_perp))
            law.fail("conductor chain at L=" + subset_to_string(L) + " P=" + subset_to_string(P));
        Subset w_p = push_set(rl, L, P, Variant::Plain);
        Subset w_b = push_set(rl, L, P, Variant::Bullet);
        Subset w_perp = push_set(rl, L, P, Variant::Perp);
        if (!w_p.is_subset_of(w_b) || !w_b.is_subset_of(w_perp))
            law.fail("push chain at L=" + subset_to_string(L) + " P=" + subset_to_string(P));
        Subset i_p = imp_pi(rl, P, Q, Variant::Plain);
        Subset i_b = imp_pi(rl, P, Q, Variant::Bullet);
        Subset i_perp = imp_pi(rl, P, Q, Variant::Perp);
        if (!i_p.is_subset_of(i_b) || !i_b.is_subset_of(i_perp))
            law.fail("arrow chain at P=" + subset_to_string(P) + " Q=" + subset_to_string(Q));
    });
    law.cases = cases;
    law.sampled = sampled;
    return law;
}

// Reflection equivalences: against a bar-closed R the plain and perp
// operations are interchangeable on either side; against a hat-closed R
// the same holds for the bullet pair.
inline LawCheck check_reflection_equivalences(const RealizabilityLattice& rl,
                                              const CheckOptions& opt = {}) {
    LawCheck law;
    law.name = "reflection-equivalences";
    auto [cases, sampled] = detail::for_each_triple(rl, opt, [&](Subset L, Subset P, Subset R) {
        Subset push_p = push_set(rl, L, P);
        Subset cond_p = conduct(rl, P, L);
        Subset Rbar = rl.closure_bar(R);
        if (push_p.is_subset_of(Rbar) != push_set(rl, L, P, Variant::Perp).is_subset_of(Rbar))
            law.fail("push/perp reflection at L=" + subset_to_string(L) +
                     " P=" + subset_to_string(P) + " R=" + subset_to_string(Rbar));
        if (cond_p.is_subset_of(Rbar) != conduct(rl, P, L, Variant::Perp).is_subset_of(Rbar))
            law.fail("conduct/perp reflection at L=" + subset_to_string(L) +
                     " P=" + subset_to_string(P) + " R=" + subset_to_string(Rbar));
        Subset Rhat = rl.closure_hat(R);
        if (push_p.is_subset_of(Rhat) != push_set(rl, L, P, Variant::Bullet).is_subset_of(Rhat))
            law.fail("push/bullet reflection at L=" + subset_to_string(L) +
                     " P=" + subset_to_string(P) + " R=" + subset_to_string(Rhat));
        if (Rhat.is_subset_of(cond_p) != Rhat.is_subset_of(conduct(rl, P, L, Variant::Bullet)))
            law.fail("conduct/bullet reflection at L=" + subset_to_string(L) +
                     " P=" + subset_to_string(P) + " R=" + subset_to_string(Rhat));
    });
    law.cases = cases;
    law.sampled = sampled;
    return law;
}

// Monotonicity contracts: the o-family is monotone in both variables, the
// arrow family antitone in the first and monotone in the second. The raw
// conductor is antitone in L and the raw push monotone in both.
inline LawCheck check_monotony(const RealizabilityLattice& rl, const CheckOptions& opt = {}) {
    LawCheck law;
    law.name = "monotony";
    Rng rng(opt.seed);
    for (long long i = 0; i < opt.samples; ++i) {
        Subset P = rng.subset(rl.stacks());
        Subset Q = rng.subset(rl.stacks());
        Subset P2 = P | rng.subset(rl.stacks());
        Subset Q2 = Q | rng.subset(rl.stacks());
        Subset L = rng.subset(rl.terms());
        Subset L2 = L | rng.subset(rl.terms());
        for (Variant v : {Variant::Plain, Variant::Bullet, Variant::Perp}) {
            if (!app_pi(rl, P, Q, v).is_subset_of(app_pi(rl, P2, Q, v)) ||
                !app_pi(rl, P, Q, v).is_subset_of(app_pi(rl, P, Q2, v)))
                law.fail(std::string("app not monotone (") + to_string(v) + ")");
            if (!imp_pi(rl, P2, Q, v).is_subset_of(imp_pi(rl, P, Q, v)) ||
                !imp_pi(rl, P, Q, v).is_subset_of(imp_pi(rl, P, Q2, v)))
                law.fail(std::string("arrow contract broken (") + to_string(v) + ")");
            if (!conduct(rl, P, L2, v).is_subset_of(conduct(rl, P, L, v)) ||
                !conduct(rl, P, L, v).is_subset_of(conduct(rl, P2, L, v)))
                law.fail(std::string("conductor contract broken (") + to_string(v) + ")");
            if (!push_set(rl, L, P, v).is_subset_of(push_set(rl, L2, P2, v)))
                law.fail(std::string("push not monotone (") + to_string(v) + ")");
        }
        ++law.cases;
    }
    law.sampled = true;
    return law;
}

}  // namespace krs
