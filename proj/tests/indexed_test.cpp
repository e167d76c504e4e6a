#include <catch2/catch_amalgamated.hpp>

#include "krs/indexed.hpp"
#include "test_util.hpp"

using namespace krs;
using namespace krs::test;

namespace {

Aks random_aks(std::uint64_t seed, int nt, int ns, double density) {
    GeneratorParams p;
    p.n_terms = nt;
    p.n_stacks = ns;
    p.pole_density = density;
    p.qp_seed_size = 1;
    p.rng_seed = seed;
    return gen_random_aks(p);
}

}  // namespace

TEST_CASE("entailment over an AKS") {
    Aks k = random_aks(3, 3, 3, 0.35);
    const auto& rl = k.rl();
    Rng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
        IndexedPredicate<Subset> phi;
        for (int i = 0; i < 2; ++i) phi.values.push_back(rl.closure_hat(rng.subset(rl.stacks())));
        // reflexivity: I realizes phi |- phi at every index
        auto r = entails_aks(k, phi, phi);
        REQUIRE(r.has_value());
        auto d = k.derived_combinators();
        bool i_works = true;
        for (int i = 0; i < 2; ++i)
            i_works &= rl.realizes(d.i, imp_pi(rl, phi(i), phi(i), Variant::Bullet));
        CHECK(i_works);
        // a found realizer really is uniform
        for (int i = 0; i < 2; ++i)
            CHECK(rl.realizes(*r, imp_pi(rl, phi(i), phi(i), Variant::Bullet)));
    }
    // index size 1 reduces to the plain realizability order
    AksHeyting h = heyting_from_aks(k, Variant::Bullet);
    for (int a = 0; a < h.size; ++a)
        for (int b = 0; b < h.size; ++b) {
            IndexedPredicate<Subset> pa{{h.family[a]}}, pb{{h.family[b]}};
            CHECK(entails_aks(k, pa, pb).has_value() == h.holds(a, b));
        }
    // mismatched index sets
    IndexedPredicate<Subset> one{{subset_empty(rl.stacks())}};
    IndexedPredicate<Subset> two{{subset_empty(rl.stacks()), subset_empty(rl.stacks())}};
    CHECK_THROWS_AS(entails_aks(k, one, two), structural_error);
}

TEST_CASE("entailment over an OCA") {
    FiniteOca a = boolean_foca();
    IndexedPredicate<int> phi{{0, 1}}, psi{{1, 1}}, chi{{0, 0}};
    // phi(i) <= psi(i) pointwise, and the identity filter element works
    auto r = entails_oca(a, phi, psi);
    REQUIRE(r.has_value());
    CHECK(a.filter().test(*r));
    // psi |- chi must fail: nothing maps 1 below 0
    CHECK(!entails_oca(a, psi, chi).has_value());
    // index size 1 reduces to the realizability order
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y) {
            IndexedPredicate<int> px{{x}}, py{{y}};
            CHECK(entails_oca(a, px, py).has_value() == sqsubseteq(a, x, y).has_value());
        }
}

TEST_CASE("reindexing") {
    IndexedPredicate<int> phi{{10, 20, 30}};
    std::vector<int> id = {0, 1, 2};
    CHECK(reindex(id, phi).values == phi.values);
    std::vector<int> constant = {1, 1};
    CHECK(reindex(constant, phi).values == std::vector<int>{20, 20});
    std::vector<int> bad = {3};
    CHECK_THROWS_AS(reindex(bad, phi), structural_error);

    // transport of a realizer along a 2 -> 3 map
    FiniteOca a = boolean_foca();
    IndexedPredicate<int> lo{{0, 0, 1}}, hi{{1, 1, 1}};
    auto r = entails_oca(a, lo, hi);
    REQUIRE(r.has_value());
    std::vector<int> f = {2, 0};
    auto rlo = reindex(f, lo), rhi = reindex(f, hi);
    for (int j = 0; j < 2; ++j) CHECK(a.leq(a.app(*r, rlo(j)), rhi(j)));
}

TEST_CASE("entailment realizers transport along reindexing maps") {
    Aks k = random_aks(5, 3, 3, 0.4);
    Rng rng(2);
    const auto& rl = k.rl();
    for (int trial = 0; trial < 25; ++trial) {
        IndexedPredicate<Subset> phi, psi;
        for (int i = 0; i < 3; ++i) {
            phi.values.push_back(rl.closure_hat(rng.subset(rl.stacks())));
            psi.values.push_back(rl.closure_hat(rng.subset(rl.stacks())));
        }
        auto r = entails_aks(k, phi, psi);
        if (!r) continue;
        std::vector<int> f = {rng.below(3), rng.below(3)};
        auto fphi = reindex(f, phi), fpsi = reindex(f, psi);
        for (int j = 0; j < 2; ++j)
            CHECK(rl.realizes(*r, imp_pi(rl, fphi(j), fpsi(j), Variant::Bullet)));
        CHECK(entails_aks(k, fphi, fpsi).has_value());
    }
}

TEST_CASE("indexed law bundles on a small AKS") {
    Aks k = random_aks(7, 3, 3, 0.3);
    CHECK(check_indexed_inclusion_equivalence(k, 3).all_passed());
    CHECK(check_indexed_iso(k, 3).all_passed());
    auto probe = find_nonuniform_pair(k, 2);
    CHECK(probe.passed);
    CHECK(!probe.notes.empty());
    OcaFromAks f = aks_to_foca_bullet(k);
    CHECK(check_indexed_oca_laws(f.oca, 3).all_passed());
    CHECK(check_indexed_equivalence(f.oca, 2).all_passed());
}

TEST_CASE("indexed equivalence on tiny algebras") {
    CHECK(check_indexed_equivalence(one_element_oca(), 2).all_passed());
    CHECK(check_indexed_equivalence(boolean_foca(), 3).all_passed());
}

TEST_CASE("pointwise realizers without a uniform one are detected") {
    // Two specialist terms: t0 realizes only stack x, t1 only stack y.
    // push is the stack projection and app the term projection. The pole
    // is deliberately left unsaturated: saturation would pump K into a
    // uniform realizer and close the gap.
    RealizabilityLattice rl(Carrier(2), Carrier(2), {1, 0, 0, 1}, {0, 1, 0, 1});
    Subset qp(2);
    qp.set(0);
    qp.set(1);
    Aks k(std::move(rl), {0, 0, 1, 1}, qp, 0, 1);

    Subset none(2), x = subset_singleton(Carrier(2), 0), y = subset_singleton(Carrier(2), 1);
    IndexedPredicate<Subset> phi{{none, none}}, psi{{x, y}};
    // pointwise: each index has its own realizer
    IndexedPredicate<Subset> phi0{{none}}, psi0{{x}}, phi1{{none}}, psi1{{y}};
    CHECK(entails_aks(k, phi0, psi0).has_value());
    CHECK(entails_aks(k, phi1, psi1).has_value());
    // but no single quasi-proof works at both indices
    CHECK(!entails_aks(k, phi, psi).has_value());

    // saturating restores uniformity here
    Aks fixed = saturate(k);
    CHECK(entails_aks(fixed, phi, psi).has_value());
}
