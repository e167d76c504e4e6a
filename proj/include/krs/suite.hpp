#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krs/constructions.hpp"
#include "krs/generators.hpp"
#include "krs/heyting.hpp"
#include "krs/indexed.hpp"
#include "krs/io.hpp"
#include "krs/polynomial.hpp"

namespace krs {

// Closure and reflection laws of the polarity, quantified over all
// subsets when 2^size fits the budget.
inline SuiteReport check_polarity_laws(const RealizabilityLattice& rl,
                                       const CheckOptions& opt = {}) {
    SuiteReport rep;
    const int ns = rl.stacks().size(), nl = rl.terms().size();

    LawCheck galois;
    galois.name = "polarity/galois";
    LawCheck chain;
    chain.name = "polarity/closure-chain";
    LawCheck hatperp;
    hatperp.name = "polarity/perp-of-hat";
    LawCheck reflect;
    reflect.name = "polarity/reflection";
    LawCheck openclosed;
    openclosed.name = "polarity/tilde-open-equals-hat-closed";

    auto probe_stacks = [&](const Subset& P) {
        Subset bar = rl.closure_bar(P);
        Subset hat = rl.closure_hat(P);
        Subset tilde = rl.interior_tilde(P);
        if (!P.is_subset_of(bar)) galois.fail("P not below bar at " + subset_to_string(P));
        if (rl.perp_of_stacks(bar) != rl.perp_of_stacks(P))
            galois.fail("triple perp at " + subset_to_string(P));
        if (!(tilde.is_subset_of(P) && P.is_subset_of(hat) && hat.is_subset_of(bar)))
            chain.fail(subset_to_string(P));
        if (rl.closure_bar(bar) != bar || rl.closure_hat(hat) != hat ||
            rl.interior_tilde(tilde) != tilde)
            chain.fail("idempotence at " + subset_to_string(P));
        if (rl.perp_of_stacks(hat) != rl.perp_of_stacks(P) || rl.closure_bar(hat) != bar)
            hatperp.fail(subset_to_string(P));
        if ((rl.interior_tilde(P) == P) != (rl.closure_hat(P) == P))
            openclosed.fail(subset_to_string(P));
        ++galois.cases;
        ++chain.cases;
        ++hatperp.cases;
        ++openclosed.cases;
    };
    auto probe_pairs = [&](const Subset& P, const Subset& Q) {
        // Alexandroff: hat distributes over unions
        if (rl.closure_hat(P | Q) != (rl.closure_hat(P) | rl.closure_hat(Q)))
            chain.fail("hat union at " + subset_to_string(P) + " u " + subset_to_string(Q));
        Subset barq = rl.closure_bar(Q);
        if (P.is_subset_of(barq) != rl.closure_bar(P).is_subset_of(barq))
            reflect.fail("bar reflection at " + subset_to_string(P));
        Subset hatq = rl.closure_hat(Q);
        if (P.is_subset_of(hatq) != rl.closure_hat(P).is_subset_of(hatq))
            reflect.fail("hat reflection at " + subset_to_string(P));
        Subset hatp = rl.closure_hat(P);
        if (hatp.is_subset_of(Q) != hatp.is_subset_of(rl.interior_tilde(Q)))
            reflect.fail("tilde reflection at " + subset_to_string(P));
        ++reflect.cases;
    };
    auto probe_terms = [&](const Subset& L) {
        Subset perp = rl.perp_of_terms(L);
        if (!L.is_subset_of(rl.perp_of_stacks(perp)))
            galois.fail("L not below its double perp at " + subset_to_string(L));
        if (rl.perp_of_terms(rl.perp_of_stacks(perp)) != perp)
            galois.fail("term triple perp at " + subset_to_string(L));
        ++galois.cases;
    };

    if (fits_exhaustive(ns, opt.exhaustive_budget)) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << ns); ++m) {
            Subset P(ns);
            for (int i = 0; i < ns; ++i)
                if (m >> i & 1) P.set(i);
            probe_stacks(P);
        }
    } else {
        Rng rng(opt.seed);
        for (long long i = 0; i < opt.samples; ++i) probe_stacks(rng.subset(rl.stacks()));
        chain.sampled = true;
    }
    if (fits_exhaustive(2 * ns, opt.exhaustive_budget)) {
        for (std::uint64_t m1 = 0; m1 < (std::uint64_t{1} << ns); ++m1)
            for (std::uint64_t m2 = 0; m2 < (std::uint64_t{1} << ns); ++m2) {
                Subset P(ns), Q(ns);
                for (int i = 0; i < ns; ++i) {
                    if (m1 >> i & 1) P.set(i);
                    if (m2 >> i & 1) Q.set(i);
                }
                probe_pairs(P, Q);
            }
    } else {
        Rng rng(opt.seed + 1);
        for (long long i = 0; i < opt.samples; ++i)
            probe_pairs(rng.subset(rl.stacks()), rng.subset(rl.stacks()));
        reflect.sampled = true;
    }
    if (fits_exhaustive(nl, opt.exhaustive_budget)) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << nl); ++m) {
            Subset L(nl);
            for (int i = 0; i < nl; ++i)
                if (m >> i & 1) L.set(i);
            probe_terms(L);
        }
    } else {
        Rng rng(opt.seed + 2);
        for (long long i = 0; i < opt.samples; ++i) probe_terms(rng.subset(rl.terms()));
    }
    // special values
    if (rl.closure_hat(subset_empty(rl.stacks())).any()) chain.fail("hat of empty not empty");
    if (rl.interior_tilde(subset_full(rl.stacks())) != subset_full(rl.stacks()))
        chain.fail("tilde of the full set not full");

    rep.add(std::move(galois));
    rep.add(std::move(chain));
    rep.add(std::move(hatperp));
    rep.add(std::move(reflect));
    rep.add(std::move(openclosed));

    LawCheck fam;
    fam.name = "polarity/closed-families";
    if (ns <= opt.cap) {
        auto perp_family = enumerate_closed(rl, ClosureKind::Perp, opt.cap);
        auto bullet_family = enumerate_closed(rl, ClosureKind::Bullet, opt.cap);
        for (const auto& p : perp_family) {
            if (!std::binary_search(bullet_family.begin(), bullet_family.end(), p, subset_less))
                fam.fail("bar-closed set outside P_bullet: " + subset_to_string(p));
            ++fam.cases;
        }
        for (std::size_t i = 0; i < bullet_family.size() && i < 32; ++i)
            for (std::size_t j = 0; j < bullet_family.size() && j < 32; ++j) {
                Subset meet = bullet_family[i] & bullet_family[j];
                Subset join = bullet_family[i] | bullet_family[j];
                if (!rl.is_hat_closed(meet) || !rl.is_hat_closed(join))
                    fam.fail("P_bullet not a sublattice");
                ++fam.cases;
            }
        for (std::size_t i = 0; i < perp_family.size() && i < 32; ++i)
            for (std::size_t j = 0; j < perp_family.size() && j < 32; ++j) {
                if (!rl.is_bar_closed(perp_family[i] & perp_family[j]))
                    fam.fail("P_perp not closed under intersection");
                Subset sup = family_sup(rl, ClosureKind::Perp,
                                        {perp_family[i], perp_family[j]});
                if (!rl.is_bar_closed(sup)) fam.fail("sup_perp left the family");
                ++fam.cases;
            }
    } else {
        fam.note("stack carrier exceeds cap; family enumeration skipped");
    }
    rep.add(std::move(fam));
    return rep;
}

inline SuiteReport check_stackops_laws(const RealizabilityLattice& rl,
                                       const CheckOptions& opt = {}) {
    SuiteReport rep;
    rep.add(check_adjunction(rl, Variant::Plain, opt));
    rep.add(check_adjunction(rl, Variant::Bullet, opt));
    rep.add(check_adjunction(rl, Variant::Perp, opt));
    rep.add(check_inclusion_tables(rl, opt));
    rep.add(check_reflection_equivalences(rl, opt));
    rep.add(check_monotony(rl, opt));
    return rep;
}

inline SuiteReport check_aks_laws(const Aks& k, const CheckOptions& opt = {}) {
    SuiteReport rep;
    rep.add(validate_aks(k));
    rep.add(check_derived_combinators(k));
    rep.add(check_identity_realizes(k, opt));
    rep.add(check_inclusion_chain(k, opt));
    rep.add(check_eta_chain(k, opt));
    rep.add(check_combinator_inequalities(k, opt));
    LawCheck lemma;
    lemma.name = "reduction-lemma-equivalence";
    try {
        auto st = reduction_lemma_status(k, opt.exhaustive_budget);
        lemma.cases = 4;
        if (!st.all_agree()) lemma.fail("the four formulations disagree");
    } catch (const cap_error& e) {
        lemma.note(std::string("skipped: ") + e.what());
    }
    rep.add(std::move(lemma));
    return rep;
}

namespace detail {

template <class F>
void guarded(SuiteReport& rep, const std::string& name, F&& f) {
    try {
        f();
    } catch (const cap_error& e) {
        LawCheck skip;
        skip.name = name;
        skip.note(std::string("skipped: ") + e.what());
        rep.add(std::move(skip));
    }
}

}  // namespace detail

inline SuiteReport check_oca_suite_for_aks(const Aks& k, const CheckOptions& opt) {
    SuiteReport rep;
    detail::guarded(rep, "foca-bullet", [&] {
        OcaFromAks f = aks_to_foca_bullet(k, opt.cap);
        auto cls = classify_oca(f.oca);
        LawCheck law;
        law.name = "foca-bullet-classification";
        law.cases = 1;
        if (cls.cls != OcaClass::FOca) law.fail("A_Kbullet is not a FOCA");
        rep.add(std::move(law));
        rep.add(check_sharp_theorems(f.oca, cls));
        rep.merge(check_heyting_laws(f.oca, heyting_preorder(f.oca)));
        // beta inequality over a few shapes
        using P = Polynomial<int>;
        P y = P::var("y"), x = P::var("x");
        std::vector<P> shapes = {y, x, P::apply(x, y), P::apply(P::apply(x, y), y),
                                 P::apply(y, P::apply(x, x))};
        LawCheck beta;
        beta.name = "beta-inequality";
        for (const auto& t : shapes) {
            LawCheck one = check_beta_inequality(f.oca, t, "y", opt);
            beta.cases += one.cases;
            if (!one.passed) {
                beta.passed = false;
                for (auto& c : one.counterexamples) beta.fail(c);
            }
        }
        rep.add(std::move(beta));
    });
    detail::guarded(rep, "ioca-perp", [&] {
        OcaFromAks io = aks_to_ioca_perp(k, opt.cap);
        auto cls = classify_oca(io.oca);
        LawCheck law;
        law.name = "ioca-perp-classification";
        law.cases = 1;
        if (!cls.cls || (cls.cls != OcaClass::IOca && cls.cls != OcaClass::FOca) ||
            !cls.pe_holds)
            law.fail("A_Kperp is not an IOCA with e = {E}^perp");
        law.note(cls.pe_prime_holds ? "PE' holds on this instance"
                                    : "PE' fails on this instance");
        rep.add(std::move(law));
        rep.add(check_sharp_theorems(io.oca, cls));
    });
    return rep;
}

inline SuiteReport check_constructions_suite(const Aks& k, const CheckOptions& opt) {
    SuiteReport rep;
    detail::guarded(rep, "iso-Hk-HA", [&] { rep.add(check_iso_hk_ha(k, opt.cap)); });
    detail::guarded(rep, "inclusion-equivalence",
                    [&] { rep.add(check_inclusion_equivalence(k, opt)); });
    detail::guarded(rep, "realizer-variant-agreement",
                    [&] { rep.add(check_realizer_variant_agreement(k, opt)); });
    detail::guarded(rep, "foca-to-aks", [&] {
        OcaFromAks f = aks_to_foca_bullet(k, opt.cap);
        Aks ka = foca_to_aks(f.oca);
        LawCheck law = validate_aks(ka);
        law.name = "foca-to-aks-axioms";
        rep.add(std::move(law));
        rep.merge(check_galois(f.oca, opt));
    });
    detail::guarded(rep, "triangle", [&] { rep.merge(check_triangle_commutes(k, opt)); });
    detail::guarded(rep, "sharp-equals-bar-circ",
                    [&] { rep.add(check_sharp_equals_bar_circ(k, opt.cap)); });
    return rep;
}

inline SuiteReport check_indexed_suite(const Aks& k, const CheckOptions& opt) {
    SuiteReport rep;
    detail::guarded(rep, "indexed-aks", [&] {
        rep.merge(check_indexed_inclusion_equivalence(k, 3, opt));
        rep.merge(check_indexed_iso(k, 3, opt));
        rep.add(find_nonuniform_pair(k, 2, opt));
        OcaFromAks f = aks_to_foca_bullet(k, opt.cap);
        rep.merge(check_indexed_oca_laws(f.oca, 3, opt));
        rep.merge(check_indexed_equivalence(f.oca, 2, opt));
    });
    return rep;
}

enum class SuiteKind { Polarity, StackOps, AksSuite, OcaSuite, Constructions, Indexed, All };

inline std::optional<SuiteKind> suite_from_name(const std::string& name) {
    if (name == "polarity") return SuiteKind::Polarity;
    if (name == "stackops") return SuiteKind::StackOps;
    if (name == "aks") return SuiteKind::AksSuite;
    if (name == "oca") return SuiteKind::OcaSuite;
    if (name == "constructions") return SuiteKind::Constructions;
    if (name == "indexed") return SuiteKind::Indexed;
    if (name == "all") return SuiteKind::All;
    return std::nullopt;
}

// Dispatch a suite over an instance. Suites that need structure the
// instance does not have (an app table, a FOCA) are errors when named
// explicitly and silently restricted under `all`.
inline SuiteReport run_suite(const Instance& inst, SuiteKind kind, const CheckOptions& opt = {}) {
    SuiteReport rep;
    const RealizabilityLattice* rl = nullptr;
    const Aks* aks = std::get_if<Aks>(&inst);
    const FiniteOca* oca = std::get_if<FiniteOca>(&inst);
    if (auto* r = std::get_if<RealizabilityLattice>(&inst)) rl = r;
    if (aks) rl = &aks->rl();

    const bool all = kind == SuiteKind::All;
    auto want = [&](SuiteKind k2) { return all || kind == k2; };
    auto unsupported = [&](const char* what) {
        if (!all)
            throw structural_error(std::string("suite '") + what +
                                   "' does not apply to this instance kind");
    };

    if (want(SuiteKind::Polarity)) {
        if (rl)
            rep.merge(check_polarity_laws(*rl, opt));
        else
            unsupported("polarity");
    }
    if (want(SuiteKind::StackOps)) {
        if (rl)
            rep.merge(check_stackops_laws(*rl, opt));
        else
            unsupported("stackops");
    }
    if (want(SuiteKind::AksSuite)) {
        if (aks)
            rep.merge(check_aks_laws(*aks, opt));
        else
            unsupported("aks");
    }
    if (want(SuiteKind::OcaSuite)) {
        if (aks) {
            rep.merge(check_oca_suite_for_aks(*aks, opt));
        } else if (oca) {
            auto cls = classify_oca(*oca);
            rep.merge(cls.report);
            rep.add(check_sharp_theorems(*oca, cls));
            if (cls.cls) rep.merge(check_heyting_laws(*oca, heyting_preorder(*oca)));
        } else {
            unsupported("oca");
        }
    }
    if (want(SuiteKind::Constructions)) {
        if (aks) {
            rep.merge(check_constructions_suite(*aks, opt));
        } else if (oca) {
            auto cls = classify_oca(*oca);
            if (cls.cls == OcaClass::FOca) {
                detail::guarded(rep, "galois", [&] {
                    Aks ka = foca_to_aks(*oca);
                    LawCheck law = validate_aks(ka);
                    law.name = "foca-to-aks-axioms";
                    rep.add(std::move(law));
                    rep.merge(check_galois(*oca, opt));
                });
            } else {
                LawCheck law;
                law.name = "foca-to-aks-axioms";
                law.note("instance is not a FOCA; construction suite restricted");
                rep.add(std::move(law));
            }
        } else {
            unsupported("constructions");
        }
    }
    if (want(SuiteKind::Indexed)) {
        if (aks) {
            rep.merge(check_indexed_suite(*aks, opt));
        } else if (oca) {
            auto cls = classify_oca(*oca);
            if (cls.cls) rep.merge(check_indexed_oca_laws(*oca, 3, opt));
            if (cls.cls == OcaClass::FOca)
                detail::guarded(rep, "indexed-equivalence",
                                [&] { rep.merge(check_indexed_equivalence(*oca, 2, opt)); });
        } else {
            unsupported("indexed");
        }
    }
    rep.sort_by_name();
    return rep;
}

}  // namespace krs
