#pragma once

#include <string>
#include <utility>
#include <vector>

#include "krs/stack_ops.hpp"

namespace krs {

// I = SKK, E = S(KI), B = S(KS)K, evaluated through the application table.
// EE is kept alongside because the adjunctor statements use it.
struct DerivedCombinators {
    int i, e, b, ee;
};

// A realizability lattice plus application on terms, an app-closed set of
// quasi-proofs and the two distinguished combinators. The constructor
// closes the given quasi-proof generators under application; it does not
// force the pole axioms (validate_aks reports on them, saturate repairs).
class AbstractKrivineStructure {
public:
    AbstractKrivineStructure(RealizabilityLattice rl, std::vector<int> app_entries,
                             Subset qp_generators, int comb_k, int comb_s)
        : rl_(std::move(rl)), app_(std::move(app_entries)) {
        const int n = rl_.terms().size();
        if (app_.size() != static_cast<std::size_t>(n) * n)
            throw structural_error("app table has wrong dimensions");
        for (int r : app_)
            if (r < 0 || r >= n) throw structural_error("app table entry out of range");
        if (comb_k < 0 || comb_k >= n || comb_s < 0 || comb_s >= n)
            throw structural_error("combinator index out of range");
        require_carrier(qp_generators, rl_.terms(), "quasi-proof generators");
        k_ = comb_k;
        s_ = comb_s;
        qp_ = std::move(qp_generators);
        qp_.set(k_);
        qp_.set(s_);
        // close under application
        bool changed = true;
        while (changed) {
            changed = false;
            for (auto t = qp_.find_first(); t != Subset::npos; t = qp_.find_next(t))
                for (auto s = qp_.find_first(); s != Subset::npos; s = qp_.find_next(s)) {
                    int r = app(static_cast<int>(t), static_cast<int>(s));
                    if (!qp_.test(r)) {
                        qp_.set(r);
                        changed = true;
                    }
                }
        }
    }

    const RealizabilityLattice& rl() const { return rl_; }
    int app(int t, int s) const { return app_[static_cast<std::size_t>(t) * rl_.terms().size() + s]; }
    const std::vector<int>& app_table() const { return app_; }
    const Subset& quasi_proofs() const { return qp_; }
    int comb_k() const { return k_; }
    int comb_s() const { return s_; }

    // pointwise application image A B = { ts : t in A, s in B }
    Subset app_image(const Subset& A, const Subset& B) const {
        require_carrier(A, rl_.terms(), "app_image A");
        require_carrier(B, rl_.terms(), "app_image B");
        Subset out(rl_.terms().size());
        for (auto t = A.find_first(); t != Subset::npos; t = A.find_next(t))
            for (auto s = B.find_first(); s != Subset::npos; s = B.find_next(s))
                out.set(app(static_cast<int>(t), static_cast<int>(s)));
        return out;
    }

    DerivedCombinators derived_combinators() const {
        int i = app(app(s_, k_), k_);
        int e = app(s_, app(k_, i));
        int b = app(app(s_, app(k_, s_)), k_);
        return {i, e, b, app(e, e)};
    }

    friend bool operator==(const AbstractKrivineStructure& a, const AbstractKrivineStructure& b) {
        return a.rl_ == b.rl_ && a.app_ == b.app_ && a.qp_ == b.qp_ && a.k_ == b.k_ &&
               a.s_ == b.s_;
    }

private:
    RealizabilityLattice rl_;
    std::vector<int> app_;
    Subset qp_;
    int k_, s_;
};

using Aks = AbstractKrivineStructure;

// The three Horn axioms:
//  (a) t _|_ s.pi             implies ts _|_ pi
//  (b) t _|_ pi               implies K _|_ t.(s.pi) for every s
//  (c) tu(su) _|_ pi          implies S _|_ t.(s.(u.pi))
inline LawCheck validate_aks(const Aks& k) {
    const auto& rl = k.rl();
    const int nl = rl.terms().size(), ns = rl.stacks().size();
    LawCheck law;
    law.name = "aks-axioms";
    for (int t = 0; t < nl; ++t)
        for (int s = 0; s < nl; ++s)
            for (int p = 0; p < ns; ++p) {
                if (rl.pole(t, rl.push(s, p)) && !rl.pole(k.app(t, s), p))
                    law.fail("(a) t=" + std::to_string(t) + " s=" + std::to_string(s) +
                             " pi=" + std::to_string(p));
                ++law.cases;
            }
    for (int t = 0; t < nl; ++t)
        for (int p = 0; p < ns; ++p) {
            if (!rl.pole(t, p)) continue;
            for (int s = 0; s < nl; ++s) {
                if (!rl.pole(k.comb_k(), rl.push(t, rl.push(s, p))))
                    law.fail("(b) t=" + std::to_string(t) + " s=" + std::to_string(s) +
                             " pi=" + std::to_string(p));
                ++law.cases;
            }
        }
    for (int t = 0; t < nl; ++t)
        for (int s = 0; s < nl; ++s)
            for (int u = 0; u < nl; ++u)
                for (int p = 0; p < ns; ++p) {
                    if (rl.pole(k.app(k.app(t, u), k.app(s, u)), p) &&
                        !rl.pole(k.comb_s(), rl.push(t, rl.push(s, rl.push(u, p)))))
                        law.fail("(c) t=" + std::to_string(t) + " s=" + std::to_string(s) +
                                 " u=" + std::to_string(u) + " pi=" + std::to_string(p));
                    ++law.cases;
                }
    return law;
}

// Least pole containing the given one and closed under the three axioms.
// Forward chaining; each round either adds a pair or terminates, so the
// fixpoint is reached within |Lambda|*|Pi| rounds.
inline Aks saturate(const Aks& k) {
    const auto& rl = k.rl();
    const int nl = rl.terms().size(), ns = rl.stacks().size();
    std::vector<uint8_t> pole = rl.pole_matrix();
    auto at = [&](int t, int p) -> uint8_t& {
        return pole[static_cast<std::size_t>(t) * ns + p];
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int t = 0; t < nl; ++t)
            for (int s = 0; s < nl; ++s)
                for (int p = 0; p < ns; ++p)
                    if (at(t, rl.push(s, p)) && !at(k.app(t, s), p)) {
                        at(k.app(t, s), p) = 1;
                        changed = true;
                    }
        for (int t = 0; t < nl; ++t)
            for (int p = 0; p < ns; ++p)
                if (at(t, p))
                    for (int s = 0; s < nl; ++s)
                        if (!at(k.comb_k(), rl.push(t, rl.push(s, p)))) {
                            at(k.comb_k(), rl.push(t, rl.push(s, p))) = 1;
                            changed = true;
                        }
        for (int t = 0; t < nl; ++t)
            for (int s = 0; s < nl; ++s)
                for (int u = 0; u < nl; ++u)
                    for (int p = 0; p < ns; ++p)
                        if (at(k.app(k.app(t, u), k.app(s, u)), p) &&
                            !at(k.comb_s(), rl.push(t, rl.push(s, rl.push(u, p))))) {
                            at(k.comb_s(), rl.push(t, rl.push(s, rl.push(u, p)))) = 1;
                            changed = true;
                        }
    }
    RealizabilityLattice rl2(rl.terms(), rl.stacks(), std::move(pole), rl.push_table());
    return Aks(std::move(rl2), k.app_table(), k.quasi_proofs(), k.comb_k(), k.comb_s());
}

// P club L = (^perp P  L)^perp: application transferred to stack subsets
// through perpendicularity. Always bar-closed.
inline Subset clubsuit(const Aks& k, const Subset& P, const Subset& L) {
    return k.rl().perp_of_terms(k.app_image(k.rl().perp_of_stacks(P), L));
}

// P diamond Q = P club ^perp Q
inline Subset diamond(const Aks& k, const Subset& P, const Subset& Q) {
    return clubsuit(k, P, k.rl().perp_of_stacks(Q));
}

// eta P = {EE}^perp *b ^perp P
inline Subset eta(const Aks& k, const Subset& P) {
    const auto& rl = k.rl();
    Subset ee_perp = rl.perp_of_terms(subset_singleton(rl.terms(), k.derived_combinators().ee));
    return conduct(rl, ee_perp, rl.perp_of_stacks(P), Variant::Bullet);
}

// Laws of the derived combinators on a validated structure:
//   t _|_ pi        =>  I _|_ t.pi
//   ts _|_ pi       =>  E _|_ t.(s.pi)
//   t _|_ (su).pi   =>  B _|_ t.(s.(u.pi))
inline LawCheck check_derived_combinators(const Aks& k) {
    const auto& rl = k.rl();
    const int nl = rl.terms().size(), ns = rl.stacks().size();
    auto d = k.derived_combinators();
    LawCheck law;
    law.name = "derived-combinators";
    if (!k.quasi_proofs().test(d.i) || !k.quasi_proofs().test(d.e) || !k.quasi_proofs().test(d.b))
        law.fail("derived combinator escapes the quasi-proof set");
    for (int t = 0; t < nl; ++t)
        for (int p = 0; p < ns; ++p) {
            if (rl.pole(t, p) && !rl.pole(d.i, rl.push(t, p)))
                law.fail("I law at t=" + std::to_string(t) + " pi=" + std::to_string(p));
            ++law.cases;
        }
    for (int t = 0; t < nl; ++t)
        for (int s = 0; s < nl; ++s)
            for (int p = 0; p < ns; ++p) {
                if (rl.pole(k.app(t, s), p) && !rl.pole(d.e, rl.push(t, rl.push(s, p))))
                    law.fail("E law at t=" + std::to_string(t) + " s=" + std::to_string(s));
                ++law.cases;
            }
    for (int t = 0; t < nl; ++t)
        for (int s = 0; s < nl; ++s)
            for (int u = 0; u < nl; ++u)
                for (int p = 0; p < ns; ++p) {
                    if (rl.pole(t, rl.push(k.app(s, u), p)) &&
                        !rl.pole(d.b, rl.push(t, rl.push(s, rl.push(u, p)))))
                        law.fail("B law at t=" + std::to_string(t) + " s=" + std::to_string(s) +
                                 " u=" + std::to_string(u));
                    ++law.cases;
                }
    return law;
}

// I _|_ ^perp Q . Q for every Q, quantified over all subsets when small.
inline LawCheck check_identity_realizes(const Aks& k, const CheckOptions& opt = {}) {
    const auto& rl = k.rl();
    auto d = k.derived_combinators();
    LawCheck law;
    law.name = "identity-realizer";
    const int ns = rl.stacks().size();
    auto probe = [&](const Subset& Q) {
        Subset target = push_set(rl, rl.perp_of_stacks(Q), Q);
        if (!rl.realizes(d.i, target)) law.fail("Q=" + subset_to_string(Q));
        ++law.cases;
    };
    if (fits_exhaustive(ns, opt.exhaustive_budget)) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << ns); ++m) {
            Subset Q(ns);
            for (int i = 0; i < ns; ++i)
                if (m >> i & 1) Q.set(i);
            probe(Q);
        }
    } else {
        Rng rng(opt.seed);
        for (long long i = 0; i < opt.samples; ++i) probe(rng.subset(rl.stacks()));
        law.sampled = true;
    }
    return law;
}

// Seven-term chain:
// P*bL <= P*L <= P*pL <= P club L <= etaP *b L <= etaP * L <= etaP *p L
inline LawCheck check_inclusion_chain(const Aks& k, const CheckOptions& opt = {}) {
    const auto& rl = k.rl();
    LawCheck law;
    law.name = "inclusion-chain";
    const int nl = rl.terms().size(), ns = rl.stacks().size();
    auto probe = [&](const Subset& P, const Subset& L) {
        Subset c1 = conduct(rl, P, L, Variant::Bullet);
        Subset c2 = conduct(rl, P, L, Variant::Plain);
        Subset c3 = conduct(rl, P, L, Variant::Perp);
        Subset c4 = clubsuit(k, P, L);
        Subset ep = eta(k, P);
        Subset c5 = conduct(rl, ep, L, Variant::Bullet);
        Subset c6 = conduct(rl, ep, L, Variant::Plain);
        Subset c7 = conduct(rl, ep, L, Variant::Perp);
        if (!(c1.is_subset_of(c2) && c2.is_subset_of(c3) && c3.is_subset_of(c4) &&
              c4.is_subset_of(c5) && c5.is_subset_of(c6) && c6.is_subset_of(c7)))
            law.fail("P=" + subset_to_string(P) + " L=" + subset_to_string(L));
        ++law.cases;
    };
    long double total = std::pow(2.0L, nl) * std::pow(2.0L, ns);
    if (total <= static_cast<long double>(opt.exhaustive_budget)) {
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << ns); ++a) {
            Subset P(ns);
            for (int i = 0; i < ns; ++i)
                if (a >> i & 1) P.set(i);
            for (std::uint64_t b = 0; b < (std::uint64_t{1} << nl); ++b) {
                Subset L(nl);
                for (int i = 0; i < nl; ++i)
                    if (b >> i & 1) L.set(i);
                probe(P, L);
            }
        }
    } else {
        Rng rng(opt.seed);
        for (long long i = 0; i < opt.samples; ++i)
            probe(rng.subset(rl.stacks()), rng.subset(rl.terms()));
        law.sampled = true;
    }
    return law;
}

// eta inequality chain:
// etaP <= {EE}^p * ^pP <= {EE}^p *p ^pP <= {EE}^p club ^pP
//      == (bar{EE} (^pP))^perp <= (EE (^pP))^perp,
// and bar(etaP) <= {EE}^p *p ^pP.
inline LawCheck check_eta_chain(const Aks& k, const CheckOptions& opt = {}) {
    const auto& rl = k.rl();
    auto d = k.derived_combinators();
    Subset ee = subset_singleton(rl.terms(), d.ee);
    Subset ee_perp = rl.perp_of_terms(ee);
    LawCheck law;
    law.name = "eta-chain";
    const int ns = rl.stacks().size();
    auto probe = [&](const Subset& P) {
        Subset perp_p = rl.perp_of_stacks(P);
        Subset t0 = eta(k, P);
        Subset t1 = conduct(rl, ee_perp, perp_p, Variant::Plain);
        Subset t2 = conduct(rl, ee_perp, perp_p, Variant::Perp);
        Subset t3 = clubsuit(k, ee_perp, perp_p);
        Subset t3b = rl.perp_of_terms(k.app_image(rl.closure_bar_terms(ee), perp_p));
        Subset t4 = rl.perp_of_terms(k.app_image(ee, perp_p));
        if (!(t0.is_subset_of(t1) && t1.is_subset_of(t2) && t2.is_subset_of(t3) &&
              t3.is_subset_of(t4)))
            law.fail("chain at P=" + subset_to_string(P));
        if (t3 != t3b) law.fail("club form mismatch at P=" + subset_to_string(P));
        if (!rl.closure_bar(t0).is_subset_of(t2))
            law.fail("bar(etaP) bound at P=" + subset_to_string(P));
        ++law.cases;
    };
    if (fits_exhaustive(ns, opt.exhaustive_budget)) {
        for (std::uint64_t m = 0; m < (std::uint64_t{1} << ns); ++m) {
            Subset P(ns);
            for (int i = 0; i < ns; ++i)
                if (m >> i & 1) P.set(i);
            probe(P);
        }
    } else {
        Rng rng(opt.seed);
        for (long long i = 0; i < opt.samples; ++i) probe(rng.subset(rl.stacks()));
        law.sampled = true;
    }
    return law;
}

// Partial recovery of the perp adjunction over bar-closed L, P, R:
//   1. L ~>p R <= P      implies R <= P *p L
//   2. R <= P *p L       implies L ~>p R <= bar(etaP) <= {EE}^p *p ^pP
// The sharper E-only bound L ~>p R <= {E}^p *p ^pP is recorded as a note
// when it fails, never asserted.
inline LawCheck check_adjunctor_recovery(const Aks& k, const CheckOptions& opt = {}) {
    const auto& rl = k.rl();
    auto d = k.derived_combinators();
    LawCheck law;
    law.name = "adjunctor-recovery";
    std::vector<Subset> stacks_closed = enumerate_closed(rl, ClosureKind::Perp, opt.cap);
    // bar-closed term subsets are exactly the perps of the bar-closed stack subsets
    std::vector<Subset> terms_closed;
    terms_closed.reserve(stacks_closed.size());
    for (const auto& P : stacks_closed) terms_closed.push_back(rl.perp_of_stacks(P));
    std::sort(terms_closed.begin(), terms_closed.end(), subset_less);
    terms_closed.erase(std::unique(terms_closed.begin(), terms_closed.end()), terms_closed.end());

    Subset ee_perp = rl.perp_of_terms(subset_singleton(rl.terms(), d.ee));
    Subset e_perp = rl.perp_of_terms(subset_singleton(rl.terms(), d.e));
    long long e_variant_failures = 0;
    for (const auto& L : terms_closed) {
        for (const auto& P : stacks_closed) {
            Subset bound = conduct(rl, P, L, Variant::Perp);
            Subset eta_bar = rl.closure_bar(eta(k, P));
            Subset ee_bound = conduct(rl, ee_perp, rl.perp_of_stacks(P), Variant::Perp);
            Subset e_bound = conduct(rl, e_perp, rl.perp_of_stacks(P), Variant::Perp);
            if (!eta_bar.is_subset_of(ee_bound))
                law.fail("bar(etaP) outside EE bound at P=" + subset_to_string(P));
            for (const auto& R : stacks_closed) {
                Subset lead = push_set(rl, L, R, Variant::Perp);
                if (lead.is_subset_of(P) && !R.is_subset_of(bound))
                    law.fail("direction 1 at L=" + subset_to_string(L) +
                             " P=" + subset_to_string(P) + " R=" + subset_to_string(R));
                if (R.is_subset_of(bound)) {
                    if (!lead.is_subset_of(eta_bar))
                        law.fail("direction 2 at L=" + subset_to_string(L) +
                                 " P=" + subset_to_string(P) + " R=" + subset_to_string(R));
                    if (!lead.is_subset_of(e_bound)) ++e_variant_failures;
                }
                ++law.cases;
            }
        }
    }
    if (e_variant_failures > 0)
        law.note("E-only bound failed on " + std::to_string(e_variant_failures) + " triples");
    else
        law.note("E-only bound held on all triples");
    return law;
}

// The four perpendicularity families:
//   K  _|_ P -> (Q -> P)
//   S  _|_ P -> (Q -> (R -> ((PoR) o (QoR))))
//   E  _|_ P -> (Q -> (P diamond Q))
//   EE _|_ ^pP ~>b (L ~>b (P club L))
inline LawCheck check_combinator_inequalities(const Aks& k, const CheckOptions& opt = {}) {
    const auto& rl = k.rl();
    auto d = k.derived_combinators();
    LawCheck law;
    law.name = "combinator-inequalities";
    const int ns = rl.stacks().size(), nl = rl.terms().size();

    auto check_pair = [&](const Subset& P, const Subset& Q) {
        if (!rl.realizes(k.comb_k(), imp_pi(rl, P, imp_pi(rl, Q, P))))
            law.fail("K at P=" + subset_to_string(P) + " Q=" + subset_to_string(Q));
        if (!rl.realizes(d.e, imp_pi(rl, P, imp_pi(rl, Q, diamond(k, P, Q)))))
            law.fail("E at P=" + subset_to_string(P) + " Q=" + subset_to_string(Q));
        ++law.cases;
    };
    auto check_triple = [&](const Subset& P, const Subset& Q, const Subset& R) {
        Subset pr = app_pi(rl, P, R);
        Subset qr = app_pi(rl, Q, R);
        Subset target = imp_pi(rl, P, imp_pi(rl, Q, imp_pi(rl, R, app_pi(rl, pr, qr))));
        if (!rl.realizes(k.comb_s(), target))
            law.fail("S at P=" + subset_to_string(P) + " Q=" + subset_to_string(Q) +
                     " R=" + subset_to_string(R));
        ++law.cases;
    };
    auto check_ee = [&](const Subset& P, const Subset& L) {
        Subset inner = push_set(rl, L, clubsuit(k, P, L), Variant::Bullet);
        Subset target = push_set(rl, rl.perp_of_stacks(P), inner, Variant::Bullet);
        if (!rl.realizes(d.ee, target))
            law.fail("EE at P=" + subset_to_string(P) + " L=" + subset_to_string(L));
        ++law.cases;
    };

    long double pairs = std::pow(2.0L, 2 * ns);
    long double triples = std::pow(2.0L, 3 * ns);
    Rng rng(opt.seed);
    if (pairs <= static_cast<long double>(opt.exhaustive_budget)) {
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << ns); ++a)
            for (std::uint64_t b = 0; b < (std::uint64_t{1} << ns); ++b) {
                Subset P(ns), Q(ns);
                for (int i = 0; i < ns; ++i) {
                    if (a >> i & 1) P.set(i);
                    if (b >> i & 1) Q.set(i);
                }
                check_pair(P, Q);
            }
    } else {
        law.sampled = true;
        for (long long i = 0; i < opt.samples; ++i)
            check_pair(rng.subset(rl.stacks()), rng.subset(rl.stacks()));
    }
    if (triples <= static_cast<long double>(opt.exhaustive_budget)) {
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << ns); ++a)
            for (std::uint64_t b = 0; b < (std::uint64_t{1} << ns); ++b)
                for (std::uint64_t c = 0; c < (std::uint64_t{1} << ns); ++c) {
                    Subset P(ns), Q(ns), R(ns);
                    for (int i = 0; i < ns; ++i) {
                        if (a >> i & 1) P.set(i);
                        if (b >> i & 1) Q.set(i);
                        if (c >> i & 1) R.set(i);
                    }
                    check_triple(P, Q, R);
                }
    } else {
        law.sampled = true;
        for (long long i = 0; i < opt.samples; ++i)
            check_triple(rng.subset(rl.stacks()), rng.subset(rl.stacks()), rng.subset(rl.stacks()));
    }
    long double pl = std::pow(2.0L, ns) * std::pow(2.0L, nl);
    if (pl <= static_cast<long double>(opt.exhaustive_budget)) {
        for (std::uint64_t a = 0; a < (std::uint64_t{1} << ns); ++a)
            for (std::uint64_t b = 0; b < (std::uint64_t{1} << nl); ++b) {
                Subset P(ns), L(nl);
                for (int i = 0; i < ns; ++i)
                    if (a >> i & 1) P.set(i);
                for (int i = 0; i < nl; ++i)
                    if (b >> i & 1) L.set(i);
                check_ee(P, L);
            }
    } else {
        law.sampled = true;
        for (long long i = 0; i < opt.samples; ++i)
            check_ee(rng.subset(rl.stacks()), rng.subset(rl.terms()));
    }
    return law;
}

// The four statements of the reduction lemma, each quantified over the
// whole structure; on any structure (valid or not) they are equivalent.
struct ReductionLemmaStatus {
    bool axiom_a;
    bool conduct_below_club;
    bool conduct_perp_below_club;
    bool app_image_below_perp_conduct;
    bool all_agree() const {
        return axiom_a == conduct_below_club && axiom_a == conduct_perp_below_club &&
               axiom_a == app_image_below_perp_conduct;
    }
};

inline ReductionLemmaStatus reduction_lemma_status(const Aks& k,
                                                   std::uint64_t budget = 1ull << 20) {
    const auto& rl = k.rl();
    const int nl = rl.terms().size(), ns = rl.stacks().size();
    if (!fits_exhaustive(nl + ns, budget))
        throw cap_error("reduction_lemma_status needs the full 2^(terms+stacks) scan");
    ReductionLemmaStatus st{true, true, true, true};
    for (int t = 0; t < nl && st.axiom_a; ++t)
        for (int s = 0; s < nl && st.axiom_a; ++s)
            for (int p = 0; p < ns; ++p)
                if (rl.pole(t, rl.push(s, p)) && !rl.pole(k.app(t, s), p)) {
                    st.axiom_a = false;
                    break;
                }
    for (std::uint64_t a = 0; a < (std::uint64_t{1} << ns); ++a) {
        Subset P(ns);
        for (int i = 0; i < ns; ++i)
            if (a >> i & 1) P.set(i);
        for (std::uint64_t b = 0; b < (std::uint64_t{1} << nl); ++b) {
            Subset L(nl);
            for (int i = 0; i < nl; ++i)
                if (b >> i & 1) L.set(i);
            Subset club = clubsuit(k, P, L);
            Subset cd = conduct(rl, P, L);
            if (!cd.is_subset_of(club)) st.conduct_below_club = false;
            if (!rl.closure_bar(cd).is_subset_of(club)) st.conduct_perp_below_club = false;
            if (!k.app_image(rl.perp_of_stacks(P), L).is_subset_of(rl.perp_of_stacks(cd)))
                st.app_image_below_perp_conduct = false;
        }
    }
    return st;
}

}  // namespace krs
