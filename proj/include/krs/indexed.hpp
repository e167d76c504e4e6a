#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krs/constructions.hpp"

namespace krs {

// A predicate over a finite index set: one carrier element per index.
// V is Subset for families of falsity values, int for OCA elements.
template <class V>
struct IndexedPredicate {
    std::vector<V> values;

    int index_size() const { return static_cast<int>(values.size()); }
    const V& operator()(int i) const { return values[i]; }
};

// phi |- psi iff one quasi-proof realizes phi(i) -> psi(i) at every index.
inline std::optional<int> entails_aks(const Aks& k, const IndexedPredicate<Subset>& phi,
                                      const IndexedPredicate<Subset>& psi,
                                      Variant v = Variant::Bullet) {
    if (phi.index_size() != psi.index_size())
        throw structural_error("entails_aks: index sets differ");
    std::vector<Subset> targets;
    targets.reserve(phi.index_size());
    for (int i = 0; i < phi.index_size(); ++i)
        targets.push_back(imp_pi(k.rl(), phi(i), psi(i), v));
    const Subset& qp = k.quasi_proofs();
    for (auto t = qp.find_first(); t != Subset::npos; t = qp.find_next(t)) {
        bool ok = true;
        for (const auto& target : targets)
            if (!k.rl().realizes(static_cast<int>(t), target)) {
                ok = false;
                break;
            }
        if (ok) return static_cast<int>(t);
    }
    return std::nullopt;
}

// phi |- psi iff one filter element r has r(phi(i)) <= psi(i) everywhere.
inline std::optional<int> entails_oca(const FiniteOca& a, const IndexedPredicate<int>& phi,
                                      const IndexedPredicate<int>& psi) {
    if (phi.index_size() != psi.index_size())
        throw structural_error("entails_oca: index sets differ");
    for (auto r = a.filter().find_first(); r != Subset::npos; r = a.filter().find_next(r)) {
        bool ok = true;
        for (int i = 0; i < phi.index_size(); ++i)
            if (!a.leq(a.app(static_cast<int>(r), phi(i)), psi(i))) {
                ok = false;
                break;
            }
        if (ok) return static_cast<int>(r);
    }
    return std::nullopt;
}

// f*: composition with a map between index sets; entailment realizers
// transport unchanged.
template <class V>
IndexedPredicate<V> reindex(const std::vector<int>& f, const IndexedPredicate<V>& phi) {
    IndexedPredicate<V> out;
    out.values.reserve(f.size());
    for (int j : f) {
        if (j < 0 || j >= phi.index_size())
            throw structural_error("reindex: map value out of range");
        out.values.push_back(phi(j));
    }
    return out;
}

namespace detail {

inline std::vector<IndexedPredicate<Subset>> sample_aks_predicates(const Aks& k, int index_size,
                                                                   int count, Rng& rng) {
    std::vector<IndexedPredicate<Subset>> out;
    const auto& rl = k.rl();
    // a couple of structured ones first: constant empty and constant full
    IndexedPredicate<Subset> bottom, top;
    for (int i = 0; i < index_size; ++i) {
        bottom.values.push_back(subset_full(rl.stacks()));  // largest falsity = lowest
        top.values.push_back(subset_empty(rl.stacks()));
    }
    out.push_back(bottom);
    out.push_back(top);
    while (static_cast<int>(out.size()) < count) {
        IndexedPredicate<Subset> p;
        for (int i = 0; i < index_size; ++i) p.values.push_back(rl.closure_hat(rng.subset(rl.stacks())));
        out.push_back(std::move(p));
    }
    return out;
}

inline std::vector<IndexedPredicate<int>> sample_oca_predicates(const FiniteOca& a,
                                                                int index_size, int count,
                                                                Rng& rng) {
    std::vector<IndexedPredicate<int>> out;
    IndexedPredicate<int> topk;
    for (int i = 0; i < index_size; ++i) topk.values.push_back(a.comb_k());
    out.push_back(topk);
    while (static_cast<int>(out.size()) < count) {
        IndexedPredicate<int> p;
        for (int i = 0; i < index_size; ++i) p.values.push_back(rng.below(a.size()));
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace detail

// Preorder laws, the pointwise-meet laws with found realizers, top = k,
// and reindexing functoriality for the OCA-side indexed preorder.
inline SuiteReport check_indexed_oca_laws(const FiniteOca& a, int max_index,
                                          const CheckOptions& opt = {}) {
    SuiteReport rep;
    Rng rng(opt.seed);
    int p = pairing_p(a);
    for (int isz = 1; isz <= max_index; ++isz) {
        auto preds = detail::sample_oca_predicates(a, isz, 10, rng);
        LawCheck law;
        law.name = "indexed-oca/laws-I" + std::to_string(isz);

        std::vector<std::vector<bool>> ent(preds.size(), std::vector<bool>(preds.size()));
        for (std::size_t x = 0; x < preds.size(); ++x)
            for (std::size_t y = 0; y < preds.size(); ++y) {
                ent[x][y] = entails_oca(a, preds[x], preds[y]).has_value();
                ++law.cases;
            }
        for (std::size_t x = 0; x < preds.size(); ++x) {
            if (!ent[x][x]) law.fail("not reflexive at " + std::to_string(x));
            for (std::size_t y = 0; y < preds.size(); ++y)
                for (std::size_t z = 0; z < preds.size(); ++z)
                    if (ent[x][y] && ent[y][z] && !ent[x][z])
                        law.fail("not transitive at " + std::to_string(x) + "," +
                                 std::to_string(y) + "," + std::to_string(z));
        }
        // meets and top
        for (std::size_t x = 0; x < preds.size(); ++x) {
            IndexedPredicate<int> topk;
            for (int i = 0; i < isz; ++i) topk.values.push_back(a.comb_k());
            if (!entails_oca(a, preds[x], topk)) law.fail("top law at " + std::to_string(x));
            for (std::size_t y = 0; y < preds.size(); ++y) {
                IndexedPredicate<int> m;
                for (int i = 0; i < isz; ++i)
                    m.values.push_back(a.app(a.app(p, preds[x](i)), preds[y](i)));
                if (!entails_oca(a, m, preds[x]) || !entails_oca(a, m, preds[y]))
                    law.fail("meet projection at " + std::to_string(x) + "," + std::to_string(y));
                ++law.cases;
            }
        }
        rep.add(std::move(law));

        // functoriality of reindexing: identity, composition, transport
        LawCheck fun;
        fun.name = "indexed-oca/reindex-I" + std::to_string(isz);
        std::vector<int> id(isz);
        for (int i = 0; i < isz; ++i) id[i] = i;
        for (std::size_t x = 0; x < preds.size(); ++x) {
            if (!(reindex(id, preds[x]).values == preds[x].values))
                fun.fail("identity reindex at " + std::to_string(x));
            ++fun.cases;
        }
        for (int trial = 0; trial < 8; ++trial) {
            int jsz = 1 + rng.below(max_index);
            int ksz = 1 + rng.below(max_index);
            std::vector<int> f(jsz), g(ksz);
            for (int& v : f) v = rng.below(isz);
            for (int& v : g) v = rng.below(jsz);
            std::vector<int> fg(ksz);
            for (int i = 0; i < ksz; ++i) fg[i] = f[g[i]];
            for (std::size_t x = 0; x < preds.size(); ++x) {
                if (!(reindex(g, reindex(f, preds[x])).values == reindex(fg, preds[x]).values))
                    fun.fail("composition reindex");
                ++fun.cases;
            }
            // realizers transport unchanged
            for (std::size_t x = 0; x < preds.size(); ++x)
                for (std::size_t y = 0; y < preds.size(); ++y) {
                    auto r = entails_oca(a, preds[x], preds[y]);
                    if (!r) continue;
                    auto fx = reindex(f, preds[x]);
                    auto fy = reindex(f, preds[y]);
                    bool still = true;
                    for (int i = 0; i < jsz; ++i)
                        still &= a.leq(a.app(*r, fx(i)), fy(i));
                    if (!still) fun.fail("realizer does not transport");
                    ++fun.cases;
                }
        }
        rep.add(std::move(fun));
    }
    return rep;
}

// Pointwise version of the inclusion equivalence: P_bullet(K) into P(K)
// index by index.
inline SuiteReport check_indexed_inclusion_equivalence(const Aks& k, int max_index,
                                                       const CheckOptions& opt = {}) {
    SuiteReport rep;
    Rng rng(opt.seed);
    const auto& rl = k.rl();
    for (int isz = 1; isz <= max_index; ++isz) {
        LawCheck law;
        law.name = "indexed-aks/inclusion-equivalence-I" + std::to_string(isz);
        auto preds = detail::sample_aks_predicates(k, isz, 10, rng);
        for (std::size_t x = 0; x < preds.size(); ++x)
            for (std::size_t y = 0; y < preds.size(); ++y) {
                bool big = entails_aks(k, preds[x], preds[y], Variant::Plain).has_value();
                bool small = entails_aks(k, preds[x], preds[y], Variant::Bullet).has_value();
                if (big != small) law.fail("order reflection differs");
                ++law.cases;
            }
        // essential surjectivity via pointwise bar with a uniform realizer
        for (int trial = 0; trial < 6; ++trial) {
            IndexedPredicate<Subset> phi, barphi;
            for (int i = 0; i < isz; ++i) {
                Subset s = rng.subset(rl.stacks());
                phi.values.push_back(s);
                barphi.values.push_back(rl.closure_bar(s));
            }
            if (!entails_aks(k, phi, barphi, Variant::Plain) ||
                !entails_aks(k, barphi, phi, Variant::Plain))
                law.fail("phi !~ bar(phi) at trial " + std::to_string(trial));
            ++law.cases;
        }
        rep.add(std::move(law));
    }
    return rep;
}

// P_bullet(K) and P(A_Kbullet) have identical entailment: a uniform
// quasi-proof realizer exists iff a uniform filter realizer does.
inline SuiteReport check_indexed_iso(const Aks& k, int max_index, const CheckOptions& opt = {}) {
    SuiteReport rep;
    OcaFromAks f = aks_to_foca_bullet(k, opt.cap);
    Rng rng(opt.seed);
    for (int isz = 1; isz <= max_index; ++isz) {
        LawCheck law;
        law.name = "indexed-aks/iso-I" + std::to_string(isz);
        auto preds = detail::sample_aks_predicates(k, isz, 10, rng);
        for (std::size_t x = 0; x < preds.size(); ++x)
            for (std::size_t y = 0; y < preds.size(); ++y) {
                bool aks_side = entails_aks(k, preds[x], preds[y], Variant::Bullet).has_value();
                IndexedPredicate<int> ox, oy;
                for (int i = 0; i < isz; ++i) {
                    ox.values.push_back(f.index_of(preds[x](i)));
                    oy.values.push_back(f.index_of(preds[y](i)));
                }
                bool oca_side = entails_oca(f.oca, ox, oy).has_value();
                if (aks_side != oca_side)
                    law.fail("entailment matrices differ at " + std::to_string(x) + "," +
                             std::to_string(y));
                ++law.cases;
            }
        rep.add(std::move(law));
    }
    return rep;
}

// sigma = pointwise rho from P(A_{K_A bullet}) to P(A): order-reflecting,
// essentially surjective, pseudo-natural. Exhaustive realizer search when
// the second-level family fits the cap, candidate-based otherwise.
inline SuiteReport check_indexed_equivalence(const FiniteOca& a, int max_index,
                                             const CheckOptions& opt = {}) {
    SuiteReport rep;
    Aks ka = foca_to_aks(a);
    const auto& rl2 = ka.rl();
    const int n = a.size();
    Rng rng(opt.seed);

    // second-level filter: realized members of P_bullet(A_Pi)
    std::vector<Subset> family;
    bool exhaustive = n <= opt.cap;
    if (exhaustive) family = enumerate_closed(rl2, ClosureKind::Bullet, opt.cap);
    std::vector<Subset> phi2;
    if (exhaustive) {
        for (const auto& C : family)
            if ((rl2.perp_of_stacks(C) & ka.quasi_proofs()).any()) phi2.push_back(C);
    } else {
        for (auto t = a.filter().find_first(); t != Subset::npos; t = a.filter().find_next(t))
            phi2.push_back(a.up_set(static_cast<int>(t)));
    }

    auto entails_second = [&](const IndexedPredicate<Subset>& x,
                              const IndexedPredicate<Subset>& y) -> std::optional<Subset> {
        for (const auto& R : phi2) {
            bool ok = true;
            for (int i = 0; i < x.index_size(); ++i) {
                // R o_b x(i) >= y(i) in reverse inclusion
                if (!y(i).is_subset_of(app_pi(rl2, R, x(i), Variant::Bullet))) {
                    ok = false;
                    break;
                }
            }
            if (ok) return R;
        }
        return std::nullopt;
    };

    for (int isz = 1; isz <= max_index; ++isz) {
        LawCheck law;
        law.name = "indexed-oca/equivalence-I" + std::to_string(isz);
        if (!exhaustive) law.note("second level sampled; realizer candidates from iota(Phi)");
        std::vector<IndexedPredicate<Subset>> preds;
        for (int c = 0; c < 8; ++c) {
            IndexedPredicate<Subset> p;
            for (int i = 0; i < isz; ++i)
                p.values.push_back(rl2.closure_hat(rng.subset(Carrier(n))));
            preds.push_back(std::move(p));
        }
        for (std::size_t x = 0; x < preds.size(); ++x)
            for (std::size_t y = 0; y < preds.size(); ++y) {
                IndexedPredicate<int> sx, sy;
                for (int i = 0; i < isz; ++i) {
                    sx.values.push_back(a.inf(preds[x](i)));
                    sy.values.push_back(a.inf(preds[y](i)));
                }
                bool lower = entails_oca(a, sx, sy).has_value();
                bool upper = entails_second(preds[x], preds[y]).has_value();
                if (lower && !upper)
                    law.fail("order reflection at " + std::to_string(x) + "," + std::to_string(y));
                if (upper && !lower)
                    law.fail("monotonicity at " + std::to_string(x) + "," + std::to_string(y));
                ++law.cases;
            }
        // essential surjectivity: sigma(iota . chi) = chi on the nose
        for (int trial = 0; trial < 6; ++trial) {
            IndexedPredicate<int> chi;
            IndexedPredicate<Subset> lifted;
            for (int i = 0; i < isz; ++i) {
                int v = rng.below(n);
                chi.values.push_back(v);
                lifted.values.push_back(a.up_set(v));
            }
            for (int i = 0; i < isz; ++i)
                if (a.inf(lifted(i)) != chi(i)) law.fail("sigma(iota chi) != chi");
            ++law.cases;
        }
        // pseudo-naturality: sigma commutes with reindexing exactly, and the
        // two sides entail each other with the identity realizer
        for (int trial = 0; trial < 6; ++trial) {
            int jsz = 1 + rng.below(max_index);
            std::vector<int> fmap(jsz);
            for (int& v : fmap) v = rng.below(isz);
            const auto& phi = preds[rng.below(static_cast<int>(preds.size()))];
            IndexedPredicate<int> sigma_phi;
            for (int i = 0; i < isz; ++i) sigma_phi.values.push_back(a.inf(phi(i)));
            IndexedPredicate<int> lhs, rhs = reindex(fmap, sigma_phi);
            auto fphi = reindex(fmap, phi);
            for (int j = 0; j < jsz; ++j) lhs.values.push_back(a.inf(fphi(j)));
            if (!(lhs.values == rhs.values)) law.fail("pseudo-naturality not on the nose");
            if (!entails_oca(a, lhs, rhs) || !entails_oca(a, rhs, lhs))
                law.fail("pseudo-naturality realizers missing");
            ++law.cases;
        }
        rep.add(std::move(law));
    }
    return rep;
}

// Detects pairs that are pointwise realizable at every index but have no
// uniform realizer: the difference between |- and pointwise |=.
inline LawCheck find_nonuniform_pair(const Aks& k, int index_size, const CheckOptions& opt = {}) {
    LawCheck law;
    law.name = "indexed-aks/uniformity-probe";
    Rng rng(opt.seed);
    auto preds = detail::sample_aks_predicates(k, index_size, 16, rng);
    long long found = 0;
    for (std::size_t x = 0; x < preds.size(); ++x)
        for (std::size_t y = 0; y < preds.size(); ++y) {
            bool pointwise = true;
            for (int i = 0; i < index_size && pointwise; ++i) {
                IndexedPredicate<Subset> px{{preds[x](i)}}, py{{preds[y](i)}};
                pointwise &= entails_aks(k, px, py, Variant::Bullet).has_value();
            }
            bool uniform = entails_aks(k, preds[x], preds[y], Variant::Bullet).has_value();
            if (uniform && !pointwise) law.fail("uniform realizer without pointwise realizers");
            if (pointwise && !uniform) ++found;
            ++law.cases;
        }
    law.note(found > 0 ? "found " + std::to_string(found) + " pointwise-but-not-uniform pairs"
                       : "no pointwise-but-not-uniform pair in the sample");
    return law;
}

}  // namespace krs
