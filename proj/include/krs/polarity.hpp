#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "krs/core.hpp"

namespace krs {

// Tags the tightest closure family a subset of stacks belongs to.
// Perp (bar-closed) implies Bullet (hat-closed) implies Plain.
enum class ClosureKind { Plain, Bullet, Perp };

inline const char* to_string(ClosureKind k) {
    switch (k) {
        case ClosureKind::Plain: return "plain";
        case ClosureKind::Bullet: return "bullet";
        case ClosureKind::Perp: return "perp";
    }
    return "?";
}

// Terms, stacks, a pole relation and a total push table. The polar maps,
// the double-perp closure (bar), the union-of-singleton-closures closure
// (hat) and its dual interior (tilde) all live here. Immutable after
// construction; every operation is pure.
class RealizabilityLattice {
public:
    RealizabilityLattice(Carrier terms, Carrier stacks,
                         std::vector<uint8_t> pole,   // terms.size * stacks.size, row-major
                         std::vector<int> push)       // terms.size * stacks.size -> stack
        : terms_(terms), stacks_(stacks), pole_(std::move(pole)), push_(std::move(push)) {
        const std::size_t cells = static_cast<std::size_t>(terms_.size()) * stacks_.size();
        if (pole_.size() != cells) throw structural_error("pole matrix has wrong dimensions");
        if (push_.size() != cells) throw structural_error("push table has wrong dimensions");
        for (int r : push_)
            if (r < 0 || r >= stacks_.size()) throw structural_error("push table entry out of range");
        rows_.reserve(terms_.size());
        for (int t = 0; t < terms_.size(); ++t) {
            Subset row(stacks_.size());
            for (int p = 0; p < stacks_.size(); ++p)
                if (pole_[cell(t, p)]) row.set(p);
            rows_.push_back(std::move(row));
        }
        cols_.reserve(stacks_.size());
        for (int p = 0; p < stacks_.size(); ++p) {
            Subset col(terms_.size());
            for (int t = 0; t < terms_.size(); ++t)
                if (pole_[cell(t, p)]) col.set(t);
            cols_.push_back(std::move(col));
        }
        bar_singleton_.reserve(stacks_.size());
        for (int p = 0; p < stacks_.size(); ++p)
            bar_singleton_.push_back(perp_of_terms(cols_[p]));
    }

    Carrier terms() const { return terms_; }
    Carrier stacks() const { return stacks_; }

    bool pole(int t, int p) const { return pole_[cell(t, p)] != 0; }
    int push(int t, int p) const { return push_[cell(t, p)]; }
    const std::vector<uint8_t>& pole_matrix() const { return pole_; }
    const std::vector<int>& push_table() const { return push_; }

    // t realizes every stack in P
    bool realizes(int t, const Subset& P) const { return P.is_subset_of(rows_[t]); }

    // L^perp = { pi | forall t in L, t _|_ pi }
    Subset perp_of_terms(const Subset& L) const {
        require_carrier(L, terms_, "perp_of_terms expects a subset of terms");
        Subset out = subset_full(stacks_);
        for (auto t = L.find_first(); t != Subset::npos; t = L.find_next(t)) out &= rows_[t];
        return out;
    }

    // ^perp P = { t | forall pi in P, t _|_ pi }
    Subset perp_of_stacks(const Subset& P) const {
        require_carrier(P, stacks_, "perp_of_stacks expects a subset of stacks");
        Subset out = subset_full(terms_);
        for (auto p = P.find_first(); p != Subset::npos; p = P.find_next(p)) out &= cols_[p];
        return out;
    }

    // bar P = (^perp P)^perp
    Subset closure_bar(const Subset& P) const { return perp_of_terms(perp_of_stacks(P)); }

    // bar on the term side: ^perp(L^perp)
    Subset closure_bar_terms(const Subset& L) const { return perp_of_stacks(perp_of_terms(L)); }

    const Subset& bar_singleton(int p) const { return bar_singleton_[p]; }

    // hat P = union of bar{pi} over pi in P
    Subset closure_hat(const Subset& P) const {
        require_carrier(P, stacks_, "closure_hat expects a subset of stacks");
        Subset out(stacks_.size());
        for (auto p = P.find_first(); p != Subset::npos; p = P.find_next(p))
            out |= bar_singleton_[p];
        return out;
    }

    // tilde P = { pi in P | bar{pi} subseteq P }
    Subset interior_tilde(const Subset& P) const {
        require_carrier(P, stacks_, "interior_tilde expects a subset of stacks");
        Subset out(stacks_.size());
        for (auto p = P.find_first(); p != Subset::npos; p = P.find_next(p))
            if (bar_singleton_[p].is_subset_of(P)) out.set(p);
        return out;
    }

    bool is_bar_closed(const Subset& P) const { return closure_bar(P) == P; }
    bool is_hat_closed(const Subset& P) const { return closure_hat(P) == P; }

    ClosureKind classify(const Subset& P) const {
        if (is_bar_closed(P)) return ClosureKind::Perp;
        if (is_hat_closed(P)) return ClosureKind::Bullet;
        return ClosureKind::Plain;
    }

    bool member_of(ClosureKind kind, const Subset& P) const {
        switch (kind) {
            case ClosureKind::Perp: return is_bar_closed(P);
            case ClosureKind::Bullet: return is_hat_closed(P);
            case ClosureKind::Plain: return static_cast<int>(P.size()) == stacks_.size();
        }
        return false;
    }

    friend bool operator==(const RealizabilityLattice& a, const RealizabilityLattice& b) {
        return a.terms_ == b.terms_ && a.stacks_ == b.stacks_ && a.pole_ == b.pole_ &&
               a.push_ == b.push_;
    }

private:
    std::size_t cell(int t, int p) const {
        return static_cast<std::size_t>(t) * stacks_.size() + p;
    }

    Carrier terms_;
    Carrier stacks_;
    std::vector<uint8_t> pole_;
    std::vector<int> push_;
    std::vector<Subset> rows_;           // per term: its perp in Pi
    std::vector<Subset> cols_;           // per stack: its perp in Lambda
    std::vector<Subset> bar_singleton_;  // per stack pi: bar{pi}
};

namespace detail {

// Up-sets of the specialization preorder pi <= rho  iff  rho in bar{pi},
// enumerated over the condensation poset so equivalent stacks stay together.
inline void upset_dfs(const std::vector<Subset>& class_succ, const std::vector<Subset>& class_members,
                      int idx, Subset chosen_classes, std::vector<Subset>& out, int n_stacks) {
    if (idx < 0) {
        Subset s(n_stacks);
        for (auto c = chosen_classes.find_first(); c != Subset::npos; c = chosen_classes.find_next(c))
            s |= class_members[c];
        out.push_back(std::move(s));
        return;
    }
    upset_dfs(class_succ, class_members, idx - 1, chosen_classes, out, n_stacks);
    if (class_succ[idx].is_subset_of(chosen_classes)) {
        chosen_classes.set(idx);
        upset_dfs(class_succ, class_members, idx - 1, std::move(chosen_classes), out, n_stacks);
    }
}

}  // namespace detail

// Exact enumeration of P_bullet(Pi) (hat-closed sets) or P_perp(Pi)
// (bar-closed sets), sorted canonically. Guarded by the cap because the
// families can reach 2^|Pi|.
inline std::vector<Subset> enumerate_closed(const RealizabilityLattice& rl, ClosureKind kind,
                                            int cap = 14) {
    const int n = rl.stacks().size();
    if (n > cap)
        throw cap_error("enumerate_closed: stack carrier size " + std::to_string(n) +
                        " exceeds cap " + std::to_string(cap));
    if (kind == ClosureKind::Plain) {
        std::vector<Subset> all;
        all.reserve(std::size_t{1} << n);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
            Subset s(n);
            for (int i = 0; i < n; ++i)
                if (mask >> i & 1) s.set(i);
            all.push_back(std::move(s));
        }
        return all;
    }

    // condense the specialization preorder: pi ~ rho iff each is in the
    // other's singleton bar
    std::vector<int> cls(n, -1);
    std::vector<Subset> class_members;
    for (int p = 0; p < n; ++p) {
        if (cls[p] >= 0) continue;
        int c = static_cast<int>(class_members.size());
        Subset members(n);
        for (int q = p; q < n; ++q)
            if (cls[q] < 0 && rl.bar_singleton(p).test(q) && rl.bar_singleton(q).test(p)) {
                cls[q] = c;
                members.set(q);
            }
        class_members.push_back(std::move(members));
    }
    const int k = static_cast<int>(class_members.size());
    // class order: c <= d iff d's members lie in bar of c's members
    auto leq_class = [&](int c, int d) {
        int p = static_cast<int>(class_members[c].find_first());
        int q = static_cast<int>(class_members[d].find_first());
        return rl.bar_singleton(p).test(q);
    };
    // linear extension (Kahn), so a class always precedes its strict successors
    std::vector<int> order;
    order.reserve(k);
    std::vector<int> indeg(k, 0);
    for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d)
            if (c != d && leq_class(c, d)) ++indeg[d];
    std::vector<uint8_t> done(k, 0);
    while (static_cast<int>(order.size()) < k) {
        for (int c = 0; c < k; ++c) {
            if (done[c] || indeg[c] != 0) continue;
            done[c] = 1;
            order.push_back(c);
            for (int d = 0; d < k; ++d)
                if (c != d && leq_class(c, d)) --indeg[d];
        }
    }
    std::vector<Subset> sorted_members(k);
    for (int i = 0; i < k; ++i) sorted_members[i] = class_members[order[i]];
    std::vector<Subset> succ(k, Subset(static_cast<std::size_t>(k)));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (i != j && leq_class(order[i], order[j])) succ[i].set(j);

    std::vector<Subset> family;
    detail::upset_dfs(succ, sorted_members, k - 1, Subset(static_cast<std::size_t>(k)), family, n);

    if (kind == ClosureKind::Perp) {
        std::vector<Subset> perp_family;
        for (auto& s : family)
            if (rl.is_bar_closed(s)) perp_family.push_back(std::move(s));
        family = std::move(perp_family);
    }
    std::sort(family.begin(), family.end(), subset_less);
    return family;
}

// sup/inf inside a closure family:
//   sup_bullet = union, inf_bullet = intersection,
//   sup_perp = bar(union), inf_perp = intersection.
// Empty sup is the family's least element, empty inf is Pi.
inline Subset family_sup(const RealizabilityLattice& rl, ClosureKind kind,
                         const std::vector<Subset>& xs) {
    Subset u = subset_empty(rl.stacks());
    for (const auto& x : xs) {
        require_carrier(x, rl.stacks(), "family_sup member");
        if (!rl.member_of(kind, x))
            throw structural_error("family_sup: member " + subset_to_string(x) +
                                   " is not " + std::string(to_string(kind)) + "-closed");
        u |= x;
    }
    if (kind == ClosureKind::Perp) return rl.closure_bar(u);
    return u;
}

inline Subset family_inf(const RealizabilityLattice& rl, ClosureKind kind,
                         const std::vector<Subset>& xs) {
    Subset u = subset_full(rl.stacks());
    for (const auto& x : xs) {
        require_carrier(x, rl.stacks(), "family_inf member");
        if (!rl.member_of(kind, x))
            throw structural_error("family_inf: member " + subset_to_string(x) +
                                   " is not " + std::string(to_string(kind)) + "-closed");
        u &= x;
    }
    return u;
}

}  // namespace krs
