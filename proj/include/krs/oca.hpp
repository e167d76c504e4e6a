#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krs/core.hpp"
#include "krs/report.hpp"

namespace krs {

enum class OcaClass { QOca, IOca, FOca };

inline const char* to_string(OcaClass c) {
    switch (c) {
        case OcaClass::QOca: return "qOCA";
        case OcaClass::IOca: return "IOCA";
        case OcaClass::FOca: return "FOCA";
    }
    return "?";
}

// A finite inf-complete poset with total application and implication
// tables, designated k and s, an optional adjunctor e, and a filter.
// The constructor enforces the order axioms and inf-completeness (a
// finite poset with a top and all binary meets is a complete lattice);
// the combinatory axioms are checked by classify_oca, not assumed.
class FiniteOca {
public:
    FiniteOca(Carrier carrier, std::vector<uint8_t> leq_entries, std::vector<int> app_entries,
              std::vector<int> imp_entries, int k, int s, std::optional<int> e, Subset filter)
        : carrier_(carrier),
          leq_(std::move(leq_entries)),
          app_(std::move(app_entries)),
          imp_(std::move(imp_entries)),
          k_(k),
          s_(s),
          e_(e),
          filter_(std::move(filter)) {
        const int n = carrier_.size();
        const std::size_t cells = static_cast<std::size_t>(n) * n;
        if (leq_.size() != cells) throw structural_error("leq matrix has wrong dimensions");
        if (app_.size() != cells || imp_.size() != cells)
            throw structural_error("app/imp table has wrong dimensions");
        for (int r : app_)
            if (r < 0 || r >= n) throw structural_error("app entry out of range");
        for (int r : imp_)
            if (r < 0 || r >= n) throw structural_error("imp entry out of range");
        if (k_ < 0 || k_ >= n || s_ < 0 || s_ >= n)
            throw structural_error("k/s out of range");
        if (e_ && (*e_ < 0 || *e_ >= n)) throw structural_error("e out of range");
        require_carrier(filter_, carrier_, "filter");

        for (int a = 0; a < n; ++a)
            if (!leq(a, a)) throw structural_error("leq not reflexive");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (a != b && leq(a, b) && leq(b, a))
                    throw structural_error("leq not antisymmetric");
                if (leq(a, b))
                    for (int c = 0; c < n; ++c)
                        if (leq(b, c) && !leq(a, c))
                            throw structural_error("leq not transitive");
            }

        top_ = -1;
        for (int t = 0; t < n; ++t) {
            bool is_top = true;
            for (int a = 0; a < n; ++a) is_top &= leq(a, t);
            if (is_top) {
                top_ = t;
                break;
            }
        }
        if (top_ < 0) throw structural_error("poset has no top element; not inf-complete");
        meet_.assign(cells, -1);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                int best = -1;
                for (int c = 0; c < n; ++c) {
                    if (!leq(c, a) || !leq(c, b)) continue;
                    if (best < 0 || leq(best, c)) best = c;
                }
                // best is the greatest lower bound only if it dominates
                // every other lower bound
                if (best >= 0)
                    for (int c = 0; c < n; ++c)
                        if (leq(c, a) && leq(c, b) && !leq(c, best)) best = -1;
                if (best < 0)
                    throw structural_error("binary meet missing; poset is not inf-complete");
                meet_[static_cast<std::size_t>(a) * n + b] = best;
            }
    }

    Carrier carrier() const { return carrier_; }
    int size() const { return carrier_.size(); }
    bool leq(int a, int b) const { return leq_[static_cast<std::size_t>(a) * size() + b] != 0; }
    int app(int a, int b) const { return app_[static_cast<std::size_t>(a) * size() + b]; }
    int imp(int a, int b) const { return imp_[static_cast<std::size_t>(a) * size() + b]; }
    int comb_k() const { return k_; }
    int comb_s() const { return s_; }
    std::optional<int> adjunctor() const { return e_; }
    const Subset& filter() const { return filter_; }
    int top() const { return top_; }
    int meet(int a, int b) const { return meet_[static_cast<std::size_t>(a) * size() + b]; }

    const std::vector<uint8_t>& leq_matrix() const { return leq_; }
    const std::vector<int>& app_table() const { return app_; }
    const std::vector<int>& imp_table() const { return imp_; }

    // inf of an arbitrary subset; inf of nothing is the top
    int inf(const Subset& xs) const {
        require_carrier(xs, carrier_, "inf");
        int acc = top_;
        for (auto i = xs.find_first(); i != Subset::npos; i = xs.find_next(i))
            acc = meet(acc, static_cast<int>(i));
        return acc;
    }

    Subset up_set(int a) const {
        Subset s(size());
        for (int x = 0; x < size(); ++x)
            if (leq(a, x)) s.set(x);
        return s;
    }

    Subset down_set(int a) const {
        Subset s(size());
        for (int x = 0; x < size(); ++x)
            if (leq(x, a)) s.set(x);
        return s;
    }

    // a # b = inf { c : a <= b -> c }
    int sharp(int a, int b) const {
        Subset candidates(size());
        for (int c = 0; c < size(); ++c)
            if (leq(a, imp(b, c))) candidates.set(c);
        return inf(candidates);
    }

    friend bool operator==(const FiniteOca& x, const FiniteOca& y) {
        return x.carrier_ == y.carrier_ && x.leq_ == y.leq_ && x.app_ == y.app_ &&
               x.imp_ == y.imp_ && x.k_ == y.k_ && x.s_ == y.s_ && x.e_ == y.e_ &&
               x.filter_ == y.filter_;
    }

private:
    Carrier carrier_;
    std::vector<uint8_t> leq_;
    std::vector<int> app_;
    std::vector<int> imp_;
    int k_, s_;
    std::optional<int> e_;
    Subset filter_;
    int top_;
    std::vector<int> meet_;
};

struct OcaClassification {
    std::optional<OcaClass> cls;  // empty when even the qOCA axioms fail
    bool pe_holds = false;        // with the designated adjunctor
    bool pe_prime_holds = false;
    SuiteReport report;
};

// PK / PS / PA plus the operation monotonicity contracts and the filter
// axioms give qOCA; (PE) with the designated e gives IOCA; (PE)' gives
// FOCA. Everything is checked, nothing assumed.
inline OcaClassification classify_oca(const FiniteOca& a) {
    const int n = a.size();
    OcaClassification out;

    LawCheck mono;
    mono.name = "oca/monotonicity";
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!a.leq(x, y)) continue;
            for (int z = 0; z < n; ++z) {
                if (!a.leq(a.app(x, z), a.app(y, z)) || !a.leq(a.app(z, x), a.app(z, y)))
                    mono.fail("app at " + std::to_string(x) + "<=" + std::to_string(y) +
                              ", z=" + std::to_string(z));
                if (!a.leq(a.imp(y, z), a.imp(x, z)) || !a.leq(a.imp(z, x), a.imp(z, y)))
                    mono.fail("imp at " + std::to_string(x) + "<=" + std::to_string(y) +
                              ", z=" + std::to_string(z));
                ++mono.cases;
            }
        }

    LawCheck pk;
    pk.name = "oca/PK";
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (!a.leq(a.app(a.app(a.comb_k(), x), y), x))
                pk.fail("k " + std::to_string(x) + " " + std::to_string(y));
            ++pk.cases;
        }

    LawCheck ps;
    ps.name = "oca/PS";
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                int lhs = a.app(a.app(a.app(a.comb_s(), x), y), z);
                int rhs = a.app(a.app(x, z), a.app(y, z));
                if (!a.leq(lhs, rhs))
                    ps.fail("s " + std::to_string(x) + " " + std::to_string(y) + " " +
                            std::to_string(z));
                ++ps.cases;
            }

    LawCheck pa;
    pa.name = "oca/PA";
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (a.leq(x, a.imp(y, z)) && !a.leq(a.app(x, y), z))
                    pa.fail(std::to_string(x) + " <= " + std::to_string(y) + "->" +
                            std::to_string(z));
                ++pa.cases;
            }

    LawCheck fi;
    fi.name = "oca/filter";
    if (!a.filter().test(a.comb_k()) || !a.filter().test(a.comb_s()))
        fi.fail("k or s outside the filter");
    if (a.adjunctor() && !a.filter().test(*a.adjunctor())) fi.fail("e outside the filter");
    for (auto f = a.filter().find_first(); f != Subset::npos; f = a.filter().find_next(f))
        for (auto g = a.filter().find_first(); g != Subset::npos; g = a.filter().find_next(g)) {
            if (!a.filter().test(a.app(static_cast<int>(f), static_cast<int>(g))))
                fi.fail("filter not closed at " + std::to_string(f) + " " + std::to_string(g));
            ++fi.cases;
        }

    LawCheck pe;
    pe.name = "oca/PE";
    if (a.adjunctor()) {
        int e = *a.adjunctor();
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    if (a.leq(a.app(x, y), z) && !a.leq(a.app(e, x), a.imp(y, z)))
                        pe.fail(std::to_string(x) + " " + std::to_string(y) + " " +
                                std::to_string(z));
                    ++pe.cases;
                }
    } else {
        pe.note("no designated adjunctor");
    }

    LawCheck pep;
    pep.name = "oca/PE'";
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                if (a.leq(a.app(x, y), z) && !a.leq(x, a.imp(y, z)))
                    pep.fail(std::to_string(x) + " " + std::to_string(y) + " " +
                             std::to_string(z));
                ++pep.cases;
            }

    bool qoca = mono.passed && pk.passed && ps.passed && pa.passed && fi.passed;
    out.pe_holds = a.adjunctor().has_value() && pe.passed;
    out.pe_prime_holds = pep.passed;
    if (qoca) {
        if (out.pe_prime_holds)
            out.cls = OcaClass::FOca;
        else if (out.pe_holds)
            out.cls = OcaClass::IOca;
        else
            out.cls = OcaClass::QOca;
    }
    out.report.add(std::move(mono));
    out.report.add(std::move(pk));
    out.report.add(std::move(ps));
    out.report.add(std::move(pa));
    out.report.add(std::move(fi));
    out.report.add(std::move(pe));
    out.report.add(std::move(pep));
    return out;
}

// i = skk; in a FOCA it serves as an adjunctor, so FOCA implies IOCA.
inline int identity_element(const FiniteOca& a) {
    return a.app(a.app(a.comb_s(), a.comb_k()), a.comb_k());
}

// least app-closed superset of generators together with s and k
inline Subset filter_closure(const FiniteOca& a, const Subset& generators) {
    require_carrier(generators, a.carrier(), "filter_closure generators");
    Subset phi = generators;
    phi.set(a.comb_k());
    phi.set(a.comb_s());
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto f = phi.find_first(); f != Subset::npos; f = phi.find_next(f))
            for (auto g = phi.find_first(); g != Subset::npos; g = phi.find_next(g)) {
                int r = a.app(static_cast<int>(f), static_cast<int>(g));
                if (!phi.test(r)) {
                    phi.set(r);
                    changed = true;
                }
            }
    }
    return phi;
}

// x |= y iff some f in the filter has f x <= y; the first witness in
// index order is returned so reports are deterministic.
inline std::optional<int> sqsubseteq(const FiniteOca& a, int x, int y) {
    for (auto f = a.filter().find_first(); f != Subset::npos; f = a.filter().find_next(f))
        if (a.leq(a.app(static_cast<int>(f), x), y)) return static_cast<int>(f);
    return std::nullopt;
}

// ab <= a#b in any qOCA; (ea)#b <= ab given an adjunctor; a#b = ab in a
// FOCA. Exhaustive over all pairs.
inline LawCheck check_sharp_theorems(const FiniteOca& a, const OcaClassification& cls) {
    LawCheck law;
    law.name = "sharp-theorems";
    const int n = a.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int sh = a.sharp(x, y);
            int ap = a.app(x, y);
            if (!a.leq(ap, sh))
                law.fail("ab <= a#b fails at " + std::to_string(x) + "," + std::to_string(y));
            if (cls.cls == OcaClass::FOca && sh != ap)
                law.fail("a#b != ab in FOCA at " + std::to_string(x) + "," + std::to_string(y));
            if (cls.pe_holds && a.adjunctor()) {
                int ea = a.app(*a.adjunctor(), x);
                if (!a.leq(a.sharp(ea, y), ap))
                    law.fail("(ea)#b <= ab fails at " + std::to_string(x) + "," +
                             std::to_string(y));
            }
            ++law.cases;
        }
    return law;
}

}  // namespace krs
