#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "krs/oca.hpp"
#include "krs/polynomial.hpp"

namespace krs {

// H_A = (A, |=, /\, ->): the realizability preorder of an OCA together
// with the pairing meet and the algebra's own implication.
struct HeytingPreorder {
    int size = 0;
    std::vector<uint8_t> order;               // |= as a matrix
    std::vector<std::optional<int>> realizer;  // first witness per pair
    std::vector<int> meet;                     // a /\ b = p a b
    int pairing = -1;                          // the compiled p
    int top = -1;                              // inf of nothing in (A, <=)
    bool top_in_filter = false;
    bool k_is_order_max = false;               // whether a |= k for every a

    bool holds(int a, int b) const {
        return order[static_cast<std::size_t>(a) * size + b] != 0;
    }
};

inline HeytingPreorder heyting_preorder(const FiniteOca& a) {
    const int n = a.size();
    HeytingPreorder h;
    h.size = n;
    h.order.assign(static_cast<std::size_t>(n) * n, 0);
    h.realizer.assign(static_cast<std::size_t>(n) * n, std::nullopt);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            auto r = sqsubseteq(a, x, y);
            h.realizer[static_cast<std::size_t>(x) * n + y] = r;
            h.order[static_cast<std::size_t>(x) * n + y] = r.has_value();
        }
    h.pairing = pairing_p(a);
    h.meet.assign(static_cast<std::size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            h.meet[static_cast<std::size_t>(x) * n + y] = a.app(a.app(h.pairing, x), y);
    h.top = a.top();
    h.top_in_filter = a.filter().test(a.top());
    h.k_is_order_max = true;
    for (int x = 0; x < n; ++x) h.k_is_order_max &= h.holds(x, a.comb_k());
    return h;
}

// Laws of the Heyting preorder, all witnessed by realizer search:
// preorder, meet-semilattice with top, and the implication adjunction
// a /\ b |= c  iff  a |= b -> c.
inline SuiteReport check_heyting_laws(const FiniteOca& a, const HeytingPreorder& h) {
    const int n = a.size();
    SuiteReport rep;

    LawCheck pre;
    pre.name = "heyting/preorder";
    if (!a.filter().test(h.pairing)) pre.fail("pairing combinator escapes the filter");
    for (int x = 0; x < n; ++x) {
        if (!h.holds(x, x)) pre.fail("not reflexive at " + std::to_string(x));
        ++pre.cases;
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            if (a.leq(x, y) && !h.holds(x, y))
                pre.fail("leq does not refine |= at " + std::to_string(x) + "," +
                         std::to_string(y));
            for (int z = 0; z < n; ++z) {
                if (h.holds(x, y) && h.holds(y, z) && !h.holds(x, z))
                    pre.fail("not transitive at " + std::to_string(x) + "," + std::to_string(y) +
                             "," + std::to_string(z));
                ++pre.cases;
            }
        }
    rep.add(std::move(pre));

    LawCheck meet;
    meet.name = "heyting/meet";
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int m = h.meet[static_cast<std::size_t>(x) * n + y];
            if (!h.holds(m, x) || !h.holds(m, y))
                meet.fail("projection at " + std::to_string(x) + "," + std::to_string(y));
            for (int c = 0; c < n; ++c) {
                if (h.holds(c, x) && h.holds(c, y) && !h.holds(c, m))
                    meet.fail("pairing at c=" + std::to_string(c));
                ++meet.cases;
            }
            if (!h.holds(x, h.top)) meet.fail("top at " + std::to_string(x));
        }
    if (!h.top_in_filter) meet.note("top element lies outside the filter");
    if (h.k_is_order_max) meet.note("k is |=-maximal");
    rep.add(std::move(meet));

    LawCheck adj;
    adj.name = "heyting/implication-adjunction";
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int c = 0; c < n; ++c) {
                bool lhs = h.holds(h.meet[static_cast<std::size_t>(x) * n + y], c);
                bool rhs = h.holds(x, a.imp(y, c));
                if (lhs != rhs)
                    adj.fail(std::to_string(x) + "/\\" + std::to_string(y) + " vs ->" +
                             std::to_string(c));
                ++adj.cases;
            }
    rep.add(std::move(adj));
    return rep;
}

}  // namespace krs
