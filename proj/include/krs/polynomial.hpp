#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "krs/oca.hpp"
#include "krs/report.hpp"

namespace krs {

// A combinatory term over constants of type T and named variables.
// Immutable value type; subtrees are shared.
template <class T>
class Polynomial {
    struct Node;
    using Ptr = std::shared_ptr<const Node>;
    struct App {
        Ptr fn, arg;
    };
    using Payload = std::variant<std::string, T, App>;
    struct Node {
        Payload v;
    };

    explicit Polynomial(Ptr p) : node_(std::move(p)) {}

public:
    // the variant alternatives can collide (T may itself be a string), so
    // construction goes by index
    static Polynomial var(std::string name) {
        return Polynomial(std::make_shared<const Node>(
            Node{Payload(std::in_place_index<0>, std::move(name))}));
    }
    static Polynomial constant(T value) {
        return Polynomial(std::make_shared<const Node>(
            Node{Payload(std::in_place_index<1>, std::move(value))}));
    }
    static Polynomial apply(Polynomial fn, Polynomial arg) {
        return Polynomial(std::make_shared<const Node>(Node{
            Payload(std::in_place_index<2>, App{std::move(fn.node_), std::move(arg.node_)})}));
    }

    bool is_var() const { return node_->v.index() == 0; }
    bool is_constant() const { return node_->v.index() == 1; }
    bool is_app() const { return node_->v.index() == 2; }
    const std::string& var_name() const { return std::get<0>(node_->v); }
    const T& value() const { return std::get<1>(node_->v); }
    Polynomial fn() const { return Polynomial(std::get<2>(node_->v).fn); }
    Polynomial arg() const { return Polynomial(std::get<2>(node_->v).arg); }

    bool contains_var(const std::string& name) const {
        if (is_var()) return var_name() == name;
        if (is_constant()) return false;
        return fn().contains_var(name) || arg().contains_var(name);
    }

    std::vector<std::string> free_vars() const {
        std::vector<std::string> out;
        collect_vars(out);
        return out;
    }

    Polynomial substitute(const std::string& name, const Polynomial& u) const {
        if (is_var()) return var_name() == name ? u : *this;
        if (is_constant()) return *this;
        return apply(fn().substitute(name, u), arg().substitute(name, u));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        if (a.node_ == b.node_) return true;
        if (a.node_->v.index() != b.node_->v.index()) return false;
        if (a.is_var()) return a.var_name() == b.var_name();
        if (a.is_constant()) return a.value() == b.value();
        return a.fn() == b.fn() && a.arg() == b.arg();
    }

    // application prints as left-associative juxtaposition
    std::string to_string(const std::function<std::string(const T&)>& show_const) const {
        if (is_var()) return var_name();
        if (is_constant()) return show_const(value());
        std::string lhs = fn().to_string(show_const);
        std::string rhs = arg().to_string(show_const);
        if (arg().is_app()) rhs = "(" + rhs + ")";
        return lhs + " " + rhs;
    }

private:
    void collect_vars(std::vector<std::string>& out) const {
        if (is_var()) {
            if (std::find(out.begin(), out.end(), var_name()) == out.end())
                out.push_back(var_name());
        } else if (is_app()) {
            fn().collect_vars(out);
            arg().collect_vars(out);
        }
    }

    Ptr node_;
};

// Bracket abstraction:
//   lam y (y)     = s k k
//   lam y (atom)  = k atom        for atoms other than y
//   lam y (p q)   = s (lam y p) (lam y q)
// The result never mentions y.
template <class T>
Polynomial<T> lambda_star(const std::string& y, const Polynomial<T>& t, const T& k, const T& s) {
    using P = Polynomial<T>;
    if (t.is_var() && t.var_name() == y)
        return P::apply(P::apply(P::constant(s), P::constant(k)), P::constant(k));
    if (t.is_var() || t.is_constant()) return P::apply(P::constant(k), t);
    return P::apply(P::apply(P::constant(s), lambda_star(y, t.fn(), k, s)),
                    lambda_star(y, t.arg(), k, s));
}

inline Polynomial<int> lambda_star(const FiniteOca& a, const std::string& y,
                                   const Polynomial<int>& t) {
    return lambda_star(y, t, a.comb_k(), a.comb_s());
}

struct unbound_variable : error {
    explicit unbound_variable(const std::string& name)
        : error("unbound variable: " + name) {}
};

// homomorphic evaluation through the application table
inline int eval_polynomial(const FiniteOca& a, const Polynomial<int>& t,
                           const std::map<std::string, int>& env) {
    if (t.is_constant()) return t.value();
    if (t.is_var()) {
        auto it = env.find(t.var_name());
        if (it == env.end()) throw unbound_variable(t.var_name());
        return it->second;
    }
    return a.app(eval_polynomial(a, t.fn(), env), eval_polynomial(a, t.arg(), env));
}

// lam y (t) . u <= t{y := u}, over every environment for the other free
// variables and every u in the carrier; exhaustive when that fits the
// budget, sampled otherwise.
inline LawCheck check_beta_inequality(const FiniteOca& a, const Polynomial<int>& t,
                                      const std::string& y, const CheckOptions& opt = {}) {
    LawCheck law;
    law.name = "beta-inequality";
    Polynomial<int> compiled = lambda_star(a, y, t);
    if (compiled.contains_var(y)) law.fail("abstracted variable survives compilation");
    std::vector<std::string> vars = t.free_vars();
    vars.erase(std::remove(vars.begin(), vars.end(), y), vars.end());
    const int n = a.size();

    long double total = std::pow(static_cast<long double>(n), vars.size() + 1);
    auto probe = [&](std::map<std::string, int>& env, int u) {
        int lhs = a.app(eval_polynomial(a, compiled, env), u);
        env[y] = u;
        int rhs = eval_polynomial(a, t, env);
        env.erase(y);
        if (!a.leq(lhs, rhs)) {
            std::string e = "u=" + std::to_string(u);
            for (auto& [k, v] : env) e += " " + k + "=" + std::to_string(v);
            law.fail(e);
        }
        ++law.cases;
    };
    if (total <= static_cast<long double>(opt.exhaustive_budget)) {
        std::map<std::string, int> env;
        std::vector<int> idx(vars.size(), 0);
        for (;;) {
            for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = idx[i];
            for (int u = 0; u < n; ++u) probe(env, u);
            std::size_t i = 0;
            for (; i < idx.size(); ++i) {
                if (++idx[i] < n) break;
                idx[i] = 0;
            }
            if (i == idx.size()) break;
        }
    } else {
        Rng rng(opt.seed);
        for (long long c = 0; c < opt.samples; ++c) {
            std::map<std::string, int> env;
            for (auto& v : vars) env[v] = rng.below(n);
            probe(env, rng.below(n));
        }
        law.sampled = true;
    }
    return law;
}

// p = lam x lam y lam z (z x y); pairing realizer used for binary meets
inline int pairing_p(const FiniteOca& a) {
    using P = Polynomial<int>;
    P body = P::apply(P::apply(P::var("z"), P::var("x")), P::var("y"));
    P p = lambda_star(a, "x", lambda_star(a, "y", lambda_star(a, "z", body)));
    return eval_polynomial(a, p, {});
}

}  // namespace krs
