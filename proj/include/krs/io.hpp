#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "krs/aks.hpp"
#include "krs/oca.hpp"

namespace krs {

// On-disk instances are line-oriented text. Three headers are accepted:
//
//   RL <terms> <stacks>          realizability lattice
//     POLE <count> / "<t> <pi>" lines, sorted
//     PUSH / full table, row-major "<t> <pi> <result>"
//
//   AKS <terms> <stacks>         RL blocks plus
//     APP / full table "<t> <s> <result>"
//     QP <count> / one line of sorted indices (omitted when empty)
//     K <i> / S <i>
//
//   OCA <n>
//     LEQ <count> / "<a> <b>" lines for every related pair, sorted
//     APP, IMP / full tables
//     K <i> / S <i> / optional E <i>
//     PHI <count> / one line of sorted indices (omitted when empty)
//
// Blank lines and '#' comments are ignored. serialize() emits the
// canonical form: fixed block order, sorted pairs, no comments.

using Instance = std::variant<RealizabilityLattice, Aks, FiniteOca>;

struct ParseError : error {
    int line;
    int col;
    ParseError(int line_, int col_, const std::string& msg)
        : error("line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

struct ValidationError : error {
    LawCheck details;
    explicit ValidationError(LawCheck d)
        : error("instance violates the structure axioms (" +
                std::to_string(d.counterexamples.size()) + "+ witnesses, e.g. " +
                (d.counterexamples.empty() ? std::string("?") : d.counterexamples.front()) + ")"),
          details(std::move(d)) {}
};

struct ParseOptions {
    bool validate = true;   // check the AKS pole axioms on load
    bool saturate = false;  // repair instead of rejecting
};

namespace detail {

struct Token {
    std::string text;
    int line;
    int col;
};

class Tokenizer {
public:
    explicit Tokenizer(std::string_view text) {
        int line_no = 0;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            ++line_no;
            std::string_view line = text.substr(pos, eol - pos);
            std::size_t hash = line.find('#');
            if (hash != std::string_view::npos) line = line.substr(0, hash);
            std::size_t i = 0;
            while (i < line.size()) {
                while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r'))
                    ++i;
                std::size_t start = i;
                while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r')
                    ++i;
                if (i > start)
                    tokens_.push_back({std::string(line.substr(start, i - start)), line_no,
                                       static_cast<int>(start) + 1});
            }
            if (eol == text.size()) break;
            pos = eol + 1;
        }
    }

    bool done() const { return next_ >= tokens_.size(); }

    const Token& peek() const {
        if (done()) throw ParseError(last_line(), 1, "unexpected end of input");
        return tokens_[next_];
    }

    Token take() {
        Token t = peek();
        ++next_;
        return t;
    }

    std::string expect_word(const char* what) { return take_checked(what).text; }

    void expect_keyword(const std::string& kw) {
        Token t = take_checked(kw.c_str());
        if (t.text != kw)
            throw ParseError(t.line, t.col, "expected '" + kw + "', found '" + t.text + "'");
    }

    int expect_int(const char* what, int lo, int hi) {
        Token t = take_checked(what);
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(t.text, &used);
        } catch (const std::exception&) {
            throw ParseError(t.line, t.col, std::string("expected an integer for ") + what);
        }
        if (used != t.text.size())
            throw ParseError(t.line, t.col, std::string("expected an integer for ") + what);
        if (v < lo || v > hi)
            throw ParseError(t.line, t.col,
                             std::string(what) + " out of range [" + std::to_string(lo) + "," +
                                 std::to_string(hi) + "]");
        return static_cast<int>(v);
    }

    int last_line() const { return tokens_.empty() ? 1 : tokens_.back().line; }

private:
    Token take_checked(const char* what) {
        if (done())
            throw ParseError(last_line(), 1,
                             std::string("unexpected end of input, expected ") + what);
        return tokens_[next_++];
    }

    std::vector<Token> tokens_;
    std::size_t next_ = 0;
};

inline std::pair<std::vector<uint8_t>, std::vector<int>> parse_rl_blocks(Tokenizer& tk, int nt,
                                                                         int ns) {
    tk.expect_keyword("POLE");
    int count = tk.expect_int("pole count", 0, nt * ns);
    std::vector<uint8_t> pole(static_cast<std::size_t>(nt) * ns, 0);
    for (int i = 0; i < count; ++i) {
        int t = tk.expect_int("pole term", 0, nt - 1);
        int p = tk.expect_int("pole stack", 0, ns - 1);
        pole[static_cast<std::size_t>(t) * ns + p] = 1;
    }
    tk.expect_keyword("PUSH");
    std::vector<int> push(static_cast<std::size_t>(nt) * ns, -1);
    for (int i = 0; i < nt * ns; ++i) {
        int t = tk.expect_int("push term", 0, nt - 1);
        int p = tk.expect_int("push stack", 0, ns - 1);
        int r = tk.expect_int("push result", 0, ns - 1);
        push[static_cast<std::size_t>(t) * ns + p] = r;
    }
    for (int v : push)
        if (v < 0) throw ParseError(tk.last_line(), 1, "push table is not total");
    return {std::move(pole), std::move(push)};
}

inline std::vector<int> parse_square_table(Tokenizer& tk, const char* keyword, int n) {
    tk.expect_keyword(keyword);
    std::vector<int> table(static_cast<std::size_t>(n) * n, -1);
    for (int i = 0; i < n * n; ++i) {
        int a = tk.expect_int("row index", 0, n - 1);
        int b = tk.expect_int("column index", 0, n - 1);
        int r = tk.expect_int("result", 0, n - 1);
        table[static_cast<std::size_t>(a) * n + b] = r;
    }
    for (int v : table)
        if (v < 0)
            throw ParseError(tk.last_line(), 1, std::string(keyword) + " table is not total");
    return table;
}

inline Subset parse_index_set(Tokenizer& tk, const char* keyword, int n) {
    tk.expect_keyword(keyword);
    int count = tk.expect_int("count", 0, n);
    Subset s(n);
    for (int i = 0; i < count; ++i) s.set(tk.expect_int("member", 0, n - 1));
    return s;
}

}  // namespace detail

inline Instance parse_instance(std::string_view text, const ParseOptions& opts = {}) {
    detail::Tokenizer tk(text);
    if (tk.done()) throw ParseError(1, 1, "empty instance");
    auto header = tk.take();
    if (header.text == "RL" || header.text == "AKS") {
        int nt = tk.expect_int("term count", 1, 1 << 16);
        int ns = tk.expect_int("stack count", 1, 1 << 16);
        auto [pole, push] = detail::parse_rl_blocks(tk, nt, ns);
        RealizabilityLattice rl(Carrier(nt), Carrier(ns), std::move(pole), std::move(push));
        if (header.text == "RL") {
            if (!tk.done()) {
                auto t = tk.peek();
                throw ParseError(t.line, t.col, "trailing content after RL instance");
            }
            return rl;
        }
        auto app = detail::parse_square_table(tk, "APP", nt);
        Subset qp = detail::parse_index_set(tk, "QP", nt);
        tk.expect_keyword("K");
        int k = tk.expect_int("K", 0, nt - 1);
        tk.expect_keyword("S");
        int s = tk.expect_int("S", 0, nt - 1);
        if (!tk.done()) {
            auto t = tk.peek();
            throw ParseError(t.line, t.col, "trailing content after AKS instance");
        }
        Aks aks(std::move(rl), std::move(app), std::move(qp), k, s);
        if (opts.validate) {
            LawCheck v = validate_aks(aks);
            if (!v.passed) {
                if (!opts.saturate) throw ValidationError(std::move(v));
                aks = saturate(aks);
            }
        }
        return aks;
    }
    if (header.text == "OCA") {
        int n = tk.expect_int("carrier size", 1, 1 << 12);
        tk.expect_keyword("LEQ");
        int count = tk.expect_int("leq count", 0, n * n);
        std::vector<uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i < count; ++i) {
            int a = tk.expect_int("leq lhs", 0, n - 1);
            int b = tk.expect_int("leq rhs", 0, n - 1);
            leq[static_cast<std::size_t>(a) * n + b] = 1;
        }
        auto app = detail::parse_square_table(tk, "APP", n);
        auto imp = detail::parse_square_table(tk, "IMP", n);
        tk.expect_keyword("K");
        int k = tk.expect_int("K", 0, n - 1);
        tk.expect_keyword("S");
        int s = tk.expect_int("S", 0, n - 1);
        std::optional<int> e;
        if (!tk.done() && tk.peek().text == "E") {
            tk.expect_keyword("E");
            e = tk.expect_int("E", 0, n - 1);
        }
        Subset phi = detail::parse_index_set(tk, "PHI", n);
        if (!tk.done()) {
            auto t = tk.peek();
            throw ParseError(t.line, t.col, "trailing content after OCA instance");
        }
        return FiniteOca(Carrier(n), std::move(leq), std::move(app), std::move(imp), k, s, e,
                         std::move(phi));
    }
    throw ParseError(header.line, header.col,
                     "unknown instance header '" + header.text + "' (expected RL, AKS or OCA)");
}

namespace detail {

inline void serialize_rl_blocks(std::ostringstream& out, const RealizabilityLattice& rl) {
    const int nt = rl.terms().size(), ns = rl.stacks().size();
    long long count = 0;
    for (int t = 0; t < nt; ++t)
        for (int p = 0; p < ns; ++p) count += rl.pole(t, p) ? 1 : 0;
    out << "POLE " << count << "\n";
    for (int t = 0; t < nt; ++t)
        for (int p = 0; p < ns; ++p)
            if (rl.pole(t, p)) out << t << " " << p << "\n";
    out << "PUSH\n";
    for (int t = 0; t < nt; ++t)
        for (int p = 0; p < ns; ++p) out << t << " " << p << " " << rl.push(t, p) << "\n";
}

inline void serialize_square_table(std::ostringstream& out, const char* keyword,
                                   const std::vector<int>& table, int n) {
    out << keyword << "\n";
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out << a << " " << b << " " << table[static_cast<std::size_t>(a) * n + b] << "\n";
}

inline void serialize_index_set(std::ostringstream& out, const char* keyword, const Subset& s) {
    out << keyword << " " << s.count();
    bool first = true;
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
        out << (first ? "\n" : " ") << i;
        first = false;
    }
    out << "\n";
}

}  // namespace detail

inline std::string serialize(const RealizabilityLattice& rl) {
    std::ostringstream out;
    out << "RL " << rl.terms().size() << " " << rl.stacks().size() << "\n";
    detail::serialize_rl_blocks(out, rl);
    return out.str();
}

inline std::string serialize(const Aks& k) {
    std::ostringstream out;
    const int nt = k.rl().terms().size();
    out << "AKS " << nt << " " << k.rl().stacks().size() << "\n";
    detail::serialize_rl_blocks(out, k.rl());
    detail::serialize_square_table(out, "APP", k.app_table(), nt);
    detail::serialize_index_set(out, "QP", k.quasi_proofs());
    out << "K " << k.comb_k() << "\n";
    out << "S " << k.comb_s() << "\n";
    return out.str();
}

inline std::string serialize(const FiniteOca& a) {
    std::ostringstream out;
    const int n = a.size();
    out << "OCA " << n << "\n";
    long long count = 0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) count += a.leq(x, y) ? 1 : 0;
    out << "LEQ " << count << "\n";
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (a.leq(x, y)) out << x << " " << y << "\n";
    detail::serialize_square_table(out, "APP", a.app_table(), n);
    detail::serialize_square_table(out, "IMP", a.imp_table(), n);
    out << "K " << a.comb_k() << "\n";
    out << "S " << a.comb_s() << "\n";
    if (a.adjunctor()) out << "E " << *a.adjunctor() << "\n";
    detail::serialize_index_set(out, "PHI", a.filter());
    return out.str();
}

inline std::string serialize(const Instance& inst) {
    return std::visit([](const auto& v) { return serialize(v); }, inst);
}

}  // namespace krs
