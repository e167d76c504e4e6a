#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "krs/polynomial.hpp"
#include "test_util.hpp"

using namespace krs;
using namespace krs::test;

namespace {

using Sym = Polynomial<std::string>;

std::string show(const Sym& t) {
    return t.to_string([](const std::string& c) { return c; });
}

// parser for the golden-file term syntax: juxtaposition is application
// and associates left, `k` and `s` are constants, other words variables
struct TermParser {
    std::vector<std::string> tokens;
    std::size_t pos = 0;

    explicit TermParser(const std::string& text) {
        std::string cur;
        for (char c : text) {
            if (c == '(' || c == ')') {
                if (!cur.empty()) tokens.push_back(cur), cur.clear();
                tokens.push_back(std::string(1, c));
            } else if (c == ' ' || c == '\t') {
                if (!cur.empty()) tokens.push_back(cur), cur.clear();
            } else {
                cur += c;
            }
        }
        if (!cur.empty()) tokens.push_back(cur);
    }

    Sym parse() {
        Sym t = atom();
        while (pos < tokens.size() && tokens[pos] != ")") t = Sym::apply(t, atom());
        return t;
    }

    Sym atom() {
        REQUIRE(pos < tokens.size());
        std::string tok = tokens[pos++];
        if (tok == "(") {
            Sym t = parse();
            REQUIRE(tokens.at(pos) == ")");
            ++pos;
            return t;
        }
        if (tok == "k" || tok == "s") return Sym::constant(tok);
        return Sym::var(tok);
    }
};

Sym parse_term(const std::string& text) {
    TermParser p(text);
    Sym t = p.parse();
    REQUIRE(p.pos == p.tokens.size());
    return t;
}

Sym lam(const std::string& y, const Sym& t) {
    return lambda_star(y, t, std::string("k"), std::string("s"));
}

}  // namespace

TEST_CASE("bracket abstraction clauses") {
    CHECK(show(lam("y", Sym::var("y"))) == "s k k");
    CHECK(show(lam("y", Sym::var("x"))) == "k x");
    CHECK(show(lam("y", Sym::constant("k"))) == "k k");
    CHECK(show(lam("y", Sym::apply(Sym::var("x"), Sym::var("y")))) == "s (k x) (s k k)");
}

TEST_CASE("bracket abstraction golden file") {
    std::ifstream in(std::string(KRS_TEST_DATA_DIR) + "/lambda_star_golden.txt");
    REQUIRE(in.good());
    std::string line;
    int cases = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto p1 = line.find('|');
        auto p2 = line.find('|', p1 + 1);
        REQUIRE(p2 != std::string::npos);
        auto strip = [](std::string s) {
            while (!s.empty() && s.front() == ' ') s.erase(s.begin());
            while (!s.empty() && s.back() == ' ') s.pop_back();
            return s;
        };
        std::string var = strip(line.substr(0, p1));
        Sym term = parse_term(strip(line.substr(p1 + 1, p2 - p1 - 1)));
        std::string expected = strip(line.substr(p2 + 1));
        CHECK(show(lam(var, term)) == expected);
        ++cases;
    }
    CHECK(cases == 50);
}

TEST_CASE("abstraction eliminates the variable") {
    Rng rng(99);
    auto random_term = [&](auto&& self, int depth) -> Sym {
        if (depth == 0 || rng.below(3) == 0) {
            switch (rng.below(4)) {
                case 0: return Sym::var("y");
                case 1: return Sym::var("x");
                case 2: return Sym::constant("k");
                default: return Sym::constant("s");
            }
        }
        return Sym::apply(self(self, depth - 1), self(self, depth - 1));
    };
    for (int i = 0; i < 200; ++i) {
        Sym t = random_term(random_term, 4);
        Sym l = lam("y", t);
        CHECK(!l.contains_var("y"));
        // abstraction commutes with substituting an unrelated variable
        Sym c = Sym::constant("k");
        CHECK(lam("y", t.substitute("x", c)) == l.substitute("x", c));
    }
}

TEST_CASE("evaluation") {
    FiniteOca a = boolean_foca();
    using P = Polynomial<int>;
    CHECK(eval_polynomial(a, P::constant(0), {}) == 0);
    CHECK(eval_polynomial(a, P::apply(P::constant(1), P::constant(0)), {}) == a.app(1, 0));
    CHECK(eval_polynomial(a, P::var("x"), {{"x", 1}}) == 1);
    CHECK_THROWS_AS(eval_polynomial(a, P::var("x"), {}), unbound_variable);
}

TEST_CASE("beta inequality on the boolean FOCA") {
    FiniteOca a = boolean_foca();
    using P = Polynomial<int>;
    // t = y: (s k k) u <= u
    CHECK(check_beta_inequality(a, P::var("y"), "y").passed);
    // t = x: (k x) u <= x
    CHECK(check_beta_inequality(a, P::var("x"), "y").passed);
    for (const P& t : {P::apply(P::var("x"), P::var("y")),
                       P::apply(P::apply(P::var("y"), P::var("x")), P::var("y")),
                       P::apply(P::var("y"), P::apply(P::var("y"), P::var("y")))})
        CHECK(check_beta_inequality(a, t, "y").passed);
}

TEST_CASE("pairing combinator") {
    FiniteOca one = one_element_oca();
    CHECK(pairing_p(one) == 0);

    FiniteOca a = boolean_foca();
    int p = pairing_p(a);
    CHECK(a.filter().test(p));  // built from s and k, so inside the filter
    // p a b k <= a: the k projection of the pair
    for (int x = 0; x < 2; ++x)
        for (int y = 0; y < 2; ++y)
            CHECK(a.leq(a.app(a.app(a.app(p, x), y), a.comb_k()), x));
}
