// Acceptance suite: every criterion prints one PASS/FAIL line; the
// process exits nonzero if any criterion fails.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "krs/krs.hpp"

namespace fs = std::filesystem;
using namespace krs;

namespace {

long long g_violations = 0;

void tally(const SuiteReport& rep, std::string& detail) {
    for (const auto& c : rep.checks)
        if (!c.passed) {
            ++g_violations;
            if (detail.size() < 300)
                detail += " [" + c.name + (c.counterexamples.empty()
                                               ? "]"
                                               : ": " + c.counterexamples.front() + "]");
        }
}

void tally(const LawCheck& c, std::string& detail) {
    SuiteReport rep;
    rep.add(c);
    tally(rep, detail);
}

RealizabilityLattice seeded_rl(std::uint64_t seed, int max_side) {
    Rng rng(seed * 1000003ull);
    int nt = 1 + rng.below(max_side);
    int ns = 1 + rng.below(max_side);
    double density = (seed % 11) / 10.0;
    std::vector<uint8_t> pole(static_cast<std::size_t>(nt) * ns);
    for (auto& c : pole) c = rng.chance(density) ? 1 : 0;
    std::vector<int> push(static_cast<std::size_t>(nt) * ns);
    for (int& v : push) v = rng.below(ns);
    return RealizabilityLattice(Carrier(nt), Carrier(ns), std::move(pole), std::move(push));
}

Aks seeded_aks(std::uint64_t seed) {
    GeneratorParams p;
    // strides coprime to 6, so both sizes sweep the whole 1..6 range
    p.n_terms = 1 + (seed * 7) % 6;
    p.n_stacks = 1 + (seed * 5) % 6;
    p.pole_density = (seed % 11) / 10.0;
    p.qp_seed_size = seed % 3;
    p.rng_seed = seed;
    return gen_random_aks(p);
}

const std::vector<Aks>& corpus100() {
    static std::vector<Aks> v = [] {
        std::vector<Aks> out;
        for (std::uint64_t seed = 1; seed <= 100; ++seed) out.push_back(seeded_aks(seed));
        return out;
    }();
    return v;
}

// ---- criterion 1: polarity laws --------------------------------------

bool criterion1(std::string& detail) {
    g_violations = 0;
    for (std::uint64_t seed = 1; seed <= 200; ++seed)
        tally(check_polarity_laws(seeded_rl(seed, 6), {}), detail);
    tally(check_polarity_laws(gen_vector_polarity({}), {}), detail);
    detail = "200 random lattices + F2^3, exhaustive subsets" + detail;
    return g_violations == 0;
}

// ---- criterion 2: adjunctions ----------------------------------------

bool criterion2(std::string& detail) {
    g_violations = 0;
    long long exhaustive = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        auto rl = seeded_rl(seed + 900, 4);
        for (Variant v : {Variant::Plain, Variant::Bullet, Variant::Perp}) {
            LawCheck law = check_adjunction(rl, v, {});
            if (law.sampled) {
                ++g_violations;
                detail += " [not exhaustive at seed " + std::to_string(seed) + "]";
            } else {
                ++exhaustive;
            }
            tally(law, detail);
        }
    }
    // brute-force oracle for the direction-2 failure on the shifted F2^3
    VectorPolarityParams shifted;
    shifted.prime = 2;
    shifted.shift = {{0, 1, 0}};
    auto rl = gen_vector_polarity(shifted);
    auto family = enumerate_closed(rl, ClosureKind::Perp);
    long long witnesses = 0;
    for (const auto& P : family)
        for (const auto& R : family)
            for (const auto& Lp : family) {
                Subset L = rl.perp_of_stacks(Lp);
                bool rhs = R.is_subset_of(conduct(rl, P, L, Variant::Perp));
                bool lhs = push_set(rl, L, R, Variant::Perp).is_subset_of(P);
                if (rhs && !lhs) ++witnesses;
                if (lhs && !rhs) {
                    ++g_violations;
                    detail += " [direction 1 broke in shifted F2^3]";
                }
            }
    if (witnesses == 0) {
        ++g_violations;
        detail += " [no direction-2 failure witness in shifted F2^3]";
    }
    tally(check_adjunction(rl, Variant::Perp, {}), detail);
    detail = std::to_string(exhaustive) + " exhaustive adjunction checks, " +
             std::to_string(witnesses) + " recorded direction-2 witnesses" + detail;
    return g_violations == 0;
}

// ---- criterion 3: AKS theorem chain ----------------------------------

bool criterion3(std::string& detail) {
    g_violations = 0;
    for (const Aks& k : corpus100()) {
        tally(validate_aks(k), detail);
        tally(check_inclusion_chain(k, {}), detail);
        tally(check_combinator_inequalities(k, {}), detail);
        tally(check_adjunctor_recovery(k, {}), detail);
        tally(check_derived_combinators(k), detail);
    }
    detail = "100 saturated structures" + detail;
    return g_violations == 0;
}

// ---- criterion 4: construction soundness -----------------------------

bool criterion4(std::string& detail) {
    g_violations = 0;
    for (const Aks& k : corpus100()) {
        OcaFromAks f = aks_to_foca_bullet(k);
        auto cls = classify_oca(f.oca);
        if (cls.cls != OcaClass::FOca || !cls.pe_prime_holds) {
            ++g_violations;
            detail += " [A_Kbullet not a FOCA]";
        }
        OcaFromAks io = aks_to_ioca_perp(k);
        auto icls = classify_oca(io.oca);
        if (!icls.cls || !icls.pe_holds) {
            ++g_violations;
            detail += " [A_Kperp not an IOCA with e = {E}^perp]";
        }
        tally(validate_aks(foca_to_aks(f.oca)), detail);
    }
    detail = "bullet FOCA, perp IOCA and derived AKS on all 100 instances" + detail;
    return g_violations == 0;
}

// ---- criterion 5: sharp theorems -------------------------------------

bool criterion5(std::string& detail) {
    g_violations = 0;
    long long perp_checked = 0;
    for (const Aks& k : corpus100()) {
        OcaFromAks f = aks_to_foca_bullet(k);
        tally(check_sharp_theorems(f.oca, classify_oca(f.oca)), detail);
        if (k.rl().stacks().size() <= 4) {
            tally(check_sharp_equals_bar_circ(k), detail);
            ++perp_checked;
        }
    }
    detail = "sharp = application in every bullet FOCA; bar(a ob b) = a#b on " +
             std::to_string(perp_checked) + " perp algebras" + detail;
    return g_violations == 0;
}

// ---- criterion 6: isomorphism and equivalence ------------------------

bool criterion6(std::string& detail) {
    g_violations = 0;
    long long surjective_checked = 0;
    CheckOptions opt;
    opt.samples = 10000;
    for (const Aks& k : corpus100()) {
        tally(check_iso_hk_ha(k), detail);
        if (k.rl().stacks().size() <= 4) {
            tally(check_triangle_commutes(k, opt), detail);
        } else {
            // essential surjectivity stays exhaustive on every instance
            OcaFromAks f = aks_to_foca_bullet(k);
            for (int a = 0; a < f.oca.size(); ++a) {
                if (f.oca.inf(f.oca.up_set(a)) != a) {
                    ++g_violations;
                    detail += " [rho(up a) != a]";
                }
            }
        }
        ++surjective_checked;
    }
    detail = "order matrices identical and rho an equivalence on " +
             std::to_string(surjective_checked) + " instances" + detail;
    return g_violations == 0;
}

// ---- criterion 7: bracket abstraction --------------------------------

using Sym = Polynomial<std::string>;

Sym parse_term(const std::string& text, std::size_t& pos);

Sym parse_atom(const std::string& text, std::size_t& pos) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (text[pos] == '(') {
        ++pos;
        Sym t = parse_term(text, pos);
        ++pos;  // ')'
        return t;
    }
    std::size_t start = pos;
    while (pos < text.size() && text[pos] != ' ' && text[pos] != '(' && text[pos] != ')') ++pos;
    std::string word = text.substr(start, pos - start);
    if (word == "k" || word == "s") return Sym::constant(word);
    return Sym::var(word);
}

Sym parse_term(const std::string& text, std::size_t& pos) {
    Sym t = parse_atom(text, pos);
    for (;;) {
        while (pos < text.size() && text[pos] == ' ') ++pos;
        if (pos >= text.size() || text[pos] == ')') return t;
        t = Sym::apply(t, parse_atom(text, pos));
    }
}

bool criterion7(std::string& detail) {
    g_violations = 0;
    // golden file
    std::ifstream in(std::string(KRS_TEST_DATA_DIR) + "/lambda_star_golden.txt");
    if (!in.good()) {
        detail = "golden file missing";
        return false;
    }
    std::string line;
    int golden_cases = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto p1 = line.find('|');
        auto p2 = line.find('|', p1 + 1);
        auto strip = [](std::string s) {
            while (!s.empty() && s.front() == ' ') s.erase(s.begin());
            while (!s.empty() && s.back() == ' ') s.pop_back();
            return s;
        };
        std::string var = strip(line.substr(0, p1));
        std::size_t pos = 0;
        std::string term_text = strip(line.substr(p1 + 1, p2 - p1 - 1));
        Sym term = parse_term(term_text, pos);
        Sym compiled = lambda_star(var, term, std::string("k"), std::string("s"));
        std::string shown = compiled.to_string([](const std::string& c) { return c; });
        if (shown != strip(line.substr(p2 + 1))) {
            ++g_violations;
            detail += " [golden mismatch at '" + term_text + "']";
        }
        ++golden_cases;
    }
    if (golden_cases != 50) {
        ++g_violations;
        detail += " [expected 50 golden cases, saw " + std::to_string(golden_cases) + "]";
    }

    // beta inequality for every polynomial of depth <= 4 over the atoms
    // {y, x, k}, with exhaustive environments, on constructed FOCAs
    std::vector<FiniteOca> focas;
    for (std::uint64_t seed : {5ull, 23ull}) {
        GeneratorParams p;
        p.n_terms = 3;
        p.n_stacks = 3;
        p.pole_density = 0.3 + 0.1 * (seed % 3);
        p.rng_seed = seed;
        focas.push_back(aks_to_foca_bullet(gen_random_aks(p)).oca);
    }
    long long beta_cases = 0;
    long long beta_polys = 0;
    for (const FiniteOca& a : focas) {
        using P = Polynomial<int>;
        // every polynomial with at most 4 applications over y, x and the
        // constant k: by_size[n] holds the trees with exactly n applications
        std::vector<std::vector<P>> by_size(5);
        by_size[0] = {P::var("y"), P::var("x"), P::constant(a.comb_k())};
        for (int n = 1; n <= 4; ++n)
            for (int left = 0; left < n; ++left)
                for (const auto& l : by_size[left])
                    for (const auto& r : by_size[n - 1 - left])
                        by_size[n].push_back(P::apply(l, r));
        for (const auto& bucket : by_size)
            for (const auto& t : bucket) {
                LawCheck law = check_beta_inequality(a, t, "y", {});
                beta_cases += law.cases;
                ++beta_polys;
                if (!law.passed) {
                    ++g_violations;
                    detail += " [beta fails]";
                }
            }
    }
    detail = std::to_string(golden_cases) + " golden cases; " + std::to_string(beta_polys) +
             " polynomials, " + std::to_string(beta_cases) + " beta evaluations" + detail;
    return g_violations == 0;
}

// ---- criterion 8: indexed layer --------------------------------------

bool criterion8(std::string& detail) {
    g_violations = 0;
    for (const Aks& k : corpus100()) {
        tally(check_indexed_inclusion_equivalence(k, 3, {}), detail);
        tally(check_indexed_iso(k, 3, {}), detail);
        OcaFromAks f = aks_to_foca_bullet(k);
        tally(check_indexed_oca_laws(f.oca, 3, {}), detail);
        tally(check_indexed_equivalence(f.oca, 2, {}), detail);
    }
    detail = "index sizes 1-3 over all 100 instances" + detail;
    return g_violations == 0;
}

// ---- criterion 9: reproducibility plumbing ---------------------------

bool criterion9(std::string& detail) {
    g_violations = 0;
    for (std::uint64_t seed = 1; seed <= 50; ++seed) {
        GeneratorParams p;
        p.n_terms = 1 + seed % 5;
        p.n_stacks = 1 + (seed * 3) % 5;
        p.pole_density = 0.2 * (seed % 5);
        p.qp_seed_size = seed % 3;
        p.rng_seed = seed;
        Aks a = gen_random_aks(p);
        Aks b = gen_random_aks(p);
        std::string text = serialize(a);
        if (!(a == b) || serialize(b) != text) {
            ++g_violations;
            detail += " [determinism broke at seed " + std::to_string(seed) + "]";
        }
        Instance parsed = parse_instance(text);
        if (!(std::get<Aks>(parsed) == a) || serialize(parsed) != text) {
            ++g_violations;
            detail += " [round trip broke at seed " + std::to_string(seed) + "]";
        }
    }
    // `laws all` exits 0 on every shipped instance
    int corpus_files = 0;
    for (const auto& entry : fs::directory_iterator(KRS_DATA_DIR)) {
        if (!entry.is_regular_file()) continue;
        std::string cmd = std::string(KRS_CLI_PATH) + " laws all " + entry.path().string() +
                          " >/dev/null 2>&1";
        int status = std::system(cmd.c_str());
        if (WEXITSTATUS(status) != 0) {
            ++g_violations;
            detail += " [laws all failed on " + entry.path().filename().string() + "]";
        }
        ++corpus_files;
    }
    if (corpus_files == 0) {
        ++g_violations;
        detail += " [no shipped instances found]";
    }
    detail = "50 seeded instances bit-exact; laws all green on " +
             std::to_string(corpus_files) + " shipped files" + detail;
    return g_violations == 0;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<bool(std::string&)> run;
    };
    std::vector<Criterion> criteria = {
        {1, "polarity laws", criterion1},
        {2, "adjunctions", criterion2},
        {3, "AKS theorem chain", criterion3},
        {4, "construction soundness", criterion4},
        {5, "sharp theorems", criterion5},
        {6, "isomorphism and equivalence", criterion6},
        {7, "bracket abstraction", criterion7},
        {8, "indexed layer", criterion8},
        {9, "reproducibility plumbing", criterion9},
    };
    int failures = 0;
    for (auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << c.id << " (" << c.name
                  << "): " << detail << "\n";
        if (!ok) ++failures;
    }
    std::cout << (failures == 0 ? "acceptance suite PASSED"
                                : "acceptance suite FAILED (" + std::to_string(failures) +
                                      " criteria)")
              << "\n";
    return failures == 0 ? 0 : 1;
}
