#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace krs {

// Knobs shared by all quantified checks. A check is exhaustive when the
// product of its quantified domain sizes fits the budget, otherwise it
// samples `samples` cases from the seeded RNG.
struct CheckOptions {
    std::uint64_t seed = 12345;
    long long samples = 2000;
    std::uint64_t exhaustive_budget = 1ull << 20;
    int cap = 14;  // max stack-carrier size for family enumeration
};

// whether a 2^bits subset scan fits the budget; shift-safe for any size
inline bool fits_exhaustive(int bits, std::uint64_t budget) {
    return bits >= 0 && bits < 63 && (std::uint64_t{1} << bits) <= budget;
}

// Outcome of one law: pass/fail plus the witnesses that matter.
// `counterexamples` are violations of asserted laws; `notes` record
// expected or informational witnesses that do not fail the check.
struct LawCheck {
    std::string name;
    bool passed = true;
    long long cases = 0;
    bool sampled = false;
    std::vector<std::string> counterexamples;
    std::vector<std::string> notes;

    static constexpr std::size_t max_witnesses = 8;

    void fail(std::string witness) {
        passed = false;
        if (counterexamples.size() < max_witnesses)
            counterexamples.push_back(std::move(witness));
    }
    void note(std::string text) {
        if (notes.size() < max_witnesses) notes.push_back(std::move(text));
    }
};

struct SuiteReport {
    std::vector<LawCheck> checks;

    void add(LawCheck c) { checks.push_back(std::move(c)); }
    void merge(SuiteReport other) {
        for (auto& c : other.checks) checks.push_back(std::move(c));
    }
    bool all_passed() const {
        return std::all_of(checks.begin(), checks.end(),
                           [](const LawCheck& c) { return c.passed; });
    }
    void sort_by_name() {
        std::sort(checks.begin(), checks.end(),
                  [](const LawCheck& a, const LawCheck& b) { return a.name < b.name; });
    }
};

}  // namespace krs
