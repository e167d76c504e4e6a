#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace krs {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when construction-time sanity checks fail (bad dimensions,
// broken order axioms, out-of-range table entries).
struct structural_error : error {
    using error::error;
};

// Thrown when an enumeration would exceed the configured cap.
struct cap_error : error {
    using error::error;
};

// A finite index set {0, ..., size-1}. Carriers are never empty.
class Carrier {
public:
    explicit Carrier(int size) : size_(size) {
        if (size < 1) throw structural_error("carrier must have at least one element");
    }
    int size() const { return size_; }
    friend bool operator==(Carrier a, Carrier b) { return a.size_ == b.size_; }

private:
    int size_;
};

// A subset of a carrier; the bitset length is the carrier size.
using Subset = boost::dynamic_bitset<std::uint64_t>;

inline Subset subset_empty(Carrier c) { return Subset(c.size()); }

inline Subset subset_full(Carrier c) {
    Subset s(c.size());
    s.set();
    return s;
}

inline Subset subset_singleton(Carrier c, int i) {
    Subset s(c.size());
    s.set(i);
    return s;
}

inline Subset subset_of(Carrier c, std::initializer_list<int> items) {
    Subset s(c.size());
    for (int i : items) s.set(i);
    return s;
}

inline void require_carrier(const Subset& s, Carrier c, const char* what) {
    if (static_cast<int>(s.size()) != c.size())
        throw structural_error(std::string("carrier mismatch: ") + what);
}

// Canonical total order on same-length subsets (numeric value, bit 0 = LSB).
inline bool subset_less(const Subset& a, const Subset& b) { return a < b; }

inline std::string subset_to_string(const Subset& s) {
    std::string out = "{";
    bool first = true;
    for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
        if (!first) out += ",";
        out += std::to_string(i);
        first = false;
    }
    out += "}";
    return out;
}

// Deterministic RNG for seeded checks and generators. Uses raw mt19937_64
// output so instances are reproducible across platforms.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed == 0 ? 0x9e3779b97f4a7c15ull : seed) {}

    std::uint64_t next() {
        // xorshift64*; fixed algorithm, unlike std distributions
        std::uint64_t x = state_;
        x ^= x >> 12;
        x ^= x << 25;
        x ^= x >> 27;
        state_ = x;
        return x * 0x2545f4914f6cdd1dull;
    }

    // uniform-ish draw in [0, n); n >= 1
    int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

    bool chance(double p) {
        return (next() >> 11) * 0x1.0p-53 < p;
    }

    Subset subset(Carrier c) {
        Subset s(c.size());
        for (int i = 0; i < c.size(); ++i)
            if (next() & 1) s.set(i);
        return s;
    }

private:
    std::uint64_t state_;
};

}  // namespace krs
