#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fusec {

// Unrecoverable computation errors (bounds exceeded, contract violations).
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed user input (files, CLI arguments, invalid tables).
struct input_error : error {
    using error::error;
};

// Default resource bounds.  All overridable per call where it matters.
inline constexpr int kMaxGroupOrder = 512;     // hard cap on materialized groups
inline constexpr int kLatticeBound = 64;       // subgroup-lattice enumeration cap
inline constexpr int kAutBound = 64;           // automorphism search cap
inline constexpr long kMorphismBudget = 2'000'000;  // fusion closure cap
inline constexpr long kCochainBudget = 100'000;     // |G|^n cap for bar cochains
inline constexpr long kPermRepBudget = 10'000;      // permutation degree cap

inline bool is_prime(int n) {
    if (n < 2) return false;
    for (int d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Largest power of p dividing n.
inline int p_part(int n, int p) {
    int q = 1;
    while (n % p == 0) {
        n /= p;
        q *= p;
    }
    return q;
}

inline int int_log(int q, int p) {
    int k = 0;
    while (q > 1) {
        q /= p;
        ++k;
    }
    return k;
}

} // namespace fusec
