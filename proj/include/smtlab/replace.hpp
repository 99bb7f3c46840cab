#pragma once

#include "smtlab/variety.hpp"

#include <cstdint>

namespace smtlab {

// Prefix dimensions D_s = dim(V intersect Q_0 .. Q_s), nullopt = empty.
struct DimensionProfile {
    std::vector<std::optional<int>> dims;
};

// Threshold indices 0 = t_0 < t_1 < ... < t_n = l at which the prefix
// dimension drops to n-u-1. `offset` records the normalization in force
// (0 here; the lemma's statement uses t_0 = 1, which only shifts all
// entries and leaves every difference t_s - t_0 unchanged).
struct Thresholds {
    std::vector<int> t;
    int l = 0;
    int offset = 0;
};

struct ReplacementResult {
    std::vector<std::vector<Rational>> coefficients; // row u holds c_{u,0..t_u}
    std::vector<Poly> replacements;                  // P_0..P_n
    std::vector<std::optional<int>> certificate;     // dim(V cap P_0..P_t), final empty
    std::vector<int> retries_used;                   // per step u = 1..n
};

struct ProductInequalityReport {
    bool holds = true;
    Rational lhs;
    Rational rhs;
    long power = 1; // both sides raised to this exponent (denominator of delta)
};

DimensionProfile dimension_profile(const Ideal& V, const std::vector<Poly>& ordered_family);

// Reads thresholds off a profile with D_0 = n-1 that reaches empty;
// members past the first empty prefix are unused and l is the index of
// that prefix.
Thresholds thresholds_from_profile(const DimensionProfile& p, int n);

// Randomized constructive replacement: P_0 = Q_0 and each P_u is the first
// random combination sum_{j<=t_u} c_uj Q_j whose verified prefix dimension
// drops to n-u-1. Coefficients are integers in [-B,B] with B doubling on
// every retry; a candidate is only accepted after the variety module
// certifies the dimension, so retries are certified rather than trusted.
ReplacementResult replace_family(const Ideal& V, const std::vector<Poly>& ordered_family,
                                 std::uint64_t seed, int retry_budget = 10);

// max over 1<=s<=n of (t_s - t_0)/s, exact.
Rational delta_from_thresholds(const Thresholds& t);

// m_n = delta, m_{u-1} = t_u - t_{u-1} + max(0, m_u - delta); returned in
// the order m_n, m_{n-1}, ..., m_0.
std::vector<Rational> m_sequence(const Thresholds& t);

// Checks a_0^{t_1-t_0} ... a_{n-1}^{t_n-t_{n-1}} <= (a_0...a_{n-1})^delta
// for a_0 >= ... >= a_{n-1} >= 1, raising both sides to the denominator of
// delta so the comparison stays in exact rational arithmetic.
ProductInequalityReport weighted_product_inequality(const Thresholds& t,
                                                    const std::vector<Rational>& a);

} // namespace smtlab
