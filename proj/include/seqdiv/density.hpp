#pragma once

#include "seqdiv/profile.hpp"
#include "seqdiv/rational.hpp"

namespace seqdiv {

/// [L(zeta_{2^k}) : Q] for a real quadratic field L, k >= 1.
u64 cyclotomic_degree(bool is_sqrt2, unsigned k);

/// Density of prime divisors of a^k + b^k, read off the classical table
/// indexed by (L == Q(sqrt 2), lambda, sign).
Rational delta_table(const BaseProfile& pr);

/// Limiting density of the naive heuristic H1.
Rational delta_naive(const BaseProfile& pr);

/// Limiting density of the refined heuristic H2, summing the cyclotomic
/// degree series exactly (finite head plus closed-form geometric tail).
Rational delta_refined(const BaseProfile& pr);

/// Closed form of delta_refined(-|r|) - delta_refined(|r|).
Rational delta_sign_difference(const BaseProfile& pr);

/// sum_{k >= k_lo} 2^-k (1/d_k - 1/d_{k+1}), exact.
Rational cyclotomic_tail(bool is_sqrt2, unsigned k_lo);

struct DensityReport {
    Rational delta, delta1, delta2;
    bool anomaly() const { return delta1 != delta; }
};

DensityReport densities(const BaseProfile& pr);

}  // namespace seqdiv
