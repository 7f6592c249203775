#pragma once

// Powers and order valuations in a cyclic group of order n, both by closed
// formula and by enumeration, plus explicit character tables of (Z/pZ)^*.
// Group elements are exponents k in [0, n) relative to a fixed generator.

#include "seqdiv/arith.hpp"

#include <complex>
#include <vector>

namespace seqdiv {

/// #G^h = n / gcd(n, h).
u64 power_subgroup_size(u64 n, u64 h);

/// #G_w^h: h-th powers whose order has 2-adic valuation exactly w.
u64 order_valuation_count(u64 n, u64 h, unsigned w);

/// Membership mask over exponents [0, n) of G^h.
std::vector<bool> power_set(u64 n, u64 h);

/// Membership mask over exponents [0, n) of G_w^h.
std::vector<bool> order_valuation_set(u64 n, u64 h, unsigned w);

/// #G_w^h by enumerating {hk mod n} and each element's order n/gcd(n, hk).
u64 brute_force_valuation_count(u64 n, u64 h, unsigned w);

/// Smallest primitive root modulo an odd prime p.
u64 find_primitive_root(u64 p);

/// Multiplicative order of g mod p (gcd(g, p) = 1).
u64 multiplicative_order(u64 g, u64 p);

/// All p - 1 characters of (Z/pZ)^*: chi_j(g0^k) = exp(2 pi i jk / (p-1)).
class CharacterTable {
public:
    explicit CharacterTable(u64 p);

    u64 prime() const { return p_; }
    u64 generator() const { return g0_; }
    u64 group_order() const { return p_ - 1; }

    /// Discrete logarithm of g (not divisible by p) to base g0.
    u64 log(i64 g) const;

    /// Order of chi_j: (p-1)/gcd(j, p-1).
    u64 order(u64 j) const;

    /// Exponent of chi_j(g) in units of 2 pi i / (p-1).
    u64 phase(u64 j, i64 g) const { return static_cast<u64>(static_cast<u128>(j) * log(g) % (p_ - 1)); }

    std::complex<double> operator()(u64 j, i64 g) const;

    /// e^{2 pi i phase / (p-1)}.
    std::complex<double> root_of_unity(u64 phase) const;

private:
    u64 p_;
    u64 g0_;
    std::vector<u64> dlog_;
};

class InternalInconsistency : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Sum of chi(g) over characters of exact order d. d must divide p - 1.
std::complex<double> character_order_sum(const CharacterTable& table, u64 d, i64 g);

/// Convenience overload that builds the table.
std::complex<double> character_order_sum(u64 p, u64 d, i64 g);

/// Rounds a character sum to an integer, or throws InternalInconsistency
/// when it is further than `tol` from one.
i64 round_character_sum(std::complex<double> z, double tol = 1e-8);

}  // namespace seqdiv
