#pragma once

// Integer and floating-point primitives shared by the rest of the library.
// Everything here is a pure function; 64-bit inputs with 128-bit
// intermediates for modular products.

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

namespace seqdiv {

using i64 = std::int64_t;
using u64 = std::uint64_t;
using u128 = unsigned __int128;
using i128 = __int128;

class NotInvertible : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Prime/exponent pairs, primes strictly ascending, exponents >= 1.
struct Factorization {
    std::vector<std::pair<u64, unsigned>> factors;

    u64 product() const;
    bool operator==(const Factorization&) const = default;
};

/// Largest v with p^v | n. Throws std::invalid_argument for n == 0.
unsigned p_adic_valuation(u64 p, i64 n);

/// 2-adic valuation of a nonzero unsigned value.
inline unsigned nu2(u64 n) { return static_cast<unsigned>(__builtin_ctzll(n)); }

inline u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>(static_cast<u128>(a) * b % m);
}

/// base^exp mod m for m >= 2; negative bases are reduced first.
u64 mod_pow(i64 base, u64 exp, u64 m);

/// Unsigned variant for hot loops where base < m already holds.
u64 mod_pow_u(u64 base, u64 exp, u64 m);

/// Reduces any signed value into [0, m).
inline u64 reduce_mod(i64 a, u64 m) {
    const i128 r = static_cast<i128>(a) % static_cast<i128>(m);
    return static_cast<u64>(r < 0 ? r + m : r);
}

/// x in [1, m) with a*x == 1 (mod m). Throws NotInvertible if gcd(a, m) > 1.
u64 mod_inverse(i64 a, u64 m);

/// Euler's criterion. p must be an odd prime; throws for p == 2.
int legendre_symbol(i64 a, u64 p);

/// Deterministic for all 64-bit n (fixed witness set).
bool is_prime(u64 n);

/// Complete factorization of n >= 2. Trial division to 10^6, then
/// Pollard-Brent rho on the remaining cofactor.
Factorization factorize(u64 n);

/// Product of the primes dividing n to an odd power (n >= 1).
u64 squarefree_kernel(u64 n);

u64 euler_phi(u64 n);
int moebius(u64 n);

/// Li(x) = integral from 2 to x of dt / log t, by adaptive Simpson.
/// Throws std::invalid_argument for x < 2.
double log_integral(double x);

}  // namespace seqdiv
