#pragma once

#include "seqdiv/arith.hpp"

#include <stdexcept>
#include <vector>

namespace seqdiv {

class ZeroInput : public std::invalid_argument {
public:
    ZeroInput() : std::invalid_argument("zero input: a and b must be nonzero") {}
};

class DegenerateRatio : public std::invalid_argument {
public:
    DegenerateRatio() : std::invalid_argument("ratio is ±1: |a| must differ from |b|") {}
};

struct SpecialPrime {
    u64 prime;
    bool divides;
    bool operator==(const SpecialPrime&) const = default;
};

/// Everything attached to the ratio r = a/b.
///
/// |r| = num/den in lowest terms, and num/den = (r0_num/r0_den)^h with h
/// maximal. e = nu2(h) and lambda (the largest j with |r| a 2^j-th power)
/// coincide, and L = Q(sqrt(r0)) has squarefree kernel `kernel` and
/// discriminant `discriminant`. special_primes lists every p | 2ab together
/// with whether p divides some a^k + b^k.
struct BaseProfile {
    i64 a = 0;
    i64 b = 0;
    int eps = 1;
    u64 num = 0;
    u64 den = 0;
    u64 r0_num = 0;
    u64 r0_den = 0;
    unsigned h = 0;
    unsigned e = 0;
    unsigned lambda = 0;
    u64 kernel = 0;
    u64 discriminant = 0;
    bool is_sqrt2 = false;
    std::vector<SpecialPrime> special_primes;
    unsigned omega_ab = 0;

    /// True iff p | 2ab.
    bool is_special(u64 p) const {
        return p == 2 || a % static_cast<i64>(p) == 0 || b % static_cast<i64>(p) == 0;
    }
};

/// Throws ZeroInput for a*b == 0, DegenerateRatio for |a| == |b|.
BaseProfile decompose(i64 a, i64 b);

/// Whether a prime p | 2ab divides some a^k + b^k. Throws
/// std::invalid_argument if p does not divide 2ab.
bool special_prime_divides(i64 a, i64 b, u64 p);

}  // namespace seqdiv
