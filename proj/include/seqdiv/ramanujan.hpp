#pragma once

#include "seqdiv/arith.hpp"
#include "seqdiv/rational.hpp"

#include <limits>

namespace seqdiv {

/// c_n(m) by Hölder's identity: phi(n) mu(n/(n,m)) / phi(n/(n,m)).
i64 ramanujan_c(u64 n, u64 m);

/// Valuation marker for t = 0.
inline constexpr unsigned kInfiniteValuation = std::numeric_limits<unsigned>::max();

/// c_{2^v}(t) given only nu2(t) (kInfiniteValuation for t = 0):
///   0 if nu2(t) < v-1,  -phi(2^v) if nu2(t) = v-1,  phi(2^v) if nu2(t) >= v.
inline i64 ramanujan_c_2pow_by_valuation(unsigned v, unsigned t_valuation) {
    if (v == 0) return 1;
    const i64 phi = i64{1} << (v - 1);
    if (t_valuation >= v) return phi;
    if (t_valuation + 1 == v) return -phi;
    return 0;
}

/// c_{2^v}(t), t >= 0.
i64 ramanujan_c_2pow(unsigned v, u64 t);

/// (1/n) * sum over d | n of c_d(m); exactly 1 if n | m, else 0.
Rational divisor_indicator(u64 n, u64 m);

/// Positive divisors of n in ascending order.
std::vector<u64> divisors(u64 n);

}  // namespace seqdiv
