#include "seqdiv/ramanujan.hpp"

#include <algorithm>
#include <numeric>

namespace seqdiv {

i64 ramanujan_c(u64 n, u64 m) {
    if (n == 0) throw std::invalid_argument("ramanujan_c: n must be >= 1");
    const u64 q = n / std::gcd(n, m);
    const int mu = moebius(q);
    if (mu == 0) return 0;
    return mu * static_cast<i64>(euler_phi(n) / euler_phi(q));
}

i64 ramanujan_c_2pow(unsigned v, u64 t) {
    return ramanujan_c_2pow_by_valuation(v, t == 0 ? kInfiniteValuation : nu2(t));
}

std::vector<u64> divisors(u64 n) {
    std::vector<u64> ds{1};
    if (n == 1) return ds;
    for (auto [p, k] : factorize(n).factors) {
        const std::size_t base = ds.size();
        u64 pk = 1;
        for (unsigned i = 0; i < k; ++i) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * pk);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

Rational divisor_indicator(u64 n, u64 m) {
    i64 sum = 0;
    for (u64 d : divisors(n)) sum += ramanujan_c(d, m);
    return Rational(sum, static_cast<i64>(n));
}

}  // namespace seqdiv
