#include "seqdiv/sieve.hpp"

#include <algorithm>
#include <cmath>

namespace seqdiv {

std::vector<u64> small_primes(u64 limit) {
    std::vector<u64> primes;
    if (limit < 2) return primes;
    std::vector<bool> composite(limit + 1, false);
    for (u64 i = 2; i <= limit; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
    }
    return primes;
}

std::vector<u64> sieving_primes(u64 x_max) {
    u64 root = static_cast<u64>(std::sqrt(static_cast<double>(x_max)));
    while (root * root > x_max) --root;
    while ((root + 1) * (root + 1) <= x_max) ++root;
    return small_primes(root);
}

void sieve_segment(u64 lo, u64 hi, std::span<const u64> base, std::vector<u64>& out,
                   std::vector<unsigned char>& scratch) {
    if (hi <= lo) return;
    const u64 len = hi - lo;
    scratch.assign(len, 1);
    for (u64 q : base) {
        if (q * q >= hi) break;
        u64 start = std::max(q * q, (lo + q - 1) / q * q);
        for (u64 j = start; j < hi; j += q) scratch[j - lo] = 0;
    }
    for (u64 i = 0; i < len; ++i) {
        const u64 n = lo + i;
        if (scratch[i] && n >= 2) out.push_back(n);
    }
}

std::vector<u64> prime_stream(u64 x_max, u64 segment_size) {
    if (segment_size == 0 || (segment_size & (segment_size - 1)) != 0)
        throw std::invalid_argument("prime_stream: segment size must be a power of two");
    if (x_max > kMaxSieveBound) throw std::invalid_argument("prime_stream: x_max exceeds 2^40");
    std::vector<u64> out;
    if (x_max < 2) return out;
    const auto base = sieving_primes(x_max);
    std::vector<unsigned char> scratch;
    for (u64 lo = 0; lo <= x_max; lo += segment_size)
        sieve_segment(lo, std::min(lo + segment_size, x_max + 1), base, out, scratch);
    return out;
}

}  // namespace seqdiv
