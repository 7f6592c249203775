#pragma once

#include "seqdiv/arith.hpp"

#include <span>
#include <vector>

namespace seqdiv {

inline constexpr u64 kDefaultSegmentSize = u64{1} << 20;
inline constexpr u64 kMaxSieveBound = u64{1} << 40;

/// Primes <= limit by a plain sieve of Eratosthenes.
std::vector<u64> small_primes(u64 limit);

/// Sieving primes needed for any segment below x_max.
std::vector<u64> sieving_primes(u64 x_max);

/// Appends to `out` every prime in [lo, hi), ascending. `base` must contain
/// all primes <= sqrt(hi - 1). `scratch` is reused between calls.
void sieve_segment(u64 lo, u64 hi, std::span<const u64> base, std::vector<u64>& out,
                   std::vector<unsigned char>& scratch);

/// Every prime <= x_max, ascending, produced segment by segment.
/// segment_size must be a power of two; x_max <= 2^40.
std::vector<u64> prime_stream(u64 x_max, u64 segment_size = kDefaultSegmentSize);

}  // namespace seqdiv
