#pragma once

// Prime census for the sequence a^k + b^k.
//
// Primes are streamed from a segmented sieve, classified against a
// BaseProfile, and folded into a CountAccumulator that carries every
// counting function at once: the exact count N(x), the naive and refined
// heuristics K1/K2 and H1/H2, the explicit closed forms of H2, the
// truncated Ramanujan-sum forms and the tail term. All non-integer
// quantities are dyadic and are accumulated exactly.
//
// Special primes (p | 2ab) count towards N(x) and pi(x) only; every
// heuristic sum runs over the remaining "generic" primes.

#include "seqdiv/arith.hpp"
#include "seqdiv/profile.hpp"
#include "seqdiv/rational.hpp"
#include "seqdiv/sieve.hpp"

#include <vector>

namespace seqdiv {

struct PrimeClassification {
    u64 p = 0;
    unsigned s = 0;   // nu2(p - 1)
    int leg_r0 = 0;   // (r0/p); 0 for special primes
    unsigned t = 0;   // nu2(ord_r(p)); the index [F_p^* : <r>] has valuation s - t
    bool divides = false;
    bool special = false;

    bool operator==(const PrimeClassification&) const = default;
};

PrimeClassification classify_prime(const BaseProfile& profile, u64 p);

/// Which Ramanujan terms c_{2^v} to keep: v <= s, v <= min(s, e), v <= min(s, e+1).
enum class Truncation { full, e, e_plus_1 };

Dyadic local_factor_k1(int eps, unsigned e, unsigned s);
Dyadic local_factor_k2(int eps, unsigned e, unsigned s, int leg_r0);

inline Rational local_factor_k1(const BaseProfile& pr, unsigned s) {
    return local_factor_k1(pr.eps, pr.e, s).to_rational();
}
inline Rational local_factor_k2(const BaseProfile& pr, unsigned s, int leg_r0) {
    return local_factor_k2(pr.eps, pr.e, s, leg_r0).to_rational();
}

/// 2^-s * sum_{v = v_lo}^{v_hi} c_{2^v}(index) where nu2(index) = s - t.
Dyadic ramanujan_partial(unsigned s, unsigned t, unsigned v_lo, unsigned v_hi);

/// 2^-s * sum_{v <= bound} c_{2^v}(index), bound chosen by the truncation.
Dyadic ramanujan_local(const BaseProfile& pr, const PrimeClassification& c, Truncation tr);

/// Additive summary of a set of primes. Merging is associative and
/// commutative, so any partition of the primes gives the same totals.
struct CountAccumulator {
    u64 pi = 0;
    u64 pi_generic = 0;
    u64 pi_progression = 0;  // generic p with p == 1 mod 2^{e+1}
    u64 n_exact = 0;
    u64 n_generic = 0;
    Dyadic k1, k2;
    // sum_p 2^-s sum_{v <= bound} c_{2^v}(index) for bounds e, e+1 and s.
    Dyadic ram_trunc_j1, ram_trunc_j2, ram_full;
    // -sum_p 2^-s sum_{e+2 <= v <= s} c_{2^v}(index), i.e. N_generic - H2.
    Dyadic tail;
    // Pieces of the closed forms of H1 and H2.
    Dyadic naive_sum;        // sum_{s > e} 2^-s
    Dyadic plus_sum;         // sum_{leg = 1, s > e} 2^-s
    Dyadic plus_sum_above;   // sum_{leg = 1, s > e+1} 2^-s
    u64 minus_count_edge = 0;  // #{leg = -1, s = e+1}

    void add(const BaseProfile& pr, const PrimeClassification& c);
    CountAccumulator& operator+=(const CountAccumulator& o);
    bool operator==(const CountAccumulator&) const = default;

    Dyadic h1() const { return Dyadic::from_int(static_cast<i64>(pi_generic)) - k1; }
    Dyadic h2() const { return Dyadic::from_int(static_cast<i64>(pi_generic)) - k2; }
    Dyadic ramanujan_count(Truncation tr) const;
};

/// H2 through the explicit eps = +1 / eps = -1 formulas.
Dyadic formula_h2(const BaseProfile& pr, const CountAccumulator& acc);
/// H1 through its explicit form.
Dyadic formula_h1(const BaseProfile& pr, const CountAccumulator& acc);

struct SweepOptions {
    unsigned threads = 1;
    u64 segment_size = kDefaultSegmentSize;
};

struct Checkpoint {
    u64 x = 0;
    CountAccumulator counts;
    double li = 0.0;
};

using SweepSeries = std::vector<Checkpoint>;

/// One pass over the primes up to the last checkpoint, recording the
/// accumulator at every checkpoint (closed interval p <= x). Checkpoints
/// must be strictly increasing, >= 2 and <= x_max. Output is identical for
/// every thread count.
SweepSeries sweep(const BaseProfile& pr, u64 x_max, const std::vector<u64>& checkpoints, SweepOptions opts = {});

/// `count` checkpoints spaced geometrically, ending at x_max.
std::vector<u64> geometric_checkpoints(u64 x_max, unsigned count);

CountAccumulator accumulate(const BaseProfile& pr, u64 x, SweepOptions opts = {});

u64 count_exact(const BaseProfile& pr, u64 x, SweepOptions opts = {});

struct HeuristicCounts {
    Rational k1, k2, h1, h2;
};
HeuristicCounts heuristic_counts(const BaseProfile& pr, u64 x, SweepOptions opts = {});

Rational formula_count(const BaseProfile& pr, u64 x, SweepOptions opts = {});

/// pi_generic(x) - sum_p 2^-s sum_{v} c_{2^v}([F_p^* : <r>]) over generic p.
Rational ramanujan_count(const BaseProfile& pr, u64 x, Truncation tr, SweepOptions opts = {});

/// N_generic(x) - H2(x). This is the negative of the Ramanujan tail
/// sum_p 2^-s sum_{e+2 <= v <= s} c_{2^v}(index).
Rational tail_sum(const BaseProfile& pr, u64 x, SweepOptions opts = {});

inline constexpr u64 kCharacterCountLimit = 2000;

/// pi_generic(x) - sum_p 2^-s sum_{ord(chi) | 2^s} chi(eps) chi^h(r0), with
/// explicit character tables. x <= 2000. Throws InternalInconsistency if an
/// inner sum is not integral within 1e-8.
Rational character_count(const BaseProfile& pr, u64 x);

}  // namespace seqdiv
