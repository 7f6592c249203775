#include "seqdiv/census.hpp"

#include "seqdiv/cyclic.hpp"
#include "seqdiv/ramanujan.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace seqdiv {

PrimeClassification classify_prime(const BaseProfile& pr, u64 p) {
    PrimeClassification c;
    c.p = p;
    c.s = nu2(p - 1);
    if (pr.is_special(p)) {
        c.special = true;
        c.divides = special_prime_divides(pr.a, pr.b, p);
        return c;
    }
    const u64 r = mul_mod(reduce_mod(pr.a, p), mod_inverse(pr.b, p), p);
    // nu2(ord r) is the number of squarings that take r^m to 1, m odd part of p-1.
    u64 y = mod_pow_u(r, (p - 1) >> c.s, p);
    while (y != 1) {
        y = mul_mod(y, y, p);
        ++c.t;
    }
    c.divides = c.t >= 1;
    const u64 r0 = mul_mod(pr.r0_num % p, pr.r0_den % p, p);
    c.leg_r0 = mod_pow_u(r0, (p - 1) / 2, p) == 1 ? 1 : -1;
    return c;
}

Dyadic local_factor_k1(int eps, unsigned e, unsigned s) {
    if (s <= e) return Dyadic::from_int((1 + eps) / 2);
    return Dyadic::scaled_pow2(1, static_cast<int>(s - e));
}

Dyadic local_factor_k2(int eps, unsigned e, unsigned s, int leg_r0) {
    if (s <= e) return Dyadic::from_int((1 + eps) / 2);
    if (s == e + 1) return Dyadic::from_int((1 + eps * leg_r0) / 2);
    return Dyadic::scaled_pow2(1 + leg_r0, static_cast<int>(s - e));
}

Dyadic ramanujan_partial(unsigned s, unsigned t, unsigned v_lo, unsigned v_hi) {
    const unsigned index_valuation = s - t;
    i64 sum = 0;
    for (unsigned v = v_lo; v <= v_hi; ++v) sum += ramanujan_c_2pow_by_valuation(v, index_valuation);
    return Dyadic::scaled_pow2(sum, static_cast<int>(s));
}

Dyadic ramanujan_local(const BaseProfile& pr, const PrimeClassification& c, Truncation tr) {
    unsigned bound = c.s;
    if (tr == Truncation::e) bound = std::min(c.s, pr.e);
    if (tr == Truncation::e_plus_1) bound = std::min(c.s, pr.e + 1);
    return ramanujan_partial(c.s, c.t, 0, bound);
}

void CountAccumulator::add(const BaseProfile& pr, const PrimeClassification& c) {
    ++pi;
    if (c.divides) ++n_exact;
    if (c.special) return;

    ++pi_generic;
    if (c.divides) ++n_generic;
    const unsigned e = pr.e;
    if (c.s >= e + 1) {
        ++pi_progression;
        naive_sum += Dyadic::scaled_pow2(1, static_cast<int>(c.s));
        if (c.leg_r0 == 1) plus_sum += Dyadic::scaled_pow2(1, static_cast<int>(c.s));
    }
    if (c.s > e + 1 && c.leg_r0 == 1) plus_sum_above += Dyadic::scaled_pow2(1, static_cast<int>(c.s));
    if (c.s == e + 1 && c.leg_r0 == -1) ++minus_count_edge;

    k1 += local_factor_k1(pr.eps, e, c.s);
    k2 += local_factor_k2(pr.eps, e, c.s, c.leg_r0);
    ram_trunc_j1 += ramanujan_local(pr, c, Truncation::e);
    ram_trunc_j2 += ramanujan_local(pr, c, Truncation::e_plus_1);
    ram_full += ramanujan_local(pr, c, Truncation::full);
    if (c.s >= e + 2) tail -= ramanujan_partial(c.s, c.t, e + 2, c.s);
}

CountAccumulator& CountAccumulator::operator+=(const CountAccumulator& o) {
    pi += o.pi;
    pi_generic += o.pi_generic;
    pi_progression += o.pi_progression;
    n_exact += o.n_exact;
    n_generic += o.n_generic;
    k1 += o.k1;
    k2 += o.k2;
    ram_trunc_j1 += o.ram_trunc_j1;
    ram_trunc_j2 += o.ram_trunc_j2;
    ram_full += o.ram_full;
    tail += o.tail;
    naive_sum += o.naive_sum;
    plus_sum += o.plus_sum;
    plus_sum_above += o.plus_sum_above;
    minus_count_edge += o.minus_count_edge;
    return *this;
}

Dyadic CountAccumulator::ramanujan_count(Truncation tr) const {
    const Dyadic pi_g = Dyadic::from_int(static_cast<i64>(pi_generic));
    switch (tr) {
        case Truncation::e: return pi_g - ram_trunc_j1;
        case Truncation::e_plus_1: return pi_g - ram_trunc_j2;
        case Truncation::full: break;
    }
    return pi_g - ram_full;
}

Dyadic formula_h2(const BaseProfile& pr, const CountAccumulator& acc) {
    const int shift = static_cast<int>(pr.e) + 1;
    if (pr.eps == 1)
        return Dyadic::from_int(static_cast<i64>(acc.pi_progression)) - acc.plus_sum.times_pow2(shift);
    return Dyadic::from_int(static_cast<i64>(acc.pi_generic)) -
           Dyadic::from_int(static_cast<i64>(acc.minus_count_edge)) - acc.plus_sum_above.times_pow2(shift);
}

Dyadic formula_h1(const BaseProfile& pr, const CountAccumulator& acc) {
    const i64 lead = static_cast<i64>(pr.eps == 1 ? acc.pi_progression : acc.pi_generic);
    return Dyadic::from_int(lead) - acc.naive_sum.times_pow2(static_cast<int>(pr.e));
}

namespace {

struct Range {
    u64 lo, hi;             // [lo, hi)
    std::ptrdiff_t checkpoint;  // index recorded after this range, or -1
};

CountAccumulator process_range(const BaseProfile& pr, const Range& r, std::span<const u64> base,
                               std::vector<u64>& primes, std::vector<unsigned char>& scratch) {
    primes.clear();
    sieve_segment(r.lo, r.hi, base, primes, scratch);
    CountAccumulator acc;
    for (u64 p : primes) acc.add(pr, classify_prime(pr, p));
    return acc;
}

}  // namespace

SweepSeries sweep(const BaseProfile& pr, u64 x_max, const std::vector<u64>& checkpoints, SweepOptions opts) {
    if (x_max > kMaxSieveBound) throw std::invalid_argument("sweep: x_max exceeds 2^40");
    if (opts.segment_size == 0 || (opts.segment_size & (opts.segment_size - 1)) != 0)
        throw std::invalid_argument("sweep: segment size must be a power of two");
    if (opts.threads == 0) throw std::invalid_argument("sweep: thread count must be positive");
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 2 || checkpoints[i] > x_max)
            throw std::invalid_argument("sweep: checkpoints must lie in [2, x_max]");
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
            throw std::invalid_argument("sweep: checkpoints must be strictly increasing");
    }
    SweepSeries series;
    if (checkpoints.empty()) return series;
    const u64 last = checkpoints.back();

    // Segments of the sieve, additionally cut right after every checkpoint.
    std::vector<Range> ranges;
    std::size_t next_cp = 0;
    for (u64 lo = 0; lo <= last;) {
        u64 hi = std::min(lo + opts.segment_size, last + 1);
        std::ptrdiff_t cp = -1;
        if (checkpoints[next_cp] < hi) {
            hi = checkpoints[next_cp] + 1;
            cp = static_cast<std::ptrdiff_t>(next_cp++);
        }
        ranges.push_back({lo, hi, cp});
        lo = hi;
    }

    const auto base = sieving_primes(last);
    const unsigned threads = std::min<unsigned>(opts.threads, static_cast<unsigned>(ranges.size()));
    const std::size_t batch = std::max<std::size_t>(64, 4 * threads);

    CountAccumulator running;
    std::vector<CountAccumulator> partial;
    for (std::size_t first = 0; first < ranges.size(); first += batch) {
        const std::size_t count = std::min(batch, ranges.size() - first);
        partial.assign(count, CountAccumulator{});
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            std::vector<u64> primes;
            std::vector<unsigned char> scratch;
            for (std::size_t i; (i = next.fetch_add(1)) < count;)
                partial[i] = process_range(pr, ranges[first + i], base, primes, scratch);
        };
        if (threads <= 1) {
            worker();
        } else {
            std::vector<std::jthread> pool;
            for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker);
        }
        for (std::size_t i = 0; i < count; ++i) {
            running += partial[i];
            const auto cp = ranges[first + i].checkpoint;
            if (cp >= 0) {
                const u64 x = checkpoints[static_cast<std::size_t>(cp)];
                series.push_back({x, running, log_integral(static_cast<double>(x))});
            }
        }
    }
    return series;
}

std::vector<u64> geometric_checkpoints(u64 x_max, unsigned count) {
    if (x_max < 2) throw std::invalid_argument("geometric_checkpoints: x_max must be >= 2");
    if (count == 0) return {};
    const double lo = x_max > 100 ? 100.0 : 2.0;
    std::vector<u64> out;
    for (unsigned i = 1; i <= count; ++i) {
        u64 x = i == count ? x_max
                           : static_cast<u64>(std::llround(
                                 lo * std::pow(static_cast<double>(x_max) / lo, static_cast<double>(i) / count)));
        x = std::clamp<u64>(x, 2, x_max);
        if (out.empty() || x > out.back()) out.push_back(x);
    }
    return out;
}

CountAccumulator accumulate(const BaseProfile& pr, u64 x, SweepOptions opts) {
    if (x < 2) return {};
    return sweep(pr, x, {x}, opts).front().counts;
}

u64 count_exact(const BaseProfile& pr, u64 x, SweepOptions opts) { return accumulate(pr, x, opts).n_exact; }

HeuristicCounts heuristic_counts(const BaseProfile& pr, u64 x, SweepOptions opts) {
    const auto acc = accumulate(pr, x, opts);
    return {acc.k1.to_rational(), acc.k2.to_rational(), acc.h1().to_rational(), acc.h2().to_rational()};
}

Rational formula_count(const BaseProfile& pr, u64 x, SweepOptions opts) {
    return formula_h2(pr, accumulate(pr, x, opts)).to_rational();
}

Rational ramanujan_count(const BaseProfile& pr, u64 x, Truncation tr, SweepOptions opts) {
    return accumulate(pr, x, opts).ramanujan_count(tr).to_rational();
}

Rational tail_sum(const BaseProfile& pr, u64 x, SweepOptions opts) { return accumulate(pr, x, opts).tail.to_rational(); }

Rational character_count(const BaseProfile& pr, u64 x) {
    if (x > kCharacterCountLimit) throw std::invalid_argument("character_count: x must be <= 2000");
    Rational total = 0;
    for (u64 p : prime_stream(x)) {
        if (pr.is_special(p)) continue;
        const CharacterTable table(p);
        const u64 n = p - 1;
        const unsigned s = nu2(n);
        const u64 d = u64{1} << s;
        // chi(r0) for r0 = r0_num / r0_den, as a phase in units of 2 pi i / n.
        const u64 log_r0 = (table.log(static_cast<i64>(pr.r0_num % p)) + n - table.log(static_cast<i64>(pr.r0_den % p))) % n;
        std::complex<double> inner = 0.0;
        for (u64 j = 0; j < n; j += n / d) {
            const auto chi_eps = table(j, pr.eps);
            const u64 phase_r0 = static_cast<u64>(static_cast<u128>(j) * log_r0 % n);
            const auto chi_h_r0 = table.root_of_unity(static_cast<u64>(static_cast<u128>(phase_r0) * pr.h % n));
            inner += chi_eps * chi_h_r0;
        }
        total += Rational(1) - Rational(round_character_sum(inner), static_cast<i64>(d));
    }
    return total;
}

}  // namespace seqdiv
