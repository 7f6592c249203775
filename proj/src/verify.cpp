#include "seqdiv/verify.hpp"

#include "seqdiv/census.hpp"
#include "seqdiv/cyclic.hpp"
#include "seqdiv/density.hpp"
#include "seqdiv/profile.hpp"
#include "seqdiv/ramanujan.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace seqdiv {

void SuiteResult::expect(bool ok, const std::string& what) {
    ++checks;
    if (ok || !passed) return;
    passed = false;
    counterexample = what;
}

const std::vector<std::pair<i64, i64>>& reference_profiles() {
    static const std::vector<std::pair<i64, i64>> profiles = {
        {2, 1}, {-2, 1}, {4, 1}, {-4, 1}, {8, 27}, {3, 1}, {-3, 1}, {16, 1}, {5, 2}, {-5, 2}};
    return profiles;
}

std::complex<double> ramanujan_direct_sum(u64 n, u64 m) {
    std::complex<double> sum = 0.0;
    for (u64 k = 1; k <= n; ++k) {
        if (std::gcd(k, n) != 1) continue;
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(k * m % n) / static_cast<double>(n);
        sum += std::complex<double>(std::cos(theta), std::sin(theta));
    }
    return sum;
}

bool sequence_divisible_direct(i64 a, i64 b, u64 p) {
    const u64 am = reduce_mod(a, p), bm = reduce_mod(b, p);
    u64 x = am, y = bm;
    for (u64 k = 1; k <= 2 * p; ++k) {
        if ((x + y) % p == 0) return true;
        x = x * am % p;
        y = y * bm % p;
    }
    return false;
}

namespace {

template <class... Ts>
std::string describe(const Ts&... parts) {
    std::ostringstream os;
    (os << ... << parts);
    return os.str();
}

}  // namespace

SuiteResult verify_group(const VerifyLimits& lim) {
    SuiteResult r{"group"};
    for (u64 n = 1; n <= lim.group_n; ++n) {
        for (u64 h = 1; h <= lim.group_h; ++h) {
            const auto powers = power_set(n, h);
            const auto doubled = power_set(n, 2 * h);
            const u64 size = static_cast<u64>(std::count(powers.begin(), powers.end(), true));
            r.expect(power_subgroup_size(n, h) == size, describe("#G^h n=", n, " h=", h));

            u64 total = 0;
            for (unsigned w = 0; w <= lim.group_w; ++w) {
                const u64 formula = order_valuation_count(n, h, w);
                total += formula;
                r.expect(formula == brute_force_valuation_count(n, h, w),
                         describe("#G_w^h n=", n, " h=", h, " w=", w, " formula=", formula));
            }
            if (nu2(n) <= lim.group_w) r.expect(total == size, describe("partition n=", n, " h=", h));

            const unsigned vn = nu2(n), vh = nu2(h);
            const auto odd = order_valuation_set(n, h, 0);
            const auto g1 = order_valuation_set(n, h, 1);
            for (u64 x = 0; x < n; ++x) {
                if (vh >= vn && powers[x]) r.expect(odd[x], describe("part 2 odd order n=", n, " h=", h, " x=", x));
                if (vh < vn && odd[x]) r.expect(doubled[x], describe("part 2 G_0^h in G^2h n=", n, " h=", h));
                if (!g1[x]) continue;
                if (vn <= vh)
                    r.expect(false, describe("part 3 G_1^h nonempty n=", n, " h=", h));
                else if (vn == vh + 1)
                    r.expect(powers[x] && !doubled[x], describe("part 3 G_1^h in G^h minus G^2h n=", n, " h=", h));
                else
                    r.expect(doubled[x], describe("part 3 G_1^h in G^2h n=", n, " h=", h));
            }
        }
    }
    return r;
}

SuiteResult verify_ramanujan(const VerifyLimits& lim) {
    SuiteResult r{"ramanujan"};
    for (u64 n = 1; n <= lim.ramanujan_complex; ++n) {
        for (u64 m = 0; m <= lim.ramanujan_complex; ++m) {
            const auto z = ramanujan_direct_sum(n, m);
            const i64 c = ramanujan_c(n, m);
            const bool ok = std::abs(z - std::complex<double>(static_cast<double>(c), 0.0)) < 1e-6 &&
                            std::llround(z.real()) == c;
            r.expect(ok, describe("Holder vs exponential sum n=", n, " m=", m, " c=", c, " sum=", z.real()));
        }
    }
    for (u64 n = 1; n <= lim.ramanujan_gcd; ++n)
        for (u64 m = 0; m <= lim.ramanujan_gcd; ++m)
            r.expect(ramanujan_c(n, m) == ramanujan_c(n, std::gcd(n, m)), describe("c_n(m) = c_n((n,m)) n=", n, " m=", m));
    for (unsigned v = 0; v <= lim.ramanujan_v; ++v)
        for (u64 t = 0; t <= lim.ramanujan_t; ++t)
            r.expect(ramanujan_c_2pow(v, t) == ramanujan_c(u64{1} << v, t), describe("weak form v=", v, " t=", t));
    for (u64 n = 1; n <= lim.indicator_n; ++n)
        for (u64 m = 0; m <= lim.indicator_m; ++m)
            r.expect(divisor_indicator(n, m) == Rational(m % n == 0 ? 1 : 0), describe("indicator n=", n, " m=", m));
    return r;
}

SuiteResult verify_characters(const VerifyLimits& lim) {
    SuiteResult r{"characters"};
    for (u64 p : prime_stream(lim.character_p)) {
        if (p == 2) continue;
        const CharacterTable table(p);
        const u64 n = p - 1;
        for (u64 j = 1; j < n; ++j) {
            std::complex<double> sum = 0.0;
            for (u64 g = 1; g < p; ++g) sum += table(j, static_cast<i64>(g));
            r.expect(std::abs(sum) < 1e-8, describe("orthogonality p=", p, " j=", j));
        }
        for (u64 d : divisors(n)) {
            for (u64 g = 1; g < p; ++g) {
                const u64 index = n / multiplicative_order(g, p);
                const auto z = character_order_sum(table, d, static_cast<i64>(g));
                const i64 expected = ramanujan_c(d, index);
                const bool ok = std::abs(z.imag()) < 1e-8 && std::abs(z.real() - static_cast<double>(expected)) < 1e-8;
                r.expect(ok, describe("character sum p=", p, " d=", d, " g=", g, " expected=", expected));
            }
        }
    }
    for (auto [a, b] : reference_profiles()) {
        const auto pr = decompose(a, b);
        const Rational via_characters = character_count(pr, lim.character_x);
        const Rational via_ramanujan = ramanujan_count(pr, lim.character_x, Truncation::full);
        r.expect(via_characters == via_ramanujan,
                 describe("character_count vs ramanujan_count a=", a, " b=", b, " chars=",
                          to_fraction_string(via_characters), " ram=", to_fraction_string(via_ramanujan)));
    }
    return r;
}

SuiteResult verify_local_factors(const VerifyLimits& lim) {
    SuiteResult r{"local-factors"};
    bool branch_low = false, branch_edge = false, branch_high = false;
    for (auto [a, b] : reference_profiles()) {
        const auto pr = decompose(a, b);
        const auto primes = prime_stream(lim.local_factor_x);
        CountAccumulator acc;
        for (u64 p : primes) {
            const auto c = classify_prime(pr, p);
            acc.add(pr, c);
            if (c.special) continue;
            const Dyadic k1 = local_factor_k1(pr.eps, pr.e, c.s);
            const Dyadic k2 = local_factor_k2(pr.eps, pr.e, c.s, c.leg_r0);
            r.expect(ramanujan_local(pr, c, Truncation::e) == k1, describe("k1 a=", a, " b=", b, " p=", p));
            r.expect(ramanujan_local(pr, c, Truncation::e_plus_1) == k2, describe("k2 a=", a, " b=", b, " p=", p));
            r.expect(ramanujan_local(pr, c, Truncation::full) == Dyadic::from_int(c.divides ? 0 : 1),
                     describe("indicator collapse a=", a, " b=", b, " p=", p));
            branch_low |= c.s <= pr.e;
            branch_edge |= c.s == pr.e + 1;
            branch_high |= c.s > pr.e + 1;
        }
        const std::string tag = describe(" a=", a, " b=", b);
        r.expect(acc.ram_trunc_j1 == acc.k1, "summed K1" + tag);
        r.expect(acc.ram_trunc_j2 == acc.k2, "summed K2" + tag);
        r.expect(acc.ramanujan_count(Truncation::full) == Dyadic::from_int(static_cast<i64>(acc.n_generic)),
                 "ramanujan full vs N_generic" + tag);
        r.expect(formula_h2(pr, acc) == acc.h2(), "closed form H2" + tag);
        r.expect(formula_h1(pr, acc) == acc.h1(), "closed form H1" + tag);
        r.expect(acc.tail == Dyadic::from_int(static_cast<i64>(acc.n_generic)) - acc.h2(), "tail" + tag);
    }
    r.expect(branch_low && branch_edge && branch_high, "not every k2 branch was exercised");
    return r;
}

SuiteResult verify_densities(const VerifyLimits& lim) {
    SuiteResult r{"densities"};
    const i64 g = lim.density_grid;
    for (i64 a = -g; a <= g; ++a) {
        for (i64 b = -g; b <= g; ++b) {
            if (a == 0 || b == 0 || std::abs(a) == std::abs(b) || std::gcd(a, b) != 1) continue;
            const auto pr = decompose(a, b);
            const auto d = densities(pr);
            const std::string tag = describe(" a=", a, " b=", b);
            r.expect(d.delta2 == d.delta, "delta2 = delta" + tag + " delta2=" + to_fraction_string(d.delta2));
            if (!pr.is_sqrt2) r.expect(d.delta1 == d.delta, "delta1 = delta off sqrt2" + tag);
            for (const Rational* q : {&d.delta, &d.delta1, &d.delta2}) r.expect(*q >= 0 && *q <= 1, "range" + tag);
            if (pr.eps == -1) r.expect(d.delta >= Rational(1, 2), "eps=-1 lower bound" + tag);
            const auto neg = decompose(-std::abs(a), std::abs(b));
            const auto pos = decompose(std::abs(a), std::abs(b));
            r.expect(delta_sign_difference(pr) == delta_refined(neg) - delta_refined(pos), "sign difference" + tag);
        }
    }
    for (i64 a : {2, 4, -4, 16}) {
        const auto d = densities(decompose(a, 1));
        r.expect(d.delta1 != d.delta, describe("sqrt2 anomaly missing r=", a));
    }
    return r;
}

SuiteResult verify_oracle(const VerifyLimits& lim) {
    SuiteResult r{"oracle"};
    const auto primes = prime_stream(lim.oracle_p);
    const i64 g = lim.oracle_grid;
    for (i64 a = -g; a <= g; ++a) {
        for (i64 b = -g; b <= g; ++b) {
            if (a == 0 || b == 0 || std::abs(a) == std::abs(b)) continue;
            const auto pr = decompose(a, b);
            for (u64 p : primes) {
                const auto c = classify_prime(pr, p);
                r.expect(c.divides == sequence_divisible_direct(a, b, p),
                         describe("parity criterion a=", a, " b=", b, " p=", p));
                if (!c.special) r.expect(c.t <= c.s, describe("t <= s a=", a, " b=", b, " p=", p));
                if (!c.special && pr.eps == 1 && c.s <= pr.e)
                    r.expect(!c.divides, describe("odd order forced a=", a, " b=", b, " p=", p));
            }
        }
    }
    return r;
}

std::vector<SuiteResult> run_suite(std::string_view name, const VerifyLimits& lim) {
    if (name == "group") return {verify_group(lim)};
    if (name == "ramanujan") return {verify_ramanujan(lim)};
    if (name == "characters") return {verify_characters(lim)};
    if (name == "local-factors") return {verify_local_factors(lim)};
    if (name == "densities") return {verify_densities(lim)};
    if (name == "oracle") return {verify_oracle(lim)};
    if (name == "all")
        return {verify_group(lim),         verify_ramanujan(lim), verify_characters(lim),
                verify_local_factors(lim), verify_densities(lim), verify_oracle(lim)};
    throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace seqdiv
