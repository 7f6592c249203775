#include "seqdiv/arith.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace seqdiv {

u64 Factorization::product() const {
    u64 n = 1;
    for (auto [p, k] : factors)
        for (unsigned i = 0; i < k; ++i) n *= p;
    return n;
}

unsigned p_adic_valuation(u64 p, i64 n) {
    if (n == 0) throw std::invalid_argument("p_adic_valuation: n = 0 has infinite valuation");
    if (p < 2) throw std::invalid_argument("p_adic_valuation: p must be prime");
    u64 m = n < 0 ? static_cast<u64>(-(n + 1)) + 1 : static_cast<u64>(n);
    unsigned v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

u64 mod_pow_u(u64 base, u64 exp, u64 m) {
    u64 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 mod_pow(i64 base, u64 exp, u64 m) {
    if (m < 2) throw std::invalid_argument("mod_pow: modulus must be >= 2");
    return mod_pow_u(reduce_mod(base, m), exp, m);
}

u64 mod_inverse(i64 a, u64 m) {
    if (m < 2) throw std::invalid_argument("mod_inverse: modulus must be >= 2");
    i128 old_r = reduce_mod(a, m), r = m;
    i128 old_s = 1, s = 0;
    while (r != 0) {
        const i128 q = old_r / r;
        std::tie(old_r, r) = std::pair{r, old_r - q * r};
        std::tie(old_s, s) = std::pair{s, old_s - q * s};
    }
    if (old_r != 1) throw NotInvertible("mod_inverse: gcd(a, m) > 1");
    old_s %= static_cast<i128>(m);
    if (old_s < 0) old_s += m;
    return static_cast<u64>(old_s);
}

int legendre_symbol(i64 a, u64 p) {
    if (p == 2) throw std::invalid_argument("legendre_symbol: p must be an odd prime");
    const u64 r = mod_pow(a, (p - 1) / 2, p);
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

namespace {

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
    u64 x = mod_pow_u(a % n, d, n);
    if (x == 1 || x == n - 1) return false;
    for (unsigned i = 1; i < s; ++i) {
        x = mul_mod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;
}

u64 pollard_brent(u64 n) {
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 block = 128;
        auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
        for (u64 len = 1; g == 1; len <<= 1) {
            x = y;
            for (u64 i = 0; i < len; ++i) y = f(y);
            for (u64 k = 0; k < len && g == 1; k += block) {
                ys = y;
                for (u64 i = 0; i < std::min(block, len - k); ++i) {
                    y = f(y);
                    q = mul_mod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
            }
        }
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void split_large(u64 n, std::map<u64, unsigned>& out) {
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    const u64 d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

}  // namespace

bool is_prime(u64 n) {
    if (n < 2) return false;
    static constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (u64 q : kBases) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    const unsigned s = nu2(d);
    d >>= s;
    for (u64 a : kBases) {
        if (miller_rabin_witness(n, a, d, s)) return false;
    }
    return true;
}

Factorization factorize(u64 n) {
    if (n < 2) throw std::invalid_argument("factorize: n must be >= 2");
    std::map<u64, unsigned> found;
    constexpr u64 kTrialLimit = 1'000'000;
    for (u64 q = 2; q <= kTrialLimit && q * q <= n; q += (q == 2 ? 1 : 2)) {
        while (n % q == 0) {
            ++found[q];
            n /= q;
        }
    }
    if (n > 1) {
        if (n <= kTrialLimit * kTrialLimit || is_prime(n))
            ++found[n];
        else
            split_large(n, found);
    }
    Factorization f;
    f.factors.assign(found.begin(), found.end());
    return f;
}

u64 squarefree_kernel(u64 n) {
    if (n == 0) throw std::invalid_argument("squarefree_kernel: n must be >= 1");
    if (n == 1) return 1;
    u64 k = 1;
    for (auto [p, e] : factorize(n).factors)
        if (e % 2 == 1) k *= p;
    return k;
}

u64 euler_phi(u64 n) {
    if (n == 0) throw std::invalid_argument("euler_phi: n must be >= 1");
    if (n == 1) return 1;
    u64 phi = n;
    for (auto [p, e] : factorize(n).factors) phi = phi / p * (p - 1);
    return phi;
}

int moebius(u64 n) {
    if (n == 0) throw std::invalid_argument("moebius: n must be >= 1");
    if (n == 1) return 1;
    const auto f = factorize(n);
    for (auto [p, e] : f.factors)
        if (e > 1) return 0;
    return f.factors.size() % 2 == 0 ? 1 : -1;
}

namespace {

double simpson_step(double fa, double fm, double fb, double a, double b) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = 1.0 / std::log(lm), frm = 1.0 / std::log(rm);
    const double left = simpson_step(fa, flm, fm, a, m);
    const double right = simpson_step(fm, frm, fb, m, b);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    return adaptive_simpson(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double log_integral(double x) {
    if (!(x >= 2.0)) throw std::invalid_argument("log_integral: x must be >= 2");
    if (x == 2.0) return 0.0;
    // Split geometrically so each panel sees a comparable relative change in t.
    double total = 0.0;
    double a = 2.0;
    while (a < x) {
        const double b = std::min(2.0 * a, x);
        const double fa = 1.0 / std::log(a), fb = 1.0 / std::log(b);
        const double fm = 1.0 / std::log(0.5 * (a + b));
        const double whole = simpson_step(fa, fm, fb, a, b);
        const double tol = std::max(1e-12, 1e-9 * std::abs(whole)) * 1e-3;
        total += adaptive_simpson(a, b, fa, fm, fb, whole, tol, 40);
        a = b;
    }
    return total;
}

}  // namespace seqdiv
