#include "seqdiv/profile.hpp"

#include <limits>
#include <map>
#include <numeric>

namespace seqdiv {

namespace {

u64 magnitude(i64 v) {
    if (v == std::numeric_limits<i64>::min())
        throw std::out_of_range("inputs are limited to 63-bit magnitude");
    return static_cast<u64>(v < 0 ? -v : v);
}

void add_factors(u64 n, std::map<u64, unsigned>& out) {
    if (n < 2) return;
    for (auto [p, k] : factorize(n).factors) out[p] += k;
}

u64 checked_mul(u64 x, u64 y) {
    u64 r;
    if (__builtin_mul_overflow(x, y, &r)) throw std::overflow_error("squarefree kernel exceeds 64 bits");
    return r;
}

}  // namespace

bool special_prime_divides(i64 a, i64 b, u64 p) {
    const i64 sp = static_cast<i64>(p);
    const bool pa = a % sp == 0, pb = b % sp == 0;
    if (p != 2 && !pa && !pb) throw std::invalid_argument("special_prime_divides: p does not divide 2ab");
    if (pa && pb) return true;
    if (pa || pb) return false;
    // p == 2 with a, b both odd: a + b is even.
    return true;
}

BaseProfile decompose(i64 a, i64 b) {
    if (a == 0 || b == 0) throw ZeroInput();
    const u64 ma = magnitude(a), mb = magnitude(b);
    if (ma == mb) throw DegenerateRatio();

    BaseProfile pr;
    pr.a = a;
    pr.b = b;
    pr.eps = ((a < 0) != (b < 0)) ? -1 : 1;
    const u64 g = std::gcd(ma, mb);
    pr.num = ma / g;
    pr.den = mb / g;

    std::map<u64, unsigned> num_f, den_f;
    add_factors(pr.num, num_f);
    add_factors(pr.den, den_f);

    unsigned h = 0;
    for (auto& [p, k] : num_f) h = std::gcd(h, k);
    for (auto& [p, k] : den_f) h = std::gcd(h, k);
    pr.h = h;
    pr.e = nu2(h);
    pr.lambda = pr.e;

    auto root = [h](const std::map<u64, unsigned>& f) {
        u64 r = 1;
        for (auto [p, k] : f)
            for (unsigned i = 0; i < k / h; ++i) r *= p;
        return r;
    };
    pr.r0_num = root(num_f);
    pr.r0_den = root(den_f);

    u64 kernel = 1;
    for (auto [p, k] : num_f)
        if ((k / h) % 2 == 1) kernel = checked_mul(kernel, p);
    for (auto [p, k] : den_f)
        if ((k / h) % 2 == 1) kernel = checked_mul(kernel, p);
    pr.kernel = kernel;
    pr.discriminant = kernel % 4 == 1 ? kernel : checked_mul(kernel, 4);
    pr.is_sqrt2 = kernel == 2;

    std::map<u64, unsigned> ab;
    ab[2] = 0;
    add_factors(ma, ab);
    add_factors(mb, ab);
    for (auto& [p, k] : ab) pr.special_primes.push_back({p, special_prime_divides(a, b, p)});
    pr.omega_ab = static_cast<unsigned>(ab.size()) - ((ma % 2 != 0 && mb % 2 != 0) ? 1u : 0u);
    return pr;
}

}  // namespace seqdiv
