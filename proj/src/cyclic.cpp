#include "seqdiv/cyclic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace seqdiv {

u64 power_subgroup_size(u64 n, u64 h) { return n / std::gcd(n, h); }

u64 order_valuation_count(u64 n, u64 h, unsigned w) {
    const u64 q = power_subgroup_size(n, h);
    const unsigned v = nu2(q);
    if (w == 0) return q >> v;
    if (w > v) return 0;
    return q >> (v - w + 1);
}

std::vector<bool> power_set(u64 n, u64 h) {
    std::vector<bool> in(n, false);
    for (u64 k = 0; k < n; ++k) in[static_cast<u64>(static_cast<u128>(h) * k % n)] = true;
    return in;
}

std::vector<bool> order_valuation_set(u64 n, u64 h, unsigned w) {
    std::vector<bool> in = power_set(n, h);
    for (u64 x = 0; x < n; ++x) {
        if (!in[x]) continue;
        const u64 order = n / std::gcd(n, x);
        if (nu2(order) != w) in[x] = false;
    }
    return in;
}

u64 brute_force_valuation_count(u64 n, u64 h, unsigned w) {
    std::vector<bool> seen(n, false);
    u64 count = 0;
    for (u64 k = 0; k < n; ++k) {
        const u64 x = static_cast<u64>(static_cast<u128>(h) * k % n);
        if (seen[x]) continue;
        seen[x] = true;
        const u64 order = n / std::gcd(n, x);
        if (nu2(order) == w) ++count;
    }
    return count;
}

u64 find_primitive_root(u64 p) {
    if (p < 3 || p % 2 == 0 || !is_prime(p)) throw std::invalid_argument("find_primitive_root: p must be an odd prime");
    const auto f = factorize(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool primitive = true;
        for (auto [q, k] : f.factors) {
            if (mod_pow_u(g, (p - 1) / q, p) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw std::logic_error("find_primitive_root: no primitive root found");
}

u64 multiplicative_order(u64 g, u64 p) {
    g %= p;
    if (g == 0) throw std::invalid_argument("multiplicative_order: p divides g");
    if (p == 2) return 1;
    u64 order = p - 1;
    for (auto [q, k] : factorize(p - 1).factors) {
        for (unsigned i = 0; i < k && mod_pow_u(g, order / q, p) == 1; ++i) order /= q;
    }
    return order;
}

CharacterTable::CharacterTable(u64 p) : p_(p), g0_(find_primitive_root(p)), dlog_(p, 0) {
    u64 x = 1;
    for (u64 k = 0; k + 1 < p; ++k) {
        dlog_[x] = k;
        x = x * g0_ % p;
    }
}

u64 CharacterTable::log(i64 g) const {
    const u64 x = reduce_mod(g, p_);
    if (x == 0) throw std::invalid_argument("CharacterTable::log: p divides g");
    return dlog_[x];
}

u64 CharacterTable::order(u64 j) const { return (p_ - 1) / std::gcd(j % (p_ - 1), p_ - 1); }

std::complex<double> CharacterTable::root_of_unity(u64 phase) const {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(phase % (p_ - 1)) / static_cast<double>(p_ - 1);
    return {std::cos(theta), std::sin(theta)};
}

std::complex<double> CharacterTable::operator()(u64 j, i64 g) const { return root_of_unity(phase(j, g)); }

std::complex<double> character_order_sum(const CharacterTable& table, u64 d, i64 g) {
    const u64 n = table.group_order();
    if (d == 0 || n % d != 0) throw std::invalid_argument("character_order_sum: d must divide p - 1");
    // Characters of order dividing d are chi_j with j a multiple of n/d.
    std::complex<double> sum = 0.0;
    const u64 step = n / d;
    for (u64 j = 0; j < n; j += step)
        if (table.order(j) == d) sum += table(j, g);
    return sum;
}

std::complex<double> character_order_sum(u64 p, u64 d, i64 g) { return character_order_sum(CharacterTable(p), d, g); }

i64 round_character_sum(std::complex<double> z, double tol) {
    const double re = std::round(z.real());
    if (std::abs(z.imag()) >= tol || std::abs(z.real() - re) >= tol)
        throw InternalInconsistency("character sum is not integral: (" + std::to_string(z.real()) + ", " +
                                    std::to_string(z.imag()) + ")");
    return static_cast<i64>(re);
}

}  // namespace seqdiv
