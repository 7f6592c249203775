#include "seqdiv/density.hpp"

#include <algorithm>

namespace seqdiv {

u64 cyclotomic_degree(bool is_sqrt2, unsigned k) {
    if (k == 0) throw std::invalid_argument("cyclotomic_degree: k must be >= 1");
    if (k <= 2 || !is_sqrt2) return u64{1} << k;
    return u64{1} << (k - 1);
}

Rational delta_table(const BaseProfile& pr) {
    const int lambda = static_cast<int>(pr.lambda);
    const bool plus = pr.eps == 1;
    if (!pr.is_sqrt2) return plus ? pow2(1 - lambda) / 3 : 1 - pow2(-lambda) / 3;
    switch (lambda) {
        case 0: return Rational(17, 24);
        case 1: return plus ? Rational(5, 12) : Rational(2, 3);
        default: return plus ? pow2(-lambda) / 3 : 1 - pow2(-1 - lambda) / 3;
    }
}

Rational delta_naive(const BaseProfile& pr) {
    const int e = static_cast<int>(pr.e);
    return pr.eps == 1 ? pow2(1 - e) / 3 : 1 - pow2(-e) / 3;
}

namespace {

Rational inv_degree(bool is_sqrt2, unsigned k) { return Rational(1, static_cast<i64>(cyclotomic_degree(is_sqrt2, k))); }

}  // namespace

Rational cyclotomic_tail(bool is_sqrt2, unsigned k_lo) {
    if (k_lo == 0) throw std::invalid_argument("cyclotomic_tail: k must be >= 1");
    // From k = 3 on, d_{k+1} = 2 d_k, so the terms form a geometric series
    // of ratio 1/4 whose sum from K is (2/3) 2^-K / d_K.
    const unsigned geometric_from = std::max(3u, k_lo);
    Rational sum = 0;
    for (unsigned k = k_lo; k < geometric_from; ++k)
        sum += pow2(-static_cast<int>(k)) * (inv_degree(is_sqrt2, k) - inv_degree(is_sqrt2, k + 1));
    sum += Rational(2, 3) * pow2(-static_cast<int>(geometric_from)) * inv_degree(is_sqrt2, geometric_from);
    return sum;
}

Rational delta_refined(const BaseProfile& pr) {
    const unsigned e = pr.e;
    const Rational scale = pow2(static_cast<int>(e) + 1);
    if (pr.eps == 1) return pow2(-static_cast<int>(e)) - scale * cyclotomic_tail(pr.is_sqrt2, e + 1);
    return 1 - pow2(-static_cast<int>(e) - 1) + inv_degree(pr.is_sqrt2, e + 1) - inv_degree(pr.is_sqrt2, e + 2) -
           scale * cyclotomic_tail(pr.is_sqrt2, e + 2);
}

Rational delta_sign_difference(const BaseProfile& pr) {
    const unsigned e = pr.e;
    return 1 - Rational(3) * pow2(-static_cast<int>(e) - 1) + 2 * inv_degree(pr.is_sqrt2, e + 1) -
           2 * inv_degree(pr.is_sqrt2, e + 2);
}

DensityReport densities(const BaseProfile& pr) { return {delta_table(pr), delta_naive(pr), delta_refined(pr)}; }

}  // namespace seqdiv
