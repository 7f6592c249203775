#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace seqdiv {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q", or "p" when the denominator is 1.
std::string to_fraction_string(const Rational& q);

/// Decimal rendering with the given number of significant digits.
std::string to_decimal_string(const Rational& q, int significant_digits = 10);

double to_double(const Rational& q);

/// 2^k as a rational, k may be negative.
Rational pow2(int k);

/// Exact dyadic rational with fixed denominator 2^kShift.
///
/// Every per-prime quantity accumulated by the census has a power-of-two
/// denominator no larger than 2^nu2(p-1), and nu2(p-1) < kShift for all
/// p <= 2^40, so sums stay exact in a 128-bit numerator.
class Dyadic {
public:
    static constexpr int kShift = 40;

    constexpr Dyadic() = default;

    static constexpr Dyadic from_int(std::int64_t n) {
        return Dyadic(static_cast<__int128>(n) << kShift);
    }
    /// m * 2^-k for 0 <= k <= kShift.
    static constexpr Dyadic scaled_pow2(std::int64_t m, int k) {
        return Dyadic(static_cast<__int128>(m) << (kShift - k));
    }

    constexpr Dyadic& operator+=(Dyadic o) {
        raw_ += o.raw_;
        return *this;
    }
    constexpr Dyadic& operator-=(Dyadic o) {
        raw_ -= o.raw_;
        return *this;
    }
    friend constexpr Dyadic operator+(Dyadic x, Dyadic y) { return x += y; }
    friend constexpr Dyadic operator-(Dyadic x, Dyadic y) { return x -= y; }
    friend constexpr Dyadic operator-(Dyadic x) { return Dyadic(-x.raw_); }
    /// Multiplication by 2^k, k >= 0.
    constexpr Dyadic times_pow2(int k) const { return Dyadic(raw_ * (static_cast<__int128>(1) << k)); }

    friend constexpr bool operator==(Dyadic, Dyadic) = default;
    friend constexpr auto operator<=>(Dyadic, Dyadic) = default;

    constexpr __int128 raw() const { return raw_; }
    Rational to_rational() const;
    double to_double() const;

private:
    constexpr explicit Dyadic(__int128 raw) : raw_(raw) {}
    __int128 raw_ = 0;
};

}  // namespace seqdiv
