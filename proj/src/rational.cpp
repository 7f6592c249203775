#include "seqdiv/rational.hpp"

#include <cmath>
#include <cstdio>

namespace seqdiv {

namespace {

BigInt from_i128(__int128 v) {
    const bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : v;
    BigInt hi = static_cast<std::uint64_t>(u >> 64);
    BigInt r = (hi << 64) + static_cast<std::uint64_t>(u);
    return neg ? BigInt(-r) : r;
}

}  // namespace

std::string to_fraction_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

std::string to_decimal_string(const Rational& q, int significant_digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, to_double(q));
    return buf;
}

Rational pow2(int k) {
    BigInt one = 1;
    if (k >= 0) return Rational(BigInt(one << k));
    return Rational(one, BigInt(one << -k));
}

Rational Dyadic::to_rational() const { return Rational(from_i128(raw_), BigInt(BigInt(1) << kShift)); }

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(raw_), -kShift); }

}  // namespace seqdiv
