#include "seqdiv/ramanujan.hpp"
#include "seqdiv/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace seqdiv;

TEST_CASE("ramanujan_c examples") {
    for (u64 m = 0; m < 20; ++m) CHECK(ramanujan_c(1, m) == 1);
    CHECK(ramanujan_c(4, 2) == -2);
    CHECK(ramanujan_c(6, 1) == 1);
    for (u64 n = 1; n < 50; ++n) CHECK(ramanujan_c(n, 0) == static_cast<i64>(euler_phi(n)));
    CHECK(ramanujan_c(12, 1) == 0);
    CHECK(ramanujan_c(9, 3) == -3);
}

TEST_CASE("ramanujan_c equals the exponential sum") {
    for (u64 n = 1; n <= 60; ++n) {
        for (u64 m = 0; m <= 60; ++m) {
            const auto z = ramanujan_direct_sum(n, m);
            const i64 c = ramanujan_c(n, m);
            REQUIRE(std::abs(z.real() - static_cast<double>(c)) < 1e-6);
            REQUIRE(std::abs(z.imag()) < 1e-6);
            REQUIRE(std::abs(c) <= static_cast<i64>(euler_phi(n)));
        }
    }
}

TEST_CASE("c_n(m) depends only on gcd(n, m)") {
    for (u64 n = 1; n <= 120; ++n)
        for (u64 m = 0; m <= 120; ++m) REQUIRE(ramanujan_c(n, m) == ramanujan_c(n, std::gcd(n, m)));
}

TEST_CASE("weak 2-power form") {
    for (u64 t = 0; t < 10; ++t) CHECK(ramanujan_c_2pow(0, t) == 1);
    CHECK(ramanujan_c_2pow(3, 4) == -4);
    CHECK(ramanujan_c_2pow(2, 8) == 2);
    CHECK(ramanujan_c_2pow(3, 0) == 4);
    CHECK(ramanujan_c_2pow(3, 2) == 0);
    CHECK(ramanujan_c_2pow_by_valuation(5, kInfiniteValuation) == 16);
    for (unsigned v = 0; v <= 10; ++v)
        for (u64 t = 0; t <= 4096; ++t) REQUIRE(ramanujan_c_2pow(v, t) == ramanujan_c(u64{1} << v, t));
}

TEST_CASE("divisor_indicator") {
    CHECK(divisor_indicator(6, 12) == 1);
    CHECK(divisor_indicator(6, 4) == 0);
    for (u64 m = 0; m < 10; ++m) CHECK(divisor_indicator(1, m) == 1);
    for (u64 n = 1; n <= 60; ++n)
        for (u64 m = 0; m <= 120; ++m) REQUIRE(divisor_indicator(n, m) == Rational(m % n == 0 ? 1 : 0));
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<u64>{1});
    CHECK(divisors(12) == std::vector<u64>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(49) == std::vector<u64>{1, 7, 49});
}
