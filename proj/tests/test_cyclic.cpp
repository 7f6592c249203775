#include "seqdiv/cyclic.hpp"
#include "seqdiv/ramanujan.hpp"

#include <doctest.h>

#include <numeric>

using namespace seqdiv;

TEST_CASE("power_subgroup_size") {
    CHECK(power_subgroup_size(12, 8) == 3);
    CHECK(power_subgroup_size(7, 1) == 7);
    CHECK(power_subgroup_size(100, 10) == 10);
    CHECK(power_subgroup_size(1, 5) == 1);
}

TEST_CASE("order_valuation_count") {
    // Z/12: elements of order 4 or 12.
    CHECK(order_valuation_count(12, 1, 2) == 6);
    CHECK(brute_force_valuation_count(12, 1, 2) == 6);
    // 12/(12,4) = 3 is odd, so only w = 0 is populated.
    CHECK(order_valuation_count(12, 4, 2) == 0);
    CHECK(order_valuation_count(12, 4, 1) == 0);
    CHECK(order_valuation_count(12, 4, 0) == 3);
    CHECK(brute_force_valuation_count(1, 1, 0) == 1);
    CHECK(brute_force_valuation_count(2, 2, 0) == 1);
}

TEST_CASE("valuation counts partition G^h and match enumeration") {
    for (u64 n = 1; n <= 120; ++n) {
        for (u64 h = 1; h <= 30; ++h) {
            u64 total = 0;
            for (unsigned w = 0; w <= 8; ++w) {
                const u64 c = order_valuation_count(n, h, w);
                REQUIRE(c == brute_force_valuation_count(n, h, w));
                total += c;
            }
            REQUIRE(total == power_subgroup_size(n, h));
        }
    }
}

TEST_CASE("primitive roots") {
    CHECK(find_primitive_root(7) == 3);
    CHECK(find_primitive_root(5) == 2);
    CHECK(find_primitive_root(3) == 2);
    CHECK(find_primitive_root(41) == 6);
    CHECK_THROWS_AS(find_primitive_root(2), std::invalid_argument);
    CHECK_THROWS_AS(find_primitive_root(9), std::invalid_argument);
    for (u64 p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 101ULL, 997ULL, 1999ULL}) {
        const u64 g = find_primitive_root(p);
        CHECK(multiplicative_order(g, p) == p - 1);
        for (u64 smaller = 2; smaller < g; ++smaller) CHECK(multiplicative_order(smaller, p) < p - 1);
    }
}

TEST_CASE("multiplicative_order against iteration") {
    for (u64 p : {3ULL, 7ULL, 17ULL, 31ULL, 97ULL}) {
        for (u64 g = 1; g < p; ++g) {
            u64 k = 1, x = g;
            while (x != 1) {
                x = x * g % p;
                ++k;
            }
            REQUIRE(multiplicative_order(g, p) == k);
        }
    }
}

TEST_CASE("character table") {
    const CharacterTable t(7);
    CHECK(t.generator() == 3);
    CHECK(t.log(3) == 1);
    CHECK(t.log(2) == 2);
    CHECK(t.log(-1) == 3);
    CHECK(t.order(0) == 1);
    CHECK(t.order(1) == 6);
    CHECK(t.order(2) == 3);
    CHECK(t.order(3) == 2);
    // complete multiplicativity
    for (u64 j = 0; j < 6; ++j)
        for (i64 x = 1; x < 7; ++x)
            for (i64 y = 1; y < 7; ++y) CHECK(std::abs(t(j, x * y) - t(j, x) * t(j, y)) < 1e-12);
    CHECK_THROWS_AS(t.log(14), std::invalid_argument);
}

TEST_CASE("character_order_sum") {
    for (i64 g = 1; g < 11; ++g) CHECK(round_character_sum(character_order_sum(11, 1, g)) == 1);
    CHECK(round_character_sum(character_order_sum(7, 2, 3)) == -1);
    // ord_7(2) = 3, so [F_7^* : <2>] = 2 and c_3(2) = -1. Direct sum over
    // the two cubic characters: exp(4 pi i/3) + exp(2 pi i/3) = -1.
    CHECK(round_character_sum(character_order_sum(7, 3, 2)) == -1);
    CHECK(round_character_sum(character_order_sum(7, 3, 2)) == ramanujan_c(3, 2));
    CHECK_THROWS_AS(character_order_sum(7, 4, 2), std::invalid_argument);
}

TEST_CASE("round_character_sum rejects non-integral sums") {
    CHECK(round_character_sum({3.0 + 1e-12, -1e-12}) == 3);
    CHECK_THROWS_AS(round_character_sum({0.5, 0.0}), InternalInconsistency);
    CHECK_THROWS_AS(round_character_sum({1.0, 1e-3}), InternalInconsistency);
}
