#include "seqdiv/sieve.hpp"

#include <doctest.h>

using namespace seqdiv;

TEST_CASE("prime_stream small bound") {
    CHECK(prime_stream(30) == std::vector<u64>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(prime_stream(2) == std::vector<u64>{2});
    CHECK(prime_stream(1).empty());
    CHECK(prime_stream(29).back() == 29);
}

TEST_CASE("prime_stream agrees with Miller-Rabin up to 10^6") {
    const auto primes = prime_stream(1'000'000, 1 << 12);
    CHECK(primes.size() == 78498);
    std::size_t i = 0;
    for (u64 n = 0; n <= 1'000'000; ++n) {
        if (!is_prime(n)) continue;
        REQUIRE(i < primes.size());
        REQUIRE(primes[i++] == n);
    }
    CHECK(i == primes.size());
}

TEST_CASE("prime_stream count to 10^7 is independent of segment size") {
    CHECK(prime_stream(10'000'000).size() == 664579);
    CHECK(prime_stream(10'000'000, 1 << 16).size() == 664579);
}

TEST_CASE("segments cover ranges that straddle sieving primes") {
    const auto base = sieving_primes(100000);
    std::vector<unsigned char> scratch;
    for (u64 lo : {0ULL, 1ULL, 2ULL, 9ULL, 97ULL, 99990ULL}) {
        std::vector<u64> out;
        sieve_segment(lo, lo + 11, base, out, scratch);
        std::vector<u64> expected;
        for (u64 n = lo; n < lo + 11; ++n)
            if (is_prime(n)) expected.push_back(n);
        CHECK(out == expected);
    }
}

TEST_CASE("prime_stream preconditions") {
    CHECK_THROWS_AS(prime_stream(100, 3), std::invalid_argument);
    CHECK_THROWS_AS(prime_stream(100, 0), std::invalid_argument);
    CHECK_THROWS_AS(prime_stream(kMaxSieveBound + 1), std::invalid_argument);
}
