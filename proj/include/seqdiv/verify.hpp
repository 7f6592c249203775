#pragma once

// Exhaustive property suites. Each suite checks a family of identities
// against an independent brute-force route and reports the first
// counterexample it meets.

#include "seqdiv/arith.hpp"

#include <complex>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace seqdiv {

struct SuiteResult {
    explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

    std::string name;
    bool passed = true;
    u64 checks = 0;
    std::string counterexample;

    /// Records one check; keeps only the first failure message.
    void expect(bool ok, const std::string& what);
};

struct VerifyLimits {
    u64 group_n = 300;
    u64 group_h = 50;
    unsigned group_w = 6;
    u64 ramanujan_complex = 100;
    u64 ramanujan_gcd = 200;
    unsigned ramanujan_v = 10;
    u64 ramanujan_t = 4096;
    u64 indicator_n = 200;
    u64 indicator_m = 400;
    u64 character_p = 200;
    u64 character_x = 500;
    u64 local_factor_x = 100000;
    i64 density_grid = 30;
    u64 oracle_p = 2000;
    i64 oracle_grid = 12;
};

/// Profiles exercised by the per-prime identity suites.
const std::vector<std::pair<i64, i64>>& reference_profiles();

/// c_n(m) as the literal exponential sum over units k mod n.
std::complex<double> ramanujan_direct_sum(u64 n, u64 m);

/// Whether p divides a^k + b^k for some 1 <= k <= 2p, by iteration.
bool sequence_divisible_direct(i64 a, i64 b, u64 p);

SuiteResult verify_group(const VerifyLimits& lim = {});
SuiteResult verify_ramanujan(const VerifyLimits& lim = {});
SuiteResult verify_characters(const VerifyLimits& lim = {});
SuiteResult verify_local_factors(const VerifyLimits& lim = {});
SuiteResult verify_densities(const VerifyLimits& lim = {});
SuiteResult verify_oracle(const VerifyLimits& lim = {});

inline constexpr std::string_view kSuiteNames[] = {"group",     "ramanujan", "characters", "local-factors",
                                                   "densities", "oracle",    "all"};

/// Runs one named suite, or every suite for "all". Throws
/// std::invalid_argument for an unknown name.
std::vector<SuiteResult> run_suite(std::string_view name, const VerifyLimits& lim = {});

}  // namespace seqdiv
