#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = seqdiv::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s) {
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string line; std::getline(in, line);) v.push_back(line);
    return v;
}

}  // namespace

TEST_CASE("profile") {
    const auto r = run({"profile", "8", "27"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["h"] == 3);
    CHECK(j["e"] == 0);
    CHECK(j["kernel"] == 6);
    CHECK(j["discriminant"] == 24);
    CHECK(j["is_sqrt2"] == false);
    CHECK(j["r0_num"] == 2);
    CHECK(j["r0_den"] == 3);
    for (const char* key : {"a", "b", "eps", "num", "den", "lambda", "special_primes", "omega_ab"})
        CHECK(j.contains(key));

    const auto neg = nlohmann::json::parse(run({"profile", "-2", "1"}).out);
    CHECK(neg["eps"] == -1);
}

TEST_CASE("degenerate input exits 2 without output") {
    const auto same = run({"profile", "2", "2"});
    CHECK(same.code == 2);
    CHECK(same.out.empty());
    CHECK(same.err.find("ratio is ±1") != std::string::npos);

    const auto zero = run({"profile", "2", "0"});
    CHECK(zero.code == 2);
    CHECK(zero.out.empty());
    CHECK(zero.err.find("zero input") != std::string::npos);

    CHECK(run({"density", "5", "-5"}).code == 2);
    CHECK(run({"profile", "2"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
}

TEST_CASE("density") {
    const auto two = nlohmann::json::parse(run({"density", "2", "1", "--format", "json"}).out);
    CHECK(two["delta"] == "17/24");
    CHECK(two["delta1"] == "2/3");
    CHECK(two["delta2"] == "17/24");
    CHECK(two["anomaly"] == true);

    const auto three = nlohmann::json::parse(run({"density", "3", "1", "--format", "json"}).out);
    CHECK(three["delta"] == "2/3");
    CHECK(three["delta1"] == "2/3");
    CHECK(three["delta2"] == "2/3");
    CHECK(three["anomaly"] == false);

    const auto text = run({"density", "16", "1"});
    CHECK(text.code == 0);
    CHECK(text.out.find("delta  = 1/12") != std::string::npos);
}

TEST_CASE("count") {
    CHECK(run({"count", "2", "1", "30", "--method", "exact"}).out == "7\n");
    CHECK(run({"count", "2", "1", "7", "--method", "h2"}).out == "2\n");
    CHECK(run({"count", "2", "1", "7", "--method", "formula"}).out == "2\n");
    const auto exact = nlohmann::json::parse(run({"count", "2", "1", "500", "--format", "json"}).out);
    const auto ram =
        nlohmann::json::parse(run({"count", "2", "1", "500", "--method", "ramanujan", "--format", "json"}).out);
    const auto chars =
        nlohmann::json::parse(run({"count", "2", "1", "500", "--method", "character", "--format", "json"}).out);
    // 2 is the only special prime for (2, 1) and it does not divide 2^k + 1.
    CHECK(ram["value"] == exact["value"]);
    CHECK(ram["value"] == std::to_string(exact["n_generic"].get<std::uint64_t>()));
    CHECK(chars["value"] == ram["value"]);
    const auto h1 = run({"count", "2", "1", "30", "--method", "h1"});
    CHECK(h1.out == "91/16 (5.6875)\n");

    const auto big = run({"count", "2", "1", "2001", "--method", "character"});
    CHECK(big.code == 2);
    CHECK(big.out.empty());
    CHECK(run({"count", "2", "1", "1"}).code == 2);
    CHECK(run({"count", "2", "1", "30", "--method", "magic"}).code == 2);
}

TEST_CASE("sweep csv") {
    const auto r = run({"sweep", "2", "1", "100000", "--checkpoints", "6", "--format", "csv"});
    REQUIRE(r.code == 0);
    const auto ls = lines(r.out);
    REQUIRE(ls.size() == 7);
    CHECK(ls[0] == "x,pi,li,n_exact,n_generic,h1,h2,k1,k2,tail,delta,delta1");
    CHECK(ls.back().rfind("100000,9592,", 0) == 0);
    for (std::size_t i = 1; i < ls.size(); ++i) {
        CHECK(std::count(ls[i].begin(), ls[i].end(), ',') == 11);
        CHECK(ls[i].find(' ') == std::string::npos);
    }

    const auto explicit_cps = run({"sweep", "2", "1", "30", "--at", "10,30"});
    const auto rows = lines(explicit_cps.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].rfind("10,4,", 0) == 0);
    CHECK(rows[1].find(",2,2,") != std::string::npos);
    CHECK(rows[2].rfind("30,10,", 0) == 0);
}

TEST_CASE("sweep json mirrors csv keys") {
    const auto r = run({"sweep", "-8", "27", "5000", "--at", "100,5000", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::ordered_json::parse(r.out);
    REQUIRE(j.size() == 2);
    std::vector<std::string> keys;
    for (auto it = j[0].begin(); it != j[0].end(); ++it) keys.push_back(it.key());
    CHECK(keys == std::vector<std::string>{"x", "pi", "li", "n_exact", "n_generic", "h1", "h2", "k1", "k2", "tail",
                                           "delta", "delta1"});
    CHECK(j[1]["x"] == 5000);
}

TEST_CASE("sweep determinism and validation") {
    const auto one = run({"sweep", "5", "2", "300000", "--checkpoints", "7", "--threads", "1"});
    const auto two = run({"sweep", "5", "2", "300000", "--checkpoints", "7", "--threads", "2"});
    const auto eight = run({"sweep", "5", "2", "300000", "--checkpoints", "7", "--threads", "8", "--segment-size", "4096"});
    CHECK(one.out == two.out);
    CHECK(one.out == eight.out);

    CHECK(run({"sweep", "2", "1", "100", "--at", "50,40"}).code == 2);
    CHECK(run({"sweep", "2", "1", "100", "--at", "500"}).code == 2);
    CHECK(run({"sweep", "2", "1", "100", "--segment-size", "1000"}).code == 2);
    CHECK(run({"sweep", "2", "1", "100", "--threads", "0"}).code == 2);
    CHECK(run({"sweep", "2", "1", "100", "--checkpoints", "3", "--at", "10"}).code == 2);
    CHECK(run({"sweep", "2", "1", "2000000000000"}).code == 2);
}

TEST_CASE("verify") {
    const auto r = run({"verify", "densities"});
    CHECK(r.code == 0);
    CHECK(r.out.rfind("PASS densities", 0) == 0);
    CHECK(run({"verify", "nonsense"}).code == 2);
}
