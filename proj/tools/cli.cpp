#include "cli.hpp"

#include "seqdiv/census.hpp"
#include "seqdiv/density.hpp"
#include "seqdiv/profile.hpp"
#include "seqdiv/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>

namespace seqdiv::cli {

namespace {

using nlohmann::ordered_json;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CommandConfig {
    i64 a = 0;
    i64 b = 0;
    u64 x = 0;
    std::string method = "exact";
    std::string format;
    unsigned checkpoint_count = 10;
    std::vector<u64> checkpoint_list;
    unsigned threads = 1;
    u64 segment_size = kDefaultSegmentSize;
    std::string suite;
};

unsigned default_threads() {
    if (const char* env = std::getenv("SEQDIV_THREADS")) {
        char* end = nullptr;
        const unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

std::string fraction(const Rational& q) { return to_fraction_string(q); }
std::string decimal(const Rational& q) { return to_decimal_string(q, 10); }
std::string decimal(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

ordered_json profile_json(const BaseProfile& pr) {
    ordered_json specials = ordered_json::array();
    for (const auto& sp : pr.special_primes) specials.push_back({{"prime", sp.prime}, {"divides", sp.divides}});
    return {{"a", pr.a},
            {"b", pr.b},
            {"eps", pr.eps},
            {"num", pr.num},
            {"den", pr.den},
            {"r0_num", pr.r0_num},
            {"r0_den", pr.r0_den},
            {"h", pr.h},
            {"e", pr.e},
            {"lambda", pr.lambda},
            {"kernel", pr.kernel},
            {"discriminant", pr.discriminant},
            {"is_sqrt2", pr.is_sqrt2},
            {"special_primes", specials},
            {"omega_ab", pr.omega_ab}};
}

void cmd_profile(const CommandConfig& cfg, std::ostream& out) {
    out << profile_json(decompose(cfg.a, cfg.b)).dump(2) << '\n';
}

void cmd_density(const CommandConfig& cfg, std::ostream& out) {
    const auto pr = decompose(cfg.a, cfg.b);
    const auto d = densities(pr);
    if (cfg.format == "json") {
        ordered_json j = {{"a", cfg.a},
                          {"b", cfg.b},
                          {"delta", fraction(d.delta)},
                          {"delta1", fraction(d.delta1)},
                          {"delta2", fraction(d.delta2)},
                          {"delta_decimal", to_double(d.delta)},
                          {"delta1_decimal", to_double(d.delta1)},
                          {"delta2_decimal", to_double(d.delta2)},
                          {"anomaly", d.anomaly()}};
        out << j.dump(2) << '\n';
        return;
    }
    out << "delta  = " << fraction(d.delta) << " (" << decimal(d.delta) << ")\n";
    out << "delta1 = " << fraction(d.delta1) << " (" << decimal(d.delta1) << ")\n";
    out << "delta2 = " << fraction(d.delta2) << " (" << decimal(d.delta2) << ")\n";
    if (d.anomaly())
        out << "anomaly: naive density differs from the true density (L = Q(sqrt 2))\n";
    else
        out << "anomaly: none\n";
}

void cmd_count(const CommandConfig& cfg, std::ostream& out) {
    const auto pr = decompose(cfg.a, cfg.b);
    if (cfg.x < 2) throw UsageError("x must be >= 2");
    if (cfg.method == "character" && cfg.x > kCharacterCountLimit)
        throw UsageError("method character requires x <= 2000");
    const SweepOptions opts{cfg.threads, cfg.segment_size};
    const auto acc = accumulate(pr, cfg.x, opts);

    Rational value;
    bool integral = false;
    if (cfg.method == "exact") {
        value = Rational(static_cast<i64>(acc.n_exact));
        integral = true;
    } else if (cfg.method == "h1") {
        value = acc.h1().to_rational();
    } else if (cfg.method == "h2") {
        value = acc.h2().to_rational();
    } else if (cfg.method == "formula") {
        value = formula_h2(pr, acc).to_rational();
    } else if (cfg.method == "ramanujan") {
        value = acc.ramanujan_count(Truncation::full).to_rational();
    } else {
        value = character_count(pr, cfg.x);
    }

    if (cfg.format == "json") {
        ordered_json j = {{"a", cfg.a},
                          {"b", cfg.b},
                          {"x", cfg.x},
                          {"method", cfg.method},
                          {"value", fraction(value)},
                          {"decimal", to_double(value)},
                          {"pi", acc.pi},
                          {"n_exact", acc.n_exact},
                          {"n_generic", acc.n_generic}};
        out << j.dump(2) << '\n';
        return;
    }
    if (integral || boost::multiprecision::denominator(value) == 1)
        out << fraction(value) << '\n';
    else
        out << fraction(value) << " (" << decimal(value) << ")\n";
}

void cmd_sweep(const CommandConfig& cfg, std::ostream& out) {
    const auto pr = decompose(cfg.a, cfg.b);
    if (cfg.x < 2) throw UsageError("x_max must be >= 2");
    if (cfg.x > kMaxSieveBound) throw UsageError("x_max must be <= 2^40");
    std::vector<u64> checkpoints = cfg.checkpoint_list;
    if (checkpoints.empty()) {
        checkpoints = geometric_checkpoints(cfg.x, cfg.checkpoint_count);
    } else {
        for (std::size_t i = 0; i < checkpoints.size(); ++i) {
            if (checkpoints[i] < 2 || checkpoints[i] > cfg.x) throw UsageError("checkpoints must lie in [2, x_max]");
            if (i > 0 && checkpoints[i] <= checkpoints[i - 1])
                throw UsageError("checkpoints must be strictly increasing");
        }
    }
    const auto series = sweep(pr, cfg.x, checkpoints, {cfg.threads, cfg.segment_size});
    const auto dens = densities(pr);

    if (cfg.format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& cp : series) {
            const auto& c = cp.counts;
            rows.push_back({{"x", cp.x},
                            {"pi", c.pi},
                            {"li", cp.li},
                            {"n_exact", c.n_exact},
                            {"n_generic", c.n_generic},
                            {"h1", fraction(c.h1().to_rational())},
                            {"h2", fraction(c.h2().to_rational())},
                            {"k1", fraction(c.k1.to_rational())},
                            {"k2", fraction(c.k2.to_rational())},
                            {"tail", fraction(c.tail.to_rational())},
                            {"delta", fraction(dens.delta)},
                            {"delta1", fraction(dens.delta1)}});
        }
        out << rows.dump(2) << '\n';
        return;
    }
    out << "x,pi,li,n_exact,n_generic,h1,h2,k1,k2,tail,delta,delta1\n";
    for (const auto& cp : series) {
        const auto& c = cp.counts;
        out << cp.x << ',' << c.pi << ',' << decimal(cp.li) << ',' << c.n_exact << ',' << c.n_generic << ','
            << decimal(c.h1().to_rational()) << ',' << decimal(c.h2().to_rational()) << ','
            << decimal(c.k1.to_rational()) << ',' << decimal(c.k2.to_rational()) << ','
            << decimal(c.tail.to_rational()) << ',' << decimal(dens.delta) << ',' << decimal(dens.delta1) << '\n';
    }
}

int cmd_verify(const CommandConfig& cfg, std::ostream& out) {
    const auto results = run_suite(cfg.suite);
    bool ok = true;
    for (const auto& r : results) {
        if (r.passed) {
            out << "PASS " << r.name << " (" << r.checks << " checks)\n";
        } else {
            out << "FAIL " << r.name << ": " << r.counterexample << '\n';
            ok = false;
        }
    }
    return ok ? 0 : 1;
}

void add_pair(CLI::App* sub, CommandConfig& cfg) {
    sub->add_option("a", cfg.a, "first base (nonzero integer)")->required();
    sub->add_option("b", cfg.b, "second base (nonzero integer)")->required();
}

void add_runtime(CLI::App* sub, CommandConfig& cfg) {
    sub->add_option("--threads", cfg.threads, "worker threads (default: $SEQDIV_THREADS or 1)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--segment-size", cfg.segment_size, "sieve segment length, a power of two")
        ->check([](const std::string& s) -> std::string {
            const u64 v = std::stoull(s);
            return v != 0 && (v & (v - 1)) == 0 ? "" : "segment size must be a power of two";
        });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CommandConfig cfg;
    cfg.threads = default_threads();

    CLI::App app{"Prime divisors of a^k + b^k: exact counts, heuristics and densities", "seqdiv"};
    app.require_subcommand(1);

    auto* profile = app.add_subcommand("profile", "decompose r = a/b and print it as JSON");
    add_pair(profile, cfg);

    auto* density = app.add_subcommand("density", "print the limiting densities delta, delta1, delta2");
    add_pair(density, cfg);
    density->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* count = app.add_subcommand("count", "count prime divisors up to x with the chosen method");
    add_pair(count, cfg);
    count->add_option("x", cfg.x, "upper bound")->required();
    count->add_option("--method", cfg.method, "exact, h1, h2, formula, ramanujan or character")
        ->check(CLI::IsMember({"exact", "h1", "h2", "formula", "ramanujan", "character"}));
    count->add_option("--format", cfg.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    add_runtime(count, cfg);

    auto* sweep_cmd = app.add_subcommand("sweep", "record every counting function at a series of checkpoints");
    add_pair(sweep_cmd, cfg);
    sweep_cmd->add_option("x_max", cfg.x, "largest x")->required();
    auto* cp_count = sweep_cmd->add_option("--checkpoints", cfg.checkpoint_count,
                                           "number of geometrically spaced checkpoints")
                         ->check(CLI::PositiveNumber);
    auto* cp_list = sweep_cmd->add_option("--at", cfg.checkpoint_list, "explicit checkpoints")->delimiter(',');
    cp_count->excludes(cp_list);
    sweep_cmd->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    add_runtime(sweep_cmd, cfg);

    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("suite", cfg.suite, "group, ramanujan, characters, local-factors, densities, oracle or all")
        ->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }

    std::ostringstream buffer;
    try {
        if (*profile) {
            cmd_profile(cfg, buffer);
        } else if (*density) {
            cmd_density(cfg, buffer);
        } else if (*count) {
            cmd_count(cfg, buffer);
        } else if (*sweep_cmd) {
            cmd_sweep(cfg, buffer);
        } else if (*verify) {
            bool known = false;
            for (auto name : kSuiteNames) known |= name == cfg.suite;
            if (!known) throw UsageError("unknown suite: " + cfg.suite);
            const int rc = cmd_verify(cfg, buffer);
            out << buffer.str();
            return rc;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        // ZeroInput and DegenerateRatio land here too.
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    out << buffer.str();
    return 0;
}

}  // namespace seqdiv::cli
