// Command-line front end: estimate on real data, simulate the sampling
// procedure, or print oracle population parameters.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "seqgini/errors.hpp"
#include "seqgini/harness.hpp"
#include "seqgini/oracle.hpp"
#include "seqgini/report_io.hpp"
#include "seqgini/sequential.hpp"
#include "seqgini/sources.hpp"

namespace {

// Stable exit codes, documented in the README.
enum ExitCode : int {
    kOk = 0,
    kSourceExhausted = 10,
    kUndefinedGini = 11,
    kDataParse = 12,
    kCapExceeded = 13,
    kMomentExistence = 14,
    kUsage = 64,
    kInternal = 70,
};

struct EstimateArgs {
    std::string input;
    double alpha = 0.0;
    double d = 0.0;
    bool skip_header = false;
    bool trace = false;
    std::size_t n_max = 10'000'000;
    std::string format = "text";
};

struct SimulateArgs {
    std::string family = "all";
    std::vector<double> params;
    double alpha = 0.1;
    double d = 0.01;
    std::size_t reps = 2000;
    std::uint64_t seed = 42;
    unsigned workers = 0;
    std::size_t mc_budget = 1'000'000;
    std::size_t n_max = 10'000'000;
    std::string format = "table";
    std::string config_path;
};

struct OracleArgs {
    std::string family;
    std::vector<double> params;
    double alpha = 0.1;
    double d = 0.01;
    std::size_t mc_budget = 1'000'000;
    std::uint64_t seed = 42;
};

seqgini::DistributionSpec resolve_spec(const std::string& family,
                                       const std::vector<double>& params) {
    const seqgini::Family f = seqgini::family_from_name(family);
    if (params.empty()) {
        return seqgini::default_spec(f);
    }
    if (params.size() != 2) {
        throw seqgini::ConfigError("--params expects exactly two values");
    }
    seqgini::DistributionSpec spec{f, params[0], params[1]};
    spec.validate();
    return spec;
}

int run_estimate(const EstimateArgs& args) {
    const seqgini::StoppingConfig config = seqgini::StoppingConfig::make(args.alpha, args.d);
    const seqgini::RunOptions options{args.trace, args.n_max};
    auto source = seqgini::open_file_source(args.input, {args.skip_header});
    const seqgini::SequentialResult result = seqgini::run_sequential(*source, config, options);

    if (args.format == "json") {
        nlohmann::ordered_json j{
            {"config",
             {{"input", args.input},
              {"alpha", args.alpha},
              {"d", args.d},
              {"skip_header", args.skip_header},
              {"n_max", args.n_max},
              {"pilot_m", config.m},
              {"z", config.z}}},
            {"result", seqgini::to_json(result)}};
        std::cout << j.dump(2) << "\n";
        return kOk;
    }

    std::printf("# estimate input=%s alpha=%g d=%g skip_header=%s n_max=%zu pilot_m=%zu\n",
                args.input.c_str(), args.alpha, args.d, args.skip_header ? "true" : "false",
                args.n_max, config.m);
    std::printf("n_final  %zu\n", result.n_final);
    std::printf("gini     %.10f\n", result.gini);
    std::printf("ci_low   %.10f\n", result.ci_low);
    std::printf("ci_high  %.10f\n", result.ci_high);
    std::printf("v_sq     %.10g\n", result.v_sq);
    if (args.trace) {
        std::printf("# trace: n v_sq threshold\n");
        for (const auto& point : result.trace) {
            std::printf("%zu %.10g %.10g\n", point.n, point.v_sq, point.threshold);
        }
    }
    return kOk;
}

int run_simulate(const SimulateArgs& args) {
    std::vector<seqgini::ExperimentConfig> configs;
    if (!args.config_path.empty()) {
        std::ifstream in(args.config_path);
        if (!in.is_open()) {
            throw seqgini::ConfigError("cannot open config file: " + args.config_path);
        }
        const nlohmann::json j = nlohmann::json::parse(in);
        if (j.is_array()) {
            for (const auto& entry : j) {
                configs.push_back(seqgini::experiment_config_from_json(entry));
            }
        } else {
            configs.push_back(seqgini::experiment_config_from_json(j));
        }
    } else {
        std::vector<seqgini::DistributionSpec> specs;
        if (args.family == "all") {
            if (!args.params.empty()) {
                throw seqgini::ConfigError("--params requires a single --family");
            }
            specs = {seqgini::default_spec(seqgini::Family::gamma),
                     seqgini::default_spec(seqgini::Family::lognormal),
                     seqgini::default_spec(seqgini::Family::pareto)};
        } else {
            specs = {resolve_spec(args.family, args.params)};
        }
        for (const auto& spec : specs) {
            seqgini::ExperimentConfig config;
            config.spec = spec;
            config.alpha = args.alpha;
            config.d = args.d;
            config.replications = args.reps;
            config.master_seed = args.seed;
            config.worker_count = args.workers;
            config.mc_budget = args.mc_budget;
            config.n_max = args.n_max;
            configs.push_back(config);
        }
    }

    const seqgini::ReportStyle style = seqgini::report_style_from_name(args.format);
    std::vector<seqgini::SimulationReport> reports;
    reports.reserve(configs.size());
    for (const auto& config : configs) {
        reports.push_back(seqgini::run_experiment(config));
    }

    if (style == seqgini::ReportStyle::table) {
        // Config echo for reproducibility; csv and json carry it in-band.
        for (const auto& config : configs) {
            std::printf(
                "# simulate family=%s params=(%g, %g) alpha=%g d=%g reps=%zu seed=%llu "
                "workers=%u mc_budget=%zu\n",
                seqgini::family_name(config.spec.family).c_str(), config.spec.param1,
                config.spec.param2, config.alpha, config.d, config.replications,
                static_cast<unsigned long long>(config.master_seed), config.worker_count,
                config.mc_budget);
        }
    }
    std::fputs(seqgini::format_reports(reports, style).c_str(), stdout);
    return kOk;
}

int run_oracle(const OracleArgs& args) {
    const seqgini::DistributionSpec spec = resolve_spec(args.family, args.params);
    const seqgini::oracle::TruePopulationParams params =
        seqgini::oracle::true_params(spec, args.alpha, args.d, args.mc_budget, args.seed);
    std::cout << seqgini::to_json(params).dump(2) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Purely sequential fixed-width confidence intervals for the Gini index"};
    app.require_subcommand(1);

    EstimateArgs estimate_args;
    CLI::App* estimate = app.add_subcommand(
        "estimate", "Run the sequential procedure over a data file (or - for stdin)");
    estimate->add_option("input", estimate_args.input, "CSV/text file of nonnegative incomes")
        ->required();
    estimate->add_option("--alpha", estimate_args.alpha, "confidence parameter in (0,1)")
        ->required();
    estimate->add_option("--d", estimate_args.d, "margin of error (half-width)")->required();
    estimate->add_flag("--skip-header", estimate_args.skip_header, "skip the first input row");
    estimate->add_flag("--trace", estimate_args.trace, "record and print every stop check");
    estimate->add_option("--n-max", estimate_args.n_max, "hard cap on the stopping time");
    estimate->add_option("--format", estimate_args.format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));

    SimulateArgs simulate_args;
    CLI::App* simulate =
        app.add_subcommand("simulate", "Monte Carlo study of the sequential procedure");
    simulate->add_option("--family", simulate_args.family, "gamma|lognormal|pareto|all")
        ->check(CLI::IsMember({"gamma", "lognormal", "pareto", "all"}));
    simulate->add_option("--params", simulate_args.params,
                         "two family parameters (defaults match the built-in study)")
        ->expected(2);
    simulate->add_option("--alpha", simulate_args.alpha, "confidence parameter");
    simulate->add_option("--d", simulate_args.d, "margin of error");
    simulate->add_option("--reps", simulate_args.reps, "replication count");
    simulate->add_option("--seed", simulate_args.seed, "master seed");
    simulate->add_option("--workers", simulate_args.workers,
                         "worker threads (0 = hardware); never affects results");
    simulate->add_option("--mc-budget", simulate_args.mc_budget,
                         "oracle sample size behind the C column");
    simulate->add_option("--n-max", simulate_args.n_max, "per-replication hard cap");
    simulate->add_option("--format", simulate_args.format, "table|csv|json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    simulate->add_option("--config", simulate_args.config_path,
                         "JSON experiment config (object or array); overrides other flags");

    OracleArgs oracle_args;
    CLI::App* oracle =
        app.add_subcommand("oracle", "Population parameters and optimal sample size");
    oracle->add_option("--family", oracle_args.family, "gamma|lognormal|pareto")
        ->required()
        ->check(CLI::IsMember({"gamma", "lognormal", "pareto"}));
    oracle->add_option("--params", oracle_args.params, "two family parameters")->expected(2);
    oracle->add_option("--alpha", oracle_args.alpha, "confidence parameter");
    oracle->add_option("--d", oracle_args.d, "margin of error");
    oracle->add_option("--mc-budget", oracle_args.mc_budget, "Monte Carlo sample size (>= 1e5)");
    oracle->add_option("--seed", oracle_args.seed, "oracle seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*estimate) {
            return run_estimate(estimate_args);
        }
        if (*simulate) {
            return run_simulate(simulate_args);
        }
        if (*oracle) {
            return run_oracle(oracle_args);
        }
        return kUsage;
    } catch (const seqgini::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDataParse;
    } catch (const seqgini::SourceExhaustedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cerr << "observations read: " << e.observations_seen << "\n";
        if (e.unmet_threshold) {
            std::cerr << "unmet stopping boundary: " << *e.unmet_threshold << "\n";
        }
        return kSourceExhausted;
    } catch (const seqgini::UndefinedGiniError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUndefinedGini;
    } catch (const seqgini::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCapExceeded;
    } catch (const seqgini::MomentExistenceError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kMomentExistence;
    } catch (const seqgini::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
}
