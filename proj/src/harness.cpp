#include "seqgini/harness.hpp"

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "seqgini/errors.hpp"

namespace seqgini {

namespace {

struct ReplicationOutcome {
    std::size_t n_final = 0;
    double gini = 0.0;
};

}  // namespace

SimulationReport run_experiment_with(const SourceFactory& factory, const ExperimentConfig& config,
                                     double true_gini_value, std::size_t c_opt) {
    if (config.replications < 1) {
        throw ConfigError("replications must be at least 1");
    }
    const StoppingConfig stopping = StoppingConfig::make(config.alpha, config.d);
    const RunOptions run_options{false, config.n_max};
    const std::size_t reps = config.replications;

    unsigned workers = config.worker_count;
    if (workers == 0) {
        workers = std::max(1u, std::thread::hardware_concurrency());
    }
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, reps));

    std::vector<ReplicationOutcome> outcomes(reps);

    auto run_one = [&](std::size_t index) {
        auto source = factory(index);
        const SequentialResult result = run_sequential(*source, stopping, run_options);
        outcomes[index] = {result.n_final, result.gini};
    };

    if (workers <= 1) {
        for (std::size_t i = 0; i < reps; ++i) {
            try {
                run_one(i);
            } catch (const Error& e) {
                throw Error("replication " + std::to_string(i) + " failed: " + e.what());
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::atomic<bool> failed{false};
        std::mutex failure_mutex;
        std::size_t failure_index = reps;
        std::exception_ptr failure;

        auto worker = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= reps || failed.load()) {
                    return;
                }
                try {
                    run_one(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (i < failure_index) {
                        failure_index = i;
                        failure = std::current_exception();
                    }
                    failed.store(true);
                }
            }
        };

        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back(worker);
        }
        for (auto& t : pool) {
            t.join();
        }
        if (failed.load()) {
            try {
                std::rethrow_exception(failure);
            } catch (const std::exception& e) {
                throw Error("replication " + std::to_string(failure_index) +
                            " failed: " + e.what());
            }
        }
    }

    // Single-threaded reduction in replication order.
    const double rd = static_cast<double>(reps);
    double n_sum = 0.0;
    std::size_t max_n = 0;
    std::size_t covered = 0;
    for (const auto& outcome : outcomes) {
        n_sum += static_cast<double>(outcome.n_final);
        max_n = std::max(max_n, outcome.n_final);
        if (true_gini_value > outcome.gini - config.d && true_gini_value < outcome.gini + config.d) {
            ++covered;
        }
    }
    const double n_bar = n_sum / rd;
    double n_ss = 0.0;
    for (const auto& outcome : outcomes) {
        const double diff = static_cast<double>(outcome.n_final) - n_bar;
        n_ss += diff * diff;
    }

    SimulationReport report;
    report.spec = config.spec;
    report.alpha = config.alpha;
    report.d = config.d;
    report.replications = reps;
    report.master_seed = config.master_seed;
    report.mc_budget = config.mc_budget;
    report.n_bar = n_bar;
    report.se_n = reps >= 2 ? std::sqrt(n_ss / (rd - 1.0)) / std::sqrt(rd) : 0.0;
    report.c_opt = c_opt;
    report.ratio = n_bar / static_cast<double>(c_opt);
    report.max_n = max_n;
    report.coverage = static_cast<double>(covered) / rd;
    report.se_p = std::sqrt(report.coverage * (1.0 - report.coverage) / rd);
    report.true_gini = true_gini_value;
    return report;
}

SimulationReport run_experiment(const ExperimentConfig& config) {
    config.spec.validate();
    const oracle::TruePopulationParams params =
        oracle::true_params(config.spec, config.alpha, config.d, config.mc_budget,
                            config.master_seed);
    const auto factory = [&config](std::uint64_t index) -> std::unique_ptr<ObservationSource> {
        return std::make_unique<DistributionSource>(config.spec,
                                                    derive_stream(config.master_seed, index));
    };
    return run_experiment_with(factory, config, oracle::true_gini(config.spec), params.c_opt);
}

}  // namespace seqgini
