#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "seqgini/distributions.hpp"
#include "seqgini/oracle.hpp"
#include "seqgini/sequential.hpp"
#include "seqgini/sources.hpp"

namespace seqgini {

struct ExperimentConfig {
    DistributionSpec spec;
    double alpha = 0.1;
    double d = 0.01;
    std::size_t replications = 2000;
    std::uint64_t master_seed = 42;
    unsigned worker_count = 0;  ///< 0 = hardware concurrency
    std::size_t mc_budget = 1'000'000;  ///< oracle budget behind c_opt
    std::size_t n_max = 10'000'000;     ///< per-replication hard cap
};

/// One row of the simulation summary: stopping-time and coverage
/// aggregates over all replications, next to the oracle C.
struct SimulationReport {
    // resolved configuration
    DistributionSpec spec;
    double alpha = 0.0;
    double d = 0.0;
    std::size_t replications = 0;
    std::uint64_t master_seed = 0;
    std::size_t mc_budget = 0;

    // aggregates
    double n_bar = 0.0;           ///< mean stopping time
    double se_n = 0.0;            ///< sd(N) / sqrt(R)
    std::size_t c_opt = 0;        ///< oracle optimal sample size
    double ratio = 0.0;           ///< n_bar / c_opt
    std::size_t max_n = 0;        ///< largest stopping time observed
    double coverage = 0.0;        ///< fraction of intervals containing true_gini
    double se_p = 0.0;            ///< sqrt(p (1-p) / R)
    double true_gini = 0.0;       ///< coverage reference value
};

/// Builds the observation source for one replication index.
using SourceFactory = std::function<std::unique_ptr<ObservationSource>(std::uint64_t)>;

/// Core driver: runs `replications` independent sequential estimations
/// against sources from `factory` and aggregates against the supplied
/// coverage reference and optimal size. Replication i always consumes
/// the stream derived for index i, so the outcome is identical for any
/// worker count; results are buffered by index and reduced in order.
/// Any replication failure aborts the whole experiment, reporting the
/// smallest failing index.
SimulationReport run_experiment_with(const SourceFactory& factory, const ExperimentConfig& config,
                                     double true_gini_value, std::size_t c_opt);

/// Standard entry point: replication i samples spec through
/// derive_stream(master_seed, i); coverage is judged against the
/// analytic Gini index and C against the Monte Carlo oracle.
SimulationReport run_experiment(const ExperimentConfig& config);

}  // namespace seqgini
