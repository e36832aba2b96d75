#pragma once

#include <cstddef>
#include <vector>

#include "seqgini/running_stats.hpp"
#include "seqgini/sources.hpp"

namespace seqgini {

/// Pilot sample size: max{4, ceil(z_{alpha/2} / d)}.
std::size_t pilot_size(double alpha, double d);

/// Minimal fixed sample size floor((z_{alpha/2}/d)^2 xi_sq) + 1 that a
/// known asymptotic variance xi_sq would require.
std::size_t optimal_c(double xi_sq, double alpha, double d);

/// Confidence level, margin of error, and the derived quantities the
/// stopping rule needs.
struct StoppingConfig {
    double alpha = 0.1;  ///< in (0, 1)
    double d = 0.01;     ///< half-width of the interval, > 0
    double z = 0.0;      ///< upper alpha/2 normal quantile
    std::size_t m = 0;   ///< pilot sample size

    /// Validates and derives z and m. Throws ConfigError on bad input.
    static StoppingConfig make(double alpha, double d);
};

/// Stopping boundary (z/d)^2 (v_sq + 1/n) at sample size n.
double stop_threshold(std::size_t n, double v_sq, const StoppingConfig& config);

/// The rule fires at the first n >= m with n >= stop_threshold(n, v_sq).
/// The inequality is non-strict.
bool should_stop(std::size_t n, double v_sq, const StoppingConfig& config);

struct TracePoint {
    std::size_t n = 0;
    double v_sq = 0.0;
    double threshold = 0.0;
};

struct SequentialResult {
    std::size_t n_final = 0;
    double gini = 0.0;
    double v_sq = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::vector<TracePoint> trace;  ///< one entry per stop check when recorded
};

struct RunOptions {
    bool record_trace = false;
    /// Hard cap guarding against non-terminating configurations; the rule
    /// failing to fire by n_max raises CapExceededError.
    std::size_t n_max = 10'000'000;
};

/// Draws the pilot sample, then one observation at a time, re-evaluating
/// the stopping rule after every draw; returns the state at the first n
/// that satisfies it together with the interval (gini - d, gini + d).
///
/// Throws SourceExhaustedError if the source runs dry first,
/// UndefinedGiniError for an all-zero pilot, CapExceededError past n_max.
SequentialResult run_sequential(ObservationSource& source, const StoppingConfig& config,
                                const RunOptions& options = {});

}  // namespace seqgini
