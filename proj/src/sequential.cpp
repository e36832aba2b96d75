#include "seqgini/sequential.hpp"

#include <cmath>
#include <string>

#include "seqgini/errors.hpp"
#include "seqgini/normal.hpp"

namespace seqgini {

namespace {

void check_alpha_d(double alpha, double d) {
    if (!(alpha > 0.0 && alpha < 1.0)) {
        throw ConfigError("alpha must lie strictly inside (0, 1)");
    }
    if (!(d > 0.0) || !std::isfinite(d)) {
        throw ConfigError("margin of error d must be a positive finite real");
    }
}

}  // namespace

std::size_t pilot_size(double alpha, double d) {
    check_alpha_d(alpha, d);
    const double ratio = z_quantile(alpha / 2.0) / d;
    const double m = std::max(4.0, std::ceil(ratio));
    return static_cast<std::size_t>(m);
}

std::size_t optimal_c(double xi_sq, double alpha, double d) {
    check_alpha_d(alpha, d);
    if (!(xi_sq >= 0.0) || !std::isfinite(xi_sq)) {
        throw DomainError("xi_sq must be a nonnegative finite real");
    }
    const double ratio = z_quantile(alpha / 2.0) / d;
    const double c = std::floor(ratio * ratio * xi_sq) + 1.0;
    if (c > 1e18) {
        throw DomainError("optimal sample size overflows");
    }
    return static_cast<std::size_t>(c);
}

StoppingConfig StoppingConfig::make(double alpha, double d) {
    check_alpha_d(alpha, d);
    StoppingConfig config;
    config.alpha = alpha;
    config.d = d;
    config.z = z_quantile(alpha / 2.0);
    config.m = pilot_size(alpha, d);
    return config;
}

double stop_threshold(std::size_t n, double v_sq, const StoppingConfig& config) {
    const double ratio = config.z / config.d;
    return ratio * ratio * (v_sq + 1.0 / static_cast<double>(n));
}

bool should_stop(std::size_t n, double v_sq, const StoppingConfig& config) {
    return static_cast<double>(n) >= stop_threshold(n, v_sq, config);
}

SequentialResult run_sequential(ObservationSource& source, const StoppingConfig& config,
                                const RunOptions& options) {
    if (config.m < 4 || config.z <= 0.0) {
        throw ConfigError("stopping config must come from StoppingConfig::make");
    }
    if (options.n_max < config.m) {
        throw ConfigError("n_max must be at least the pilot size m");
    }

    RunningStats stats;

    // Stage 1: the pilot sample.
    while (stats.size() < config.m) {
        const auto x = source.next();
        if (!x) {
            throw SourceExhaustedError(
                "source exhausted after " + std::to_string(stats.size()) +
                    " observations, before the pilot sample of " + std::to_string(config.m),
                stats.size(), std::nullopt);
        }
        stats.push(*x);
    }

    // Stage 2: one observation per step until the rule fires.
    SequentialResult result;
    for (;;) {
        const StatisticsSnapshot snap = stats.snapshot();
        const double threshold = stop_threshold(snap.n, snap.v_sq, config);
        if (options.record_trace) {
            result.trace.push_back({snap.n, snap.v_sq, threshold});
        }
        if (static_cast<double>(snap.n) >= threshold) {
            result.n_final = snap.n;
            result.gini = snap.gini;
            result.v_sq = snap.v_sq;
            result.ci_low = snap.gini - config.d;
            result.ci_high = snap.gini + config.d;
            return result;
        }
        if (snap.n >= options.n_max) {
            throw CapExceededError("stopping rule did not fire by the hard cap n_max = " +
                                       std::to_string(options.n_max),
                                   options.n_max);
        }
        const auto x = source.next();
        if (!x) {
            throw SourceExhaustedError("source exhausted at n = " + std::to_string(snap.n) +
                                           " with stopping boundary " + std::to_string(threshold),
                                       snap.n, threshold);
        }
        stats.push(*x);
    }
}

}  // namespace seqgini
