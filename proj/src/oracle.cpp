#include "seqgini/oracle.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "seqgini/errors.hpp"
#include "seqgini/normal.hpp"
#include "seqgini/random.hpp"
#include "seqgini/sequential.hpp"

namespace seqgini::oracle {

namespace {

// Substream reserved for oracle simulations, outside the range of
// replication indices so sharing a master seed with a harness run never
// reuses a stream.
constexpr std::uint64_t kOracleStreamIndex = 0xFFFF'FFFF'0000'0001ull;

constexpr std::size_t kSeBlocks = 20;

}  // namespace

StatisticsSnapshot brute_force_statistics(std::span<const double> xs) {
    const std::size_t n = xs.size();
    if (n < 4) {
        throw InsufficientDataError("brute_force_statistics requires at least 4 observations");
    }
    for (double x : xs) {
        if (!std::isfinite(x) || x < 0.0) {
            throw InvalidObservationError("observation must be a finite nonnegative real");
        }
    }
    const double nd = static_cast<double>(n);

    double sum = 0.0;
    for (double x : xs) {
        sum += x;
    }
    const double mean = sum / nd;
    if (mean <= 0.0) {
        throw UndefinedGiniError("Gini index is undefined for a zero-mean sample");
    }

    double ss = 0.0;
    for (double x : xs) {
        ss += (x - mean) * (x - mean);
    }
    const double variance = ss / (nd - 1.0);

    const double n_pairs = 0.5 * nd * (nd - 1.0);
    double abs_sum = 0.0;
    double weighted_sum = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double diff = std::fabs(xs[i] - xs[j]);
            abs_sum += diff;
            weighted_sum += 0.5 * (xs[i] + xs[j]) * diff;
        }
    }
    const double gmd = abs_sum / n_pairs;
    const double tau = weighted_sum / n_pairs;

    // Leave-one-out GMDs recomputed from scratch for every j.
    const double loo_pairs = 0.5 * (nd - 1.0) * (nd - 2.0);
    std::vector<double> w(n);
    double w_sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double loo_abs = 0.0;
        for (std::size_t i1 = 0; i1 + 1 < n; ++i1) {
            if (i1 == j) continue;
            for (std::size_t i2 = i1 + 1; i2 < n; ++i2) {
                if (i2 == j) continue;
                loo_abs += std::fabs(xs[i1] - xs[i2]);
            }
        }
        w[j] = nd * gmd - (nd - 2.0) * (loo_abs / loo_pairs);
        w_sum += w[j];
    }
    const double w_bar = w_sum / nd;
    double w_ss = 0.0;
    for (double wj : w) {
        w_ss += (wj - w_bar) * (wj - w_bar);
    }
    const double s_w_sq = w_ss / (nd - 1.0);

    StatisticsSnapshot snap;
    snap.n = n;
    snap.mean = mean;
    snap.variance = variance;
    snap.gmd = gmd;
    snap.gini = gmd / (2.0 * mean);
    snap.tau = tau;
    snap.s_w_sq = s_w_sq;
    snap.v_sq = gmd * gmd * variance / (4.0 * mean * mean * mean * mean) -
                gmd * tau / (mean * mean * mean) + gmd * gmd / (mean * mean) +
                s_w_sq / (4.0 * mean * mean);
    return snap;
}

double true_gini(const DistributionSpec& spec) {
    spec.validate();
    switch (spec.family) {
        case Family::gamma:
            return std::exp(std::lgamma(spec.param1 + 0.5) - std::lgamma(spec.param1 + 1.0)) /
                   std::sqrt(std::numbers::pi);
        case Family::lognormal:
            // 2 Phi(sdlog / sqrt 2) - 1 == erf(sdlog / 2)
            return std::erf(spec.param2 / 2.0);
        case Family::pareto:
            return 1.0 / (2.0 * spec.param2 - 1.0);
    }
    throw ConfigError("unknown distribution family");
}

double assemble_xi_sq(double mu, double sigma_sq, double delta, double tau, double sigma1_sq) {
    const double mu2 = mu * mu;
    const double mu3 = mu2 * mu;
    const double mu4 = mu2 * mu2;
    return delta * delta * sigma_sq / (4.0 * mu4) - delta * tau / mu3 + delta * delta / mu2 +
           sigma1_sq / mu2;
}

namespace {

void analytic_moments(const DistributionSpec& spec, double& mu, double& sigma_sq) {
    switch (spec.family) {
        case Family::gamma: {
            const double k = spec.param1;
            const double rate = spec.param2;
            mu = k / rate;
            sigma_sq = k / (rate * rate);
            return;
        }
        case Family::lognormal: {
            const double s_sq = spec.param2 * spec.param2;
            mu = std::exp(spec.param1 + 0.5 * s_sq);
            sigma_sq = (std::exp(s_sq) - 1.0) * mu * mu;
            return;
        }
        case Family::pareto: {
            const double xm = spec.param1;
            const double a = spec.param2;
            mu = a * xm / (a - 1.0);
            sigma_sq = xm * xm * a / ((a - 1.0) * (a - 1.0) * (a - 2.0));
            return;
        }
    }
    throw ConfigError("unknown distribution family");
}

double sample_sd(std::span<const double> xs) {
    const double nd = static_cast<double>(xs.size());
    double sum = 0.0;
    for (double x : xs) {
        sum += x;
    }
    const double mean = sum / nd;
    double ss = 0.0;
    for (double x : xs) {
        ss += (x - mean) * (x - mean);
    }
    return std::sqrt(ss / (nd - 1.0));
}

}  // namespace

TruePopulationParams true_params(const DistributionSpec& spec, double alpha, double d,
                                 std::size_t mc_budget, std::uint64_t seed) {
    spec.validate();
    if (spec.family == Family::pareto && spec.param2 <= 4.0) {
        throw MomentExistenceError(
            "Pareto shape must exceed 4: E[X^4] is needed for the asymptotic variance");
    }
    if (mc_budget < 100'000) {
        throw ConfigError("mc_budget must be at least 1e5");
    }

    TruePopulationParams params;
    params.spec = spec;
    params.alpha = alpha;
    params.d = d;
    params.mc_budget = mc_budget;
    params.seed = seed;
    analytic_moments(spec, params.mu, params.sigma_sq);
    params.gini = true_gini(spec);

    Rng rng = derive_stream(seed, kOracleStreamIndex);
    std::vector<double> draws(mc_budget);
    for (double& x : draws) {
        x = sample(spec, rng);
    }

    const StatisticsSnapshot full = batch_statistics(draws);
    params.delta = full.gmd;
    params.tau = full.tau;
    params.sigma1_sq = full.s_w_sq / 4.0;
    params.xi_sq =
        assemble_xi_sq(params.mu, params.sigma_sq, params.delta, params.tau, params.sigma1_sq);
    params.c_opt = optimal_c(params.xi_sq, alpha, d);

    // Standard errors from a block split of the same sample.
    const std::size_t block = mc_budget / kSeBlocks;
    std::vector<double> delta_b, tau_b, sigma1_b, xi_b;
    for (std::size_t b = 0; b < kSeBlocks; ++b) {
        std::vector<double> slice(draws.begin() + static_cast<std::ptrdiff_t>(b * block),
                                  draws.begin() + static_cast<std::ptrdiff_t>((b + 1) * block));
        const StatisticsSnapshot snap = batch_statistics(std::move(slice));
        delta_b.push_back(snap.gmd);
        tau_b.push_back(snap.tau);
        sigma1_b.push_back(snap.s_w_sq / 4.0);
        xi_b.push_back(assemble_xi_sq(params.mu, params.sigma_sq, snap.gmd, snap.tau,
                                      snap.s_w_sq / 4.0));
    }
    const double root_b = std::sqrt(static_cast<double>(kSeBlocks));
    params.delta_se = sample_sd(delta_b) / root_b;
    params.tau_se = sample_sd(tau_b) / root_b;
    params.sigma1_sq_se = sample_sd(sigma1_b) / root_b;
    params.xi_sq_se = sample_sd(xi_b) / root_b;
    return params;
}

}  // namespace seqgini::oracle
