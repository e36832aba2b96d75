#pragma once

#include <cstdint>
#include <span>

#include "seqgini/distributions.hpp"
#include "seqgini/running_stats.hpp"

namespace seqgini::oracle {

/// Literal nested-loop recomputation of every statistic, including the
/// O(n^3) leave-one-out pass. Reference implementation used to validate
/// the incremental engine; keep it independent of RunningStats.
StatisticsSnapshot brute_force_statistics(std::span<const double> xs);

/// Closed-form population Gini index:
///   gamma(k, rate)       Gamma(k + 1/2) / (Gamma(k + 1) sqrt(pi))
///   lognormal(m, s)      2 Phi(s / sqrt 2) - 1
///   pareto(scale, a)     1 / (2a - 1)
double true_gini(const DistributionSpec& spec);

/// Population quantities for one distribution, with the Monte Carlo
/// standard errors of the simulated components.
struct TruePopulationParams {
    DistributionSpec spec;
    double alpha = 0.0;
    double d = 0.0;
    std::size_t mc_budget = 0;
    std::uint64_t seed = 0;

    double mu = 0.0;        ///< E(X), analytic
    double sigma_sq = 0.0;  ///< Var(X), analytic
    double gini = 0.0;      ///< G_F, analytic
    double delta = 0.0;     ///< E|X1 - X2|, Monte Carlo
    double tau = 0.0;       ///< E(X1 |X1 - X2|), Monte Carlo
    double sigma1_sq = 0.0;  ///< Var(E[|X1 - X2| given X1]), Monte Carlo
    double xi_sq = 0.0;      ///< asymptotic variance, assembled from the above
    std::size_t c_opt = 0;   ///< optimal sample size at (alpha, d)

    double delta_se = 0.0;
    double tau_se = 0.0;
    double sigma1_sq_se = 0.0;
    double xi_sq_se = 0.0;
};

/// xi^2 = delta^2 sigma^2 / (4 mu^4) - delta tau / mu^3 + delta^2 / mu^2
///        + sigma1^2 / mu^2.
double assemble_xi_sq(double mu, double sigma_sq, double delta, double tau, double sigma1_sq);

/// Estimates the population parameters behind the stopping theory.
/// mu, sigma_sq, gini come from closed forms; delta, tau, sigma1_sq from
/// one large simulated sample of size mc_budget (>= 1e5), with standard
/// errors from a 20-block split of the same sample.
///
/// Throws MomentExistenceError for Pareto shape <= 4 (the fourth moment
/// must exist for xi^2 to be meaningful).
TruePopulationParams true_params(const DistributionSpec& spec, double alpha, double d,
                                 std::size_t mc_budget = 1'000'000, std::uint64_t seed = 0);

}  // namespace seqgini::oracle
