#pragma once

#include <cstddef>
#include <vector>

namespace seqgini {

/// All per-sample statistics needed by the stopping rule, frozen at one n.
struct StatisticsSnapshot {
    std::size_t n = 0;
    double mean = 0.0;
    double variance = 0.0;  ///< sample variance, divisor n-1
    double gmd = 0.0;       ///< Gini mean difference
    double gini = 0.0;
    double tau = 0.0;     ///< pairwise size-weighted difference statistic
    double s_w_sq = 0.0;  ///< jackknife variance of the leave-one-out GMDs
    double v_sq = 0.0;    ///< plug-in asymptotic variance of the Gini estimator
};

// Incremental accumulator for the Gini index and its plug-in variance.
//
// Observations are kept in a sorted array with prefix sums of values and
// squares. Each push costs O(n): the insertion itself plus one sweep that
// keeps every per-observation absolute-difference total T_j current, where
//
//   T_j = sum_i |X_j - X_i|.
//
// From the sorted order the pairwise sums satisfy the rearrangement
// identities
//
//   sum_{i<j} |X_i - X_j|          = sum_i (2i - n - 1) Y_(i)
//   sum_{i<j} (X_i + X_j)|X_i-X_j| = sum_i (2i - n - 1) Y_(i)^2   (X >= 0)
//
// which are also used to rebuild all running totals from scratch every
// 1024 pushes to keep floating-point accumulation bounded.
//
// Single-writer value type: no internal sharing, safe to move across
// threads, concurrent const access is fine.
class RunningStats {
public:
    RunningStats() = default;

    /// Insert one observation. Throws InvalidObservationError for
    /// negative, NaN, or infinite x. Ties insert after existing equals.
    void push(double x);

    std::size_t size() const { return n_; }
    bool empty() const { return n_ == 0; }

    /// Sample mean; requires n >= 1.
    double mean() const;

    /// Sample variance with divisor n-1; requires n >= 2.
    double variance() const;

    /// Gini mean difference: pair_abs_sum / C(n,2); requires n >= 2.
    double gmd() const;

    /// Gini index gmd / (2 mean), clamped to [0, 1].
    /// Requires n >= 2; throws UndefinedGiniError when the mean is zero.
    double gini() const;

    /// 2/(n(n-1)) * sum_{i<j} (X_i + X_j)/2 |X_i - X_j|; requires n >= 2.
    double tau_hat() const;

    /// Jackknife variance estimate s^2_w = (n-1)^{-1} sum_j (W_j - W-bar)^2
    /// with W_j = n*gmd - (n-2)*gmd^(j); requires n >= 4.
    double s_w_sq() const;

    /// All statistics at the current n; requires n >= 4 and mean > 0.
    StatisticsSnapshot snapshot() const;

    const std::vector<double>& sorted_values() const { return sorted_; }
    const std::vector<double>& prefix_sums() const { return prefix_sums_; }
    const std::vector<double>& prefix_sq_sums() const { return prefix_sq_sums_; }
    const std::vector<double>& t_values() const { return t_values_; }
    double sum() const { return sum_; }
    double sum_sq() const { return sum_sq_; }
    double pair_abs_sum() const { return pair_abs_sum_; }
    double pair_weighted_sum() const { return pair_weighted_sum_; }

private:
    void recompute_pair_totals();

    static constexpr std::size_t kRebuildInterval = 1024;

    std::size_t n_ = 0;
    std::vector<double> sorted_;
    std::vector<double> prefix_sums_;
    std::vector<double> prefix_sq_sums_;
    std::vector<double> t_values_;
    double sum_ = 0.0;
    double sum_sq_ = 0.0;
    double pair_abs_sum_ = 0.0;
    double pair_weighted_sum_ = 0.0;
    std::size_t pushes_since_rebuild_ = 0;
};

/// One-shot O(n log n) evaluation of the same statistics (sorts a copy).
/// Requires n >= 4, all values finite and nonnegative, mean > 0.
StatisticsSnapshot batch_statistics(std::vector<double> values);

/// Assembles the plug-in variance of the Gini estimator from its parts:
/// g^2 s^2 / (4 m^4) - g t / m^3 + g^2 / m^2 + sw / (4 m^2).
double assemble_v_sq(double mean, double variance, double gmd, double tau, double s_w_sq);

}  // namespace seqgini
