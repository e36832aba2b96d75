#include "seqgini/running_stats.hpp"

#include <algorithm>
#include <cmath>
#include <span>

#include "seqgini/errors.hpp"

namespace seqgini {

namespace {

double pairs(std::size_t n) {  // C(n, 2)
    return 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
}

double two_pass_variance(std::span<const double> xs, double mean) {
    double ss = 0.0;
    for (double x : xs) {
        const double d = x - mean;
        ss += d * d;
    }
    return ss / static_cast<double>(xs.size() - 1);
}

// s^2_w from the leave-one-out totals: gmd^(j) is recovered through
// C(n-1,2) gmd^(j) = C(n,2) gmd - T_j, then W_j = n gmd - (n-2) gmd^(j).
double jackknife_s_w_sq(std::span<const double> t_values, double pair_abs_sum) {
    const std::size_t n = t_values.size();
    const double nd = static_cast<double>(n);
    const double gmd = pair_abs_sum / pairs(n);
    const double loo_pairs = pairs(n - 1);

    double w_sum = 0.0;
    for (double t : t_values) {
        const double gmd_loo = (pair_abs_sum - t) / loo_pairs;
        w_sum += nd * gmd - (nd - 2.0) * gmd_loo;
    }
    const double w_bar = w_sum / nd;

    double ss = 0.0;
    for (double t : t_values) {
        const double gmd_loo = (pair_abs_sum - t) / loo_pairs;
        const double w = nd * gmd - (nd - 2.0) * gmd_loo;
        ss += (w - w_bar) * (w - w_bar);
    }
    return ss / (nd - 1.0);
}

struct PairTotals {
    double abs_sum = 0.0;
    double weighted_sum = 0.0;
};

// Rearrangement identities over the sorted array.
PairTotals pair_totals_from_sorted(std::span<const double> sorted) {
    const double nd = static_cast<double>(sorted.size());
    PairTotals totals;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double w = 2.0 * static_cast<double>(i + 1) - nd - 1.0;
        totals.abs_sum += w * sorted[i];
        totals.weighted_sum += 0.5 * w * sorted[i] * sorted[i];
    }
    return totals;
}

// T_j = (2j - n) Y_j - 2 P_j + S with 1-based j and inclusive prefix P_j.
void t_values_from_sorted(std::span<const double> sorted, std::span<const double> prefix,
                          std::vector<double>& out) {
    const std::size_t n = sorted.size();
    const double nd = static_cast<double>(n);
    const double total = n == 0 ? 0.0 : prefix[n - 1];
    out.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = (2.0 * static_cast<double>(i + 1) - nd) * sorted[i] - 2.0 * prefix[i] + total;
    }
}

}  // namespace

void RunningStats::push(double x) {
    if (!std::isfinite(x) || x < 0.0) {
        throw InvalidObservationError("observation must be a finite nonnegative real");
    }

    const std::size_t k =
        static_cast<std::size_t>(std::upper_bound(sorted_.begin(), sorted_.end(), x) - sorted_.begin());
    const std::size_t n = n_;

    // Pairwise increments against the existing sample, from the prefix sums:
    // k values are <= x, n-k values are > x.
    const double below = k == 0 ? 0.0 : prefix_sums_[k - 1];
    const double below_sq = k == 0 ? 0.0 : prefix_sq_sums_[k - 1];
    const double kd = static_cast<double>(k);
    const double rest = static_cast<double>(n - k);
    const double x_sq = x * x;
    const double delta_abs = (kd * x - below) + ((sum_ - below) - rest * x);
    const double delta_weighted = 0.5 * ((kd * x_sq - below_sq) + ((sum_sq_ - below_sq) - rest * x_sq));

    // Every existing total gains the distance to the newcomer; the sign is
    // known from the insertion point, ties contribute zero either way.
    for (std::size_t j = 0; j < k; ++j) {
        t_values_[j] += x - sorted_[j];
    }
    for (std::size_t j = k; j < n; ++j) {
        t_values_[j] += sorted_[j] - x;
    }

    sorted_.insert(sorted_.begin() + static_cast<std::ptrdiff_t>(k), x);
    t_values_.insert(t_values_.begin() + static_cast<std::ptrdiff_t>(k), delta_abs);

    prefix_sums_.resize(n + 1);
    prefix_sq_sums_.resize(n + 1);
    for (std::size_t i = k; i <= n; ++i) {
        const double prev = i == 0 ? 0.0 : prefix_sums_[i - 1];
        const double prev_sq = i == 0 ? 0.0 : prefix_sq_sums_[i - 1];
        prefix_sums_[i] = prev + sorted_[i];
        prefix_sq_sums_[i] = prev_sq + sorted_[i] * sorted_[i];
    }

    n_ = n + 1;
    sum_ += x;
    sum_sq_ += x_sq;
    pair_abs_sum_ += delta_abs;
    pair_weighted_sum_ += delta_weighted;

    if (++pushes_since_rebuild_ >= kRebuildInterval) {
        recompute_pair_totals();
        pushes_since_rebuild_ = 0;
    }
}

void RunningStats::recompute_pair_totals() {
    const PairTotals totals = pair_totals_from_sorted(sorted_);
    pair_abs_sum_ = totals.abs_sum;
    pair_weighted_sum_ = totals.weighted_sum;
    t_values_from_sorted(sorted_, prefix_sums_, t_values_);
}

double RunningStats::mean() const {
    if (n_ < 1) {
        throw InsufficientDataError("mean requires at least 1 observation");
    }
    return sum_ / static_cast<double>(n_);
}

double RunningStats::variance() const {
    if (n_ < 2) {
        throw InsufficientDataError("variance requires at least 2 observations");
    }
    return two_pass_variance(sorted_, mean());
}

double RunningStats::gmd() const {
    if (n_ < 2) {
        throw InsufficientDataError("gmd requires at least 2 observations");
    }
    return pair_abs_sum_ / pairs(n_);
}

double RunningStats::gini() const {
    if (n_ < 2) {
        throw InsufficientDataError("gini requires at least 2 observations");
    }
    const double m = mean();
    if (m <= 0.0) {
        throw UndefinedGiniError("Gini index is undefined for a zero-mean sample");
    }
    return std::clamp(gmd() / (2.0 * m), 0.0, 1.0);
}

double RunningStats::tau_hat() const {
    if (n_ < 2) {
        throw InsufficientDataError("tau_hat requires at least 2 observations");
    }
    return pair_weighted_sum_ / pairs(n_);
}

double RunningStats::s_w_sq() const {
    if (n_ < 4) {
        throw InsufficientDataError("s_w_sq requires at least 4 observations");
    }
    return jackknife_s_w_sq(t_values_, pair_abs_sum_);
}

StatisticsSnapshot RunningStats::snapshot() const {
    if (n_ < 4) {
        throw InsufficientDataError("snapshot requires at least 4 observations");
    }
    StatisticsSnapshot snap;
    snap.n = n_;
    snap.mean = mean();
    if (snap.mean <= 0.0) {
        throw UndefinedGiniError("Gini index is undefined for a zero-mean sample");
    }
    snap.variance = variance();
    snap.gmd = gmd();
    snap.gini = gini();
    snap.tau = tau_hat();
    snap.s_w_sq = s_w_sq();
    snap.v_sq = assemble_v_sq(snap.mean, snap.variance, snap.gmd, snap.tau, snap.s_w_sq);
    return snap;
}

double assemble_v_sq(double mean, double variance, double gmd, double tau, double s_w_sq) {
    const double m2 = mean * mean;
    const double m3 = m2 * mean;
    const double m4 = m2 * m2;
    return gmd * gmd * variance / (4.0 * m4) - gmd * tau / m3 + gmd * gmd / m2 +
           s_w_sq / (4.0 * m2);
}

StatisticsSnapshot batch_statistics(std::vector<double> values) {
    if (values.size() < 4) {
        throw InsufficientDataError("batch_statistics requires at least 4 observations");
    }
    for (double x : values) {
        if (!std::isfinite(x) || x < 0.0) {
            throw InvalidObservationError("observation must be a finite nonnegative real");
        }
    }
    std::sort(values.begin(), values.end());

    const std::size_t n = values.size();
    std::vector<double> prefix(n);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        acc += values[i];
        prefix[i] = acc;
    }

    StatisticsSnapshot snap;
    snap.n = n;
    snap.mean = prefix[n - 1] / static_cast<double>(n);
    if (snap.mean <= 0.0) {
        throw UndefinedGiniError("Gini index is undefined for a zero-mean sample");
    }
    snap.variance = two_pass_variance(values, snap.mean);

    const PairTotals totals = pair_totals_from_sorted(values);
    std::vector<double> t_values;
    t_values_from_sorted(values, prefix, t_values);

    snap.gmd = totals.abs_sum / pairs(n);
    snap.gini = std::clamp(snap.gmd / (2.0 * snap.mean), 0.0, 1.0);
    snap.tau = totals.weighted_sum / pairs(n);
    snap.s_w_sq = jackknife_s_w_sq(t_values, totals.abs_sum);
    snap.v_sq = assemble_v_sq(snap.mean, snap.variance, snap.gmd, snap.tau, snap.s_w_sq);
    return snap;
}

}  // namespace seqgini
