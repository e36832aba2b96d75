// Acceptance suite: every release gate in one binary. Each criterion
// prints a single PASS/FAIL line; the process exits nonzero if any fail.

#include <algorithm>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "seqgini/errors.hpp"
#include "seqgini/harness.hpp"
#include "seqgini/normal.hpp"
#include "seqgini/oracle.hpp"
#include "seqgini/random.hpp"
#include "seqgini/running_stats.hpp"
#include "seqgini/sequential.hpp"
#include "seqgini/sources.hpp"

using namespace seqgini;

namespace {

constexpr std::uint64_t kSeed = 42;

struct FamilyTargets {
    Family family;
    double ratio;     // reference N-bar / C
    double coverage;  // reference empirical coverage
    std::size_t c;    // reference optimal size
};

constexpr FamilyTargets kTargets[] = {
    {Family::gamma, 0.9941, 0.878, 1267},
    {Family::lognormal, 1.0038, 0.9015, 1424},
    {Family::pareto, 0.9541, 0.9018, 686},
};

unsigned g_workers = 0;

bool g_all_pass = true;

void report(int criterion, const char* name, bool pass, const std::string& detail) {
    std::printf("criterion %d (%s): %s  [%s]\n", criterion, name, pass ? "PASS" : "FAIL",
                detail.c_str());
    std::fflush(stdout);
    g_all_pass &= pass;
}

std::string fmt(const char* format, ...) {
    char buf[1024];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return buf;
}

ExperimentConfig paper_config(Family family, double d, std::size_t reps) {
    ExperimentConfig config;
    config.spec = default_spec(family);
    config.alpha = 0.1;
    config.d = d;
    config.replications = reps;
    config.master_seed = kSeed;
    config.worker_count = g_workers;
    config.mc_budget = 1'000'000;
    return config;
}

// 1. Reproduce the reference simulation: |ratio - ref| <= 0.03 and
//    |coverage - ref| <= 0.025 per family at alpha=0.1, d=0.01, R=2000.
void criterion_table1() {
    bool pass = true;
    std::string detail;
    for (const auto& target : kTargets) {
        const SimulationReport r = run_experiment(paper_config(target.family, 0.01, 2000));
        const double ratio_err = std::fabs(r.ratio - target.ratio);
        const double cov_err = std::fabs(r.coverage - target.coverage);
        pass &= ratio_err <= 0.03 && cov_err <= 0.025;
        detail += fmt("%s: N=%.3f C=%zu ratio=%.4f (ref %.4f) p=%.4f (ref %.4f) max=%zu; ",
                      family_name(target.family).c_str(), r.n_bar, r.c_opt, r.ratio, target.ratio,
                      r.coverage, target.coverage, r.max_n);
    }
    report(1, "simulation reproduction", pass, detail);
}

// 2. Oracle optimal sizes within 1% of the references at mc_budget 1e6.
void criterion_optimal_c() {
    bool pass = true;
    std::string detail;
    for (const auto& target : kTargets) {
        const auto params =
            oracle::true_params(default_spec(target.family), 0.1, 0.01, 1'000'000, kSeed);
        const double err = std::fabs(static_cast<double>(params.c_opt) -
                                     static_cast<double>(target.c));
        pass &= err <= 0.01 * static_cast<double>(target.c);
        detail += fmt("%s: C=%zu (ref %zu, xi_sq=%.6f se %.2g); ",
                      family_name(target.family).c_str(), params.c_opt, target.c, params.xi_sq,
                      params.xi_sq_se);
    }
    report(2, "optimal-C oracle", pass, detail);
}

// 3. pilot_size(0.1, 0.01) == 165 exactly.
void criterion_pilot() {
    const std::size_t m = pilot_size(0.1, 0.01);
    report(3, "pilot size", m == 165, fmt("pilot_size(0.1, 0.01) = %zu", m));
}

double rel_diff(double a, double b) {
    const double scale = std::max({std::fabs(a), std::fabs(b), 1e-300});
    return std::fabs(a - b) / scale;
}

std::vector<double> random_instance(Rng& rng, std::size_t n) {
    const int family = static_cast<int>(rng.next() % 4);
    std::vector<double> xs(n);
    DistributionSpec spec = default_spec(Family::gamma);
    switch (family) {
        case 0:
            spec = default_spec(Family::gamma);
            break;
        case 1:
            spec = default_spec(Family::lognormal);
            break;
        case 2:
            spec = default_spec(Family::pareto);
            break;
        default:
            break;
    }
    for (double& x : xs) {
        x = family == 3 ? 50.0 * rng.uniform01() : sample(spec, rng);
    }
    return xs;
}

// 4. Incremental engine vs literal brute force on 500 random instances.
void criterion_oracle_equivalence() {
    Rng rng = derive_stream(kSeed, 1'000'001);
    double worst = 0.0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = 4 + static_cast<std::size_t>(rng.next() % 197);
        const std::vector<double> xs = random_instance(rng, n);
        RunningStats stats;
        for (double x : xs) {
            stats.push(x);
        }
        const StatisticsSnapshot inc = stats.snapshot();
        const StatisticsSnapshot brute = oracle::brute_force_statistics(xs);
        worst = std::max({worst, rel_diff(inc.gmd, brute.gmd), rel_diff(inc.tau, brute.tau),
                          rel_diff(inc.s_w_sq, brute.s_w_sq), rel_diff(inc.v_sq, brute.v_sq),
                          rel_diff(inc.gini, brute.gini)});
    }
    report(4, "oracle equivalence", worst < 1e-9,
           fmt("500 instances, n in [4, 200], worst relative difference %.3g", worst));
}

// 5. Invariants: gini range on fuzzed data, scale invariance, permutation
//    invariance, the stopping floor, and minimality along traces.
void criterion_invariants() {
    bool pass = true;
    std::string detail;

    {  // gini in [0,1] on 1e5 fuzzed samples
        Rng rng = derive_stream(kSeed, 2'000'001);
        std::size_t checked = 0;
        bool in_range = true;
        double worst_low = 0.0;
        double worst_high = 1.0;
        while (checked < 100'000) {
            const std::size_t n = 2 + static_cast<std::size_t>(rng.next() % 40);
            RunningStats stats;
            for (std::size_t i = 0; i < n; ++i) {
                const double u = rng.uniform01();
                stats.push(u < 0.3 ? 0.0 : std::pow(10.0, 8.0 * rng.uniform01() - 4.0));
            }
            if (stats.sum() <= 0.0) {
                continue;
            }
            const double g = stats.gini();
            in_range &= g >= 0.0 && g <= 1.0;
            worst_low = std::min(worst_low, g);
            worst_high = std::max(worst_high, g);
            ++checked;
        }
        pass &= in_range;
        detail += fmt("gini range over 1e5 samples [%.3g, %.3g]; ", worst_low, worst_high);
    }

    {  // scale invariance
        Rng rng = derive_stream(kSeed, 2'000'002);
        double worst = 0.0;
        for (int trial = 0; trial < 1000; ++trial) {
            const std::size_t n = 2 + static_cast<std::size_t>(rng.next() % 60);
            std::vector<double> xs = random_instance(rng, n);
            RunningStats base;
            for (double x : xs) {
                base.push(x);
            }
            if (base.sum() <= 0.0) {
                continue;
            }
            for (double scale : {1e-3, 3.0, 1e6}) {
                RunningStats scaled;
                for (double x : xs) {
                    scaled.push(x * scale);
                }
                worst = std::max(worst, rel_diff(scaled.gini(), base.gini()));
            }
        }
        pass &= worst < 1e-12;
        detail += fmt("scale-invariance worst %.3g; ", worst);
    }

    {  // permutation invariance
        Rng rng = derive_stream(kSeed, 2'000'003);
        double worst = 0.0;
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<double> xs = random_instance(rng, 50);
            xs[0] += 1.0;  // positive mean
            RunningStats base;
            for (double x : xs) {
                base.push(x);
            }
            const StatisticsSnapshot ref = base.snapshot();
            for (int shuffle = 0; shuffle < 3; ++shuffle) {
                for (std::size_t i = xs.size(); i > 1; --i) {
                    std::swap(xs[i - 1], xs[rng.next() % i]);
                }
                RunningStats permuted;
                for (double x : xs) {
                    permuted.push(x);
                }
                const StatisticsSnapshot snap = permuted.snapshot();
                worst = std::max({worst, rel_diff(snap.gini, ref.gini),
                                  rel_diff(snap.v_sq, ref.v_sq),
                                  rel_diff(snap.s_w_sq, ref.s_w_sq)});
            }
        }
        pass &= worst < 1e-12;
        detail += fmt("permutation-invariance worst %.3g; ", worst);
    }

    {  // stopping floor and minimality over traced runs
        const StoppingConfig config = StoppingConfig::make(0.1, 0.05);
        const double floor = std::ceil(config.z / config.d);
        bool floor_ok = true;
        bool minimal_ok = true;
        for (std::uint64_t stream = 0; stream < 50; ++stream) {
            DistributionSource source(default_spec(Family::gamma),
                                      derive_stream(kSeed, 3'000'000 + stream));
            const SequentialResult r = run_sequential(source, config, {true, 10'000'000});
            floor_ok &= static_cast<double>(r.n_final) >= floor;
            for (std::size_t i = 0; i + 1 < r.trace.size(); ++i) {
                minimal_ok &= static_cast<double>(r.trace[i].n) < r.trace[i].threshold;
            }
            minimal_ok &= r.trace.back().n == r.n_final;
            minimal_ok &=
                static_cast<double>(r.n_final) >= r.trace.back().threshold;
        }
        pass &= floor_ok && minimal_ok;
        detail += fmt("floor>=%g %s; trace minimality %s", floor, floor_ok ? "ok" : "violated",
                      minimal_ok ? "ok" : "violated");
    }

    report(5, "invariant suite", pass, detail);
}

// 6. Efficiency trend: |N-bar/C - 1| nonincreasing in d for lognormal,
//    one inversion of at most 0.01 allowed.
void criterion_efficiency_trend() {
    const auto params =
        oracle::true_params(default_spec(Family::lognormal), 0.1, 0.01, 1'000'000, kSeed);
    std::vector<double> errs;
    std::string detail;
    for (double d : {0.04, 0.02, 0.01}) {
        ExperimentConfig config = paper_config(Family::lognormal, d, 500);
        const std::size_t c = optimal_c(params.xi_sq, config.alpha, d);
        const auto factory = [&config](std::uint64_t index) -> std::unique_ptr<ObservationSource> {
            return std::make_unique<DistributionSource>(
                config.spec, derive_stream(config.master_seed, index));
        };
        const SimulationReport r =
            run_experiment_with(factory, config, oracle::true_gini(config.spec), c);
        errs.push_back(std::fabs(r.ratio - 1.0));
        detail += fmt("d=%.2f: ratio=%.4f C=%zu; ", d, r.ratio, c);
    }
    int inversions = 0;
    double worst_inversion = 0.0;
    for (std::size_t i = 0; i + 1 < errs.size(); ++i) {
        if (errs[i + 1] > errs[i]) {
            ++inversions;
            worst_inversion = std::max(worst_inversion, errs[i + 1] - errs[i]);
        }
    }
    const bool pass = inversions <= 1 && worst_inversion <= 0.01;
    report(6, "efficiency trend", pass,
           detail + fmt("inversions=%d worst=%.4f", inversions, worst_inversion));
}

// 7. Bit-identical reports for worker counts 1 and 8.
void criterion_determinism() {
    ExperimentConfig config = paper_config(Family::lognormal, 0.02, 200);
    config.worker_count = 1;
    const SimulationReport a = run_experiment(config);
    config.worker_count = 8;
    const SimulationReport b = run_experiment(config);
    const bool pass = a.n_bar == b.n_bar && a.se_n == b.se_n && a.c_opt == b.c_opt &&
                      a.ratio == b.ratio && a.max_n == b.max_n && a.coverage == b.coverage &&
                      a.se_p == b.se_p && a.true_gini == b.true_gini;
    report(7, "worker determinism", pass,
           fmt("workers {1, 8}: n_bar %.6f vs %.6f, coverage %.4f vs %.4f", a.n_bar, b.n_bar,
               a.coverage, b.coverage));
}

// 8. z_quantile vs an independent high-precision table (mpmath, 40 digits).
void criterion_z_quantile() {
    static const struct {
        double p;
        double z;
    } table[] = {
        {0.0001, 3.7190164854556805644}, {0.001, 3.0902323061678135415},
        {0.005, 2.575829303548900761},   {0.01, 2.3263478740408411009},
        {0.025, 1.9599639845400542355},  {0.05, 1.6448536269514727149},
        {0.1, 1.281551565544600467},     {0.2, 0.84162123357291420518},
        {0.25, 0.6744897501960817432},   {0.3, 0.52440051270804078404},
        {0.4, 0.2533471031357997988},    {0.5, 0.0},
    };
    double worst = 0.0;
    for (const auto& entry : table) {
        worst = std::max(worst, std::fabs(z_quantile(entry.p) - entry.z));
    }
    report(8, "z_quantile accuracy", worst < 1e-8, fmt("max abs error %.3g", worst));
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> selected;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--workers") == 0 && i + 1 < argc) {
            g_workers = static_cast<unsigned>(std::atoi(argv[++i]));
        } else if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            selected.push_back(std::atoi(argv[++i]));
        } else {
            std::fprintf(stderr, "usage: %s [--workers N] [--criterion K]...\n", argv[0]);
            return 2;
        }
    }
    auto wanted = [&selected](int k) {
        return selected.empty() || std::find(selected.begin(), selected.end(), k) != selected.end();
    };

    try {
        if (wanted(1)) criterion_table1();
        if (wanted(2)) criterion_optimal_c();
        if (wanted(3)) criterion_pilot();
        if (wanted(4)) criterion_oracle_equivalence();
        if (wanted(5)) criterion_invariants();
        if (wanted(6)) criterion_efficiency_trend();
        if (wanted(7)) criterion_determinism();
        if (wanted(8)) criterion_z_quantile();
    } catch (const std::exception& e) {
        std::fprintf(stderr, "acceptance run aborted: %s\n", e.what());
        return 2;
    }
    return g_all_pass ? 0 : 1;
}
