#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <sstream>
#include <vector>

#include "seqgini/distributions.hpp"
#include "seqgini/errors.hpp"
#include "seqgini/harness.hpp"
#include "seqgini/normal.hpp"
#include "seqgini/oracle.hpp"
#include "seqgini/report_io.hpp"
#include "seqgini/running_stats.hpp"
#include "seqgini/sequential.hpp"
#include "seqgini/sources.hpp"

namespace py = pybind11;
using namespace seqgini;

namespace {

SequentialResult run_sequential_values(const std::vector<double>& values,
                                       const StoppingConfig& config, bool trace,
                                       std::size_t n_max) {
    VectorSource source(values);
    return run_sequential(source, config, RunOptions{trace, n_max});
}

SequentialResult run_sequential_sampled(const DistributionSpec& spec,
                                        const StoppingConfig& config, std::uint64_t master_seed,
                                        std::uint64_t stream_index, bool trace,
                                        std::size_t n_max) {
    DistributionSource source(spec, derive_stream(master_seed, stream_index));
    py::gil_scoped_release release;
    return run_sequential(source, config, RunOptions{trace, n_max});
}

std::vector<double> sample_values(const DistributionSpec& spec, std::uint64_t master_seed,
                                  std::uint64_t stream_index, std::size_t count) {
    Rng rng = derive_stream(master_seed, stream_index);
    std::vector<double> out(count);
    for (double& x : out) {
        x = sample(spec, rng);
    }
    return out;
}

std::string spec_repr(const DistributionSpec& spec) {
    std::ostringstream os;
    os << "DistributionSpec(" << family_name(spec.family) << ", " << spec.param1 << ", "
       << spec.param2 << ")";
    return os.str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Purely sequential fixed-width confidence intervals for the Gini index";

    const auto base = py::register_exception<Error>(m, "SeqGiniError");
    py::register_exception<InvalidObservationError>(m, "InvalidObservationError", base.ptr());
    py::register_exception<InsufficientDataError>(m, "InsufficientDataError", base.ptr());
    py::register_exception<UndefinedGiniError>(m, "UndefinedGiniError", base.ptr());
    py::register_exception<DomainError>(m, "DomainError", base.ptr());
    py::register_exception<ConfigError>(m, "ConfigError", base.ptr());
    py::register_exception<SourceExhaustedError>(m, "SourceExhaustedError", base.ptr());
    py::register_exception<CapExceededError>(m, "CapExceededError", base.ptr());
    py::register_exception<MomentExistenceError>(m, "MomentExistenceError", base.ptr());

    m.def("normal_cdf", &normal_cdf, py::arg("x"));
    m.def("norm_quantile", &norm_quantile, py::arg("p"));
    m.def("z_quantile", &z_quantile, py::arg("p"),
          "Upper p-th quantile of the standard normal distribution");

    py::class_<StatisticsSnapshot>(m, "StatisticsSnapshot")
        .def_readonly("n", &StatisticsSnapshot::n)
        .def_readonly("mean", &StatisticsSnapshot::mean)
        .def_readonly("variance", &StatisticsSnapshot::variance)
        .def_readonly("gmd", &StatisticsSnapshot::gmd)
        .def_readonly("gini", &StatisticsSnapshot::gini)
        .def_readonly("tau", &StatisticsSnapshot::tau)
        .def_readonly("s_w_sq", &StatisticsSnapshot::s_w_sq)
        .def_readonly("v_sq", &StatisticsSnapshot::v_sq)
        .def("__repr__", [](const StatisticsSnapshot& s) {
            std::ostringstream os;
            os << "StatisticsSnapshot(n=" << s.n << ", gini=" << s.gini << ", v_sq=" << s.v_sq
               << ")";
            return os.str();
        });

    py::class_<RunningStats>(m, "RunningStats")
        .def(py::init<>())
        .def("push", &RunningStats::push, py::arg("x"))
        .def("extend",
             [](RunningStats& stats, const std::vector<double>& values) {
                 for (double x : values) {
                     stats.push(x);
                 }
             })
        .def("__len__", &RunningStats::size)
        .def_property_readonly("n", &RunningStats::size)
        .def("mean", &RunningStats::mean)
        .def("variance", &RunningStats::variance)
        .def("gmd", &RunningStats::gmd)
        .def("gini", &RunningStats::gini)
        .def("tau_hat", &RunningStats::tau_hat)
        .def("s_w_sq", &RunningStats::s_w_sq)
        .def("snapshot", &RunningStats::snapshot)
        .def_property_readonly("sorted_values", &RunningStats::sorted_values)
        .def_property_readonly("pair_abs_sum", &RunningStats::pair_abs_sum)
        .def_property_readonly("pair_weighted_sum", &RunningStats::pair_weighted_sum);

    m.def("batch_statistics", &batch_statistics, py::arg("values"));
    m.def(
        "brute_force_statistics",
        [](const std::vector<double>& xs) { return oracle::brute_force_statistics(xs); },
        py::arg("values"), "Literal nested-loop reference computation");

    py::class_<StoppingConfig>(m, "StoppingConfig")
        .def(py::init(&StoppingConfig::make), py::arg("alpha"), py::arg("d"))
        .def_readonly("alpha", &StoppingConfig::alpha)
        .def_readonly("d", &StoppingConfig::d)
        .def_readonly("z", &StoppingConfig::z)
        .def_readonly("m", &StoppingConfig::m)
        .def("__repr__", [](const StoppingConfig& c) {
            std::ostringstream os;
            os << "StoppingConfig(alpha=" << c.alpha << ", d=" << c.d << ", z=" << c.z
               << ", m=" << c.m << ")";
            return os.str();
        });

    m.def("pilot_size", &pilot_size, py::arg("alpha"), py::arg("d"));
    m.def("optimal_c", &optimal_c, py::arg("xi_sq"), py::arg("alpha"), py::arg("d"));
    m.def("should_stop", &should_stop, py::arg("n"), py::arg("v_sq"), py::arg("config"));
    m.def("stop_threshold", &stop_threshold, py::arg("n"), py::arg("v_sq"), py::arg("config"));

    py::class_<TracePoint>(m, "TracePoint")
        .def_readonly("n", &TracePoint::n)
        .def_readonly("v_sq", &TracePoint::v_sq)
        .def_readonly("threshold", &TracePoint::threshold);

    py::class_<SequentialResult>(m, "SequentialResult")
        .def_readonly("n_final", &SequentialResult::n_final)
        .def_readonly("gini", &SequentialResult::gini)
        .def_readonly("v_sq", &SequentialResult::v_sq)
        .def_readonly("ci_low", &SequentialResult::ci_low)
        .def_readonly("ci_high", &SequentialResult::ci_high)
        .def_readonly("trace", &SequentialResult::trace)
        .def("__repr__", [](const SequentialResult& r) {
            std::ostringstream os;
            os << "SequentialResult(n_final=" << r.n_final << ", gini=" << r.gini << ", ci=("
               << r.ci_low << ", " << r.ci_high << "))";
            return os.str();
        });

    m.def("run_sequential", &run_sequential_values, py::arg("values"), py::arg("config"),
          py::arg("trace") = false, py::arg("n_max") = std::size_t{10'000'000},
          "Run the stopping rule over a finite buffer of observations");
    m.def("run_sequential_sampled", &run_sequential_sampled, py::arg("spec"), py::arg("config"),
          py::arg("master_seed"), py::arg("stream_index") = 0, py::arg("trace") = false,
          py::arg("n_max") = std::size_t{10'000'000},
          "Run the stopping rule against a seeded distribution sampler");

    py::enum_<Family>(m, "Family")
        .value("gamma", Family::gamma)
        .value("lognormal", Family::lognormal)
        .value("pareto", Family::pareto);

    py::class_<DistributionSpec>(m, "DistributionSpec")
        .def_static("gamma", &DistributionSpec::gamma, py::arg("shape"), py::arg("rate"))
        .def_static("lognormal", &DistributionSpec::lognormal, py::arg("meanlog"),
                    py::arg("sdlog"))
        .def_static("pareto", &DistributionSpec::pareto, py::arg("scale"), py::arg("shape"))
        .def_readonly("family", &DistributionSpec::family)
        .def_readonly("param1", &DistributionSpec::param1)
        .def_readonly("param2", &DistributionSpec::param2)
        .def("__repr__", &spec_repr);

    m.def("default_spec", &default_spec, py::arg("family"));
    m.def("sample_values", &sample_values, py::arg("spec"), py::arg("master_seed"),
          py::arg("stream_index"), py::arg("count"));

    m.def("true_gini", &oracle::true_gini, py::arg("spec"));

    py::class_<oracle::TruePopulationParams>(m, "TruePopulationParams")
        .def_readonly("spec", &oracle::TruePopulationParams::spec)
        .def_readonly("alpha", &oracle::TruePopulationParams::alpha)
        .def_readonly("d", &oracle::TruePopulationParams::d)
        .def_readonly("mc_budget", &oracle::TruePopulationParams::mc_budget)
        .def_readonly("seed", &oracle::TruePopulationParams::seed)
        .def_readonly("mu", &oracle::TruePopulationParams::mu)
        .def_readonly("sigma_sq", &oracle::TruePopulationParams::sigma_sq)
        .def_readonly("gini", &oracle::TruePopulationParams::gini)
        .def_readonly("delta", &oracle::TruePopulationParams::delta)
        .def_readonly("tau", &oracle::TruePopulationParams::tau)
        .def_readonly("sigma1_sq", &oracle::TruePopulationParams::sigma1_sq)
        .def_readonly("xi_sq", &oracle::TruePopulationParams::xi_sq)
        .def_readonly("c_opt", &oracle::TruePopulationParams::c_opt)
        .def_readonly("delta_se", &oracle::TruePopulationParams::delta_se)
        .def_readonly("tau_se", &oracle::TruePopulationParams::tau_se)
        .def_readonly("sigma1_sq_se", &oracle::TruePopulationParams::sigma1_sq_se)
        .def_readonly("xi_sq_se", &oracle::TruePopulationParams::xi_sq_se);

    m.def(
        "true_params",
        [](const DistributionSpec& spec, double alpha, double d, std::size_t mc_budget,
           std::uint64_t seed) {
            py::gil_scoped_release release;
            return oracle::true_params(spec, alpha, d, mc_budget, seed);
        },
        py::arg("spec"), py::arg("alpha"), py::arg("d"),
        py::arg("mc_budget") = std::size_t{1'000'000}, py::arg("seed") = std::uint64_t{0});

    py::class_<ExperimentConfig>(m, "ExperimentConfig")
        .def(py::init([](const DistributionSpec& spec, double alpha, double d,
                         std::size_t replications, std::uint64_t master_seed,
                         unsigned worker_count, std::size_t mc_budget, std::size_t n_max) {
                 ExperimentConfig config;
                 config.spec = spec;
                 config.alpha = alpha;
                 config.d = d;
                 config.replications = replications;
                 config.master_seed = master_seed;
                 config.worker_count = worker_count;
                 config.mc_budget = mc_budget;
                 config.n_max = n_max;
                 return config;
             }),
             py::arg("spec"), py::arg("alpha") = 0.1, py::arg("d") = 0.01,
             py::arg("replications") = std::size_t{2000}, py::arg("master_seed") = 42,
             py::arg("worker_count") = 0, py::arg("mc_budget") = std::size_t{1'000'000},
             py::arg("n_max") = std::size_t{10'000'000})
        .def_readwrite("spec", &ExperimentConfig::spec)
        .def_readwrite("alpha", &ExperimentConfig::alpha)
        .def_readwrite("d", &ExperimentConfig::d)
        .def_readwrite("replications", &ExperimentConfig::replications)
        .def_readwrite("master_seed", &ExperimentConfig::master_seed)
        .def_readwrite("worker_count", &ExperimentConfig::worker_count)
        .def_readwrite("mc_budget", &ExperimentConfig::mc_budget)
        .def_readwrite("n_max", &ExperimentConfig::n_max);

    py::class_<SimulationReport>(m, "SimulationReport")
        .def_readonly("spec", &SimulationReport::spec)
        .def_readonly("alpha", &SimulationReport::alpha)
        .def_readonly("d", &SimulationReport::d)
        .def_readonly("replications", &SimulationReport::replications)
        .def_readonly("master_seed", &SimulationReport::master_seed)
        .def_readonly("mc_budget", &SimulationReport::mc_budget)
        .def_readonly("n_bar", &SimulationReport::n_bar)
        .def_readonly("se_n", &SimulationReport::se_n)
        .def_readonly("c_opt", &SimulationReport::c_opt)
        .def_readonly("ratio", &SimulationReport::ratio)
        .def_readonly("max_n", &SimulationReport::max_n)
        .def_readonly("coverage", &SimulationReport::coverage)
        .def_readonly("se_p", &SimulationReport::se_p)
        .def_readonly("true_gini", &SimulationReport::true_gini)
        .def("__repr__", [](const SimulationReport& r) {
            std::ostringstream os;
            os << "SimulationReport(n_bar=" << r.n_bar << ", c_opt=" << r.c_opt
               << ", coverage=" << r.coverage << ")";
            return os.str();
        });

    m.def(
        "run_experiment",
        [](const ExperimentConfig& config) {
            py::gil_scoped_release release;
            return run_experiment(config);
        },
        py::arg("config"));

    m.def(
        "format_report",
        [](const SimulationReport& report, const std::string& style) {
            return format_report(report, report_style_from_name(style));
        },
        py::arg("report"), py::arg("style") = "table");
    m.def(
        "report_to_json",
        [](const SimulationReport& report) { return to_json(report).dump(); }, py::arg("report"));
}
