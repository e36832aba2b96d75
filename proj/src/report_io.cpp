#include "seqgini/report_io.hpp"

#include <charconv>
#include <cstdio>

#include "seqgini/errors.hpp"

namespace seqgini {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::pair<const char*, const char*> param_names(Family family) {
    switch (family) {
        case Family::gamma:
            return {"shape", "rate"};
        case Family::lognormal:
            return {"meanlog", "sdlog"};
        case Family::pareto:
            return {"scale", "shape"};
    }
    throw ConfigError("unknown distribution family");
}

// Shortest representation that parses back to the same double.
std::string number(double value) {
    char buf[32];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, end);
}

std::string fixed(double value, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
    return buf;
}

}  // namespace

ReportStyle report_style_from_name(const std::string& name) {
    if (name == "table") return ReportStyle::table;
    if (name == "csv") return ReportStyle::csv;
    if (name == "json") return ReportStyle::json;
    throw ConfigError("unknown report style: " + name);
}

ordered_json to_json(const DistributionSpec& spec) {
    const auto [p1, p2] = param_names(spec.family);
    return ordered_json{{"family", family_name(spec.family)},
                        {"params", ordered_json{{p1, spec.param1}, {p2, spec.param2}}}};
}

DistributionSpec spec_from_json(const json& j) {
    DistributionSpec spec;
    spec.family = family_from_name(j.at("family").get<std::string>());
    const auto [p1, p2] = param_names(spec.family);
    const json& params = j.at("params");
    spec.param1 = params.at(p1).get<double>();
    spec.param2 = params.at(p2).get<double>();
    spec.validate();
    return spec;
}

ordered_json to_json(const SimulationReport& report) {
    return ordered_json{{"spec", to_json(report.spec)},
                        {"alpha", report.alpha},
                        {"d", report.d},
                        {"replications", report.replications},
                        {"master_seed", report.master_seed},
                        {"mc_budget", report.mc_budget},
                        {"n_bar", report.n_bar},
                        {"se_n", report.se_n},
                        {"c_opt", report.c_opt},
                        {"ratio", report.ratio},
                        {"max_n", report.max_n},
                        {"coverage", report.coverage},
                        {"se_p", report.se_p},
                        {"true_gini", report.true_gini}};
}

SimulationReport report_from_json(const json& j) {
    SimulationReport report;
    report.spec = spec_from_json(j.at("spec"));
    report.alpha = j.at("alpha").get<double>();
    report.d = j.at("d").get<double>();
    report.replications = j.at("replications").get<std::size_t>();
    report.master_seed = j.at("master_seed").get<std::uint64_t>();
    report.mc_budget = j.at("mc_budget").get<std::size_t>();
    report.n_bar = j.at("n_bar").get<double>();
    report.se_n = j.at("se_n").get<double>();
    report.c_opt = j.at("c_opt").get<std::size_t>();
    report.ratio = j.at("ratio").get<double>();
    report.max_n = j.at("max_n").get<std::size_t>();
    report.coverage = j.at("coverage").get<double>();
    report.se_p = j.at("se_p").get<double>();
    report.true_gini = j.at("true_gini").get<double>();
    return report;
}

ordered_json to_json(const oracle::TruePopulationParams& params) {
    return ordered_json{{"spec", to_json(params.spec)},
                        {"alpha", params.alpha},
                        {"d", params.d},
                        {"mc_budget", params.mc_budget},
                        {"seed", params.seed},
                        {"mu", params.mu},
                        {"sigma_sq", params.sigma_sq},
                        {"gini", params.gini},
                        {"delta", params.delta},
                        {"tau", params.tau},
                        {"sigma1_sq", params.sigma1_sq},
                        {"xi_sq", params.xi_sq},
                        {"c_opt", params.c_opt},
                        {"se", ordered_json{{"delta", params.delta_se},
                                            {"tau", params.tau_se},
                                            {"sigma1_sq", params.sigma1_sq_se},
                                            {"xi_sq", params.xi_sq_se}}}};
}

ordered_json to_json(const SequentialResult& result) {
    ordered_json j{{"n_final", result.n_final},
                   {"gini", result.gini},
                   {"v_sq", result.v_sq},
                   {"ci_low", result.ci_low},
                   {"ci_high", result.ci_high}};
    if (!result.trace.empty()) {
        ordered_json trace = ordered_json::array();
        for (const auto& point : result.trace) {
            trace.push_back(ordered_json{
                {"n", point.n}, {"v_sq", point.v_sq}, {"threshold", point.threshold}});
        }
        j["trace"] = std::move(trace);
    }
    return j;
}

ExperimentConfig experiment_config_from_json(const json& j) {
    ExperimentConfig config;
    config.spec = spec_from_json(j.at("spec"));
    config.alpha = j.value("alpha", config.alpha);
    config.d = j.value("d", config.d);
    config.replications = j.value("replications", config.replications);
    config.master_seed = j.value("master_seed", config.master_seed);
    config.worker_count = j.value("worker_count", config.worker_count);
    config.mc_budget = j.value("mc_budget", config.mc_budget);
    config.n_max = j.value("n_max", config.n_max);
    return config;
}

namespace {

const char* kCsvHeader =
    "family,param1,param2,alpha,d,replications,master_seed,mc_budget,"
    "n_bar,se_n,c_opt,ratio,max_n,coverage,se_p,true_gini";

std::string csv_line(const SimulationReport& r) {
    std::string line;
    line += family_name(r.spec.family);
    line += ',' + number(r.spec.param1) + ',' + number(r.spec.param2);
    line += ',' + number(r.alpha) + ',' + number(r.d);
    line += ',' + std::to_string(r.replications) + ',' + std::to_string(r.master_seed);
    line += ',' + std::to_string(r.mc_budget);
    line += ',' + number(r.n_bar) + ',' + number(r.se_n) + ',' + std::to_string(r.c_opt);
    line += ',' + number(r.ratio) + ',' + std::to_string(r.max_n);
    line += ',' + number(r.coverage) + ',' + number(r.se_p) + ',' + number(r.true_gini);
    return line;
}

std::string table(std::span<const SimulationReport> reports) {
    char buf[256];
    std::string out;
    std::snprintf(buf, sizeof(buf), "%-12s %12s %8s %9s %8s %9s\n", "family", "N̄", "C",
                  "N̄/C", "max(N)", "p");
    out += buf;
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof(buf), "%-12s %10.4f %8zu %9.4f %8zu %9.4f\n",
                      family_name(r.spec.family).c_str(), r.n_bar, r.c_opt, r.ratio, r.max_n,
                      r.coverage);
        out += buf;
        std::snprintf(buf, sizeof(buf), "%-12s %10.4f %8s %9s %8s %9.4f\n", "  (se)", r.se_n, "",
                      "", "", r.se_p);
        out += buf;
    }
    return out;
}

}  // namespace

std::string format_reports(std::span<const SimulationReport> reports, ReportStyle style) {
    switch (style) {
        case ReportStyle::table:
            return table(reports);
        case ReportStyle::csv: {
            std::string out = kCsvHeader;
            out += '\n';
            for (const auto& r : reports) {
                out += csv_line(r);
                out += '\n';
            }
            return out;
        }
        case ReportStyle::json: {
            ordered_json arr = ordered_json::array();
            for (const auto& r : reports) {
                arr.push_back(to_json(r));
            }
            return arr.dump(2) + "\n";
        }
    }
    throw ConfigError("unknown report style");
}

std::string format_report(const SimulationReport& report, ReportStyle style) {
    return format_reports(std::span<const SimulationReport>(&report, 1), style);
}

}  // namespace seqgini
