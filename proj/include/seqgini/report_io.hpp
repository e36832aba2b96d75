#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "seqgini/harness.hpp"
#include "seqgini/oracle.hpp"
#include "seqgini/sequential.hpp"

namespace seqgini {

enum class ReportStyle { table, csv, json };

ReportStyle report_style_from_name(const std::string& name);

nlohmann::ordered_json to_json(const DistributionSpec& spec);
DistributionSpec spec_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const SimulationReport& report);
SimulationReport report_from_json(const nlohmann::json& j);

nlohmann::ordered_json to_json(const oracle::TruePopulationParams& params);

nlohmann::ordered_json to_json(const SequentialResult& result);

/// Reads an experiment configuration from JSON. Only "spec" is required;
/// every other field falls back to its default.
ExperimentConfig experiment_config_from_json(const nlohmann::json& j);

/// Renders reports in the requested style. The table style mirrors the
/// usual presentation of sequential simulation summaries: one point
/// estimate row per experiment with the standard errors underneath; csv
/// emits one header plus one line per report; json emits an array.
std::string format_reports(std::span<const SimulationReport> reports, ReportStyle style);
std::string format_report(const SimulationReport& report, ReportStyle style);

}  // namespace seqgini
