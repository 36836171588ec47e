#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "aptx/activation.hpp"
#include "aptx/analysis.hpp"
#include "aptx/bench.hpp"
#include "aptx/calculus.hpp"
#include "aptx/cost_model.hpp"
#include "aptx/nn.hpp"

namespace aptx {

/// 17 significant digits: enough to round-trip any double exactly.
std::string format_g17(double v);

/// Numeric table with named columns, written as plain CSV.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

void write_csv(const std::filesystem::path& path, const CsvTable& table);
CsvTable read_csv(const std::filesystem::path& path);  // IoError on failure

// JSON shapes for every report type (picked up by nlohmann via ADL).
void to_json(nlohmann::json& j, const ActivationSpec& spec);
void to_json(nlohmann::json& j, const HalfDomainMetrics& m);
void to_json(nlohmann::json& j, const ErrorReport& r);
void to_json(nlohmann::json& j, const DerivativeDiagnostics& d);
void to_json(nlohmann::json& j, const MinResult& r);
void to_json(nlohmann::json& j, const OpCounts& c);
void to_json(nlohmann::json& j, const CostProfile& p);
void to_json(nlohmann::json& j, const ThroughputReport& r);
void to_json(nlohmann::json& j, const TrainConfig& c);
void to_json(nlohmann::json& j, const TrainReport& r);

/// Written alongside every artifact a command emits; re-running the command
/// with these parameters reproduces non-timing outputs bit-identically.
struct RunManifest {
  std::string command;
  nlohmann::json parameters;
  std::string tool_version;
  std::string timestamp_utc;
  std::vector<std::string> outputs;
};

std::string utc_timestamp();

/// Writes <command>.manifest.json next to the command's outputs and returns
/// its path.
std::filesystem::path write_manifest(const std::filesystem::path& out_dir,
                                     const RunManifest& manifest);

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);  // IoError on failure

}  // namespace aptx
