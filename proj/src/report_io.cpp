#include "aptx/report_io.hpp"

#include <cstdio>
#include <ctime>
#include <fstream>
#include <sstream>

#include "aptx/errors.hpp"
#include "aptx/version.hpp"

namespace aptx {

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  for (std::size_t c = 0; c < table.header.size(); ++c) {
    if (c) out << ',';
    out << table.header[c];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != table.header.size())
      throw IoError("csv row width does not match header");
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << format_g17(row[c]);
    }
    out << '\n';
  }
  if (!out.flush()) throw IoError("failed writing '" + path.string() + "'");
}

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  CsvTable table;
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty csv: " + path.string());
  std::stringstream hs(line);
  std::string cell;
  while (std::getline(hs, cell, ',')) table.header.push_back(cell);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    std::stringstream rs(line);
    while (std::getline(rs, cell, ',')) {
      char* end = nullptr;
      double v = std::strtod(cell.c_str(), &end);
      if (end == cell.c_str())
        throw IoError("csv cell is not a number: '" + cell + "'");
      row.push_back(v);
    }
    if (row.size() != table.header.size())
      throw IoError("csv row width does not match header");
    table.rows.push_back(std::move(row));
  }
  return table;
}

void to_json(nlohmann::json& j, const ActivationSpec& spec) {
  j = {{"kind", to_string(spec.kind)}};
  switch (spec.kind) {
    case ActKind::LeakyReLU:
      j["leak_alpha"] = spec.leak_alpha;
      break;
    case ActKind::ELU:
      j["elu_alpha"] = spec.elu_alpha;
      break;
    case ActKind::Swish:
      j["rho"] = spec.swish_rho;
      break;
    case ActKind::APTx:
      j["alpha"] = spec.aptx_alpha;
      j["beta"] = spec.aptx_beta;
      j["gamma"] = spec.aptx_gamma;
      break;
    default:
      break;
  }
}

void to_json(nlohmann::json& j, const HalfDomainMetrics& m) {
  j = {{"n_samples", m.n_samples},
       {"max_abs_err", m.max_abs_err},
       {"arg_max_err", m.arg_max_err},
       {"rmse", m.rmse}};
}

void to_json(nlohmann::json& j, const ErrorReport& r) {
  j = {{"lo", r.lo},
       {"hi", r.hi},
       {"n_samples", r.n_samples},
       {"max_abs_err", r.max_abs_err},
       {"arg_max_err", r.arg_max_err},
       {"rmse", r.rmse},
       {"negative", r.negative},
       {"positive", r.positive}};
}

void to_json(nlohmann::json& j, const DerivativeDiagnostics& d) {
  j = {{"spec", d.spec},
       {"lo", d.lo},
       {"hi", d.hi},
       {"n_samples", d.n_samples},
       {"grad_min", d.grad_min},
       {"grad_max", d.grad_max},
       {"arg_grad_min", d.arg_grad_min},
       {"arg_grad_max", d.arg_grad_max},
       {"epsilon", d.epsilon},
       {"fraction_below", d.fraction_below}};
}

void to_json(nlohmann::json& j, const MinResult& r) {
  j = {{"argmin", r.argmin},
       {"min_value", r.min_value},
       {"iterations", r.iterations},
       {"bracket", {r.bracket.first, r.bracket.second}}};
}

void to_json(nlohmann::json& j, const OpCounts& c) {
  j = {{"tanh", c.tanh_calls},
       {"exp", c.exp_calls},
       {"log", c.log_calls},
       {"div", c.divisions},
       {"mul", c.multiplications},
       {"add", c.additions},
       {"cmp", c.comparisons},
       {"transcendental_total", c.transcendental_total()}};
}

void to_json(nlohmann::json& j, const CostProfile& p) {
  j = {{"spec", p.spec},
       {"forward", p.forward},
       {"derivative", p.derivative},
       {"fused", p.fused}};
}

void to_json(nlohmann::json& j, const ThroughputReport& r) {
  j = {{"spec", r.spec},
       {"mode", to_string(r.mode)},
       {"precision", to_string(r.precision)},
       {"array_len", r.array_len},
       {"reps", r.reps},
       {"workers", r.workers},
       {"median_rep_seconds", r.median_rep_seconds},
       {"elements_per_second", r.elements_per_second},
       {"checksum", r.checksum}};
  if (std::isfinite(r.relative_to_mish))
    j["relative_to_mish"] = r.relative_to_mish;
  else
    j["relative_to_mish"] = nullptr;
}

void to_json(nlohmann::json& j, const TrainConfig& c) {
  j = {{"dataset", to_string(c.dataset)},
       {"n_points", c.n_points},
       {"noise", c.noise},
       {"hidden", c.hidden},
       {"epochs", c.epochs},
       {"learning_rate", c.learning_rate},
       {"batch_size", c.batch_size},
       {"loss", to_string(c.loss)},
       {"seed", c.seed},
       {"activation", c.activation}};
}

void to_json(nlohmann::json& j, const TrainReport& r) {
  j = {{"config", r.config},
       {"out_dim", r.out_dim},
       {"final_loss", r.final_loss()},
       {"loss", r.loss},
       {"epoch_ms", r.epoch_ms},
       {"model_checksum", r.model_checksum}};
  if (!r.accuracy.empty()) {
    j["accuracy"] = r.accuracy;
    j["best_accuracy"] = r.best_accuracy();
  }
}

std::string utc_timestamp() {
  std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  return buf;
}

std::filesystem::path write_manifest(const std::filesystem::path& out_dir,
                                     const RunManifest& manifest) {
  nlohmann::json j = {{"command", manifest.command},
                      {"parameters", manifest.parameters},
                      {"tool", kToolName},
                      {"tool_version", manifest.tool_version},
                      {"timestamp_utc", manifest.timestamp_utc},
                      {"outputs", manifest.outputs}};
  std::filesystem::path path = out_dir / (manifest.command + ".manifest.json");
  write_text_file(path, j.dump(2) + "\n");
  return path;
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  if (!out.flush()) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace aptx
