// Command-line front end: evaluate activations, emit comparison series,
// run the verification suite, compare curves, find minima, print the cost
// model, benchmark throughput, and train toy networks.
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aptx/activation.hpp"
#include "aptx/analysis.hpp"
#include "aptx/bench.hpp"
#include "aptx/calculus.hpp"
#include "aptx/cost_model.hpp"
#include "aptx/errors.hpp"
#include "aptx/figures.hpp"
#include "aptx/nn.hpp"
#include "aptx/report_io.hpp"
#include "aptx/verify.hpp"
#include "aptx/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path resolve_out_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("APTX_OUT_DIR"); env && *env) return env;
  return ".";
}

double parse_double(const std::string& s) {
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || s.empty())
    throw aptx::ConfigError("not a number: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (begin <= s.size()) {
    std::size_t end = s.find(sep, begin);
    if (end == std::string::npos) end = s.size();
    parts.push_back(s.substr(begin, end - begin));
    begin = end + 1;
  }
  return parts;
}

// Compact spec syntax: kind[:p1[,p2[,p3]]], e.g. "mish", "swish:2",
// "aptx:1,0.5,0.5", "leaky_relu:0.05", "elu:2".
aptx::ActivationSpec parse_spec(const std::string& text) {
  std::string kind_str = text;
  std::vector<double> params;
  if (auto colon = text.find(':'); colon != std::string::npos) {
    kind_str = text.substr(0, colon);
    for (const std::string& p : split(text.substr(colon + 1), ','))
      params.push_back(parse_double(p));
  }
  aptx::ActKind kind = aptx::act_kind_from_string(kind_str);
  auto want = [&](std::size_t max_params) {
    if (params.size() > max_params)
      throw aptx::ConfigError("spec '" + text + "': too many parameters");
  };
  aptx::ActivationSpec spec;
  switch (kind) {
    case aptx::ActKind::LeakyReLU:
      want(1);
      spec = aptx::ActivationSpec::leaky_relu(params.empty() ? 0.05
                                                             : params[0]);
      break;
    case aptx::ActKind::ELU:
      want(1);
      spec = aptx::ActivationSpec::elu(params.empty() ? 2.0 : params[0]);
      break;
    case aptx::ActKind::Swish:
      want(1);
      spec = aptx::ActivationSpec::swish(params.empty() ? 1.0 : params[0]);
      break;
    case aptx::ActKind::APTx:
      want(3);
      spec = aptx::ActivationSpec::aptx(
          params.size() > 0 ? params[0] : 1.0,
          params.size() > 1 ? params[1] : 1.0,
          params.size() > 2 ? params[2] : 0.5);
      break;
    default:
      want(0);
      spec.kind = kind;
      break;
  }
  spec.validate();
  return spec;
}

std::vector<std::size_t> parse_dims(const std::string& text) {
  std::vector<std::size_t> dims;
  if (text.empty()) return dims;
  for (const std::string& p : split(text, ',')) {
    double v = parse_double(p);
    if (v < 1 || v != std::floor(v))
      throw aptx::ConfigError("layer width must be a positive integer: '" +
                              p + "'");
    dims.push_back(static_cast<std::size_t>(v));
  }
  return dims;
}

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::nth_element(v.begin(), v.begin() + std::ptrdiff_t(v.size() / 2),
                   v.end());
  return v[v.size() / 2];
}

void finish_manifest(const fs::path& out_dir, const std::string& command,
                     json parameters, std::vector<std::string> outputs) {
  aptx::RunManifest manifest;
  manifest.command = command;
  manifest.parameters = std::move(parameters);
  manifest.tool_version = aptx::kToolVersion;
  manifest.timestamp_utc = aptx::utc_timestamp();
  manifest.outputs = std::move(outputs);
  fs::path path = aptx::write_manifest(out_dir, manifest);
  std::cout << "wrote " << path.string() << "\n";
}

// ---- eval ------------------------------------------------------------

struct EvalArgs {
  std::string kind;
  double alpha = 1.0, beta = 1.0, gamma = 0.5;
  double rho = 1.0, slope = 0.05, elu_alpha = 2.0;
  std::vector<double> xs;
};

int cmd_eval(const EvalArgs& args) {
  aptx::ActivationSpec spec;
  spec.kind = aptx::act_kind_from_string(args.kind);
  spec.aptx_alpha = args.alpha;
  spec.aptx_beta = args.beta;
  spec.aptx_gamma = args.gamma;
  spec.swish_rho = args.rho;
  spec.leak_alpha = args.slope;
  spec.elu_alpha = args.elu_alpha;
  spec.validate();
  for (double x : args.xs) {
    aptx::ValueGrad vg = aptx::eval_grad(spec, x);
    std::cout << "x=" << aptx::format_g17(x)
              << " value=" << aptx::format_g17(vg.value)
              << " grad=" << aptx::format_g17(vg.grad) << "\n";
  }
  return 0;
}

// ---- figures ---------------------------------------------------------

struct FiguresArgs {
  double lo = -5.0, hi = 5.0, step = 0.01;
  std::string out;
};

int cmd_figures(const FiguresArgs& args) {
  fs::path dir = resolve_out_dir(args.out);
  std::vector<std::string> files =
      aptx::emit_figures(dir, args.lo, args.hi, args.step);
  for (const std::string& f : files)
    std::cout << "wrote " << (dir / f).string() << "\n";
  finish_manifest(dir, "figures",
                  {{"lo", args.lo}, {"hi", args.hi}, {"step", args.step}},
                  files);
  return 0;
}

// ---- verify ----------------------------------------------------------

struct VerifyArgs {
  std::string filter;
  std::string inject_kind;
  double inject_delta = 0.01;
  std::string out;
};

int cmd_verify(const VerifyArgs& args) {
  aptx::VerifyOptions opts;
  opts.filter = args.filter;
  if (!args.inject_kind.empty()) {
    opts.inject_grad_kind = aptx::act_kind_from_string(args.inject_kind);
    opts.inject_grad_delta = args.inject_delta;
    std::cout << "fault injection: +" << args.inject_delta
              << " on every analytic " << args.inject_kind << " derivative\n";
  }
  aptx::VerifyReport report = aptx::run_verify(opts);
  if (report.checks.empty())
    throw aptx::ConfigError("verify: no check matches filter '" +
                            args.filter + "'");

  json checks = json::array();
  std::size_t failed = 0;
  for (const aptx::CheckResult& c : report.checks) {
    if (!c.passed) ++failed;
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name
              << "  measured=" << aptx::format_g17(c.measured)
              << " threshold=" << aptx::format_g17(c.threshold) << "\n";
    if (!c.passed) std::cout << "     " << c.detail << "\n";
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"measured", c.measured},
                      {"threshold", c.threshold},
                      {"detail", c.detail}});
  }
  std::cout << report.checks.size() << " checks, " << failed << " failed\n";

  fs::path dir = resolve_out_dir(args.out);
  fs::create_directories(dir);
  json doc = {{"all_passed", report.all_passed()},
              {"failed", report.failed_names()},
              {"checks", checks}};
  aptx::write_text_file(dir / "verify_report.json", doc.dump(2) + "\n");
  std::cout << "wrote " << (dir / "verify_report.json").string() << "\n";
  json params = {{"filter", args.filter}};
  if (!args.inject_kind.empty()) {
    params["inject_grad_bias"] = args.inject_kind;
    params["inject_grad_delta"] = args.inject_delta;
  }
  finish_manifest(dir, "verify", params, {"verify_report.json"});
  return report.all_passed() ? 0 : 2;
}

// ---- compare ---------------------------------------------------------

struct CompareArgs {
  std::string a, b;
  double lo = -10.0, hi = 10.0, step = 1e-3;
  bool grads = false;
  std::string out;
};

int cmd_compare(const CompareArgs& args) {
  aptx::ActivationSpec a = parse_spec(args.a);
  aptx::ActivationSpec b = parse_spec(args.b);
  aptx::ErrorReport rep =
      args.grads ? aptx::compare_grads(a, b, args.lo, args.hi, args.step)
                 : aptx::compare(a, b, args.lo, args.hi, args.step);
  std::cout << (args.grads ? "derivative" : "value") << " comparison of "
            << a.label() << " vs " << b.label() << " on ["
            << aptx::format_g17(args.lo) << ", " << aptx::format_g17(args.hi)
            << "]\n";
  std::cout << "  max_abs_err=" << aptx::format_g17(rep.max_abs_err) << " at x="
            << aptx::format_g17(rep.arg_max_err)
            << " rmse=" << aptx::format_g17(rep.rmse) << "\n";
  std::cout << "  x<0:  max_abs_err=" << aptx::format_g17(rep.negative.max_abs_err)
            << " rmse=" << aptx::format_g17(rep.negative.rmse) << "\n";
  std::cout << "  x>=0: max_abs_err=" << aptx::format_g17(rep.positive.max_abs_err)
            << " rmse=" << aptx::format_g17(rep.positive.rmse) << "\n";

  fs::path dir = resolve_out_dir(args.out);
  fs::create_directories(dir);
  json doc = {{"a", a},
              {"b", b},
              {"quantity", args.grads ? "derivative" : "value"},
              {"report", rep}};
  aptx::write_text_file(dir / "compare.json", doc.dump(2) + "\n");
  std::cout << "wrote " << (dir / "compare.json").string() << "\n";
  finish_manifest(dir, "compare",
                  {{"a", args.a},
                   {"b", args.b},
                   {"lo", args.lo},
                   {"hi", args.hi},
                   {"step", args.step},
                   {"grads", args.grads}},
                  {"compare.json"});
  return 0;
}

// ---- min -------------------------------------------------------------

struct MinArgs {
  std::string kind;
  double alpha = 1.0, beta = 1.0, gamma = 0.5;
  double rho = 1.0, slope = 0.05, elu_alpha = 2.0;
  double lo = -10.0, hi = 0.0, tol = 1e-10;
  std::string out;
};

int cmd_min(const MinArgs& args) {
  aptx::ActivationSpec spec;
  spec.kind = aptx::act_kind_from_string(args.kind);
  spec.aptx_alpha = args.alpha;
  spec.aptx_beta = args.beta;
  spec.aptx_gamma = args.gamma;
  spec.swish_rho = args.rho;
  spec.leak_alpha = args.slope;
  spec.elu_alpha = args.elu_alpha;
  spec.validate();
  aptx::MinResult m = aptx::find_min(
      [&](double x) { return aptx::eval(spec, x); }, args.lo, args.hi,
      args.tol);
  std::cout << spec.label() << " on [" << aptx::format_g17(args.lo) << ", "
            << aptx::format_g17(args.hi) << "]\n"
            << "  argmin=" << aptx::format_g17(m.argmin)
            << " min=" << aptx::format_g17(m.min_value)
            << " iterations=" << m.iterations << " bracket=["
            << aptx::format_g17(m.bracket.first) << ", "
            << aptx::format_g17(m.bracket.second) << "]\n";

  fs::path dir = resolve_out_dir(args.out);
  fs::create_directories(dir);
  json doc = {{"spec", spec}, {"lo", args.lo}, {"hi", args.hi},
              {"tol", args.tol}, {"result", m}};
  aptx::write_text_file(dir / "min.json", doc.dump(2) + "\n");
  std::cout << "wrote " << (dir / "min.json").string() << "\n";
  finish_manifest(dir, "min",
                  {{"kind", args.kind},
                   {"lo", args.lo},
                   {"hi", args.hi},
                   {"tol", args.tol}},
                  {"min.json"});
  return 0;
}

// ---- cost ------------------------------------------------------------

struct CostArgs {
  std::string kind = "all";
  std::string out;
};

int cmd_cost(const CostArgs& args) {
  std::vector<aptx::ActivationSpec> specs;
  if (args.kind == "all") {
    specs = {aptx::ActivationSpec::sigmoid(),  aptx::ActivationSpec::tanh(),
             aptx::ActivationSpec::relu(),     aptx::ActivationSpec::leaky_relu(),
             aptx::ActivationSpec::elu(),      aptx::ActivationSpec::swish(),
             aptx::ActivationSpec::mish(),     aptx::ActivationSpec::aptx()};
  } else {
    specs = {parse_spec(args.kind)};
  }

  char line[160];
  std::snprintf(line, sizeof line, "%-30s %-10s %4s %4s %4s %4s %4s %4s %4s %7s\n",
                "kind", "mode", "tanh", "exp", "log", "div", "mul", "add",
                "cmp", "transc");
  std::cout << line << std::string(88, '-') << "\n";
  json doc = json::array();
  for (const aptx::ActivationSpec& spec : specs) {
    aptx::CostProfile p = aptx::count_ops(spec);
    auto print_row = [&](const char* mode, const aptx::OpCounts& c) {
      std::snprintf(line, sizeof line,
                    "%-30s %-10s %4d %4d %4d %4d %4d %4d %4d %7d\n",
                    spec.label().c_str(), mode, c.tanh_calls, c.exp_calls,
                    c.log_calls, c.divisions, c.multiplications, c.additions,
                    c.comparisons, c.transcendental_total());
      std::cout << line;
    };
    print_row("forward", p.forward);
    print_row("derivative", p.derivative);
    print_row("fused", p.fused);
    doc.push_back(p);
  }

  fs::path dir = resolve_out_dir(args.out);
  fs::create_directories(dir);
  aptx::write_text_file(dir / "cost.json", doc.dump(2) + "\n");
  std::cout << "wrote " << (dir / "cost.json").string() << "\n";
  finish_manifest(dir, "cost", {{"kind", args.kind}}, {"cost.json"});
  return 0;
}

// ---- bench -----------------------------------------------------------

struct BenchArgs {
  std::string kinds = "aptx,mish";
  std::string modes = "forward,derivative";
  std::size_t len = 10'000'000;
  int reps = 11;
  int warmup = 3;
  std::string precision = "f32";
  std::uint64_t seed = 42;
  int workers = 1;
  std::string out;
};

int cmd_bench(const BenchArgs& args) {
  std::vector<aptx::ActivationSpec> specs;
  for (const std::string& k : split(args.kinds, ','))
    specs.push_back(parse_spec(k));
  std::vector<aptx::BenchMode> modes;
  for (const std::string& m : split(args.modes, ','))
    modes.push_back(aptx::bench_mode_from_string(m));

  aptx::BenchOptions opts;
  opts.array_len = args.len;
  opts.reps = args.reps;
  opts.warmup = args.warmup;
  opts.precision = aptx::precision_from_string(args.precision);
  opts.seed = args.seed;
  opts.workers = args.workers;

  std::vector<aptx::ThroughputReport> rows = aptx::bench_suite(specs, modes, opts);
  std::cout << aptx::format_bench_table(rows);

  fs::path dir = resolve_out_dir(args.out);
  fs::create_directories(dir);
  json doc = json::array();
  for (const auto& r : rows) doc.push_back(r);
  aptx::write_text_file(dir / "bench.json", doc.dump(2) + "\n");
  std::cout << "wrote " << (dir / "bench.json").string() << "\n";
  finish_manifest(dir, "bench",
                  {{"kinds", args.kinds},
                   {"modes", args.modes},
                   {"array_len", args.len},
                   {"reps", args.reps},
                   {"warmup", args.warmup},
                   {"precision", args.precision},
                   {"seed", args.seed},
                   {"workers", args.workers}},
                  {"bench.json"});
  return 0;
}

// ---- train -----------------------------------------------------------

struct TrainArgs {
  std::string dataset;
  std::string activation = "aptx";
  std::size_t n = 200;
  double noise = 0.1;
  std::string hidden = "8";
  int epochs = 5000;
  double lr = 0.5;
  std::size_t batch = 0;
  std::string loss = "mse";
  std::uint64_t seed = 42;
  std::string out;
};

int cmd_train(const TrainArgs& args) {
  aptx::TrainConfig config;
  config.dataset = aptx::dataset_from_string(args.dataset);
  config.activation = parse_spec(args.activation);
  config.n_points = args.n;
  config.noise = args.noise;
  config.hidden = parse_dims(args.hidden);
  config.epochs = args.epochs;
  config.learning_rate = args.lr;
  config.batch_size = args.batch;
  config.loss = aptx::loss_from_string(args.loss);
  config.seed = args.seed;

  aptx::TrainReport report = aptx::train(config);
  std::cout << "trained " << config.activation.label() << " on "
            << aptx::to_string(config.dataset) << " for " << args.epochs
            << " epochs\n"
            << "  final_loss=" << aptx::format_g17(report.final_loss());
  if (!report.accuracy.empty())
    std::cout << " final_accuracy=" << aptx::format_g17(report.accuracy.back())
              << " best_accuracy=" << aptx::format_g17(report.best_accuracy());
  std::cout << " median_epoch_ms=" << aptx::format_g17(median_of(report.epoch_ms))
            << "\n  model_checksum=" << report.model_checksum << "\n";

  fs::path dir = resolve_out_dir(args.out);
  fs::create_directories(dir);
  json doc = report;
  aptx::write_text_file(dir / "train_report.json", doc.dump(2) + "\n");
  aptx::CsvTable epochs;
  epochs.header = {"epoch", "loss", "accuracy", "ms"};
  for (std::size_t i = 0; i < report.loss.size(); ++i)
    epochs.rows.push_back(
        {double(i + 1), report.loss[i],
         report.accuracy.empty() ? std::nan("") : report.accuracy[i],
         report.epoch_ms[i]});
  aptx::write_csv(dir / "train_epochs.csv", epochs);
  std::cout << "wrote " << (dir / "train_report.json").string() << "\n"
            << "wrote " << (dir / "train_epochs.csv").string() << "\n";
  finish_manifest(dir, "train",
                  {{"dataset", args.dataset},
                   {"activation", args.activation},
                   {"n", args.n},
                   {"noise", args.noise},
                   {"hidden", args.hidden},
                   {"epochs", args.epochs},
                   {"lr", args.lr},
                   {"batch", args.batch},
                   {"loss", args.loss},
                   {"seed", args.seed}},
                  {"train_report.json", "train_epochs.csv"});
  return 0;
}

void add_spec_flags(CLI::App* cmd, std::string& kind, double& alpha,
                    double& beta, double& gamma, double& rho, double& slope,
                    double& elu_alpha) {
  cmd->add_option("--kind", kind, "activation kind")->required();
  cmd->add_option("--alpha", alpha, "aptx alpha (default 1)");
  cmd->add_option("--beta", beta, "aptx beta (default 1)");
  cmd->add_option("--gamma", gamma, "aptx gamma (default 0.5)");
  cmd->add_option("--rho", rho, "swish rho (default 1)");
  cmd->add_option("--slope", slope, "leaky_relu negative slope (default 0.05)");
  cmd->add_option("--elu-alpha", elu_alpha, "elu alpha (default 2)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"activation-function lab: verified kernels, comparisons, "
               "cost model, benchmarks, toy training"};
  app.set_version_flag("--version", aptx::kToolVersion);
  app.require_subcommand(1);
  int rc = 0;

  EvalArgs eval_args;
  CLI::App* c_eval = app.add_subcommand(
      "eval", "print value and analytic derivative at given points");
  add_spec_flags(c_eval, eval_args.kind, eval_args.alpha, eval_args.beta,
                 eval_args.gamma, eval_args.rho, eval_args.slope,
                 eval_args.elu_alpha);
  c_eval->add_option("--x", eval_args.xs, "evaluation point(s)")->required();
  c_eval->callback([&] { rc = cmd_eval(eval_args); });

  FiguresArgs figures_args;
  CLI::App* c_figures = app.add_subcommand(
      "figures", "emit the six canonical comparison series as CSV");
  c_figures->add_option("--lo", figures_args.lo, "grid start (default -5)");
  c_figures->add_option("--hi", figures_args.hi, "grid end (default 5)");
  c_figures->add_option("--step", figures_args.step, "grid step (default 0.01)");
  c_figures->add_option("--out", figures_args.out,
                        "output directory (default $APTX_OUT_DIR or .)");
  c_figures->callback([&] { rc = cmd_figures(figures_args); });

  VerifyArgs verify_args;
  CLI::App* c_verify = app.add_subcommand(
      "verify", "run the invariant suite; exit 0 iff every check passes");
  c_verify->add_option("--filter", verify_args.filter,
                       "run only checks whose name contains this substring");
  c_verify->add_option("--inject-grad-bias", verify_args.inject_kind,
                       "fault injection: perturb this kind's derivative");
  c_verify->add_option("--inject-grad-delta", verify_args.inject_delta,
                       "size of the injected perturbation (default 0.01)");
  c_verify->add_option("--out", verify_args.out,
                       "output directory (default $APTX_OUT_DIR or .)");
  c_verify->callback([&] { rc = cmd_verify(verify_args); });

  CompareArgs compare_args;
  CLI::App* c_compare = app.add_subcommand(
      "compare", "grid error metrics between two activations");
  c_compare->add_option("--a", compare_args.a, "first spec, kind[:p1,p2,p3]")
      ->required();
  c_compare->add_option("--b", compare_args.b, "second spec")->required();
  c_compare->add_option("--lo", compare_args.lo, "grid start (default -10)");
  c_compare->add_option("--hi", compare_args.hi, "grid end (default 10)");
  c_compare->add_option("--step", compare_args.step,
                        "grid step (default 0.001)");
  c_compare->add_flag("--grads", compare_args.grads,
                      "compare derivatives instead of values");
  c_compare->add_option("--out", compare_args.out,
                        "output directory (default $APTX_OUT_DIR or .)");
  c_compare->callback([&] { rc = cmd_compare(compare_args); });

  MinArgs min_args;
  CLI::App* c_min = app.add_subcommand(
      "min", "locate the global minimum on an interval");
  add_spec_flags(c_min, min_args.kind, min_args.alpha, min_args.beta,
                 min_args.gamma, min_args.rho, min_args.slope,
                 min_args.elu_alpha);
  c_min->add_option("--lo", min_args.lo, "interval start (default -10)");
  c_min->add_option("--hi", min_args.hi, "interval end (default 0)");
  c_min->add_option("--tol", min_args.tol, "bracket tolerance (default 1e-10)");
  c_min->add_option("--out", min_args.out,
                    "output directory (default $APTX_OUT_DIR or .)");
  c_min->callback([&] { rc = cmd_min(min_args); });

  CostArgs cost_args;
  CLI::App* c_cost = app.add_subcommand(
      "cost", "per-element operation counts of the shipped kernels");
  c_cost->add_option("--kind", cost_args.kind,
                     "one spec (kind[:params]) or 'all' (default)");
  c_cost->add_option("--out", cost_args.out,
                     "output directory (default $APTX_OUT_DIR or .)");
  c_cost->callback([&] { rc = cmd_cost(cost_args); });

  BenchArgs bench_args;
  CLI::App* c_bench = app.add_subcommand(
      "bench", "elementwise throughput benchmark (median over reps)");
  c_bench->add_option("--kinds", bench_args.kinds,
                      "comma list of specs (default aptx,mish)");
  c_bench->add_option("--modes", bench_args.modes,
                      "comma list: forward,derivative,fused");
  c_bench->add_option("--len", bench_args.len,
                      "array length, >= 10000 (default 1e7)");
  c_bench->add_option("--reps", bench_args.reps, "timed reps, >= 11");
  c_bench->add_option("--warmup", bench_args.warmup, "warm-up reps, >= 3");
  c_bench->add_option("--precision", bench_args.precision, "f32 or f64");
  c_bench->add_option("--seed", bench_args.seed, "input data seed");
  c_bench->add_option("--workers", bench_args.workers,
                      "data-parallel workers (default 1; keep 1 for timing)");
  c_bench->add_option("--out", bench_args.out,
                      "output directory (default $APTX_OUT_DIR or .)");
  c_bench->callback([&] { rc = cmd_bench(bench_args); });

  TrainArgs train_args;
  CLI::App* c_train = app.add_subcommand(
      "train", "train a small dense net on a synthetic dataset");
  c_train->add_option("--dataset", train_args.dataset,
                      "xor|two_moons|spiral|sine_regression")
      ->required();
  c_train->add_option("--activation", train_args.activation,
                      "hidden activation, kind[:p1,p2,p3] (default aptx)");
  c_train->add_option("--n", train_args.n, "number of points (default 200)");
  c_train->add_option("--noise", train_args.noise, "noise level (default 0.1)");
  c_train->add_option("--hidden", train_args.hidden,
                      "hidden layer widths, e.g. 8 or 16,16 (default 8)");
  c_train->add_option("--epochs", train_args.epochs, "epochs (default 5000)");
  c_train->add_option("--lr", train_args.lr, "learning rate (default 0.5)");
  c_train->add_option("--batch", train_args.batch,
                      "batch size; 0 = full batch (default)");
  c_train->add_option("--loss", train_args.loss, "mse|cross_entropy");
  c_train->add_option("--seed", train_args.seed, "run seed (default 42)");
  c_train->add_option("--out", train_args.out,
                      "output directory (default $APTX_OUT_DIR or .)");
  c_train->callback([&] { rc = cmd_train(train_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage problems exit 1; --help exits 0
  } catch (const aptx::ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const aptx::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const aptx::TrainingError& e) {
    std::cerr << "error at epoch " << e.epoch() << ": " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
