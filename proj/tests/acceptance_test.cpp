// End-to-end gate: one PASS/FAIL line per shipping requirement.
// Exit code 0 only if every line passes.
#include <sys/wait.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "aptx/activation.hpp"
#include "aptx/analysis.hpp"
#include "aptx/bench.hpp"
#include "aptx/calculus.hpp"
#include "aptx/cost_model.hpp"
#include "aptx/figures.hpp"
#include "aptx/nn.hpp"
#include "aptx/numeric.hpp"
#include "aptx/report_io.hpp"
#include "aptx/verify.hpp"

using namespace aptx;
namespace fs = std::filesystem;

namespace {

// Reference training configuration, frozen after the first seeded runs.
constexpr double kMoonsLr = 0.5;
constexpr LossKind kMoonsLoss = LossKind::Mse;

struct Gate {
  bool all_ok = true;

  void report(int idx, const char* name, bool ok, const std::string& detail) {
    if (!ok) all_ok = false;
    std::printf("%s %2d %-28s %s\n", ok ? "PASS" : "FAIL", idx, name,
                detail.c_str());
    std::fflush(stdout);
  }
};

std::string g6(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

double median(std::vector<double> v) {
  std::nth_element(v.begin(), v.begin() + std::ptrdiff_t(v.size() / 2),
                   v.end());
  return v[v.size() / 2];
}

struct CliRun {
  int exit_code = -1;
  std::string output;
};

CliRun run_cli(const std::string& args, const fs::path& scratch, int tag) {
  fs::path log = scratch / ("cli_" + std::to_string(tag) + ".txt");
  std::string cmd = std::string(APTX_CLI_PATH) + " " + args + " >" +
                    log.string() + " 2>&1";
  int raw = std::system(cmd.c_str());
  CliRun r;
  r.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(log);
  std::stringstream ss;
  ss << in.rdbuf();
  r.output = ss.str();
  return r;
}

double csv_lookup(const CsvTable& table, double x, std::size_t column) {
  for (const std::vector<double>& row : table.rows)
    if (std::abs(row[0] - x) < 1e-9) return row[column];
  return std::nan("");
}

}  // namespace

int main() {
  Gate gate;
  fs::path scratch =
      fs::temp_directory_path() / ("aptx_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(scratch);

  // 1. swish is the (1, rho/2, 0.5) parameterization, values and derivatives
  try {
    double worst = 0.0;
    for (double rho : {1.0, 2.0}) {
      ActivationSpec ap = ActivationSpec::aptx(1.0, rho / 2.0, 0.5);
      ActivationSpec sw = ActivationSpec::swish(rho);
      worst = std::max(worst, compare(ap, sw, -20.0, 20.0, 1e-3).max_abs_err);
      worst = std::max(worst,
                       compare_grads(ap, sw, -20.0, 20.0, 1e-3).max_abs_err);
    }
    gate.report(1, "swish-generation-identity", worst <= 1e-12,
                "max_err=" + g6(worst) + " bound=1e-12");
  } catch (const std::exception& e) {
    gate.report(1, "swish-generation-identity", false, e.what());
  }

  // 2. analytic derivatives of all 8 kinds vs central differences
  try {
    VerifyOptions opts;
    opts.filter = "grad-consistency";
    VerifyReport rep = run_verify(opts);
    double worst = 0.0;
    for (const CheckResult& c : rep.checks) worst = std::max(worst, c.measured);
    gate.report(2, "gradient-fidelity",
                rep.checks.size() == 8 && rep.all_passed(),
                "kinds=" + std::to_string(rep.checks.size()) +
                    " worst_rel_err=" + g6(worst) + " bound=1e-6");
  } catch (const std::exception& e) {
    gate.report(2, "gradient-fidelity", false, e.what());
  }

  // 3. closed-form mish derivative vs kernel gradient and vs finite diff
  try {
    ActivationSpec mish = ActivationSpec::mish();
    double vs_kernel = 0.0, vs_fd = 0.0;
    for (double x : make_grid(-20.0, 20.0, 1e-2)) {
      double closed = mish_grad_closed_form(x);
      vs_kernel = std::max(vs_kernel, std::abs(closed - eval_grad(mish, x).grad));
      double fd = central_diff([&](double t) { return eval(mish, t); }, x);
      vs_fd = std::max(vs_fd, std::abs(closed - fd));
    }
    gate.report(3, "mish-closed-form-derivative",
                vs_kernel <= 1e-9 && vs_fd <= 1e-6,
                "vs_kernel=" + g6(vs_kernel) + " (<=1e-9) vs_fd=" + g6(vs_fd) +
                    " (<=1e-6)");
  } catch (const std::exception& e) {
    gate.report(3, "mish-closed-form-derivative", false, e.what());
  }

  // 4. each parameterization wins its half-domain; the stitched version wins both
  try {
    ActivationSpec full = ActivationSpec::aptx(1.0, 1.0, 0.5);
    ActivationSpec half = ActivationSpec::aptx(1.0, 0.5, 0.5);
    ActivationSpec mish = ActivationSpec::mish();
    double fp = compare(full, mish, 0.0, 10.0, 1e-3).max_abs_err;
    double hp = compare(half, mish, 0.0, 10.0, 1e-3).max_abs_err;
    double fn = compare(full, mish, -10.0, 0.0, 1e-3).max_abs_err;
    double hn = compare(half, mish, -10.0, 0.0, 1e-3).max_abs_err;
    auto mish_fn = [&](double x) { return eval(mish, x); };
    double pw = compare_functions(piecewise_aptx_mish_approximant, mish_fn,
                                  -10.0, 10.0, 1e-3)
                    .max_abs_err;
    double ff = compare(full, mish, -10.0, 10.0, 1e-3).max_abs_err;
    double hf = compare(half, mish, -10.0, 10.0, 1e-3).max_abs_err;
    bool ok = fp < hp && hn < fn && pw < ff && pw < hf;
    gate.report(4, "domain-split-dominance", ok,
                "pos " + g6(fp) + "<" + g6(hp) + "; neg " + g6(hn) + "<" +
                    g6(fn) + "; piecewise " + g6(pw) + "<min(" + g6(ff) + "," +
                    g6(hf) + ")");
  } catch (const std::exception& e) {
    gate.report(4, "domain-split-dominance", false, e.what());
  }

  // 5. finite global minimum on the left, unbounded growth on the right
  try {
    MinResult am = find_min(
        [](double x) { return eval(ActivationSpec::aptx(), x); }, -10.0, 0.0);
    MinResult mm = find_min(
        [](double x) { return eval(ActivationSpec::mish(), x); }, -10.0, 0.0);
    bool ok = std::abs(am.argmin - (-0.63923227138053690)) <= 1e-6 &&
              std::abs(am.min_value - (-0.13923227138053690)) <= 1e-6 &&
              std::abs(mm.argmin - (-1.1924312145154952)) <= 1e-6 &&
              std::abs(mm.min_value - (-0.30884341301725041)) <= 1e-6 &&
              eval(ActivationSpec::aptx(), 100.0) > 99.0 &&
              eval(ActivationSpec::mish(), 100.0) > 99.0;
    gate.report(5, "bounded-below", ok,
                "aptx min " + g6(am.min_value) + " at " + g6(am.argmin) +
                    "; mish min " + g6(mm.min_value) + " at " + g6(mm.argmin));
  } catch (const std::exception& e) {
    gate.report(5, "bounded-below", false, e.what());
  }

  // 6. integer op counts: fewer transcendentals per element than mish
  try {
    CostProfile ap = count_ops(ActivationSpec::aptx());
    CostProfile mi = count_ops(ActivationSpec::mish());
    bool ok = ap.forward.transcendental_total() == 1 &&
              mi.forward.transcendental_total() == 3 &&
              ap.derivative.transcendental_total() <
                  mi.derivative.transcendental_total();
    gate.report(6, "transcendental-count", ok,
                "forward " + std::to_string(ap.forward.transcendental_total()) +
                    " vs " + std::to_string(mi.forward.transcendental_total()) +
                    "; derivative " +
                    std::to_string(ap.derivative.transcendental_total()) +
                    " vs " +
                    std::to_string(mi.derivative.transcendental_total()));
  } catch (const std::exception& e) {
    gate.report(6, "transcendental-count", false, e.what());
  }

  // 7. measured 32-bit single-thread throughput beats mish both ways
  try {
    BenchOptions opts;  // defaults: 1e7 elements, 11 reps, 3 warmup, f32
    std::vector<ThroughputReport> rows =
        bench_suite({ActivationSpec::aptx(), ActivationSpec::mish()},
                    {BenchMode::Forward, BenchMode::Derivative}, opts);
    double fwd_ratio = 0.0, der_ratio = 0.0;
    for (const ThroughputReport& r : rows) {
      if (r.spec.kind != ActKind::APTx) continue;
      if (r.mode == BenchMode::Forward) fwd_ratio = r.relative_to_mish;
      if (r.mode == BenchMode::Derivative) der_ratio = r.relative_to_mish;
    }
    gate.report(7, "measured-throughput", fwd_ratio > 1.0 && der_ratio > 1.0,
                "aptx/mish forward=" + g6(fwd_ratio) +
                    "x derivative=" + g6(der_ratio) + "x");
  } catch (const std::exception& e) {
    gate.report(7, "measured-throughput", false, e.what());
  }

  // 8. desk-scale training: convergence, per-epoch cost, end-to-end gradients
  try {
    std::string detail;
    bool ok = true;

    TrainConfig xor_cfg;
    xor_cfg.dataset = DatasetKind::Xor;
    xor_cfg.activation = ActivationSpec::aptx();
    xor_cfg.hidden = {8};
    xor_cfg.epochs = 5000;
    xor_cfg.learning_rate = 0.5;
    xor_cfg.loss = LossKind::Mse;
    xor_cfg.seed = 42;
    TrainReport xr = train(xor_cfg);
    ok &= xr.final_loss() < 0.05;
    detail += "xor_loss=" + g6(xr.final_loss());

    TrainConfig moons;
    moons.dataset = DatasetKind::TwoMoons;
    moons.n_points = 200;
    moons.noise = 0.1;
    moons.hidden = {16};
    moons.epochs = 2000;
    moons.learning_rate = kMoonsLr;
    moons.loss = kMoonsLoss;
    moons.seed = 7;
    detail += " moons_acc=";
    for (const ActivationSpec& act :
         {ActivationSpec::aptx(), ActivationSpec::mish(),
          ActivationSpec::swish(1.0)}) {
      TrainConfig cfg = moons;
      cfg.activation = act;
      TrainReport r = train(cfg);
      ok &= r.best_accuracy() >= 0.95;
      detail += g6(r.best_accuracy()) + "/";
    }

    TrainConfig timing = moons;
    timing.epochs = 300;
    auto median_epoch_ms = [&](const ActivationSpec& act) {
      std::vector<double> per_run;
      for (int i = 0; i < 5; ++i) {
        TrainConfig cfg = timing;
        cfg.activation = act;
        per_run.push_back(median(train(cfg).epoch_ms));
      }
      return median(per_run);
    };
    double aptx_ms = median_epoch_ms(ActivationSpec::aptx());
    double mish_ms = median_epoch_ms(ActivationSpec::mish());
    ok &= aptx_ms <= mish_ms;
    detail += " epoch_ms=" + g6(aptx_ms) + "<=" + g6(mish_ms);

    Dataset batch = generate_dataset(DatasetKind::TwoMoons, 200, 0.1, 13);
    double worst_grad = 0.0;
    for (ActKind kind : {ActKind::Sigmoid, ActKind::Tanh, ActKind::ReLU,
                         ActKind::LeakyReLU, ActKind::ELU, ActKind::Swish,
                         ActKind::Mish, ActKind::APTx}) {
      ActivationSpec act;
      act.kind = kind;
      MLPModel model = MLPModel::make({2, 3, 2}, act, 13);
      for (LossKind loss : {LossKind::Mse, LossKind::CrossEntropy})
        worst_grad = std::max(
            worst_grad, gradient_check_max_rel_err(model, batch, loss));
    }
    ok &= worst_grad < 1e-5;
    detail += " gradcheck=" + g6(worst_grad);

    gate.report(8, "desk-scale-training", ok, detail);
  } catch (const std::exception& e) {
    gate.report(8, "desk-scale-training", false, e.what());
  }

  // 9. emitted series hit hand-computed anchor points
  try {
    fs::path figs = scratch / "figures";
    emit_figures(figs, -5.0, 5.0, 0.01);
    CsvTable slopes = read_csv(figs / "tanh_sigmoid_derivatives.csv");
    CsvTable relus = read_csv(figs / "relu_family.csv");
    CsvTable mish_aptx = read_csv(figs / "mish_aptx_derivatives.csv");
    double elu_at_m2 = 2.0 * std::expm1(-2.0);
    bool ok = std::abs(csv_lookup(slopes, 0.0, 1) - 1.0) < 1e-6 &&
              std::abs(csv_lookup(slopes, 0.0, 2) - 0.25) < 1e-6 &&
              std::abs(csv_lookup(relus, -2.0, 1) - 0.0) < 1e-6 &&
              std::abs(csv_lookup(relus, -2.0, 2) - (-0.1)) < 1e-6 &&
              std::abs(csv_lookup(relus, -2.0, 3) - elu_at_m2) < 1e-6 &&
              std::abs(csv_lookup(mish_aptx, 0.0, 1) - 0.6) < 1e-6 &&
              std::abs(csv_lookup(mish_aptx, 0.0, 2) - 0.5) < 1e-6;
    gate.report(9, "figure-anchor-points", ok,
                "tanh'/sig'(0)=" + g6(csv_lookup(slopes, 0.0, 1)) + "/" +
                    g6(csv_lookup(slopes, 0.0, 2)) + " elu(-2)=" +
                    g6(csv_lookup(relus, -2.0, 3)) + " mish'/aptx'(0)=" +
                    g6(csv_lookup(mish_aptx, 0.0, 1)) + "/" +
                    g6(csv_lookup(mish_aptx, 0.0, 2)));
  } catch (const std::exception& e) {
    gate.report(9, "figure-anchor-points", false, e.what());
  }

  // 10. a +0.01 fault on any kind's derivative turns verify red, by name
  try {
    CliRun clean = run_cli("verify --out " + (scratch / "v0").string(), scratch, 0);
    bool ok = clean.exit_code == 0;
    std::string detail = "clean_exit=" + std::to_string(clean.exit_code);
    int tag = 1;
    for (ActKind kind : {ActKind::Sigmoid, ActKind::Tanh, ActKind::ReLU,
                         ActKind::LeakyReLU, ActKind::ELU, ActKind::Swish,
                         ActKind::Mish, ActKind::APTx}) {
      ActivationSpec spec;
      spec.kind = kind;
      std::string name = to_string(kind);
      CliRun injected = run_cli(
          "verify --inject-grad-bias " + name + " --filter grad-consistency --out " +
              (scratch / ("v" + std::to_string(tag))).string(),
          scratch, tag);
      ++tag;
      bool named = injected.output.find(std::string("FAIL grad-consistency-") +
                                        name) != std::string::npos;
      if (injected.exit_code != 2 || !named) {
        ok = false;
        detail += " " + name + ":exit=" + std::to_string(injected.exit_code) +
                  (named ? "" : ",unnamed");
      }
    }
    if (ok) detail += " all8_exit=2_and_named";
    gate.report(10, "mutation-sensitivity", ok, detail);
  } catch (const std::exception& e) {
    gate.report(10, "mutation-sensitivity", false, e.what());
  }

  std::error_code ec;
  fs::remove_all(scratch, ec);
  return gate.all_ok ? 0 : 1;
}
