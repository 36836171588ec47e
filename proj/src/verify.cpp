#include "aptx/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "aptx/analysis.hpp"
#include "aptx/calculus.hpp"
#include "aptx/cost_model.hpp"
#include "aptx/numeric.hpp"

namespace aptx {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> VerifyReport::failed_names() const {
  std::vector<std::string> names;
  for (const CheckResult& c : checks)
    if (!c.passed) names.push_back(c.name);
  return names;
}

namespace {

// Pinned by an independent high-precision sweep (1e-6 grid brute force plus
// golden-section refinement) before these kernels existed.
constexpr double kAptxArgmin = -0.63923227138053690;
constexpr double kAptxMin = -0.13923227138053690;
constexpr double kMishArgmin = -1.1924312145154952;
constexpr double kMishMin = -0.30884341301725041;

struct Suite {
  const VerifyOptions& opts;
  std::vector<CheckResult> results;

  bool wanted(const std::string& name) const {
    return opts.filter.empty() ||
           name.find(opts.filter) != std::string::npos;
  }

  // Every analytic derivative the suite consumes flows through here, so the
  // injection hook perturbs exactly what a real kernel bug would.
  double grad_of(const ActivationSpec& spec, double x) const {
    double g = eval_grad(spec, x).grad;
    if (opts.inject_grad_kind && *opts.inject_grad_kind == spec.kind)
      g += opts.inject_grad_delta;
    return g;
  }

  void push(std::string name, bool passed, double measured, double threshold,
            std::string detail) {
    results.push_back({std::move(name), passed, measured, threshold,
                       std::move(detail)});
  }
};

void check_grad_consistency(Suite& s) {
  struct Row {
    const char* name;
    ActivationSpec spec;
    bool has_kink;
  };
  const Row rows[] = {
      {"grad-consistency-sigmoid", ActivationSpec::sigmoid(), false},
      {"grad-consistency-tanh", ActivationSpec::tanh(), false},
      {"grad-consistency-relu", ActivationSpec::relu(), true},
      {"grad-consistency-leaky_relu", ActivationSpec::leaky_relu(), true},
      {"grad-consistency-elu", ActivationSpec::elu(), true},
      {"grad-consistency-swish", ActivationSpec::swish(), false},
      {"grad-consistency-mish", ActivationSpec::mish(), false},
      {"grad-consistency-aptx", ActivationSpec::aptx(), false},
  };
  for (const Row& row : rows) {
    if (!s.wanted(row.name)) continue;
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> dist(-20.0, 20.0);
    DiffConfig cfg;  // h = 1e-5, relative floor 1
    double worst = 0.0;
    double worst_x = 0.0;
    for (int i = 0; i < 1000; ++i) {
      double x = dist(rng);
      // The difference stencil must not straddle the derivative jump at 0.
      if (row.has_kink && std::abs(x) < 2.0 * cfg.step) continue;
      double fd = central_diff([&](double t) { return eval(row.spec, t); }, x,
                               cfg);
      double rel = std::abs(fd - s.grad_of(row.spec, x)) /
                   std::max(cfg.rel_floor, std::abs(fd));
      if (rel > worst) {
        worst = rel;
        worst_x = x;
      }
    }
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "max relative gap between the analytic derivative and the "
                  "central difference (h=1e-5) was at x=%.6g",
                  worst_x);
    s.push(row.name, worst <= 1e-6, worst, 1e-6, detail);
  }
}

void check_mish_closed_form(Suite& s) {
  const ActivationSpec mish = ActivationSpec::mish();
  if (s.wanted("mish-closed-form-grid")) {
    double worst = 0.0;
    for (double x : make_grid(-20.0, 20.0, 1e-2))
      worst = std::max(worst,
                       std::abs(mish_grad_closed_form(x) - s.grad_of(mish, x)));
    s.push("mish-closed-form-grid", worst <= 1e-9, worst, 1e-9,
           "closed-form mish derivative vs the implemented gradient, "
           "[-20,20] step 1e-2");
  }
  if (s.wanted("mish-closed-form-fd")) {
    double worst = 0.0;
    for (double x : make_grid(-20.0, 20.0, 1e-2))
      worst = std::max(
          worst, std::abs(mish_grad_closed_form(x) -
                          central_diff(
                              [&](double t) { return eval(mish, t); }, x)));
    s.push("mish-closed-form-fd", worst <= 1e-6, worst, 1e-6,
           "closed-form mish derivative vs finite differences of the value");
  }
}

void check_swish_identity(Suite& s) {
  for (double rho : {1.0, 2.0}) {
    std::string name = rho == 1.0 ? "swish-identity-rho1" : "swish-identity-rho2";
    if (!s.wanted(name)) continue;
    ActivationSpec ap = ActivationSpec::aptx(1.0, rho / 2.0, 0.5);
    ActivationSpec sw = ActivationSpec::swish(rho);
    double worst = 0.0;
    for (double x : make_grid(-20.0, 20.0, 1e-3)) {
      worst = std::max(worst, std::abs(eval(ap, x) - eval(sw, x)));
      worst = std::max(worst, std::abs(s.grad_of(ap, x) - s.grad_of(sw, x)));
    }
    char detail[128];
    std::snprintf(detail, sizeof detail,
                  "max |aptx(1,%.1f,0.5) - swish(rho=%.0f)| over values and "
                  "derivatives, [-20,20] step 1e-3",
                  rho / 2.0, rho);
    s.push(name, worst <= 1e-12, worst, 1e-12, detail);
  }
}

void check_domain_split(Suite& s) {
  const ActivationSpec beta1 = ActivationSpec::aptx(1.0, 1.0, 0.5);
  const ActivationSpec beta05 = ActivationSpec::aptx(1.0, 0.5, 0.5);
  const ActivationSpec mish = ActivationSpec::mish();
  char detail[192];
  if (s.wanted("domain-split-positive")) {
    double e1 = compare(beta1, mish, 0.0, 10.0, 1e-3).max_abs_err;
    double e05 = compare(beta05, mish, 0.0, 10.0, 1e-3).max_abs_err;
    std::snprintf(detail, sizeof detail,
                  "on [0,10] vs mish: beta=1 max err %.9g must beat beta=0.5's "
                  "%.9g",
                  e1, e05);
    s.push("domain-split-positive", e1 < e05, e1, e05, detail);
  }
  if (s.wanted("domain-split-negative")) {
    double e1 = compare(beta1, mish, -10.0, 0.0, 1e-3).max_abs_err;
    double e05 = compare(beta05, mish, -10.0, 0.0, 1e-3).max_abs_err;
    std::snprintf(detail, sizeof detail,
                  "on [-10,0] vs mish: beta=0.5 max err %.9g must beat "
                  "beta=1's %.9g",
                  e05, e1);
    s.push("domain-split-negative", e05 < e1, e05, e1, detail);
  }
  if (s.wanted("domain-split-piecewise")) {
    auto mish_fn = [&](double x) { return eval(mish, x); };
    double ep = compare_functions(piecewise_aptx_mish_approximant, mish_fn,
                                  -10.0, 10.0, 1e-3)
                    .max_abs_err;
    double e1 = compare(beta1, mish, -10.0, 10.0, 1e-3).max_abs_err;
    double e05 = compare(beta05, mish, -10.0, 10.0, 1e-3).max_abs_err;
    std::snprintf(detail, sizeof detail,
                  "piecewise approximant max err %.9g vs mish on [-10,10]; "
                  "single-beta errors %.9g (beta=1) and %.9g (beta=0.5)",
                  ep, e1, e05);
    s.push("domain-split-piecewise", ep < e1 && ep < e05, ep,
           std::min(e1, e05), detail);
  }
}

void check_bounded_below(Suite& s) {
  struct Row {
    const char* name;
    ActivationSpec spec;
    double argmin, min;
  };
  const Row rows[] = {
      {"bounded-below-aptx", ActivationSpec::aptx(), kAptxArgmin, kAptxMin},
      {"bounded-below-mish", ActivationSpec::mish(), kMishArgmin, kMishMin},
  };
  for (const Row& row : rows) {
    if (!s.wanted(row.name)) continue;
    MinResult m = find_min([&](double x) { return eval(row.spec, x); }, -10.0,
                           0.0, 1e-10);
    double big = eval(row.spec, 100.0);
    bool ok = std::abs(m.argmin - row.argmin) <= 1e-6 &&
              std::abs(m.min_value - row.min) <= 1e-6 && big > 99.0;
    char detail[192];
    std::snprintf(detail, sizeof detail,
                  "global minimum %.12g at x=%.12g (pinned %.12g at %.12g); "
                  "f(100)=%.6g must exceed 99",
                  m.min_value, m.argmin, row.min, row.argmin, big);
    s.push(row.name, ok, std::abs(m.min_value - row.min), 1e-6, detail);
  }
}

void check_cost_dominance(Suite& s) {
  CostProfile ap = count_ops(ActivationSpec::aptx());
  CostProfile mi = count_ops(ActivationSpec::mish());
  char detail[160];
  if (s.wanted("cost-dominance-forward")) {
    int a = ap.forward.transcendental_total();
    int m = mi.forward.transcendental_total();
    std::snprintf(detail, sizeof detail,
                  "transcendental calls per forward element: aptx %d, mish %d",
                  a, m);
    s.push("cost-dominance-forward", a < m, a, m, detail);
  }
  if (s.wanted("cost-dominance-derivative")) {
    int a = ap.derivative.transcendental_total();
    int m = mi.derivative.transcendental_total();
    std::snprintf(detail, sizeof detail,
                  "transcendental calls per derivative element: aptx %d, mish %d",
                  a, m);
    s.push("cost-dominance-derivative", a < m, a, m, detail);
  }
}

void check_structural(Suite& s) {
  if (s.wanted("piecewise-c1-at-zero")) {
    ActivationSpec neg = ActivationSpec::aptx(1.0, 0.5, 0.5);
    ActivationSpec pos = ActivationSpec::aptx(1.0, 1.0, 0.5);
    double dv = std::abs(eval(neg, 0.0) - eval(pos, 0.0));
    double dg = std::abs(s.grad_of(neg, 0.0) - s.grad_of(pos, 0.0));
    double worst = std::max(dv, dg);
    s.push("piecewise-c1-at-zero", worst <= 1e-12, worst, 1e-12,
           "the two halves of the piecewise mish approximant agree at 0 in "
           "value and one-sided derivative (both 0.5)");
  }
  if (s.wanted("tanh-sigmoid-derivative-range")) {
    DerivativeDiagnostics t =
        derivative_diagnostics(ActivationSpec::tanh(), -10.0, 10.0, 0.01);
    DerivativeDiagnostics g =
        derivative_diagnostics(ActivationSpec::sigmoid(), -10.0, 10.0, 0.01);
    bool ok = t.grad_min < g.grad_min && t.grad_max > g.grad_max;
    char detail[192];
    std::snprintf(detail, sizeof detail,
                  "tanh' range [%.3g, %.3g] must strictly contain sigmoid' "
                  "range [%.3g, %.3g] on [-10,10]",
                  t.grad_min, t.grad_max, g.grad_min, g.grad_max);
    s.push("tanh-sigmoid-derivative-range", ok, t.grad_max, g.grad_max,
           detail);
  }
  if (s.wanted("aptx-gamma-linearity")) {
    ActivationSpec full = ActivationSpec::aptx(1.0, 1.0, 1.0);
    ActivationSpec half = ActivationSpec::aptx(1.0, 1.0, 0.5);
    double worst = 0.0;
    for (double x : make_grid(-5.0, 5.0, 0.1))
      worst = std::max(worst, std::abs(eval(full, x) - 2.0 * eval(half, x)));
    s.push("aptx-gamma-linearity", worst <= 1e-15, worst, 1e-15,
           "gamma scales the function linearly: aptx(1,1,1) == 2*aptx(1,1,0.5) "
           "exactly (doubling is exponent arithmetic)");
  }
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& opts) {
  Suite s{opts, {}};
  check_grad_consistency(s);
  check_mish_closed_form(s);
  check_swish_identity(s);
  check_domain_split(s);
  check_bounded_below(s);
  check_cost_dominance(s);
  check_structural(s);
  return VerifyReport{std::move(s.results)};
}

}  // namespace aptx
