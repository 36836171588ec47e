#include "aptx/analysis.hpp"

#include <cmath>

#include "aptx/errors.hpp"
#include "aptx/numeric.hpp"

namespace aptx {

namespace {

// Shared metric pass over |va - vb| on xs. Ties keep the first maximum.
ErrorReport metrics_over(std::span<const double> xs,
                         std::span<const double> va,
                         std::span<const double> vb) {
  ErrorReport rep;
  rep.lo = xs.front();
  rep.hi = xs.back();
  rep.n_samples = xs.size();

  std::vector<double> sq_all, sq_neg, sq_pos;
  sq_all.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double err = std::abs(va[i] - vb[i]);
    if (!std::isfinite(err))
      throw OracleError("comparison produced a non-finite error value");
    double x = xs[i];
    if (err > rep.max_abs_err) {
      rep.max_abs_err = err;
      rep.arg_max_err = x;
    }
    HalfDomainMetrics& half = x < 0.0 ? rep.negative : rep.positive;
    if (half.n_samples == 0 || err > half.max_abs_err) {
      half.max_abs_err = err;
      half.arg_max_err = x;
    }
    ++half.n_samples;
    sq_all.push_back(err * err);
    (x < 0.0 ? sq_neg : sq_pos).push_back(err * err);
  }
  auto rms = [](const std::vector<double>& sq) {
    return sq.empty() ? 0.0 : std::sqrt(pairwise_sum(sq) / double(sq.size()));
  };
  rep.rmse = rms(sq_all);
  rep.negative.rmse = rms(sq_neg);
  rep.positive.rmse = rms(sq_pos);
  return rep;
}

}  // namespace

EvalSeries sample_series(const ActivationSpec& spec, double lo, double hi,
                         double step) {
  spec.validate();
  EvalSeries s;
  s.spec = spec;
  s.xs = make_grid(lo, hi, step);
  s.values.resize(s.xs.size());
  s.grads.resize(s.xs.size());
  eval_grad_batch_into(spec, s.xs, s.values, s.grads);
  return s;
}

ErrorReport compare_functions(const std::function<double(double)>& fa,
                              const std::function<double(double)>& fb,
                              double lo, double hi, double step) {
  std::vector<double> xs = make_grid(lo, hi, step);
  std::vector<double> va(xs.size()), vb(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    va[i] = fa(xs[i]);
    vb[i] = fb(xs[i]);
  }
  return metrics_over(xs, va, vb);
}

ErrorReport compare(const ActivationSpec& a, const ActivationSpec& b,
                    double lo, double hi, double step) {
  std::vector<double> xs = make_grid(lo, hi, step);
  std::vector<double> va(xs.size()), vb(xs.size());
  eval_batch_into(a, xs, va);
  eval_batch_into(b, xs, vb);
  return metrics_over(xs, va, vb);
}

ErrorReport compare_grads(const ActivationSpec& a, const ActivationSpec& b,
                          double lo, double hi, double step) {
  std::vector<double> xs = make_grid(lo, hi, step);
  std::vector<double> va(xs.size()), vb(xs.size());
  grad_batch_into(a, xs, va);
  grad_batch_into(b, xs, vb);
  return metrics_over(xs, va, vb);
}

double piecewise_aptx_mish_approximant(double x) {
  static const ActivationSpec neg_half = ActivationSpec::aptx(1.0, 0.5, 0.5);
  static const ActivationSpec pos_half = ActivationSpec::aptx(1.0, 1.0, 0.5);
  return eval(x < 0.0 ? neg_half : pos_half, x);
}

DerivativeDiagnostics derivative_diagnostics(const ActivationSpec& spec,
                                             double lo, double hi, double step,
                                             double epsilon) {
  if (!(epsilon > 0.0)) throw ConfigError("diagnostics: epsilon must be > 0");
  EvalSeries s = sample_series(spec, lo, hi, step);
  DerivativeDiagnostics d;
  d.spec = spec;
  d.lo = s.xs.front();
  d.hi = s.xs.back();
  d.n_samples = s.xs.size();
  d.epsilon = epsilon;
  std::size_t below = 0;
  for (std::size_t i = 0; i < s.xs.size(); ++i) {
    double g = s.grads[i];
    if (i == 0 || g < d.grad_min) {
      d.grad_min = g;
      d.arg_grad_min = s.xs[i];
    }
    if (i == 0 || g > d.grad_max) {
      d.grad_max = g;
      d.arg_grad_max = s.xs[i];
    }
    if (std::abs(g) < epsilon) ++below;
  }
  d.fraction_below = double(below) / double(d.n_samples);
  return d;
}

}  // namespace aptx
