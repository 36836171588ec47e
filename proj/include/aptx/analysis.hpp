#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "aptx/activation.hpp"

namespace aptx {

/// One activation sampled on a grid: values and analytic derivatives.
struct EvalSeries {
  ActivationSpec spec;
  std::vector<double> xs;  // strictly increasing
  std::vector<double> values;
  std::vector<double> grads;
};

struct HalfDomainMetrics {
  std::size_t n_samples = 0;
  double max_abs_err = 0.0;
  double arg_max_err = 0.0;  // x of the first maximal error; 0 if empty
  double rmse = 0.0;
};

/// |f_a - f_b| statistics over a grid, split at x = 0 (0 counts as
/// positive). rmse accumulates in fixed-order pairwise summation so the
/// result is independent of any evaluation partitioning.
struct ErrorReport {
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n_samples = 0;
  double max_abs_err = 0.0;
  double arg_max_err = 0.0;
  double rmse = 0.0;
  HalfDomainMetrics negative;  // x < 0
  HalfDomainMetrics positive;  // x >= 0
};

/// Derivative-range summary: saturation and dead-zone measurements.
struct DerivativeDiagnostics {
  ActivationSpec spec;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t n_samples = 0;
  double grad_min = 0.0;
  double grad_max = 0.0;
  double arg_grad_min = 0.0;
  double arg_grad_max = 0.0;
  double epsilon = 1e-3;
  double fraction_below = 0.0;  // share of grid points with |grad| < epsilon
};

/// Samples values and gradients on the grid lo, lo+step, ..., hi.
/// lo == hi yields the single-point series {lo}.
EvalSeries sample_series(const ActivationSpec& spec, double lo, double hi,
                         double step);

/// Grid comparison of two arbitrary scalar functions.
ErrorReport compare_functions(const std::function<double(double)>& fa,
                              const std::function<double(double)>& fb,
                              double lo, double hi, double step);

/// Grid comparison of two activations' values / derivatives.
ErrorReport compare(const ActivationSpec& a, const ActivationSpec& b,
                    double lo, double hi, double step);
ErrorReport compare_grads(const ActivationSpec& a, const ActivationSpec& b,
                          double lo, double hi, double step);

/// Two-piece MISH lookalike assembled from the better APTx parameterization
/// on each half-domain: (1, 0.5, 0.5) for x < 0 and (1, 1, 0.5) for x >= 0.
/// Continuous at 0 with matching one-sided derivatives (both 0.5).
double piecewise_aptx_mish_approximant(double x);

DerivativeDiagnostics derivative_diagnostics(const ActivationSpec& spec,
                                             double lo, double hi, double step,
                                             double epsilon = 1e-3);

}  // namespace aptx
