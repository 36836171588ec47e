#pragma once

#include <functional>
#include <utility>

namespace aptx {

struct DiffConfig {
  double step = 1e-5;     // central-difference h
  double rel_floor = 1.0; // denominator floor for relative-error use
};

/// (f(x+h) - f(x-h)) / 2h. Throws OracleError if f is non-finite at a
/// sample point, ConfigError on a bad config.
double central_diff(const std::function<double(double)>& f, double x,
                    const DiffConfig& cfg = {});

struct MinResult {
  double argmin = 0.0;
  double min_value = 0.0;
  int iterations = 0;
  std::pair<double, double> bracket{0.0, 0.0};
};

/// 1-D minimization: a 1000-point grid scan brackets the smallest sample,
/// then golden-section refines until the bracket is narrower than tol.
/// Deliberately derivative-free so it can vouch for analytic derivatives
/// without depending on them. Not guaranteed global for arbitrary f.
MinResult find_min(const std::function<double(double)>& f, double lo,
                   double hi, double tol = 1e-10);

}  // namespace aptx
