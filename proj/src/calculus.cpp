#include "aptx/calculus.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "aptx/errors.hpp"

namespace aptx {

namespace {

double checked(const std::function<double(double)>& f, double x) {
  double v = f(x);
  if (!std::isfinite(v))
    throw OracleError("function value is not finite at x = " +
                      std::to_string(x));
  return v;
}

}  // namespace

double central_diff(const std::function<double(double)>& f, double x,
                    const DiffConfig& cfg) {
  if (!(cfg.step > 0.0) || !std::isfinite(cfg.step))
    throw ConfigError("central_diff: step must be positive");
  if (!(cfg.rel_floor > 0.0))
    throw ConfigError("central_diff: rel_floor must be positive");
  double fp = checked(f, x + cfg.step);
  double fm = checked(f, x - cfg.step);
  return (fp - fm) / (2.0 * cfg.step);
}

MinResult find_min(const std::function<double(double)>& f, double lo,
                   double hi, double tol) {
  if (!(lo < hi)) throw ConfigError("find_min: requires lo < hi");
  if (!(tol > 0.0)) throw ConfigError("find_min: tol must be positive");

  constexpr int kGridPoints = 1000;
  double span = hi - lo;
  int best = 0;
  double best_val = 0.0;
  for (int i = 0; i < kGridPoints; ++i) {
    double x = lo + span * static_cast<double>(i) / (kGridPoints - 1);
    double v = checked(f, x);
    if (i == 0 || v < best_val) {
      best = i;
      best_val = v;
    }
  }
  auto grid_x = [&](int i) {
    return lo + span * static_cast<double>(i) / (kGridPoints - 1);
  };
  double a = grid_x(std::max(best - 1, 0));
  double b = grid_x(std::min(best + 1, kGridPoints - 1));

  // Golden-section: keep two interior probes, shrink towards the smaller.
  constexpr double kInvPhi = 0.6180339887498949;
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = checked(f, x1);
  double f2 = checked(f, x2);
  int iterations = 0;
  while (b - a > tol) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = checked(f, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = checked(f, x2);
    }
    ++iterations;
    if (x1 >= x2) break;  // bracket narrower than fp spacing
  }

  MinResult r;
  r.argmin = f1 <= f2 ? x1 : x2;
  r.min_value = checked(f, r.argmin);
  r.iterations = iterations;
  r.bracket = {a, b};
  return r;
}

}  // namespace aptx
