#include "aptx/numeric.hpp"

#include <cmath>
#include <cstring>

#include "aptx/errors.hpp"

namespace aptx {

std::vector<double> make_grid(double lo, double hi, double step) {
  if (!std::isfinite(lo) || !std::isfinite(hi))
    throw ConfigError("grid bounds must be finite");
  if (lo > hi) throw ConfigError("grid requires lo <= hi");
  if (lo == hi) return {lo};
  if (!(step > 0.0) || !std::isfinite(step))
    throw ConfigError("grid step must be positive and finite");

  double raw = (hi - lo) / step;
  auto n = static_cast<std::size_t>(raw + raw * 1e-12 + 1e-12);
  while (n > 0 && lo + static_cast<double>(n) * step > hi + step * 1e-9) --n;

  std::vector<double> xs(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    xs[i] = lo + static_cast<double>(i) * step;
  if (xs.back() > hi) xs.back() = hi;  // clamp fp overshoot to the endpoint
  return xs;
}

namespace {

template <class T>
double pairwise_sum_impl(std::span<const T> v) {
  if (v.size() <= 16) {
    double s = 0.0;
    for (T x : v) s += static_cast<double>(x);
    return s;
  }
  std::size_t half = v.size() / 2;
  return pairwise_sum_impl(v.subspan(0, half)) +
         pairwise_sum_impl(v.subspan(half));
}

}  // namespace

double pairwise_sum(std::span<const double> v) { return pairwise_sum_impl(v); }
double pairwise_sum(std::span<const float> v) { return pairwise_sum_impl(v); }

std::uint64_t fnv1a(std::span<const unsigned char> bytes, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t fnv1a_doubles(std::span<const double> values,
                            std::uint64_t seed) {
  std::uint64_t h = seed;
  for (double v : values) {
    unsigned char buf[sizeof(double)];
    std::memcpy(buf, &v, sizeof buf);
    h = fnv1a({buf, sizeof buf}, h);
  }
  return h;
}

}  // namespace aptx
