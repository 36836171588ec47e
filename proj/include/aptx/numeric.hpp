#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace aptx {

/// Evenly spaced grid lo, lo+step, ..., hi. lo == hi yields the single
/// point {lo}; otherwise requires lo < hi and step > 0 (ConfigError).
/// The last point is clamped to hi when rounding overshoots by a hair.
std::vector<double> make_grid(double lo, double hi, double step);

/// Fixed-order pairwise summation; deterministic regardless of how the
/// data was produced or partitioned.
double pairwise_sum(std::span<const double> v);
double pairwise_sum(std::span<const float> v);

/// FNV-1a over raw bytes, used for model and report checksums.
std::uint64_t fnv1a(std::span<const unsigned char> bytes,
                    std::uint64_t seed = 1469598103934665603ull);
std::uint64_t fnv1a_doubles(std::span<const double> values,
                            std::uint64_t seed = 1469598103934665603ull);

}  // namespace aptx
