#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace aptx {

enum class DatasetKind { Xor, TwoMoons, Spiral, SineRegression };

const char* to_string(DatasetKind kind);
DatasetKind dataset_from_string(const std::string& name);  // ConfigError

/// Row-major sample matrix plus targets. Classification sets carry integer
/// labels and one-hot (or scalar 0/1 for xor) targets; regression sets have
/// scalar targets and no labels.
struct Dataset {
  DatasetKind kind = DatasetKind::Xor;
  std::size_t n = 0;
  std::size_t input_dim = 0;
  std::size_t target_dim = 0;
  bool classification = false;
  std::vector<double> inputs;   // n × input_dim
  std::vector<double> targets;  // n × target_dim
  std::vector<int> labels;      // classification only

  std::span<const double> input(std::size_t i) const {
    return {inputs.data() + i * input_dim, input_dim};
  }
  std::span<const double> target(std::size_t i) const {
    return {targets.data() + i * target_dim, target_dim};
  }
};

/// Seeded synthetic data:
///   xor             — the 4 boolean points, scalar targets 0/1 (n, noise ignored)
///   two_moons       — two interleaved half-circles of radius 1, the second
///                     flipped and shifted to (1, 0.5 - sin t); one-hot targets
///   spiral          — two interleaved 2-turn spiral arms; one-hot targets
///   sine_regression — y = sin(2*pi*x) + noise on [0, 1]
/// Requires n >= 4. Gaussian noise with standard deviation `noise` is added
/// to coordinates (two_moons, spiral) or targets (sine_regression).
Dataset generate_dataset(DatasetKind kind, std::size_t n, double noise,
                         std::uint64_t seed);

}  // namespace aptx
