#include "aptx/datasets.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "aptx/errors.hpp"

namespace aptx {

const char* to_string(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::Xor:
      return "xor";
    case DatasetKind::TwoMoons:
      return "two_moons";
    case DatasetKind::Spiral:
      return "spiral";
    case DatasetKind::SineRegression:
      return "sine_regression";
  }
  return "?";
}

DatasetKind dataset_from_string(const std::string& name) {
  if (name == "xor") return DatasetKind::Xor;
  if (name == "two_moons" || name == "moons") return DatasetKind::TwoMoons;
  if (name == "spiral") return DatasetKind::Spiral;
  if (name == "sine_regression" || name == "sine")
    return DatasetKind::SineRegression;
  throw ConfigError("unknown dataset '" + name +
                    "' (xor|two_moons|spiral|sine_regression)");
}

namespace {

struct NoiseSource {
  std::mt19937_64 rng;
  std::normal_distribution<double> dist;
  double sigma;
  // normal_distribution rejects sigma == 0, so draws are skipped entirely
  // for noiseless data.
  NoiseSource(std::uint64_t seed, double sigma_)
      : rng(seed), dist(0.0, sigma_ > 0.0 ? sigma_ : 1.0), sigma(sigma_) {}
  double operator()() { return sigma > 0.0 ? dist(rng) : 0.0; }
};

void push_point(Dataset& d, double x0, double x1, int label) {
  d.inputs.push_back(x0);
  d.inputs.push_back(x1);
  d.labels.push_back(label);
  d.targets.push_back(label == 0 ? 1.0 : 0.0);
  d.targets.push_back(label == 1 ? 1.0 : 0.0);
}

Dataset make_xor() {
  Dataset d;
  d.kind = DatasetKind::Xor;
  d.n = 4;
  d.input_dim = 2;
  d.target_dim = 1;
  d.classification = true;
  d.inputs = {0, 0, 0, 1, 1, 0, 1, 1};
  d.targets = {0, 1, 1, 0};
  d.labels = {0, 1, 1, 0};
  return d;
}

Dataset make_two_moons(std::size_t n, double noise, std::uint64_t seed) {
  Dataset d;
  d.kind = DatasetKind::TwoMoons;
  d.n = n;
  d.input_dim = 2;
  d.target_dim = 2;
  d.classification = true;
  NoiseSource gauss(seed, noise);
  std::size_t n_a = n / 2;
  std::size_t n_b = n - n_a;
  auto theta = [](std::size_t i, std::size_t count) {
    return count > 1 ? std::numbers::pi * double(i) / double(count - 1) : 0.0;
  };
  for (std::size_t i = 0; i < n_a; ++i) {
    double t = theta(i, n_a);
    push_point(d, std::cos(t) + gauss(), std::sin(t) + gauss(), 0);
  }
  for (std::size_t i = 0; i < n_b; ++i) {
    double t = theta(i, n_b);
    push_point(d, 1.0 - std::cos(t) + gauss(), 0.5 - std::sin(t) + gauss(), 1);
  }
  return d;
}

Dataset make_spiral(std::size_t n, double noise, std::uint64_t seed) {
  Dataset d;
  d.kind = DatasetKind::Spiral;
  d.n = n;
  d.input_dim = 2;
  d.target_dim = 2;
  d.classification = true;
  NoiseSource gauss(seed, noise);
  std::size_t n_a = n / 2;
  std::size_t n_b = n - n_a;
  auto arm = [&](std::size_t count, double flip, int label) {
    for (std::size_t i = 0; i < count; ++i) {
      double t = double(i + 1) / double(count);  // r in (0, 1]
      double angle = 4.0 * std::numbers::pi * t;  // two turns
      push_point(d, flip * t * std::cos(angle) + gauss(),
                 flip * t * std::sin(angle) + gauss(), label);
    }
  };
  arm(n_a, 1.0, 0);
  arm(n_b, -1.0, 1);
  return d;
}

Dataset make_sine(std::size_t n, double noise, std::uint64_t seed) {
  Dataset d;
  d.kind = DatasetKind::SineRegression;
  d.n = n;
  d.input_dim = 1;
  d.target_dim = 1;
  d.classification = false;
  NoiseSource gauss(seed, noise);
  for (std::size_t i = 0; i < n; ++i) {
    double x = double(i) / double(n - 1);
    d.inputs.push_back(x);
    d.targets.push_back(std::sin(2.0 * std::numbers::pi * x) + gauss());
  }
  return d;
}

}  // namespace

Dataset generate_dataset(DatasetKind kind, std::size_t n, double noise,
                         std::uint64_t seed) {
  if (n < 4) throw ConfigError("generate_dataset: n must be at least 4");
  if (!(noise >= 0.0)) throw ConfigError("generate_dataset: noise must be >= 0");
  switch (kind) {
    case DatasetKind::Xor:
      return make_xor();  // fixed truth table; n and noise do not apply
    case DatasetKind::TwoMoons:
      return make_two_moons(n, noise, seed);
    case DatasetKind::Spiral:
      return make_spiral(n, noise, seed);
    case DatasetKind::SineRegression:
      return make_sine(n, noise, seed);
  }
  throw ConfigError("unknown dataset kind");
}

}  // namespace aptx
