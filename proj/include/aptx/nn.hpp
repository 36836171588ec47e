#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "aptx/activation.hpp"
#include "aptx/datasets.hpp"

namespace aptx {

struct DenseLayer {
  std::size_t in_dim = 0;
  std::size_t out_dim = 0;
  std::vector<double> weights;  // row-major out_dim × in_dim
  std::vector<double> biases;   // out_dim
  bool has_activation = true;   // false → identity (output layer)
  ActivationSpec activation;
};

struct MLPModel {
  std::vector<DenseLayer> layers;
  std::uint64_t seed = 0;

  /// dims = {input, hidden..., output}; hidden layers use `act`, the output
  /// layer is identity (the loss supplies the output nonlinearity). Weights
  /// are seeded uniform in ±1/sqrt(fan_in); biases start at zero.
  static MLPModel make(const std::vector<std::size_t>& dims,
                       const ActivationSpec& act, std::uint64_t seed);

  std::size_t input_dim() const { return layers.front().in_dim; }
  std::size_t output_dim() const { return layers.back().out_dim; }
  std::size_t parameter_count() const;
  std::uint64_t checksum() const;  // FNV-1a over all weights then biases
};

/// Per-layer state captured by forward() for the backward pass.
struct ForwardCache {
  std::vector<std::vector<double>> inputs;     // x fed to each layer
  std::vector<std::vector<double>> act_grads;  // f'(y) per layer (identity: 1)
  std::vector<double> output;
};

/// y = Wx + b per layer, then f(y). With a cache, activation values and
/// derivatives come from one fused evaluation per layer.
std::vector<double> forward(const MLPModel& model, std::span<const double> input,
                            ForwardCache* cache = nullptr);

struct Gradients {
  std::vector<std::vector<double>> weights;  // same shapes as the model
  std::vector<std::vector<double>> biases;

  static Gradients zeros_like(const MLPModel& model);
  void add(const Gradients& other);
  void scale(double s);
};

/// Chain rule from dL/d(output) down to every weight and bias.
Gradients backward(const MLPModel& model, const ForwardCache& cache,
                   std::span<const double> dloss_dout);

enum class LossKind { Mse, CrossEntropy };
const char* to_string(LossKind kind);
LossKind loss_from_string(const std::string& name);  // ConfigError

/// Per-sample loss and its gradient w.r.t. the raw network output.
///   mse: sum_j (o_j - t_j)^2, gradient 2(o - t)
///   cross_entropy: softmax + negative log likelihood, gradient p - t
double loss_and_grad(LossKind kind, std::span<const double> output,
                     std::span<const double> target, std::span<double> dout);

struct TrainConfig {
  DatasetKind dataset = DatasetKind::Xor;
  std::size_t n_points = 200;  // ignored for xor
  double noise = 0.1;
  std::vector<std::size_t> hidden{8};
  int epochs = 5000;
  double learning_rate = 0.5;
  std::size_t batch_size = 0;  // 0 → full batch
  LossKind loss = LossKind::Mse;
  std::uint64_t seed = 42;
  ActivationSpec activation;

  void validate() const;  // ConfigError
};

struct TrainReport {
  TrainConfig config;
  std::size_t out_dim = 0;
  std::vector<double> loss;      // per epoch, mean per-sample loss
  std::vector<double> accuracy;  // per epoch; empty for regression
  std::vector<double> epoch_ms;  // wall-clock per epoch
  std::uint64_t model_checksum = 0;

  double final_loss() const { return loss.back(); }
  double best_accuracy() const;  // 0 for regression
};

/// Deterministic seeded run: dataset, init, epoch loop of forward/backward/
/// SGD. Identical (config, seed) → identical report (timing aside).
/// Throws TrainingError with the epoch index if the loss turns non-finite.
TrainReport train(const TrainConfig& config);

/// Max relative error between analytic parameter gradients of the mean batch
/// loss and central finite differences, over every weight and bias.
double gradient_check_max_rel_err(const MLPModel& model, const Dataset& data,
                                  LossKind loss, double h = 1e-5,
                                  double rel_floor = 1.0);

}  // namespace aptx
