#include "aptx/nn.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>

#include "aptx/errors.hpp"
#include "aptx/numeric.hpp"

namespace aptx {

const char* to_string(LossKind kind) {
  return kind == LossKind::Mse ? "mse" : "cross_entropy";
}

LossKind loss_from_string(const std::string& name) {
  if (name == "mse") return LossKind::Mse;
  if (name == "cross_entropy" || name == "ce") return LossKind::CrossEntropy;
  throw ConfigError("unknown loss '" + name + "' (mse|cross_entropy)");
}

MLPModel MLPModel::make(const std::vector<std::size_t>& dims,
                        const ActivationSpec& act, std::uint64_t seed) {
  if (dims.size() < 2)
    throw ConfigError("model needs at least input and output dimensions");
  for (std::size_t d : dims)
    if (d == 0) throw ConfigError("layer dimensions must be positive");
  act.validate();

  MLPModel model;
  model.seed = seed;
  std::mt19937_64 rng(seed);
  for (std::size_t l = 0; l + 1 < dims.size(); ++l) {
    DenseLayer layer;
    layer.in_dim = dims[l];
    layer.out_dim = dims[l + 1];
    layer.has_activation = l + 2 < dims.size();  // output layer is identity
    layer.activation = act;
    double bound = 1.0 / std::sqrt(static_cast<double>(layer.in_dim));
    std::uniform_real_distribution<double> dist(-bound, bound);
    layer.weights.resize(layer.out_dim * layer.in_dim);
    for (double& w : layer.weights) w = dist(rng);
    layer.biases.assign(layer.out_dim, 0.0);
    model.layers.push_back(std::move(layer));
  }
  return model;
}

std::size_t MLPModel::parameter_count() const {
  std::size_t n = 0;
  for (const DenseLayer& l : layers) n += l.weights.size() + l.biases.size();
  return n;
}

std::uint64_t MLPModel::checksum() const {
  std::uint64_t h = 1469598103934665603ull;
  for (const DenseLayer& l : layers) {
    h = fnv1a_doubles(l.weights, h);
    h = fnv1a_doubles(l.biases, h);
  }
  return h;
}

std::vector<double> forward(const MLPModel& model, std::span<const double> input,
                            ForwardCache* cache) {
  if (model.layers.empty()) throw ConfigError("forward: empty model");
  if (input.size() != model.input_dim())
    throw ConfigError("forward: input dimension mismatch");
  if (cache) {
    cache->inputs.assign(model.layers.size(), {});
    cache->act_grads.assign(model.layers.size(), {});
  }
  std::vector<double> x(input.begin(), input.end());
  for (std::size_t l = 0; l < model.layers.size(); ++l) {
    const DenseLayer& layer = model.layers[l];
    if (cache) cache->inputs[l] = x;
    std::vector<double> y(layer.out_dim);
    for (std::size_t i = 0; i < layer.out_dim; ++i) {
      const double* row = layer.weights.data() + i * layer.in_dim;
      double s = layer.biases[i];
      for (std::size_t j = 0; j < layer.in_dim; ++j) s += row[j] * x[j];
      y[i] = s;
    }
    if (layer.has_activation) {
      std::vector<double> out(layer.out_dim);
      if (cache) {
        cache->act_grads[l].resize(layer.out_dim);
        eval_grad_batch_into(layer.activation, y, out, cache->act_grads[l]);
      } else {
        eval_batch_into(layer.activation, y, out);
      }
      x = std::move(out);
    } else {
      if (cache) cache->act_grads[l].assign(layer.out_dim, 1.0);
      x = std::move(y);
    }
  }
  if (cache) cache->output = x;
  return x;
}

Gradients Gradients::zeros_like(const MLPModel& model) {
  Gradients g;
  for (const DenseLayer& l : model.layers) {
    g.weights.emplace_back(l.weights.size(), 0.0);
    g.biases.emplace_back(l.biases.size(), 0.0);
  }
  return g;
}

void Gradients::add(const Gradients& other) {
  for (std::size_t l = 0; l < weights.size(); ++l) {
    for (std::size_t i = 0; i < weights[l].size(); ++i)
      weights[l][i] += other.weights[l][i];
    for (std::size_t i = 0; i < biases[l].size(); ++i)
      biases[l][i] += other.biases[l][i];
  }
}

void Gradients::scale(double s) {
  for (auto& w : weights)
    for (double& v : w) v *= s;
  for (auto& b : biases)
    for (double& v : b) v *= s;
}

Gradients backward(const MLPModel& model, const ForwardCache& cache,
                   std::span<const double> dloss_dout) {
  if (cache.inputs.size() != model.layers.size() ||
      cache.act_grads.size() != model.layers.size())
    throw ConfigError("backward: cache does not match model");
  if (dloss_dout.size() != model.output_dim())
    throw ConfigError("backward: loss gradient dimension mismatch");

  Gradients g = Gradients::zeros_like(model);
  std::vector<double> delta(dloss_dout.begin(), dloss_dout.end());
  for (std::size_t li = model.layers.size(); li-- > 0;) {
    const DenseLayer& layer = model.layers[li];
    const std::vector<double>& x = cache.inputs[li];
    if (x.size() != layer.in_dim ||
        cache.act_grads[li].size() != layer.out_dim)
      throw ConfigError("backward: cache does not match model");

    std::vector<double> dpre(layer.out_dim);
    for (std::size_t i = 0; i < layer.out_dim; ++i)
      dpre[i] = delta[i] * cache.act_grads[li][i];

    for (std::size_t i = 0; i < layer.out_dim; ++i) {
      double* grow = g.weights[li].data() + i * layer.in_dim;
      for (std::size_t j = 0; j < layer.in_dim; ++j)
        grow[j] += dpre[i] * x[j];
      g.biases[li][i] += dpre[i];
    }

    std::vector<double> prev(layer.in_dim, 0.0);
    for (std::size_t i = 0; i < layer.out_dim; ++i) {
      const double* row = layer.weights.data() + i * layer.in_dim;
      for (std::size_t j = 0; j < layer.in_dim; ++j)
        prev[j] += row[j] * dpre[i];
    }
    delta = std::move(prev);
  }
  return g;
}

double loss_and_grad(LossKind kind, std::span<const double> output,
                     std::span<const double> target, std::span<double> dout) {
  if (output.size() != target.size() || dout.size() != output.size())
    throw ConfigError("loss: dimension mismatch");
  if (kind == LossKind::Mse) {
    double loss = 0.0;
    for (std::size_t j = 0; j < output.size(); ++j) {
      double diff = output[j] - target[j];
      loss += diff * diff;
      dout[j] = 2.0 * diff;
    }
    return loss;
  }
  // Softmax + negative log likelihood; gradient w.r.t. raw outputs is p - t.
  double mx = *std::max_element(output.begin(), output.end());
  double z = 0.0;
  for (double o : output) z += std::exp(o - mx);
  double loss = 0.0;
  for (std::size_t j = 0; j < output.size(); ++j) {
    double p = std::exp(output[j] - mx) / z;
    if (target[j] > 0.0) loss -= target[j] * std::log(std::max(p, 1e-300));
    dout[j] = p - target[j];
  }
  return loss;
}

void TrainConfig::validate() const {
  if (epochs < 1) throw ConfigError("train: epochs must be >= 1");
  if (!(learning_rate > 0.0) || !std::isfinite(learning_rate))
    throw ConfigError("train: learning_rate must be positive");
  activation.validate();
}

double TrainReport::best_accuracy() const {
  return accuracy.empty() ? 0.0
                          : *std::max_element(accuracy.begin(), accuracy.end());
}

namespace {

int predict_label(std::span<const double> output) {
  if (output.size() == 1) return output[0] > 0.5 ? 1 : 0;
  return int(std::max_element(output.begin(), output.end()) - output.begin());
}

constexpr std::uint64_t kInitSeedMix = 0x9e3779b97f4a7c15ull;

}  // namespace

TrainReport train(const TrainConfig& config) {
  config.validate();
  Dataset data =
      generate_dataset(config.dataset, config.n_points, config.noise,
                       config.seed);
  if (config.loss == LossKind::CrossEntropy && data.target_dim < 2)
    throw ConfigError("train: cross_entropy needs one-hot targets");

  std::vector<std::size_t> dims;
  dims.push_back(data.input_dim);
  dims.insert(dims.end(), config.hidden.begin(), config.hidden.end());
  dims.push_back(data.target_dim);
  // Weight init draws from a stream decoupled from the dataset noise.
  MLPModel model =
      MLPModel::make(dims, config.activation, config.seed ^ kInitSeedMix);

  std::size_t batch =
      config.batch_size == 0 ? data.n : std::min(config.batch_size, data.n);

  TrainReport report;
  report.config = config;
  report.out_dim = data.target_dim;
  report.loss.reserve(std::size_t(config.epochs));
  report.epoch_ms.reserve(std::size_t(config.epochs));

  std::vector<double> dout(data.target_dim);
  ForwardCache cache;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    auto t0 = std::chrono::steady_clock::now();
    double loss_sum = 0.0;
    std::size_t correct = 0;
    for (std::size_t begin = 0; begin < data.n; begin += batch) {
      std::size_t end = std::min(begin + batch, data.n);
      Gradients grads = Gradients::zeros_like(model);
      for (std::size_t s = begin; s < end; ++s) {
        forward(model, data.input(s), &cache);
        loss_sum += loss_and_grad(config.loss, cache.output, data.target(s),
                                  dout);
        if (data.classification &&
            predict_label(cache.output) == data.labels[s])
          ++correct;
        grads.add(backward(model, cache, dout));
      }
      double step = config.learning_rate / double(end - begin);
      for (std::size_t l = 0; l < model.layers.size(); ++l) {
        DenseLayer& layer = model.layers[l];
        for (std::size_t i = 0; i < layer.weights.size(); ++i)
          layer.weights[i] -= step * grads.weights[l][i];
        for (std::size_t i = 0; i < layer.biases.size(); ++i)
          layer.biases[i] -= step * grads.biases[l][i];
      }
    }
    auto t1 = std::chrono::steady_clock::now();

    double mean_loss = loss_sum / double(data.n);
    if (!std::isfinite(mean_loss))
      throw TrainingError("training diverged: loss is not finite", epoch);
    report.loss.push_back(mean_loss);
    if (data.classification)
      report.accuracy.push_back(double(correct) / double(data.n));
    report.epoch_ms.push_back(
        std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  report.model_checksum = model.checksum();
  return report;
}

double gradient_check_max_rel_err(const MLPModel& model, const Dataset& data,
                                  LossKind loss, double h, double rel_floor) {
  if (!(h > 0.0) || !(rel_floor > 0.0))
    throw ConfigError("gradient check: h and rel_floor must be positive");

  MLPModel probe = model;
  std::vector<double> dout(data.target_dim);

  auto batch_loss = [&]() {
    double sum = 0.0;
    for (std::size_t s = 0; s < data.n; ++s) {
      std::vector<double> out = forward(probe, data.input(s));
      sum += loss_and_grad(loss, out, data.target(s), dout);
    }
    return sum / double(data.n);
  };

  // Analytic gradient of the mean batch loss.
  Gradients analytic = Gradients::zeros_like(probe);
  ForwardCache cache;
  for (std::size_t s = 0; s < data.n; ++s) {
    forward(probe, data.input(s), &cache);
    loss_and_grad(loss, cache.output, data.target(s), dout);
    analytic.add(backward(probe, cache, dout));
  }
  analytic.scale(1.0 / double(data.n));

  double worst = 0.0;
  auto check_param = [&](double& param, double grad) {
    double saved = param;
    param = saved + h;
    double lp = batch_loss();
    param = saved - h;
    double lm = batch_loss();
    param = saved;
    double fd = (lp - lm) / (2.0 * h);
    double rel = std::abs(fd - grad) / std::max(rel_floor, std::abs(fd));
    worst = std::max(worst, rel);
  };
  for (std::size_t l = 0; l < probe.layers.size(); ++l) {
    DenseLayer& layer = probe.layers[l];
    for (std::size_t i = 0; i < layer.weights.size(); ++i)
      check_param(layer.weights[i], analytic.weights[l][i]);
    for (std::size_t i = 0; i < layer.biases.size(); ++i)
      check_param(layer.biases[i], analytic.biases[l][i]);
  }
  return worst;
}

}  // namespace aptx
