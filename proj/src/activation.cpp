#include "aptx/activation.hpp"

#include <algorithm>
#include <cstdio>

namespace aptx {

const char* to_string(ActKind kind) {
  switch (kind) {
    case ActKind::Sigmoid:
      return "sigmoid";
    case ActKind::Tanh:
      return "tanh";
    case ActKind::ReLU:
      return "relu";
    case ActKind::LeakyReLU:
      return "leaky_relu";
    case ActKind::ELU:
      return "elu";
    case ActKind::Swish:
      return "swish";
    case ActKind::Mish:
      return "mish";
    case ActKind::APTx:
      return "aptx";
  }
  return "?";
}

ActKind act_kind_from_string(const std::string& name) {
  std::string s;
  s.reserve(name.size());
  for (char c : name) {
    if (c == '-') c = '_';
    s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s == "sigmoid") return ActKind::Sigmoid;
  if (s == "tanh") return ActKind::Tanh;
  if (s == "relu") return ActKind::ReLU;
  if (s == "leaky_relu" || s == "leakyrelu") return ActKind::LeakyReLU;
  if (s == "elu") return ActKind::ELU;
  if (s == "swish") return ActKind::Swish;
  if (s == "mish") return ActKind::Mish;
  if (s == "aptx") return ActKind::APTx;
  throw ConfigError("unknown activation kind '" + name + "'");
}

ActivationSpec ActivationSpec::sigmoid() { return {.kind = ActKind::Sigmoid}; }
ActivationSpec ActivationSpec::tanh() { return {.kind = ActKind::Tanh}; }
ActivationSpec ActivationSpec::relu() { return {.kind = ActKind::ReLU}; }

ActivationSpec ActivationSpec::leaky_relu(double slope) {
  return {.kind = ActKind::LeakyReLU, .leak_alpha = slope};
}

ActivationSpec ActivationSpec::elu(double alpha) {
  return {.kind = ActKind::ELU, .elu_alpha = alpha};
}

ActivationSpec ActivationSpec::swish(double rho) {
  return {.kind = ActKind::Swish, .swish_rho = rho};
}

ActivationSpec ActivationSpec::mish() { return {.kind = ActKind::Mish}; }

ActivationSpec ActivationSpec::aptx(double alpha, double beta, double gamma) {
  return {.kind = ActKind::APTx,
          .aptx_alpha = alpha,
          .aptx_beta = beta,
          .aptx_gamma = gamma};
}

void ActivationSpec::validate() const {
  auto require_finite = [&](double v, const char* what) {
    if (!std::isfinite(v))
      throw ConfigError(std::string(to_string(kind)) + ": " + what +
                        " must be finite");
  };
  switch (kind) {
    case ActKind::LeakyReLU:
      require_finite(leak_alpha, "leak_alpha");
      break;
    case ActKind::ELU:
      require_finite(elu_alpha, "elu_alpha");
      break;
    case ActKind::Swish:
      require_finite(swish_rho, "swish_rho");
      break;
    case ActKind::APTx:
      require_finite(aptx_alpha, "aptx_alpha");
      require_finite(aptx_beta, "aptx_beta");
      require_finite(aptx_gamma, "aptx_gamma");
      if (aptx_beta == 0.0)
        throw ConfigError("aptx: beta = 0 collapses the function to a linear map");
      if (aptx_gamma == 0.0)
        throw ConfigError("aptx: gamma = 0 collapses the function to zero");
      break;
    default:
      break;
  }
}

std::string ActivationSpec::label() const {
  char buf[128];
  switch (kind) {
    case ActKind::LeakyReLU:
      std::snprintf(buf, sizeof buf, "leaky_relu(slope=%g)", leak_alpha);
      return buf;
    case ActKind::ELU:
      std::snprintf(buf, sizeof buf, "elu(alpha=%g)", elu_alpha);
      return buf;
    case ActKind::Swish:
      std::snprintf(buf, sizeof buf, "swish(rho=%g)", swish_rho);
      return buf;
    case ActKind::APTx:
      std::snprintf(buf, sizeof buf, "aptx(alpha=%g,beta=%g,gamma=%g)",
                    aptx_alpha, aptx_beta, aptx_gamma);
      return buf;
    default:
      return to_string(kind);
  }
}

namespace {

void check_input(double x) {
  if (!std::isfinite(x)) throw DomainError("activation input is not finite");
}

template <class T>
void check_inputs(std::span<const T> xs) {
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!std::isfinite(xs[i]))
      throw DomainError("activation input xs[" + std::to_string(i) +
                        "] is not finite");
  }
}

template <class T>
void eval_batch_impl(const ActivationSpec& spec, std::span<const T> xs,
                     std::span<T> out) {
  if (out.size() != xs.size()) throw ConfigError("eval_batch: size mismatch");
  spec.validate();
  check_inputs(xs);
  kernels::dispatch<T>(spec, [&](auto k) {
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = k.value(xs[i]);
  });
}

template <class T>
void grad_batch_impl(const ActivationSpec& spec, std::span<const T> xs,
                     std::span<T> grads) {
  if (grads.size() != xs.size()) throw ConfigError("grad_batch: size mismatch");
  spec.validate();
  check_inputs(xs);
  kernels::dispatch<T>(spec, [&](auto k) {
    for (std::size_t i = 0; i < xs.size(); ++i) grads[i] = k.grad(xs[i]);
  });
}

template <class T>
void eval_grad_batch_impl(const ActivationSpec& spec, std::span<const T> xs,
                          std::span<T> values, std::span<T> grads) {
  if (values.size() != xs.size() || grads.size() != xs.size())
    throw ConfigError("eval_grad_batch: size mismatch");
  spec.validate();
  check_inputs(xs);
  kernels::dispatch<T>(spec, [&](auto k) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      auto vg = k.value_grad(xs[i]);
      values[i] = vg.value;
      grads[i] = vg.grad;
    }
  });
}

}  // namespace

double eval(const ActivationSpec& spec, double x) {
  spec.validate();
  check_input(x);
  return kernels::dispatch<double>(spec,
                                   [&](auto k) { return k.value(x); });
}

ValueGrad eval_grad(const ActivationSpec& spec, double x) {
  spec.validate();
  check_input(x);
  return kernels::dispatch<double>(spec, [&](auto k) {
    auto vg = k.value_grad(x);
    return ValueGrad{vg.value, vg.grad};
  });
}

std::vector<double> eval_batch(const ActivationSpec& spec,
                               std::span<const double> xs) {
  std::vector<double> out(xs.size());
  eval_batch_into(spec, xs, out);
  return out;
}

void eval_batch_into(const ActivationSpec& spec, std::span<const double> xs,
                     std::span<double> out) {
  eval_batch_impl(spec, xs, out);
}

void eval_batch_into(const ActivationSpec& spec, std::span<const float> xs,
                     std::span<float> out) {
  eval_batch_impl(spec, xs, out);
}

void grad_batch_into(const ActivationSpec& spec, std::span<const double> xs,
                     std::span<double> grads) {
  grad_batch_impl(spec, xs, grads);
}

void grad_batch_into(const ActivationSpec& spec, std::span<const float> xs,
                     std::span<float> grads) {
  grad_batch_impl(spec, xs, grads);
}

void eval_grad_batch_into(const ActivationSpec& spec,
                          std::span<const double> xs, std::span<double> values,
                          std::span<double> grads) {
  eval_grad_batch_impl(spec, xs, values, grads);
}

void eval_grad_batch_into(const ActivationSpec& spec,
                          std::span<const float> xs, std::span<float> values,
                          std::span<float> grads) {
  eval_grad_batch_impl(spec, xs, values, grads);
}

double mish_grad_closed_form(double x) {
  if (!std::isfinite(x)) throw DomainError("mish_grad_closed_form: non-finite x");
  if (std::abs(x) > 200.0)
    throw DomainError("mish_grad_closed_form: |x| > 200 is outside the safe range");
  if (x > 30.0) {
    // Factor e^{4x} out of numerator and denominator; all remaining
    // exponentials have negative arguments.
    double em = std::exp(-x);
    double em2 = em * em;
    double em3 = em2 * em;
    double num = 4.0 * (x + 1.0) * em3 + 4.0 * em + 1.0 + (4.0 * x + 6.0) * em2;
    double den = 2.0 * em + 1.0 + 2.0 * em2;
    return num / (den * den);
  }
  double ex = std::exp(x);
  double e2x = ex * ex;
  double e3x = e2x * ex;
  double num = ex * (4.0 * (x + 1.0) + 4.0 * e2x + e3x + ex * (4.0 * x + 6.0));
  double den = 2.0 * ex + e2x + 2.0;
  return num / (den * den);
}

}  // namespace aptx
