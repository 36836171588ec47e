#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "aptx/errors.hpp"

namespace aptx {

enum class ActKind { Sigmoid, Tanh, ReLU, LeakyReLU, ELU, Swish, Mish, APTx };

const char* to_string(ActKind kind);
ActKind act_kind_from_string(const std::string& name);  // throws ConfigError

/// Identity of an activation function plus its tunable parameters.
/// Parameters that do not apply to `kind` are ignored by evaluation.
struct ActivationSpec {
  ActKind kind = ActKind::APTx;
  double leak_alpha = 0.05;  // LeakyReLU negative-branch slope
  double elu_alpha = 2.0;    // ELU negative-branch scale
  double swish_rho = 1.0;    // Swish gate sharpness
  double aptx_alpha = 1.0;
  double aptx_beta = 1.0;
  double aptx_gamma = 0.5;

  static ActivationSpec sigmoid();
  static ActivationSpec tanh();
  static ActivationSpec relu();
  static ActivationSpec leaky_relu(double slope = 0.05);
  static ActivationSpec elu(double alpha = 2.0);
  static ActivationSpec swish(double rho = 1.0);
  static ActivationSpec mish();
  static ActivationSpec aptx(double alpha = 1.0, double beta = 1.0,
                             double gamma = 0.5);

  // Throws ConfigError if the parameters relevant to `kind` are unusable
  // (non-finite, or beta == 0 / gamma == 0 for APTx, which would collapse
  // the function to a linear or zero map).
  void validate() const;

  // Human-readable label, e.g. "aptx(alpha=1,beta=0.5,gamma=0.5)".
  std::string label() const;
};

struct ValueGrad {
  double value = 0.0;
  double grad = 0.0;
};

// Scalar kernels, templated so the same expression trees run in double,
// float, and the op-counting scalar used by the cost model.
namespace kernels {

template <class T>
struct ValGrad {
  T value;
  T grad;
};

// Overflow-safe logistic: never exponentiates a positive argument.
template <class T>
inline T stable_sigmoid(T x) {
  using std::exp;
  if (x >= T(0)) {
    T z = exp(-x);
    return T(1) / (T(1) + z);
  }
  T z = exp(x);
  return z / (T(1) + z);
}

// softplus(x) = ln(1 + e^x), switched to x + ln(1 + e^-x) for large x.
template <class T>
inline T softplus(T x) {
  using std::exp;
  using std::log1p;
  if (x > T(20)) return x + log1p(exp(-x));
  return log1p(exp(x));
}

template <class T>
struct SigmoidK {
  T value(T x) const { return stable_sigmoid(x); }
  T grad(T x) const {
    T s = stable_sigmoid(x);
    return s * (T(1) - s);
  }
  ValGrad<T> value_grad(T x) const {
    T s = stable_sigmoid(x);
    return {s, s * (T(1) - s)};
  }
};

template <class T>
struct TanhK {
  T value(T x) const {
    using std::tanh;
    return tanh(x);
  }
  T grad(T x) const {
    using std::tanh;
    T t = tanh(x);
    return T(1) - t * t;
  }
  ValGrad<T> value_grad(T x) const {
    using std::tanh;
    T t = tanh(x);
    return {t, T(1) - t * t};
  }
};

// Branch convention for the piecewise kinds: x <= 0 takes the negative
// branch, and the derivative at 0 is the negative-branch derivative.
template <class T>
struct ReluK {
  T value(T x) const { return x > T(0) ? x : T(0); }
  T grad(T x) const { return x > T(0) ? T(1) : T(0); }
  ValGrad<T> value_grad(T x) const {
    return x > T(0) ? ValGrad<T>{x, T(1)} : ValGrad<T>{T(0), T(0)};
  }
};

template <class T>
struct LeakyReluK {
  T slope;
  T value(T x) const { return x > T(0) ? x : slope * x; }
  T grad(T x) const { return x > T(0) ? T(1) : slope; }
  ValGrad<T> value_grad(T x) const {
    return x > T(0) ? ValGrad<T>{x, T(1)} : ValGrad<T>{slope * x, slope};
  }
};

// All three entry points share the expm1-based expressions so fused and
// separate evaluation stay bit-identical.
template <class T>
struct EluK {
  T alpha;
  T value(T x) const {
    using std::expm1;
    return x > T(0) ? x : alpha * expm1(x);
  }
  T grad(T x) const {
    using std::expm1;
    return x > T(0) ? T(1) : alpha * (expm1(x) + T(1));
  }
  ValGrad<T> value_grad(T x) const {
    using std::expm1;
    if (x > T(0)) return {x, T(1)};
    T e1 = expm1(x);
    return {alpha * e1, alpha * (e1 + T(1))};
  }
};

template <class T>
struct SwishK {
  T rho;
  bool unit_rho;  // folds rho*x away when rho == 1
  T value(T x) const {
    T u = unit_rho ? x : rho * x;
    return x * stable_sigmoid(u);
  }
  T grad(T x) const {
    T u = unit_rho ? x : rho * x;
    T s = stable_sigmoid(u);
    return s + u * (s * (T(1) - s));
  }
  ValGrad<T> value_grad(T x) const {
    T u = unit_rho ? x : rho * x;
    T s = stable_sigmoid(u);
    return {x * s, s + u * (s * (T(1) - s))};
  }
};

template <class T>
struct MishK {
  T value(T x) const {
    using std::tanh;
    return x * tanh(softplus(x));
  }
  T grad(T x) const {
    using std::tanh;
    T t = tanh(softplus(x));
    return t + x * ((T(1) - t * t) * stable_sigmoid(x));
  }
  ValGrad<T> value_grad(T x) const {
    using std::tanh;
    T t = tanh(softplus(x));
    return {x * t, t + x * ((T(1) - t * t) * stable_sigmoid(x))};
  }
};

template <class T>
struct AptxK {
  T alpha, beta, gamma;
  bool unit_beta;  // folds beta*x away when beta == 1
  T value(T x) const {
    using std::tanh;
    T t = tanh(unit_beta ? x : beta * x);
    return (alpha + t) * (gamma * x);
  }
  T grad(T x) const {
    using std::tanh;
    T bx = unit_beta ? x : beta * x;
    T t = tanh(bx);
    T sech2 = T(1) - t * t;  // one tanh call total
    return gamma * (alpha + t + bx * sech2);
  }
  ValGrad<T> value_grad(T x) const {
    using std::tanh;
    T bx = unit_beta ? x : beta * x;
    T t = tanh(bx);
    T sech2 = T(1) - t * t;
    return {(alpha + t) * (gamma * x), gamma * (alpha + t + bx * sech2)};
  }
};

// Visits `fn` with the kernel for spec.kind, parameters folded in.
// Callers validate the ActivationSpec before dispatching.
template <class T, class Fn>
decltype(auto) dispatch(const ActivationSpec& spec, Fn&& fn) {
  switch (spec.kind) {
    case ActKind::Sigmoid:
      return fn(SigmoidK<T>{});
    case ActKind::Tanh:
      return fn(TanhK<T>{});
    case ActKind::ReLU:
      return fn(ReluK<T>{});
    case ActKind::LeakyReLU:
      return fn(LeakyReluK<T>{static_cast<T>(spec.leak_alpha)});
    case ActKind::ELU:
      return fn(EluK<T>{static_cast<T>(spec.elu_alpha)});
    case ActKind::Swish:
      return fn(SwishK<T>{static_cast<T>(spec.swish_rho), spec.swish_rho == 1.0});
    case ActKind::Mish:
      return fn(MishK<T>{});
    case ActKind::APTx:
      return fn(AptxK<T>{static_cast<T>(spec.aptx_alpha),
                         static_cast<T>(spec.aptx_beta),
                         static_cast<T>(spec.aptx_gamma),
                         spec.aptx_beta == 1.0});
  }
  throw ConfigError("unknown activation kind");
}

}  // namespace kernels

/// f(x) for the given activation. Throws ConfigError on an invalid spec and
/// DomainError on non-finite x.
double eval(const ActivationSpec& spec, double x);

/// f(x) and the analytic f'(x). Same error contract as eval.
ValueGrad eval_grad(const ActivationSpec& spec, double x);

/// Elementwise eval; bit-identical to calling eval per element.
/// A non-finite element raises DomainError naming the first bad index.
std::vector<double> eval_batch(const ActivationSpec& spec,
                               std::span<const double> xs);

void eval_batch_into(const ActivationSpec& spec, std::span<const double> xs,
                     std::span<double> out);
void eval_batch_into(const ActivationSpec& spec, std::span<const float> xs,
                     std::span<float> out);

/// Elementwise analytic derivative (no values), used by backprop.
void grad_batch_into(const ActivationSpec& spec, std::span<const double> xs,
                     std::span<double> grads);
void grad_batch_into(const ActivationSpec& spec, std::span<const float> xs,
                     std::span<float> grads);

/// Fused elementwise value + derivative sharing transcendental calls.
void eval_grad_batch_into(const ActivationSpec& spec,
                          std::span<const double> xs, std::span<double> values,
                          std::span<double> grads);
void eval_grad_batch_into(const ActivationSpec& spec,
                          std::span<const float> xs, std::span<float> values,
                          std::span<float> grads);

/// MISH'(x) from its closed form
///   e^x (4(x+1) + 4e^{2x} + e^{3x} + e^x(4x+6)) / (2e^x + e^{2x} + 2)^2
/// evaluated in an overflow-safe rearrangement. Kept separate from
/// eval_grad(mish) so the two routes can be cross-checked.
/// Requires |x| <= 200; throws DomainError otherwise.
double mish_grad_closed_form(double x);

}  // namespace aptx
