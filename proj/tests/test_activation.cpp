#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"

#include "aptx/activation.hpp"
#include "aptx/errors.hpp"

using namespace aptx;

namespace {

// High-precision reference values, frozen from an independent
// arbitrary-precision evaluation.
constexpr double kMishAt1 = 0.8650983882673103461162334;
constexpr double kMishAt2 = 1.9439589595339945203184810;
constexpr double kEluAtMinus2 = -1.7293294335267746162120012;  // alpha = 2
constexpr double kSigmoidAt1 = 0.7310585786300048792511592;
constexpr double kAptxAt1 = 0.8807970779778824440597291;  // (1,1,0.5)

}  // namespace

TEST_SUITE("activation") {

TEST_CASE("scalar values match frozen references") {
  CHECK(eval(ActivationSpec::sigmoid(), 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(eval(ActivationSpec::sigmoid(), 1.0) ==
        doctest::Approx(kSigmoidAt1).epsilon(1e-15));
  CHECK(eval(ActivationSpec::tanh(), 0.5) ==
        doctest::Approx(std::tanh(0.5)).epsilon(1e-15));
  CHECK(eval(ActivationSpec::relu(), -3.0) == 0.0);
  CHECK(eval(ActivationSpec::relu(), 3.0) == 3.0);
  CHECK(eval(ActivationSpec::leaky_relu(0.05), -2.0) ==
        doctest::Approx(-0.1).epsilon(1e-15));
  CHECK(eval(ActivationSpec::elu(2.0), -2.0) ==
        doctest::Approx(kEluAtMinus2).epsilon(1e-15));
  CHECK(eval(ActivationSpec::swish(1.0), 1.0) ==
        doctest::Approx(kSigmoidAt1).epsilon(1e-15));
  CHECK(eval(ActivationSpec::mish(), 1.0) ==
        doctest::Approx(kMishAt1).epsilon(1e-15));
  CHECK(eval(ActivationSpec::mish(), 2.0) ==
        doctest::Approx(kMishAt2).epsilon(1e-15));
  CHECK(eval(ActivationSpec::aptx(), 1.0) ==
        doctest::Approx(kAptxAt1).epsilon(1e-15));
}

TEST_CASE("negative branch owns x = 0") {
  CHECK(eval_grad(ActivationSpec::relu(), 0.0).grad == 0.0);
  CHECK(eval_grad(ActivationSpec::leaky_relu(0.05), 0.0).grad == 0.05);
  // d/dx alpha*(e^x - 1) at 0 is alpha
  CHECK(eval_grad(ActivationSpec::elu(2.0), 0.0).grad == 2.0);
}

TEST_CASE("derivative spot values") {
  CHECK(eval_grad(ActivationSpec::mish(), 0.0).grad ==
        doctest::Approx(0.6).epsilon(1e-15));
  CHECK(eval_grad(ActivationSpec::sigmoid(), 0.0).grad ==
        doctest::Approx(0.25).epsilon(1e-15));
  CHECK(eval_grad(ActivationSpec::tanh(), 0.0).grad == 1.0);
  // swish'(0) = sigma(0) + 0 = 0.5; aptx'(0) = gamma*(alpha + tanh 0 + 0)
  CHECK(eval_grad(ActivationSpec::swish(1.0), 0.0).grad == 0.5);
  CHECK(eval_grad(ActivationSpec::aptx(), 0.0).grad == 0.5);
}

TEST_CASE("swish is a parameterization of aptx") {
  for (double rho : {1.0, 2.0}) {
    ActivationSpec sw = ActivationSpec::swish(rho);
    ActivationSpec ap = ActivationSpec::aptx(1.0, rho / 2.0, 0.5);
    for (double x = -20.0; x <= 20.0; x += 0.37) {
      ValueGrad a = eval_grad(ap, x);
      ValueGrad s = eval_grad(sw, x);
      CHECK(std::abs(a.value - s.value) <= 1e-12);
      CHECK(std::abs(a.grad - s.grad) <= 1e-12);
    }
  }
}

TEST_CASE("no overflow up to |x| = 700") {
  const ActivationSpec specs[] = {
      ActivationSpec::sigmoid(),    ActivationSpec::tanh(),
      ActivationSpec::relu(),       ActivationSpec::leaky_relu(),
      ActivationSpec::elu(),        ActivationSpec::swish(),
      ActivationSpec::mish(),       ActivationSpec::aptx()};
  for (const ActivationSpec& spec : specs) {
    for (double x : {-700.0, -30.0, 30.0, 700.0}) {
      ValueGrad vg = eval_grad(spec, x);
      CAPTURE(spec.label());
      CAPTURE(x);
      CHECK(std::isfinite(vg.value));
      CHECK(std::isfinite(vg.grad));
    }
  }
  // saturated tails approach their limits without overflowing
  CHECK(eval(ActivationSpec::sigmoid(), 700.0) == 1.0);
  CHECK(eval(ActivationSpec::sigmoid(), -700.0) < 1e-300);
  CHECK(eval(ActivationSpec::sigmoid(), -700.0) > 0.0);
  CHECK(eval(ActivationSpec::mish(), 700.0) == 700.0);
  CHECK(eval(ActivationSpec::aptx(), 700.0) == 700.0);
}

TEST_CASE("mish closed-form derivative agrees with the kernel") {
  ActivationSpec mish = ActivationSpec::mish();
  for (double x = -20.0; x <= 20.0; x += 0.173) {
    double kernel = eval_grad(mish, x).grad;
    double closed = mish_grad_closed_form(x);
    CHECK(std::abs(kernel - closed) <= 1e-9);
  }
  CHECK(std::isfinite(mish_grad_closed_form(150.0)));
  CHECK(std::isfinite(mish_grad_closed_form(-150.0)));
  CHECK_THROWS_AS((void)mish_grad_closed_form(201.0), DomainError);
  CHECK_THROWS_AS((void)mish_grad_closed_form(-201.0), DomainError);
}

TEST_CASE("batch evaluation is bit-identical to scalar") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> dist(-25.0, 25.0);
  std::vector<double> xs(257);
  for (double& x : xs) x = dist(rng);

  const ActivationSpec specs[] = {ActivationSpec::aptx(),
                                  ActivationSpec::mish(),
                                  ActivationSpec::swish(2.0),
                                  ActivationSpec::elu()};
  for (const ActivationSpec& spec : specs) {
    std::vector<double> vals = eval_batch(spec, xs);
    std::vector<double> grads(xs.size());
    grad_batch_into(spec, xs, grads);
    std::vector<double> fused_v(xs.size()), fused_g(xs.size());
    eval_grad_batch_into(spec, xs, fused_v, fused_g);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      ValueGrad vg = eval_grad(spec, xs[i]);
      CHECK(vals[i] == vg.value);
      CHECK(grads[i] == vg.grad);
      CHECK(fused_v[i] == vg.value);
      CHECK(fused_g[i] == vg.grad);
      CHECK(eval(spec, xs[i]) == vg.value);
    }
  }
}

TEST_CASE("float batch path works") {
  std::vector<float> xs = {-3.5f, -1.0f, 0.0f, 0.5f, 2.0f, 19.0f};
  std::vector<float> vals(xs.size()), grads(xs.size());
  eval_batch_into(ActivationSpec::aptx(), xs, vals);
  grad_batch_into(ActivationSpec::aptx(), xs, grads);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    // float kernel tracks the double one to single precision
    CHECK(double(vals[i]) ==
          doctest::Approx(eval(ActivationSpec::aptx(), double(xs[i])))
              .epsilon(1e-6));
    CHECK(double(grads[i]) ==
          doctest::Approx(eval_grad(ActivationSpec::aptx(), double(xs[i])).grad)
              .epsilon(1e-5));
  }
}

TEST_CASE("irrelevant parameters do not change outputs") {
  ActivationSpec a = ActivationSpec::mish();
  ActivationSpec b = a;
  b.aptx_alpha = 9.0;
  b.swish_rho = 3.0;
  b.leak_alpha = 0.9;
  for (double x : {-4.0, 0.0, 1.3}) CHECK(eval(a, x) == eval(b, x));
}

TEST_CASE("validation rejects degenerate specs and bad input") {
  CHECK_THROWS_AS(ActivationSpec::aptx(1.0, 0.0, 0.5).validate(), ConfigError);
  CHECK_THROWS_AS(ActivationSpec::aptx(1.0, 1.0, 0.0).validate(), ConfigError);
  CHECK_THROWS_AS((void)eval(ActivationSpec::aptx(1.0, 0.0, 0.5), 1.0),
                  ConfigError);
  CHECK_THROWS_AS((void)eval(ActivationSpec::mish(),
                             std::numeric_limits<double>::quiet_NaN()),
                  DomainError);
  std::vector<double> xs = {1.0, std::numeric_limits<double>::infinity()};
  std::vector<double> out(2);
  CHECK_THROWS_AS(eval_batch_into(ActivationSpec::relu(), xs, out),
                  DomainError);
  std::vector<double> short_out(1);
  CHECK_THROWS_AS(eval_batch_into(ActivationSpec::relu(), xs, short_out),
                  ConfigError);
}

TEST_CASE("kind names round-trip") {
  for (ActKind kind : {ActKind::Sigmoid, ActKind::Tanh, ActKind::ReLU,
                       ActKind::LeakyReLU, ActKind::ELU, ActKind::Swish,
                       ActKind::Mish, ActKind::APTx}) {
    CHECK(act_kind_from_string(to_string(kind)) == kind);
  }
  CHECK(act_kind_from_string("LeakyReLU") == ActKind::LeakyReLU);
  CHECK(act_kind_from_string("leaky-relu") == ActKind::LeakyReLU);
  CHECK_THROWS_AS((void)act_kind_from_string("gelu"), ConfigError);
  CHECK(ActivationSpec::aptx().label() == "aptx(alpha=1,beta=1,gamma=0.5)");
}

}  // TEST_SUITE
