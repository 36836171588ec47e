#include "doctest.h"

#include "aptx/activation.hpp"
#include "aptx/cost_model.hpp"

using namespace aptx;

TEST_SUITE("cost_model") {

TEST_CASE("aptx kernel op counts") {
  CostProfile p = count_ops(ActivationSpec::aptx());
  // (alpha + tanh(x)) * gamma*x with the beta=1 multiply folded away
  CHECK(p.forward.tanh_calls == 1);
  CHECK(p.forward.exp_calls == 0);
  CHECK(p.forward.log_calls == 0);
  CHECK(p.forward.divisions == 0);
  CHECK(p.forward.multiplications == 2);
  CHECK(p.forward.additions == 1);
  CHECK(p.forward.comparisons == 0);
  CHECK(p.forward.transcendental_total() == 1);

  CHECK(p.derivative.tanh_calls == 1);
  CHECK(p.derivative.transcendental_total() == 1);
  CHECK(p.derivative.multiplications == 3);
  CHECK(p.derivative.additions == 3);

  // fused shares the single tanh between value and gradient
  CHECK(p.fused.transcendental_total() == 1);
  CHECK(p.fused.tanh_calls == 1);
}

TEST_CASE("non-unit beta costs one extra multiply per expression") {
  CostProfile p = count_ops(ActivationSpec::aptx(1.0, 0.5, 0.5));
  CHECK(p.forward.tanh_calls == 1);
  CHECK(p.forward.multiplications == 3);
  CHECK(p.forward.transcendental_total() == 1);
}

TEST_CASE("mish kernel op counts") {
  CostProfile p = count_ops(ActivationSpec::mish());
  // x * tanh(softplus(x)); softplus = log1p(exp(x)) plus a branch compare
  CHECK(p.forward.tanh_calls == 1);
  CHECK(p.forward.exp_calls == 1);
  CHECK(p.forward.log_calls == 1);
  CHECK(p.forward.multiplications == 1);
  CHECK(p.forward.additions == 1);
  CHECK(p.forward.comparisons == 1);
  CHECK(p.forward.transcendental_total() == 3);

  // derivative adds a sigmoid evaluation: one more exp and a divide
  CHECK(p.derivative.transcendental_total() == 4);
  CHECK(p.derivative.exp_calls == 2);
  CHECK(p.derivative.divisions == 1);
}

TEST_CASE("swish and relu op counts") {
  CostProfile sw = count_ops(ActivationSpec::swish());
  CHECK(sw.forward.exp_calls == 1);
  CHECK(sw.forward.divisions == 1);
  CHECK(sw.forward.additions == 1);
  CHECK(sw.forward.multiplications == 1);
  CHECK(sw.forward.comparisons == 1);
  CHECK(sw.forward.transcendental_total() == 1);

  CostProfile re = count_ops(ActivationSpec::relu());
  CHECK(re.forward.comparisons == 1);
  CHECK(re.forward.transcendental_total() == 0);
  CHECK(re.forward.multiplications == 0);
  CHECK(re.forward.additions == 0);
  CHECK(re.derivative.comparisons == 1);
}

TEST_CASE("aptx needs fewer transcendentals than mish") {
  CostProfile ap = count_ops(ActivationSpec::aptx());
  CostProfile mi = count_ops(ActivationSpec::mish());
  CHECK(ap.forward.transcendental_total() <
        mi.forward.transcendental_total());
  CHECK(ap.derivative.transcendental_total() <
        mi.derivative.transcendental_total());
  CHECK(ap.fused.transcendental_total() < mi.fused.transcendental_total());
}

TEST_CASE("counts are deterministic") {
  CostProfile a = count_ops(ActivationSpec::elu());
  CostProfile b = count_ops(ActivationSpec::elu());
  CHECK(a.forward.exp_calls == b.forward.exp_calls);
  CHECK(a.forward.additions == b.forward.additions);
  CHECK(a.derivative.multiplications == b.derivative.multiplications);
  // elu's negative branch uses expm1, counted as exp + add
  CHECK(a.forward.exp_calls == 1);
  CHECK(a.forward.comparisons == 1);
}

}  // TEST_SUITE
