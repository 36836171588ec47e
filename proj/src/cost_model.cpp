#include "aptx/cost_model.hpp"

#include <algorithm>
#include <cmath>

namespace aptx {
namespace {

thread_local OpCounts* g_tally = nullptr;

// Double wrapper whose arithmetic reports into g_tally. The activation
// kernels are templated on the scalar type and wrap every literal in T(...),
// so this type needs no mixed double/Counted operators.
struct Counted {
  double v;
  explicit Counted(double x = 0.0) : v(x) {}
};

inline Counted operator+(Counted a, Counted b) {
  if (g_tally) ++g_tally->additions;
  return Counted(a.v + b.v);
}
inline Counted operator-(Counted a, Counted b) {
  if (g_tally) ++g_tally->additions;
  return Counted(a.v - b.v);
}
inline Counted operator*(Counted a, Counted b) {
  if (g_tally) ++g_tally->multiplications;
  return Counted(a.v * b.v);
}
inline Counted operator/(Counted a, Counted b) {
  if (g_tally) ++g_tally->divisions;
  return Counted(a.v / b.v);
}
inline Counted operator-(Counted a) { return Counted(-a.v); }  // sign flip: free

inline bool operator>(Counted a, Counted b) {
  if (g_tally) ++g_tally->comparisons;
  return a.v > b.v;
}
inline bool operator>=(Counted a, Counted b) {
  if (g_tally) ++g_tally->comparisons;
  return a.v >= b.v;
}
inline bool operator<(Counted a, Counted b) {
  if (g_tally) ++g_tally->comparisons;
  return a.v < b.v;
}
inline bool operator<=(Counted a, Counted b) {
  if (g_tally) ++g_tally->comparisons;
  return a.v <= b.v;
}

inline Counted tanh(Counted a) {
  if (g_tally) ++g_tally->tanh_calls;
  return Counted(std::tanh(a.v));
}
inline Counted exp(Counted a) {
  if (g_tally) ++g_tally->exp_calls;
  return Counted(std::exp(a.v));
}
inline Counted log1p(Counted a) {
  if (g_tally) {
    ++g_tally->log_calls;
    ++g_tally->additions;
  }
  return Counted(std::log1p(a.v));
}
inline Counted expm1(Counted a) {
  if (g_tally) {
    ++g_tally->exp_calls;
    ++g_tally->additions;
  }
  return Counted(std::expm1(a.v));
}

struct TallyScope {
  explicit TallyScope(OpCounts* t) { g_tally = t; }
  ~TallyScope() { g_tally = nullptr; }
};

OpCounts field_max(const OpCounts& a, const OpCounts& b) {
  OpCounts m;
  m.tanh_calls = std::max(a.tanh_calls, b.tanh_calls);
  m.exp_calls = std::max(a.exp_calls, b.exp_calls);
  m.log_calls = std::max(a.log_calls, b.log_calls);
  m.divisions = std::max(a.divisions, b.divisions);
  m.multiplications = std::max(a.multiplications, b.multiplications);
  m.additions = std::max(a.additions, b.additions);
  m.comparisons = std::max(a.comparisons, b.comparisons);
  return m;
}

template <class Probe>
OpCounts counted_probe(const ActivationSpec& spec, Probe&& probe) {
  OpCounts worst;
  for (double x : {0.5, -0.5}) {
    OpCounts tally;
    TallyScope scope(&tally);
    kernels::dispatch<Counted>(spec,
                               [&](auto k) { probe(k, Counted(x)); });
    worst = field_max(worst, tally);
  }
  return worst;
}

}  // namespace

CostProfile count_ops(const ActivationSpec& spec) {
  spec.validate();
  CostProfile p;
  p.spec = spec;
  p.forward = counted_probe(spec, [](auto k, Counted x) { (void)k.value(x); });
  p.derivative = counted_probe(spec, [](auto k, Counted x) { (void)k.grad(x); });
  p.fused =
      counted_probe(spec, [](auto k, Counted x) { (void)k.value_grad(x); });
  return p;
}

}  // namespace aptx
