#pragma once

#include "aptx/activation.hpp"

namespace aptx {

/// Arithmetic tally for one scalar kernel evaluation. Additions and
/// subtractions share one bucket; log1p counts as log+add and expm1 as
/// exp+add; sign flips are free.
struct OpCounts {
  int tanh_calls = 0;
  int exp_calls = 0;
  int log_calls = 0;
  int divisions = 0;
  int multiplications = 0;
  int additions = 0;
  int comparisons = 0;

  int transcendental_total() const { return tanh_calls + exp_calls + log_calls; }
};

/// Static per-element cost of the shipped kernels. Counts come from running
/// the real expression trees on a counting scalar — not from a hand-kept
/// table — so they cannot drift from the source. Each kernel is probed at
/// x = +0.5 and x = -0.5 (both sides of every branch point) and the
/// per-field maximum is reported.
struct CostProfile {
  ActivationSpec spec;
  OpCounts forward;
  OpCounts derivative;
  OpCounts fused;  // value + derivative sharing transcendental calls
};

CostProfile count_ops(const ActivationSpec& spec);

}  // namespace aptx
