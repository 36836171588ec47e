#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aptx/activation.hpp"

namespace aptx {

struct CheckResult {
  std::string name;
  bool passed = false;
  double measured = 0.0;   // headline number for the check
  double threshold = 0.0;  // what it was held against
  std::string detail;
};

struct VerifyOptions {
  /// Substring filter on check names; empty runs the whole suite.
  std::string filter;
  /// Fault injection: adds inject_grad_delta to every analytic derivative of
  /// the given kind as seen by the suite. Exists so the suite itself can be
  /// tested — a perturbed derivative must produce a named failure.
  std::optional<ActKind> inject_grad_kind;
  double inject_grad_delta = 0.0;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
  std::vector<std::string> failed_names() const;
};

/// Runs the cross-module invariant suite: derivative-vs-finite-difference
/// consistency for every kind, the closed-form MISH derivative equivalence,
/// the SWISH generation identity, domain-split dominance against MISH,
/// bounded-below minima, static cost dominance, and structural sanity
/// checks. Pure computation; writes nothing.
VerifyReport run_verify(const VerifyOptions& opts = {});

}  // namespace aptx
