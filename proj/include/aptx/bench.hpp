#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "aptx/activation.hpp"

namespace aptx {

enum class BenchMode { Forward, Derivative, Fused };
enum class Precision { Bits32, Bits64 };

const char* to_string(BenchMode mode);
const char* to_string(Precision precision);
BenchMode bench_mode_from_string(const std::string& name);    // ConfigError
Precision precision_from_string(const std::string& name);     // ConfigError

struct BenchOptions {
  std::size_t array_len = 10'000'000;
  int reps = 11;    // timed repetitions, median taken; >= 11
  int warmup = 3;   // untimed repetitions before measuring; >= 3
  Precision precision = Precision::Bits32;
  std::uint64_t seed = 42;  // input data: uniform [-5, 5]
  int workers = 1;  // > 1 partitions the array; kept at 1 for timing claims
  double min_rep_seconds = 1e-6;  // below this the timer can't be trusted
};

struct ThroughputReport {
  ActivationSpec spec;
  BenchMode mode = BenchMode::Forward;
  Precision precision = Precision::Bits32;
  std::size_t array_len = 0;
  int reps = 0;
  int workers = 1;
  double median_rep_seconds = 0.0;
  double elements_per_second = 0.0;  // array_len / median rep time
  // Fixed-order pairwise sum of the outputs: identical across reps (the
  // compiler cannot elide the work) and across worker partitionings.
  double checksum = 0.0;
  // Filled by bench_suite when a Mish row with the same mode/precision is
  // present; NaN otherwise.
  double relative_to_mish = std::numeric_limits<double>::quiet_NaN();
};

/// Times elementwise evaluation over a seeded array. Throws ConfigError on
/// out-of-contract options and BenchmarkError when reps run too fast for
/// the clock (use a larger array_len) or when rep checksums disagree.
ThroughputReport bench_throughput(const ActivationSpec& spec, BenchMode mode,
                                  const BenchOptions& opts = {});

/// bench_throughput for every spec × mode on identical input data, with
/// relative_to_mish filled in from the Mish rows.
std::vector<ThroughputReport> bench_suite(
    const std::vector<ActivationSpec>& specs,
    const std::vector<BenchMode>& modes, const BenchOptions& opts = {});

/// Plain-text table: kind, mode, transcendental ops/element, elements/sec,
/// ratio vs mish.
std::string format_bench_table(const std::vector<ThroughputReport>& rows);

}  // namespace aptx
