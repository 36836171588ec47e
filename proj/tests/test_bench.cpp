#include <cmath>

#include "doctest.h"

#include "aptx/bench.hpp"
#include "aptx/errors.hpp"

using namespace aptx;

namespace {

BenchOptions quick_options() {
  BenchOptions opts;
  opts.array_len = 10000;  // smallest allowed; keeps the suite fast
  opts.reps = 11;
  opts.warmup = 3;
  opts.seed = 99;
  return opts;
}

}  // namespace

TEST_SUITE("bench") {

TEST_CASE("throughput report is sane and deterministic") {
  BenchOptions opts = quick_options();
  ThroughputReport a =
      bench_throughput(ActivationSpec::aptx(), BenchMode::Forward, opts);
  CHECK(a.array_len == opts.array_len);
  CHECK(a.reps == opts.reps);
  CHECK(a.median_rep_seconds > 0.0);
  CHECK(a.elements_per_second > 0.0);
  CHECK(a.checksum != 0);

  // same seed, same work -> same data checksum (timings will differ)
  ThroughputReport b =
      bench_throughput(ActivationSpec::aptx(), BenchMode::Forward, opts);
  CHECK(b.checksum == a.checksum);

  opts.seed = 100;
  ThroughputReport c =
      bench_throughput(ActivationSpec::aptx(), BenchMode::Forward, opts);
  CHECK(c.checksum != a.checksum);
}

TEST_CASE("all modes and precisions run") {
  BenchOptions opts = quick_options();
  for (BenchMode mode :
       {BenchMode::Forward, BenchMode::Derivative, BenchMode::Fused}) {
    for (Precision prec : {Precision::Bits32, Precision::Bits64}) {
      opts.precision = prec;
      ThroughputReport r =
          bench_throughput(ActivationSpec::mish(), mode, opts);
      CAPTURE(to_string(mode));
      CAPTURE(to_string(prec));
      CHECK(std::isfinite(r.elements_per_second));
      CHECK(r.checksum != 0);
    }
  }
}

TEST_CASE("worker count does not change the computed data") {
  BenchOptions one = quick_options();
  BenchOptions four = quick_options();
  four.workers = 4;
  ThroughputReport r1 =
      bench_throughput(ActivationSpec::aptx(), BenchMode::Fused, one);
  ThroughputReport r4 =
      bench_throughput(ActivationSpec::aptx(), BenchMode::Fused, four);
  CHECK(r1.checksum == r4.checksum);
}

TEST_CASE("suite fills in the mish-relative ratio") {
  BenchOptions opts = quick_options();
  std::vector<ThroughputReport> rows = bench_suite(
      {ActivationSpec::aptx(), ActivationSpec::mish()}, {BenchMode::Forward},
      opts);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].spec.kind == ActKind::APTx);
  CHECK(rows[0].relative_to_mish > 0.0);
  CHECK(rows[1].relative_to_mish == doctest::Approx(1.0));
  CHECK(!format_bench_table(rows).empty());
}

TEST_CASE("options are validated") {
  BenchOptions opts = quick_options();
  opts.array_len = 9999;
  CHECK_THROWS_AS(
      (void)bench_throughput(ActivationSpec::aptx(), BenchMode::Forward, opts),
      ConfigError);
  opts = quick_options();
  opts.reps = 10;
  CHECK_THROWS_AS(
      (void)bench_throughput(ActivationSpec::aptx(), BenchMode::Forward, opts),
      ConfigError);
  opts = quick_options();
  opts.warmup = 2;
  CHECK_THROWS_AS(
      (void)bench_throughput(ActivationSpec::aptx(), BenchMode::Forward, opts),
      ConfigError);
  opts = quick_options();
  opts.workers = 0;
  CHECK_THROWS_AS(
      (void)bench_throughput(ActivationSpec::aptx(), BenchMode::Forward, opts),
      ConfigError);
}

TEST_CASE("reps too fast for the clock raise a benchmark error") {
  BenchOptions opts = quick_options();
  opts.min_rep_seconds = 1e9;  // no rep can take this long
  CHECK_THROWS_AS(
      (void)bench_throughput(ActivationSpec::relu(), BenchMode::Forward, opts),
      BenchmarkError);
}

TEST_CASE("mode and precision names parse") {
  CHECK(bench_mode_from_string("forward") == BenchMode::Forward);
  CHECK(bench_mode_from_string("derivative") == BenchMode::Derivative);
  CHECK(bench_mode_from_string("fused") == BenchMode::Fused);
  CHECK_THROWS_AS((void)bench_mode_from_string("backward"), ConfigError);
  CHECK(precision_from_string("f32") == Precision::Bits32);
  CHECK(precision_from_string("64") == Precision::Bits64);
  CHECK_THROWS_AS((void)precision_from_string("f16"), ConfigError);
}

}  // TEST_SUITE
