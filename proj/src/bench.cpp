#include "aptx/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <thread>

#include "aptx/cost_model.hpp"
#include "aptx/errors.hpp"
#include "aptx/numeric.hpp"

namespace aptx {

const char* to_string(BenchMode mode) {
  switch (mode) {
    case BenchMode::Forward:
      return "forward";
    case BenchMode::Derivative:
      return "derivative";
    case BenchMode::Fused:
      return "fused";
  }
  return "?";
}

const char* to_string(Precision precision) {
  return precision == Precision::Bits32 ? "f32" : "f64";
}

BenchMode bench_mode_from_string(const std::string& name) {
  if (name == "forward") return BenchMode::Forward;
  if (name == "derivative") return BenchMode::Derivative;
  if (name == "fused") return BenchMode::Fused;
  throw ConfigError("unknown bench mode '" + name +
                    "' (forward|derivative|fused)");
}

Precision precision_from_string(const std::string& name) {
  if (name == "f32" || name == "32") return Precision::Bits32;
  if (name == "f64" || name == "64") return Precision::Bits64;
  throw ConfigError("unknown precision '" + name + "' (f32|f64)");
}

namespace {

void validate_options(const BenchOptions& opts) {
  if (opts.array_len < 10'000)
    throw ConfigError("bench: array_len must be at least 10000");
  if (opts.reps < 11) throw ConfigError("bench: reps must be at least 11");
  if (opts.warmup < 3) throw ConfigError("bench: warmup must be at least 3");
  if (opts.workers < 1) throw ConfigError("bench: workers must be at least 1");
}

std::vector<double> seeded_input(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-5.0, 5.0);
  std::vector<double> xs(n);
  for (double& x : xs) x = dist(rng);
  return xs;
}

// One full pass over the array, optionally split across workers.
template <class T>
void run_pass(const ActivationSpec& spec, BenchMode mode,
              std::span<const T> xs, std::span<T> out, std::span<T> out2,
              int workers) {
  auto slice = [&](int w, int nw, auto&& body) {
    std::size_t begin = xs.size() * std::size_t(w) / std::size_t(nw);
    std::size_t end = xs.size() * std::size_t(w + 1) / std::size_t(nw);
    body(begin, end - begin);
  };
  auto work = [&](std::size_t begin, std::size_t count) {
    auto in = xs.subspan(begin, count);
    switch (mode) {
      case BenchMode::Forward:
        eval_batch_into(spec, in, out.subspan(begin, count));
        break;
      case BenchMode::Derivative:
        grad_batch_into(spec, in, out.subspan(begin, count));
        break;
      case BenchMode::Fused:
        eval_grad_batch_into(spec, in, out.subspan(begin, count),
                             out2.subspan(begin, count));
        break;
    }
  };
  if (workers == 1) {
    work(0, xs.size());
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(std::size_t(workers));
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] { slice(w, workers, work); });
  for (auto& t : pool) t.join();
}

template <class T>
ThroughputReport bench_typed(const ActivationSpec& spec, BenchMode mode,
                             const BenchOptions& opts,
                             const std::vector<double>& input64) {
  std::vector<T> xs(input64.size());
  std::transform(input64.begin(), input64.end(), xs.begin(),
                 [](double v) { return static_cast<T>(v); });
  std::vector<T> out(xs.size());
  std::vector<T> out2(mode == BenchMode::Fused ? xs.size() : 0);

  ThroughputReport rep;
  rep.spec = spec;
  rep.mode = mode;
  rep.precision = opts.precision;
  rep.array_len = xs.size();
  rep.reps = opts.reps;
  rep.workers = opts.workers;

  for (int i = 0; i < opts.warmup; ++i)
    run_pass<T>(spec, mode, xs, out, out2, opts.workers);

  using clock = std::chrono::steady_clock;
  std::vector<double> times(std::size_t(opts.reps));
  bool have_checksum = false;
  for (int r = 0; r < opts.reps; ++r) {
    auto t0 = clock::now();
    run_pass<T>(spec, mode, xs, out, out2, opts.workers);
    auto t1 = clock::now();
    times[std::size_t(r)] = std::chrono::duration<double>(t1 - t0).count();

    double sum = pairwise_sum(std::span<const T>(out));
    if (mode == BenchMode::Fused) sum += pairwise_sum(std::span<const T>(out2));
    if (!have_checksum) {
      rep.checksum = sum;
      have_checksum = true;
    } else if (sum != rep.checksum) {
      throw BenchmarkError("bench: output checksum changed between reps");
    }
  }

  std::sort(times.begin(), times.end());
  rep.median_rep_seconds = times[times.size() / 2];
  if (rep.median_rep_seconds < opts.min_rep_seconds)
    throw BenchmarkError(
        "bench: median rep finished faster than the clock can resolve; "
        "increase array_len");
  rep.elements_per_second =
      static_cast<double>(rep.array_len) / rep.median_rep_seconds;
  return rep;
}

}  // namespace

ThroughputReport bench_throughput(const ActivationSpec& spec, BenchMode mode,
                                  const BenchOptions& opts) {
  spec.validate();
  validate_options(opts);
  std::vector<double> input = seeded_input(opts.array_len, opts.seed);
  return opts.precision == Precision::Bits32
             ? bench_typed<float>(spec, mode, opts, input)
             : bench_typed<double>(spec, mode, opts, input);
}

std::vector<ThroughputReport> bench_suite(
    const std::vector<ActivationSpec>& specs,
    const std::vector<BenchMode>& modes, const BenchOptions& opts) {
  std::vector<ThroughputReport> rows;
  rows.reserve(specs.size() * modes.size());
  for (const ActivationSpec& spec : specs)
    for (BenchMode mode : modes)
      rows.push_back(bench_throughput(spec, mode, opts));

  for (ThroughputReport& row : rows) {
    for (const ThroughputReport& mish : rows) {
      if (mish.spec.kind == ActKind::Mish && mish.mode == row.mode &&
          mish.precision == row.precision) {
        row.relative_to_mish =
            row.elements_per_second / mish.elements_per_second;
        break;
      }
    }
  }
  return rows;
}

std::string format_bench_table(const std::vector<ThroughputReport>& rows) {
  std::string table;
  char line[256];
  std::snprintf(line, sizeof line, "%-30s %-10s %-4s %7s %14s %10s\n",
                "kind", "mode", "prec", "transc", "elems/sec", "vs mish");
  table += line;
  table += std::string(80, '-') + "\n";
  for (const ThroughputReport& r : rows) {
    CostProfile cost = count_ops(r.spec);
    const OpCounts& ops = r.mode == BenchMode::Forward     ? cost.forward
                          : r.mode == BenchMode::Derivative ? cost.derivative
                                                            : cost.fused;
    char ratio[32];
    if (std::isfinite(r.relative_to_mish))
      std::snprintf(ratio, sizeof ratio, "%10.3f", r.relative_to_mish);
    else
      std::snprintf(ratio, sizeof ratio, "%10s", "-");
    std::snprintf(line, sizeof line, "%-30s %-10s %-4s %7d %14.4g %s\n",
                  r.spec.label().c_str(), to_string(r.mode),
                  to_string(r.precision), ops.transcendental_total(),
                  r.elements_per_second, ratio);
    table += line;
  }
  return table;
}

}  // namespace aptx
