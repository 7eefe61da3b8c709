#include "tatami/bench.hpp"

#include <cstdio>

#include "tatami/ksum.hpp"
#include "tatami/opcount.hpp"
#include "tatami/square.hpp"
#include "tatami/strip.hpp"

namespace tatami {

double bench_ratio(const BenchReport& report) {
  if (report.outputs.is_zero()) return 0.0;
  return report.steps.to_double() / report.outputs.to_double();
}

std::string format_report(const BenchReport& report) {
  char ratio[32];
  if (report.outputs.is_zero()) {
    std::snprintf(ratio, sizeof(ratio), "inf");
  } else {
    std::snprintf(ratio, sizeof(ratio), "%.4f", bench_ratio(report));
  }
  return report.label + " steps=" + report.steps.to_string() +
         " outputs=" + report.outputs.to_string() +
         " preprocessing=" + report.preprocessing.to_string() + " ratio=" + ratio;
}

BenchReport bench_subsets(std::int64_t n, std::int64_t k, bool analytic) {
  BenchReport report;
  report.label = "subsets(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
  if (analytic) {
    KsumCostModel model;
    KsumCost cost = model.gen_cost(n, k);
    report.steps = cost.steps;
    report.outputs = cost.outputs;
    report.preprocessing = BigUint(static_cast<std::uint64_t>(n + 1));
    return report;
  }
  OpCounter ops;
  C4State st = init_c4(n);
  ops.preprocessing += static_cast<std::uint64_t>(n + 1);
  const std::uint64_t count = gen_ksum(st, n, k, [](SubsetView) {}, &ops);
  report.steps = BigUint(ops.steps);
  report.outputs = BigUint(count);
  report.preprocessing = BigUint(ops.preprocessing);
  return report;
}

BenchReport bench_square(std::int64_t n, std::int64_t k, bool analytic) {
  BenchReport report;
  report.label = "square(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
  if (analytic) {
    VhCost cost = vh_generation_cost(n, k);
    report.steps = cost.steps;
    report.outputs = cost.outputs;
    report.preprocessing = cost.preprocessing;
    return report;
  }
  OpCounter ops;
  const std::uint64_t count = gen_vh(n, k, [](const VHElementView&) {}, &ops);
  report.steps = BigUint(ops.steps);
  report.outputs = BigUint(count);
  report.preprocessing = BigUint(ops.preprocessing);
  return report;
}

BenchReport bench_strip(std::int64_t r, std::int64_t n, bool analytic) {
  BenchReport report;
  report.label = "strip(r=" + std::to_string(r) + ",n=" + std::to_string(n) + ")";
  if (analytic) {
    StripCost cost = strip_generation_cost(r, n);
    report.steps = cost.steps;
    report.outputs = cost.outputs;
    report.preprocessing = cost.preprocessing;
    return report;
  }
  OpCounter ops;
  const std::uint64_t count = gen_strip(r, n, [](const StripCovering&) {}, &ops);
  report.steps = BigUint(ops.steps);
  report.outputs = BigUint(count);
  report.preprocessing = BigUint(ops.preprocessing);
  return report;
}

double max_ratio_subsets(std::int64_t n, bool analytic) {
  double max_ratio = 0.0;
  for (std::int64_t k = 0; k <= triangle(n); ++k) {
    BenchReport report = bench_subsets(n, k, analytic);
    max_ratio = std::max(max_ratio, bench_ratio(report));
  }
  return max_ratio;
}

double max_ratio_square(std::int64_t n, bool analytic) {
  double max_ratio = 0.0;
  for (std::int64_t k = 0; k <= triangle(n - 2); ++k) {
    BenchReport report = bench_square(n, k, analytic);
    max_ratio = std::max(max_ratio, bench_ratio(report));
  }
  return max_ratio;
}

}  // namespace tatami
