#pragma once

// Instrumented generator runs for the constant-amortised-time certificates.
// Step counts are elementary-operation totals (never wall time), so every
// record is reproducible; the analytic variants evaluate the exact cost
// models instead of enumerating.

#include <cstdint>
#include <string>

#include "tatami/bigint.hpp"

namespace tatami {

struct BenchReport {
  std::string label;
  BigUint steps;
  BigUint outputs;
  BigUint preprocessing;
};

double bench_ratio(const BenchReport& report);
std::string format_report(const BenchReport& report);

BenchReport bench_subsets(std::int64_t n, std::int64_t k, bool analytic = false);
BenchReport bench_square(std::int64_t n, std::int64_t k, bool analytic = false);
BenchReport bench_strip(std::int64_t r, std::int64_t n, bool analytic = false);

// Largest per-k steps/outputs ratio over every k with nonempty output.
double max_ratio_subsets(std::int64_t n, bool analytic = false);
double max_ratio_square(std::int64_t n, bool analytic = false);

}  // namespace tatami
