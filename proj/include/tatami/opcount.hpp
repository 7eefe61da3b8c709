#pragma once

#include <cstdint>

namespace tatami {

// Elementary-operation counters backing the constant-amortised-time
// certificates. Generators bump `steps` (traversal work) and
// `preprocessing` (one-time setup); the caller records `outputs` from the
// returned visit count. Counts are deterministic functions of the input,
// never wall time.
struct OpCounter {
  std::uint64_t steps = 0;
  std::uint64_t outputs = 0;
  std::uint64_t preprocessing = 0;
};

}  // namespace tatami
