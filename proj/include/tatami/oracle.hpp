#pragma once

// Brute-force enumeration of monomino-domino tatami coverings of small
// rectangles by row-major backtracking with incremental "no four tiles
// meet" pruning. Ground truth for the structured generators.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "tatami/grid.hpp"

namespace tatami {

enum class Classify { None, VerticalCount, HorizontalCount };

struct OracleQuery {
  int rows = 0;
  int cols = 0;
  std::optional<int> monominoes;       // exact monomino count when set
  bool top_corners = false;            // force monominoes at (1,1) and (1,cols)
  Classify classify = Classify::None;
  bool ignore_guard = false;           // override the 144-cell safety guard
};

using Histogram = std::map<std::int64_t, std::uint64_t>;

// Visits every covering matching the query exactly once; returns counts
// keyed by the classify statistic (key 0 holds the total for Classify::None).
Histogram enumerate_coverings(const OracleQuery& q,
                              const std::function<void(const Covering&)>& visit = {});

// T(n) convenience wrapper: n x n, n monominoes, top-corner monominoes,
// classified by vertical count for even n and horizontal count for odd n.
std::uint64_t oracle_vd(int n, int k);
Histogram oracle_vd_histogram(int n);

}  // namespace tatami
