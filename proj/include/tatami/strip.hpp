#pragma once

// Counting and CAT generation of the non-isomorphic tatami coverings of the
// two-way infinite height-r strip with exactly n structural features.
// Features carry a vertical/horizontal bond on each side; sequences are
// built left to right, extending only with features whose left bond matches
// the running bond, which is exactly the recurrence
//   V_r(n) = 4(r-1) V_r(n-1) + 2 H_r(n-1),   H_r(n) = 2 V_r(n-1).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "tatami/bigint.hpp"
#include "tatami/grid.hpp"
#include "tatami/opcount.hpp"

namespace tatami {

enum class Bond { Vertical, Horizontal };

enum class FeatureKind {
  VBidimer,
  HBidimer,
  CwVortex,
  CcwVortex,
  VeeTop,
  VeeBottom,
  LonerNE,
  LonerNW,
  LonerSE,
  LonerSW,
};

struct Feature {
  FeatureKind kind = FeatureKind::VBidimer;
  int position = 0;  // 1..r-1 for bidimers, 1..r-2 for vortices, 0 otherwise

  friend bool operator==(const Feature& a, const Feature& b) {
    return a.kind == b.kind && a.position == b.position;
  }
};

Bond feature_left_bond(FeatureKind kind);
Bond feature_right_bond(FeatureKind kind);

// All 4r features of the height-r strip in pinned order (kind-major,
// position-minor); the index in this list is the feature's code.
std::vector<Feature> feature_alphabet(int r);
int feature_code(const Feature& f, int r);

struct StripCovering {
  int r = 2;
  Bond leftmost_bond = Bond::Vertical;
  std::vector<Feature> features;  // left to right
};

// Checks r, feature parameters, and the bond adjacency chain.
void validate_strip(const StripCovering& s);

struct StripCounts {
  BigUint vertical;    // V_r(n)
  BigUint horizontal;  // H_r(n)
  BigUint total;       // R(r,n)
};

StripCounts count_strip(std::int64_t r, std::int64_t n);

// Exhaustive filter over all (4r)^n raw code sequences; guard at 10^7.
BigUint brute_filter_count(std::int64_t r, std::int64_t n);

// Height-r text schematic: one glyph column per feature, bond regions
// filled with | (vertical) or = (horizontal), `margin` fill columns at each
// end and between features.
std::string render_strip_schematic(const StripCovering& s, int margin);

// "bond:V ; 3,0,17" with codes from feature_alphabet; "-" for no features.
std::string format_strip_line(const StripCovering& s);

// Visits every covering with exactly n features once (leftmost bond
// Vertical first, then Horizontal; candidates in code order).
template <class Visit>
std::uint64_t gen_strip(std::int64_t r, std::int64_t n, Visit&& visit, OpCounter* ops = nullptr) {
  if (r < 2) throw std::invalid_argument("gen_strip: r must be >= 2");
  if (n < 0) throw std::invalid_argument("gen_strip: n must be >= 0");
  const std::vector<Feature> alphabet = feature_alphabet(static_cast<int>(r));
  std::vector<Feature> from_v, from_h;
  for (const Feature& f : alphabet) {
    (feature_left_bond(f.kind) == Bond::Vertical ? from_v : from_h).push_back(f);
  }
  if (ops) ops->preprocessing += alphabet.size();

  std::uint64_t count = 0;
  StripCovering cur;
  cur.r = static_cast<int>(r);
  cur.features.reserve(static_cast<std::size_t>(n));

  auto dfs = [&](auto&& self, Bond bond, std::int64_t depth) -> void {
    if (ops) ++ops->steps;
    if (depth == n) {
      if (ops) ++ops->steps;
      ++count;
      visit(static_cast<const StripCovering&>(cur));
      return;
    }
    const std::vector<Feature>& cands = bond == Bond::Vertical ? from_v : from_h;
    for (const Feature& f : cands) {
      if (ops) ++ops->steps;
      cur.features.push_back(f);
      self(self, feature_right_bond(f.kind), depth + 1);
      cur.features.pop_back();
    }
  };

  for (Bond b : {Bond::Vertical, Bond::Horizontal}) {
    if (ops) ++ops->steps;
    cur.leftmost_bond = b;
    dfs(dfs, b, 0);
  }
  return count;
}

// Exact step/output totals of gen_strip without enumerating.
struct StripCost {
  BigUint steps;
  BigUint outputs;
  BigUint preprocessing;
};
StripCost strip_generation_cost(std::int64_t r, std::int64_t n);

}  // namespace tatami
