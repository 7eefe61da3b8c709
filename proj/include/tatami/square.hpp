#pragma once

// Generation, counting, and tile-level realisation of VH(n,k), the
// symbolic sets in bijection with the n x n tatami coverings that carry the
// maximum n monominoes (top corners occupied) and exactly k vertical
// dominoes when n is even, or k horizontal dominoes when n is odd.
//
// An element is either Dominant (one strictly largest flipped diagonal of
// n-i-1 dominoes together with smaller same-orientation companions from
// {1..n-i-2} and perpendicular diagonals from {1..i-1}) or Balanced, a
// pair of size sets bounded by floor((n-2)/2) where neither orientation
// dominates. Subset enumeration runs over two linked-array states whose
// active n is shifted by +-1 between adjacent union terms, so preprocessing
// stays O(n) for the whole traversal.

#include <cstdint>
#include <string>
#include <vector>

#include "tatami/bigint.hpp"
#include "tatami/grid.hpp"
#include "tatami/ksum.hpp"
#include "tatami/opcount.hpp"

namespace tatami {

enum class Side { Left, Right };

struct VHElement {
  bool balanced = false;
  Side side = Side::Left;           // dominant only: which factor order of the union
  std::int64_t diag_index = 0;      // dominant only: i, with largest = n - i - 1
  std::int64_t largest = 0;         // dominant only: size of the dominant diagonal
  std::vector<std::int64_t> companions;  // balanced: the left size set
  std::vector<std::int64_t> opposite;    // balanced: the right size set

  friend bool operator==(const VHElement& a, const VHElement& b) {
    if (a.balanced != b.balanced) return false;
    if (a.balanced) return a.companions == b.companions && a.opposite == b.opposite;
    return a.side == b.side && a.largest == b.largest && a.companions == b.companions &&
           a.opposite == b.opposite;
  }
};

// Zero-copy element handed to gen_vh visitors; the subset views are valid
// only during the callback.
struct VHElementView {
  bool balanced;
  Side side;
  std::int64_t diag_index;
  std::int64_t largest;
  SubsetView companions;
  SubsetView opposite;

  VHElement materialize() const {
    VHElement e;
    e.balanced = balanced;
    e.side = side;
    e.diag_index = diag_index;
    e.largest = largest;
    e.companions = companions.to_vector();
    e.opposite = opposite.to_vector();
    return e;
  }
};

// |VH(n,k)| without enumeration: for even n this is |VD(n,k)|, for odd n
// |HD(n,k)|.
BigUint count_vd(std::int64_t n, std::int64_t k);

// The unique k = 0 covering: brick-laid horizontals with monominoes at
// columns 1 and n of every odd row.
Covering base_covering(int n);

// Tile-level realisation for even n. Diagonal sizes route by parity to the
// four corner-anchored staircase bands (evens top, odds bottom); a Left
// dominant bundle occupies the top-left/bottom-right pair, Right the mirror.
Covering render_square(const VHElement& e, int n);

std::string serialize_vh(const VHElement& e);
VHElement parse_vh(const std::string& text, std::int64_t n);

void validate_vh(const VHElement& e, std::int64_t n);

// Visits every element of VH(n,k) exactly once. Order: dominant elements
// first (i ascending; within i, k1 descending; Left before Right per
// companion/opposite pair), then balanced elements with k1 ascending;
// subsets arrive in the k-sum generator's own order.
template <class Visit>
std::uint64_t gen_vh(std::int64_t n, std::int64_t k, Visit&& visit, OpCounter* ops = nullptr) {
  if (n < 2) throw std::invalid_argument("gen_vh: n must be >= 2");
  std::uint64_t count = 0;
  if (k < 0) return count;

  const std::int64_t cap_out = n - 3 > 0 ? n - 3 : 0;
  const std::int64_t cap_in = (n - 2) / 2 > 0 ? (n - 2) / 2 : 0;
  C4State outer = init_c4(cap_out);
  C4State inner = init_c4(cap_in);
  if (ops) ops->preprocessing += static_cast<std::uint64_t>(cap_out + cap_in + 2);

  const std::int64_t i_max = (n - 1) / 2;
  if (i_max >= 1) {
    while (inner.active > 0) {  // aim the inner state at i - 1 = 0
      shift_active(inner, inner.active - 1);
      if (ops) ++ops->preprocessing;
    }
  }

  // The union scaffold, i iterations plus the +-1 state shifts between
  // adjacent terms, is O(n) total and independent of the output count, so
  // it lands in the separately-reported preprocessing term; every k1
  // iteration below yields at least one element and counts as a step.
  auto shift_to = [&](C4State& st, std::int64_t target) {
    while (st.active != target) {
      shift_active(st, st.active + (target > st.active ? 1 : -1));
      if (ops) ++ops->preprocessing;
    }
  };

  for (std::int64_t i = 1; i <= i_max; ++i) {
    if (ops) ++ops->preprocessing;
    const std::int64_t a = n - i - 2;
    const std::int64_t b = i - 1;
    shift_to(outer, a);
    shift_to(inner, b);
    const std::int64_t d0 = n - i - 1;
    const std::int64_t s = k - d0;
    if (s < 0) continue;
    const std::int64_t k1_hi = s < triangle(a) ? s : triangle(a);
    const std::int64_t k1_lo = s - triangle(b) > 0 ? s - triangle(b) : 0;
    for (std::int64_t k1 = k1_hi; k1 >= k1_lo; --k1) {
      if (ops) ++ops->steps;
      const std::int64_t k2 = s - k1;
      gen_ksum(
          outer, a, k1,
          [&](SubsetView comp) {
            gen_ksum(
                inner, b, k2,
                [&](SubsetView opp) {
                  if (ops) ++ops->steps;
                  visit(VHElementView{false, Side::Left, i, d0, comp, opp});
                  if (ops) ++ops->steps;
                  visit(VHElementView{false, Side::Right, i, d0, comp, opp});
                  count += 2;
                },
                ops);
          },
          ops);
    }
  }

  const std::int64_t h = (n - 2) / 2;
  shift_to(outer, h);
  shift_to(inner, h);
  const std::int64_t k1_lo = k - triangle(h) > 0 ? k - triangle(h) : 0;
  const std::int64_t k1_hi = k < triangle(h) ? k : triangle(h);
  for (std::int64_t k1 = k1_lo; k1 <= k1_hi; ++k1) {
    if (ops) ++ops->steps;
    gen_ksum(
        outer, h, k1,
        [&](SubsetView left) {
          gen_ksum(
              inner, h, k - k1,
              [&](SubsetView right) {
                if (ops) ++ops->steps;
                visit(VHElementView{true, Side::Left, 0, 0, left, right});
                ++count;
              },
              ops);
        },
        ops);
  }
  return count;
}

// Exact step/output totals of gen_vh, mirroring its instrumentation without
// enumerating.
struct VhCost {
  BigUint steps;
  BigUint outputs;
  BigUint preprocessing;
};
VhCost vh_generation_cost(std::int64_t n, std::int64_t k);

}  // namespace tatami
