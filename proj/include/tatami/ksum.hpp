#pragma once

// Generation of Sd(n,k), the subsets of {1,...,n} summing to k, in constant
// amortised time over a linked-array state.
//
// Encoding: for a = {a_1 < ... < a_k} the array c satisfies c[0] = a_1,
// c[a_i] = a_{i+1}, c[a_k] = n+1, and c[i] = i+1 for every free index i.
// The empty set is c = [n+1, 2, 3, ..., n, n+1], so between traversals the
// whole tail of the array is in the "free" form and switching the active n
// by +-1 only rewrites c[0].
//
// The traversal picks elements largest-first. At a node (rem, m), with rem
// left to sum and elements 1..m free, every largest-element choice j with
// T(j) >= rem and j <= min(m, rem) leads to at least one subset, where
// T(x) = x(x+1)/2. The node is forced (single non-leaf choice) exactly when
// slack = T(m) - rem < m, and then the forced choices form the contiguous
// run {slack+1, ..., m}, which the free-form cells already link, so the
// whole run costs one write: c[m] = prev. After the run the node becomes
// (T(slack-1), slack), which is never forced again. This keeps total steps
// proportional to the number of subsets emitted.

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "tatami/bigint.hpp"
#include "tatami/opcount.hpp"

namespace tatami {

inline std::int64_t triangle(std::int64_t m) { return m * (m + 1) / 2; }

// Smallest j >= 0 with T(j) >= rem.
inline std::int64_t min_top(std::int64_t rem) {
  if (rem <= 0) return 0;
  auto j = static_cast<std::int64_t>(std::sqrt(2.0 * static_cast<double>(rem)));
  while (triangle(j) < rem) ++j;
  while (j > 0 && triangle(j - 1) >= rem) --j;
  return j;
}

struct C4State {
  std::int64_t capacity = 0;  // largest n this state can serve
  std::int64_t active = 0;    // the n currently served
  std::vector<std::int64_t> c;
};

inline C4State init_c4(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("init_c4: n must be >= 0");
  C4State st;
  st.capacity = n;
  st.active = n;
  st.c.resize(static_cast<std::size_t>(n) + 1);
  st.c[0] = n + 1;
  for (std::int64_t i = 1; i <= n; ++i) st.c[static_cast<std::size_t>(i)] = i + 1;
  return st;
}

inline bool is_empty_form(const C4State& st) {
  return st.active >= 0 && st.active <= st.capacity && st.c[0] == st.active + 1;
}

// O(1) re-aim of an empty-form state at an adjacent n. Only c[0] changes:
// the free-form cells already hold the right values for every active n.
inline void shift_active(C4State& st, std::int64_t new_n) {
  if (!is_empty_form(st)) throw std::invalid_argument("shift_active: state not in empty-set form");
  if (new_n < 0 || new_n > st.capacity) throw std::invalid_argument("shift_active: new_n out of range");
  if (new_n != st.active + 1 && new_n != st.active - 1)
    throw std::invalid_argument("shift_active: new_n must differ from active n by 1");
  st.active = new_n;
  st.c[0] = new_n + 1;
}

// Read-only view of the subset currently encoded in c; valid only during the
// visit callback. Iteration yields elements in ascending order; decoding is
// O(k) and only paid when the caller walks the view.
class SubsetView {
 public:
  SubsetView(const std::int64_t* c, std::int64_t n) : c_(c), n_(n) {}

  class iterator {
   public:
    using value_type = std::int64_t;
    iterator(const std::int64_t* c, std::int64_t cur) : c_(c), cur_(cur) {}
    std::int64_t operator*() const { return cur_; }
    iterator& operator++() {
      cur_ = c_[cur_];
      return *this;
    }
    bool operator!=(const iterator& o) const { return cur_ != o.cur_; }
    bool operator==(const iterator& o) const { return cur_ == o.cur_; }

   private:
    const std::int64_t* c_;
    std::int64_t cur_;
  };

  iterator begin() const { return iterator(c_, c_[0] <= n_ ? c_[0] : n_ + 1); }
  iterator end() const { return iterator(c_, n_ + 1); }
  bool empty() const { return c_[0] > n_; }

  std::vector<std::int64_t> to_vector() const {
    std::vector<std::int64_t> out;
    for (std::int64_t v : *this) out.push_back(v);
    return out;
  }

  std::uint32_t to_mask() const {  // elements as bits; requires n < 32
    std::uint32_t mask = 0;
    for (std::int64_t v : *this) mask |= 1u << v;
    return mask;
  }

 private:
  const std::int64_t* c_;
  std::int64_t n_;
};

namespace detail {

template <class Visit>
class KsumTraversal {
 public:
  KsumTraversal(C4State& st, Visit& visit, OpCounter* ops)
      : c_(st.c.data()), n_(st.active), visit_(visit), ops_(ops) {}

  std::uint64_t run(std::int64_t k) {
    desc(k, n_, n_ + 1);
    return count_;
  }

 private:
  void emit(std::int64_t min_elem) {
    if (ops_) ++ops_->steps;
    c_[0] = min_elem;
    ++count_;
    visit_(SubsetView(c_, n_));
    c_[0] = n_ + 1;
  }

  // Emits every subset of {1..m} with sum rem (rem >= 1, rem <= T(m)),
  // linking each chosen element below `prev`.
  void desc(std::int64_t rem, std::int64_t m, std::int64_t prev) {
    if (ops_) ++ops_->steps;
    const std::int64_t slack = triangle(m) - rem;
    if (slack < m) {
      // forced run {slack+1 .. m}; interior links are already in place
      if (ops_) ++ops_->steps;
      c_[m] = prev;
      if (slack <= 1) {
        emit(slack + 1);
      } else {
        desc(triangle(slack - 1), slack, slack + 1);
      }
      c_[m] = m + 1;
      return;
    }
    const std::int64_t hi = rem < m ? rem : m;
    const std::int64_t lo = min_top(rem);
    for (std::int64_t j = hi; j >= lo; --j) {
      if (ops_) ++ops_->steps;
      c_[j] = prev;
      if (j == rem) {
        emit(j);
      } else {
        desc(rem - j, j - 1, j);
      }
      c_[j] = j + 1;
    }
  }

  std::int64_t* c_;
  std::int64_t n_;
  Visit& visit_;
  OpCounter* ops_;
  std::uint64_t count_ = 0;
};

}  // namespace detail

// Visits every element of Sd(n,k) exactly once and restores the state to the
// empty-set encoding before returning. Out-of-range k yields 0 visits.
template <class Visit>
std::uint64_t gen_ksum(C4State& st, std::int64_t n, std::int64_t k, Visit&& visit,
                       OpCounter* ops = nullptr) {
  if (st.active != n) throw std::invalid_argument("gen_ksum: state not aimed at n");
  if (!is_empty_form(st)) throw std::invalid_argument("gen_ksum: state not in empty-set form");
  if (ops) ++ops->steps;
  if (k < 0 || k > triangle(n)) return 0;
  if (k == 0) {
    if (ops) ++ops->steps;
    visit(SubsetView(st.c.data(), n));
    return 1;
  }
  detail::KsumTraversal<Visit> t(st, visit, ops);
  return t.run(k);
}

// |Sd(n,k)| by the DP |Sd(n,k)| = |Sd(n-1,k)| + |Sd(n-1,k-n)|.
BigUint count_ksum(std::int64_t n, std::int64_t k);

// Exact step/output totals of gen_ksum, mirroring its instrumentation
// point-for-point without enumerating. Memoised across queries.
struct KsumCost {
  BigUint steps;
  BigUint outputs;
};

class KsumCostModel {
 public:
  KsumCost gen_cost(std::int64_t n, std::int64_t k);

 private:
  KsumCost desc_cost(std::int64_t rem, std::int64_t m);
  std::map<std::pair<std::int64_t, std::int64_t>, KsumCost> memo_;
};

}  // namespace tatami
