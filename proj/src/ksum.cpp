#include "tatami/ksum.hpp"

namespace tatami {

BigUint count_ksum(std::int64_t n, std::int64_t k) {
  if (n < 0) throw std::invalid_argument("count_ksum: n must be >= 0");
  if (k < 0 || k > triangle(n)) return BigUint(0);
  std::vector<BigUint> row(static_cast<std::size_t>(k) + 1);
  row[0] = BigUint(1);
  for (std::int64_t m = 1; m <= n; ++m) {
    const std::int64_t top = std::min(k, triangle(m));
    for (std::int64_t s = top; s >= m; --s) {
      row[static_cast<std::size_t>(s)] += row[static_cast<std::size_t>(s - m)];
    }
  }
  return row[static_cast<std::size_t>(k)];
}

KsumCost KsumCostModel::gen_cost(std::int64_t n, std::int64_t k) {
  KsumCost out;
  out.steps = BigUint(1);  // call step
  if (k < 0 || k > triangle(n)) return out;
  if (k == 0) {
    out.steps += BigUint(1);
    out.outputs = BigUint(1);
    return out;
  }
  KsumCost d = desc_cost(k, n);
  out.steps += d.steps;
  out.outputs = d.outputs;
  return out;
}

KsumCost KsumCostModel::desc_cost(std::int64_t rem, std::int64_t m) {
  const auto key = std::make_pair(rem, m);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  KsumCost out;
  out.steps = BigUint(1);  // node entry
  const std::int64_t slack = triangle(m) - rem;
  if (slack < m) {
    out.steps += BigUint(1);  // jump
    if (slack <= 1) {
      out.steps += BigUint(1);  // emit
      out.outputs = BigUint(1);
    } else {
      KsumCost sub = desc_cost(triangle(slack - 1), slack);
      out.steps += sub.steps;
      out.outputs = sub.outputs;
    }
  } else {
    const std::int64_t hi = rem < m ? rem : m;
    const std::int64_t lo = min_top(rem);
    for (std::int64_t j = hi; j >= lo; --j) {
      out.steps += BigUint(1);  // candidate
      if (j == rem) {
        out.steps += BigUint(1);  // emit
        out.outputs += BigUint(1);
      } else {
        KsumCost sub = desc_cost(rem - j, j - 1);
        out.steps += sub.steps;
        out.outputs += sub.outputs;
      }
    }
  }
  memo_.emplace(key, out);
  return out;
}

}  // namespace tatami
