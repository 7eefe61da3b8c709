#include "tatami/strip.hpp"

#include <sstream>

namespace tatami {

Bond feature_left_bond(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::LonerNE:
    case FeatureKind::LonerSE:
      return Bond::Horizontal;
    default:
      return Bond::Vertical;
  }
}

Bond feature_right_bond(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::LonerNW:
    case FeatureKind::LonerSW:
      return Bond::Horizontal;
    default:
      return Bond::Vertical;
  }
}

std::vector<Feature> feature_alphabet(int r) {
  if (r < 2) throw std::invalid_argument("feature_alphabet: r must be >= 2");
  std::vector<Feature> out;
  out.reserve(static_cast<std::size_t>(4) * r);
  for (int p = 1; p <= r - 1; ++p) out.push_back({FeatureKind::VBidimer, p});
  for (int p = 1; p <= r - 1; ++p) out.push_back({FeatureKind::HBidimer, p});
  for (int p = 1; p <= r - 2; ++p) out.push_back({FeatureKind::CwVortex, p});
  for (int p = 1; p <= r - 2; ++p) out.push_back({FeatureKind::CcwVortex, p});
  out.push_back({FeatureKind::VeeTop, 0});
  out.push_back({FeatureKind::VeeBottom, 0});
  out.push_back({FeatureKind::LonerNE, 0});
  out.push_back({FeatureKind::LonerNW, 0});
  out.push_back({FeatureKind::LonerSE, 0});
  out.push_back({FeatureKind::LonerSW, 0});
  return out;
}

int feature_code(const Feature& f, int r) {
  if (r < 2) throw std::invalid_argument("feature_code: r must be >= 2");
  switch (f.kind) {
    case FeatureKind::VBidimer:
      return f.position - 1;
    case FeatureKind::HBidimer:
      return (r - 1) + f.position - 1;
    case FeatureKind::CwVortex:
      return 2 * (r - 1) + f.position - 1;
    case FeatureKind::CcwVortex:
      return 2 * (r - 1) + (r - 2) + f.position - 1;
    case FeatureKind::VeeTop:
      return 4 * r - 6;
    case FeatureKind::VeeBottom:
      return 4 * r - 5;
    case FeatureKind::LonerNE:
      return 4 * r - 4;
    case FeatureKind::LonerNW:
      return 4 * r - 3;
    case FeatureKind::LonerSE:
      return 4 * r - 2;
    case FeatureKind::LonerSW:
      return 4 * r - 1;
  }
  throw std::logic_error("feature_code: unreachable");
}

void validate_strip(const StripCovering& s) {
  if (s.r < 2) throw std::invalid_argument("strip covering: r must be >= 2");
  Bond bond = s.leftmost_bond;
  for (const Feature& f : s.features) {
    switch (f.kind) {
      case FeatureKind::VBidimer:
      case FeatureKind::HBidimer:
        if (f.position < 1 || f.position > s.r - 1)
          throw std::invalid_argument("strip covering: bidimer position out of range");
        break;
      case FeatureKind::CwVortex:
      case FeatureKind::CcwVortex:
        if (f.position < 1 || f.position > s.r - 2)
          throw std::invalid_argument("strip covering: vortex position out of range");
        break;
      default:
        if (f.position != 0)
          throw std::invalid_argument("strip covering: unexpected position parameter");
        break;
    }
    if (feature_left_bond(f.kind) != bond)
      throw std::invalid_argument("strip covering: bond adjacency violated");
    bond = feature_right_bond(f.kind);
  }
}

StripCounts count_strip(std::int64_t r, std::int64_t n) {
  if (r < 2) throw std::invalid_argument("count_strip: r must be >= 2");
  if (n < 0) throw std::invalid_argument("count_strip: n must be >= 0");
  BigUint v(1), h(1);
  const BigUint coef_v(static_cast<std::uint64_t>(4 * (r - 1)));
  const BigUint two(2);
  for (std::int64_t step = 0; step < n; ++step) {
    BigUint nv = coef_v * v + two * h;
    BigUint nh = two * v;
    v = nv;
    h = nh;
  }
  return {v, h, v + h};
}

BigUint brute_filter_count(std::int64_t r, std::int64_t n) {
  if (r < 2) throw std::invalid_argument("brute_filter_count: r must be >= 2");
  if (n < 0) throw std::invalid_argument("brute_filter_count: n must be >= 0");
  constexpr std::int64_t kGuard = 10000000;
  std::int64_t space = 1;
  for (std::int64_t i = 0; i < n; ++i) {
    if (space > kGuard / (4 * r)) throw GuardError("brute_filter_count: (4r)^n exceeds 10^7");
    space *= 4 * r;
  }
  if (n == 0) return BigUint(2);  // one covering per leftmost bond

  const std::vector<Feature> alphabet = feature_alphabet(static_cast<int>(r));
  std::vector<Bond> left(alphabet.size()), right(alphabet.size());
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    left[i] = feature_left_bond(alphabet[i].kind);
    right[i] = feature_right_bond(alphabet[i].kind);
  }
  std::vector<std::size_t> codes(static_cast<std::size_t>(n), 0);
  std::uint64_t surviving = 0;
  for (;;) {
    bool ok = true;
    Bond bond = right[codes[0]];
    for (std::size_t t = 1; ok && t < codes.size(); ++t) {
      ok = left[codes[t]] == bond;
      bond = right[codes[t]];
    }
    if (ok) ++surviving;
    std::size_t pos = codes.size();
    while (pos > 0) {
      --pos;
      if (++codes[pos] < alphabet.size()) break;
      codes[pos] = 0;
      if (pos == 0) return BigUint(surviving);
    }
  }
}

namespace {

char feature_glyph(FeatureKind kind) {
  switch (kind) {
    case FeatureKind::VBidimer:
      return 'D';
    case FeatureKind::HBidimer:
      return 'd';
    case FeatureKind::CwVortex:
      return '@';
    case FeatureKind::CcwVortex:
      return 'o';
    case FeatureKind::VeeTop:
      return 'v';
    case FeatureKind::VeeBottom:
      return '^';
    default:
      return 'L';
  }
}

// Rows (1-based) occupied by the glyph in its column.
std::pair<int, int> glyph_rows(const Feature& f, int r) {
  switch (f.kind) {
    case FeatureKind::VBidimer:
    case FeatureKind::HBidimer:
    case FeatureKind::CwVortex:
    case FeatureKind::CcwVortex:
      return {f.position, f.position + 1};
    case FeatureKind::VeeTop:
    case FeatureKind::LonerSE:
    case FeatureKind::LonerSW:
      return {1, 1};  // top boundary
    default:
      return {r, r};  // bottom boundary
  }
}

}  // namespace

std::string render_strip_schematic(const StripCovering& s, int margin) {
  if (margin < 1) throw std::invalid_argument("render_strip_schematic: margin must be >= 1");
  validate_strip(s);
  std::vector<std::string> rows(static_cast<std::size_t>(s.r));
  auto fill = [&](Bond bond, int width) {
    const char ch = bond == Bond::Vertical ? '|' : '=';
    for (auto& row : rows) row.append(static_cast<std::size_t>(width), ch);
  };
  Bond bond = s.leftmost_bond;
  fill(bond, margin);
  for (const Feature& f : s.features) {
    const auto [glyph_top, glyph_bottom] = glyph_rows(f, s.r);
    for (int row = 1; row <= s.r; ++row) {
      rows[static_cast<std::size_t>(row - 1)].push_back(
          row >= glyph_top && row <= glyph_bottom ? feature_glyph(f.kind) : '.');
    }
    bond = feature_right_bond(f.kind);
    fill(bond, margin);
  }
  std::string out;
  for (const auto& row : rows) {
    out += row;
    out.push_back('\n');
  }
  return out;
}

std::string format_strip_line(const StripCovering& s) {
  std::ostringstream out;
  out << "bond:" << (s.leftmost_bond == Bond::Vertical ? 'V' : 'H') << " ; ";
  if (s.features.empty()) {
    out << '-';
  } else {
    for (std::size_t i = 0; i < s.features.size(); ++i) {
      if (i) out << ',';
      out << feature_code(s.features[i], s.r);
    }
  }
  return out.str();
}

StripCost strip_generation_cost(std::int64_t r, std::int64_t n) {
  if (r < 2) throw std::invalid_argument("strip_generation_cost: r must be >= 2");
  if (n < 0) throw std::invalid_argument("strip_generation_cost: n must be >= 0");
  const BigUint coef_vv(static_cast<std::uint64_t>(4 * r - 4));
  const BigUint two(2);
  BigUint nv(1), nh(1);            // nodes at the current depth by running bond
  BigUint entries, candidates;
  for (std::int64_t d = 0; d < n; ++d) {
    entries += nv + nh;
    candidates += BigUint(static_cast<std::uint64_t>(4 * r - 2)) * nv + two * nh;
    BigUint next_v = coef_vv * nv + two * nh;
    BigUint next_h = two * nv;
    nv = next_v;
    nh = next_h;
  }
  entries += nv + nh;  // leaves enter dfs too
  StripCost out;
  out.outputs = nv + nh;
  out.steps = BigUint(2) + entries + candidates + out.outputs;  // 2 root iterations
  out.preprocessing = BigUint(static_cast<std::uint64_t>(4 * r));
  return out;
}

}  // namespace tatami
