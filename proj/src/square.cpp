#include "tatami/square.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace tatami {

namespace {

// |Sd(m,s)| for all m <= max_m, s <= max_s.
std::vector<std::vector<BigUint>> sd_table(std::int64_t max_m, std::int64_t max_s) {
  std::vector<std::vector<BigUint>> t(static_cast<std::size_t>(max_m) + 1,
                                      std::vector<BigUint>(static_cast<std::size_t>(max_s) + 1));
  t[0][0] = BigUint(1);
  for (std::int64_t m = 1; m <= max_m; ++m) {
    for (std::int64_t s = 0; s <= max_s; ++s) {
      t[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)] =
          t[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(s)];
      if (s >= m) {
        t[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)] +=
            t[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(s - m)];
      }
    }
  }
  return t;
}

}  // namespace

BigUint count_vd(std::int64_t n, std::int64_t k) {
  if (n < 2) throw std::invalid_argument("count_vd: n must be >= 2");
  if (k < 0 || k > triangle(n - 2)) return BigUint(0);
  const std::int64_t h = (n - 2) / 2;
  const std::int64_t max_m = std::max<std::int64_t>(n - 3 > 0 ? n - 3 : 0, h);
  const auto t = sd_table(max_m, k);
  auto sd = [&](std::int64_t m, std::int64_t s) -> const BigUint& {
    return t[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)];
  };
  BigUint total;
  const BigUint two(2);
  for (std::int64_t i = 1; i <= (n - 1) / 2; ++i) {
    const std::int64_t d0 = n - i - 1;
    const std::int64_t s = k - d0;
    if (s < 0) continue;
    const std::int64_t a = n - i - 2;
    const std::int64_t b = i - 1;
    const std::int64_t k1_hi = std::min(s, triangle(a));
    const std::int64_t k1_lo = std::max<std::int64_t>(0, s - triangle(b));
    for (std::int64_t k1 = k1_hi; k1 >= k1_lo; --k1) {
      total += two * sd(a, k1) * sd(b, s - k1);
    }
  }
  const std::int64_t k1_lo = std::max<std::int64_t>(0, k - triangle(h));
  const std::int64_t k1_hi = std::min(k, triangle(h));
  for (std::int64_t k1 = k1_lo; k1 <= k1_hi; ++k1) {
    total += sd(h, k1) * sd(h, k - k1);
  }
  return total;
}

Covering base_covering(int n) {
  if (n < 2 || n % 2 != 0) throw std::invalid_argument("base_covering: n must be even and >= 2");
  Covering c;
  c.rows = n;
  c.cols = n;
  for (int r = 1; r <= n; ++r) {
    if (r % 2 == 1) {
      c.tiles.push_back({TileKind::Monomino, r, 1});
      for (int col = 2; col <= n - 2; col += 2) c.tiles.push_back({TileKind::HDomino, r, col});
      c.tiles.push_back({TileKind::Monomino, r, n});
    } else {
      for (int col = 1; col <= n - 1; col += 2) c.tiles.push_back({TileKind::HDomino, r, col});
    }
  }
  return c;
}

void validate_vh(const VHElement& e, std::int64_t n) {
  if (n < 2) throw std::invalid_argument("vh element: n must be >= 2");
  auto check_set = [](const std::vector<std::int64_t>& set, std::int64_t max_value,
                      const char* what) {
    std::int64_t prev = 0;
    for (std::int64_t v : set) {
      if (v <= prev) throw std::invalid_argument(std::string("vh element: ") + what +
                                                 " must be strictly increasing and positive");
      if (v > max_value)
        throw std::invalid_argument(std::string("vh element: ") + what + " value out of range");
      prev = v;
    }
  };
  if (e.balanced) {
    const std::int64_t h = (n - 2) / 2;
    check_set(e.companions, h, "left set");
    check_set(e.opposite, h, "right set");
    return;
  }
  const std::int64_t i = n - 1 - e.largest;
  if (e.largest < 1 || i < 1 || i > (n - 1) / 2)
    throw std::invalid_argument("vh element: largest diagonal out of range");
  if (e.diag_index != i) throw std::invalid_argument("vh element: diagonal index mismatch");
  check_set(e.companions, n - i - 2, "companions");
  check_set(e.opposite, i - 1, "opposite set");
}

namespace {

enum class Corner { TopLeft, BottomLeft, TopRight, BottomRight };

// A flipped diagonal is the transpose of a staircase band of brick-laid
// horizontals anchored at one corner of the base covering; the band's
// monomino slides to the perpendicular edge and its d horizontals turn
// vertical. Even sizes are whole-tile bands at the top corners, odd sizes
// at the bottom corners.
void apply_flip(std::set<Tile>& tiles, Corner corner, int d, int n) {
  std::vector<Tile> removed, added;
  switch (corner) {
    case Corner::TopLeft:
      removed.push_back({TileKind::Monomino, d + 1, 1});
      added.push_back({TileKind::Monomino, 1, d + 1});
      for (int t = 1; t <= d; ++t) {
        removed.push_back({TileKind::HDomino, t, d + 1 - t});
        added.push_back({TileKind::VDomino, d + 1 - t, t});
      }
      break;
    case Corner::BottomLeft:
      removed.push_back({TileKind::Monomino, n - d, 1});
      added.push_back({TileKind::Monomino, n, d + 1});
      for (int t = 1; t <= d; ++t) {
        removed.push_back({TileKind::HDomino, n - d + t, t});
        added.push_back({TileKind::VDomino, n - t, d + 1 - t});
      }
      break;
    case Corner::TopRight:
      removed.push_back({TileKind::Monomino, d + 1, n});
      added.push_back({TileKind::Monomino, 1, n - d});
      for (int t = 1; t <= d; ++t) {
        removed.push_back({TileKind::HDomino, t, n - d - 1 + t});
        added.push_back({TileKind::VDomino, d + 1 - t, n + 1 - t});
      }
      break;
    case Corner::BottomRight:
      removed.push_back({TileKind::Monomino, n - d, n});
      added.push_back({TileKind::Monomino, n, n - d});
      for (int t = 1; t <= d; ++t) {
        removed.push_back({TileKind::HDomino, n - d + t, n - t});
        added.push_back({TileKind::VDomino, n - t, n - d + t});
      }
      break;
  }
  for (const Tile& t : removed) {
    if (tiles.erase(t) != 1) throw std::logic_error("render_square: flip region not intact");
  }
  for (const Tile& t : added) {
    if (!tiles.insert(t).second) throw std::logic_error("render_square: flip region overlap");
  }
}

}  // namespace

Covering render_square(const VHElement& e, int n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("render_square: n must be even and >= 2");
  validate_vh(e, n);

  // Bundle 1 occupies the top-left / bottom-right band pair, bundle 2 the
  // mirror pair; a Right dominant element is the mirror of its Left twin.
  std::vector<std::int64_t> bundle1, bundle2;
  if (e.balanced) {
    bundle1 = e.companions;
    bundle2 = e.opposite;
  } else if (e.side == Side::Left) {
    bundle1 = e.companions;
    bundle1.push_back(e.largest);
    bundle2 = e.opposite;
  } else {
    bundle2 = e.companions;
    bundle2.push_back(e.largest);
    bundle1 = e.opposite;
  }

  const Covering base = base_covering(n);
  std::set<Tile> tiles(base.tiles.begin(), base.tiles.end());
  for (std::int64_t d : bundle1) {
    apply_flip(tiles, d % 2 == 0 ? Corner::TopLeft : Corner::BottomRight, static_cast<int>(d), n);
  }
  for (std::int64_t d : bundle2) {
    apply_flip(tiles, d % 2 == 0 ? Corner::TopRight : Corner::BottomLeft, static_cast<int>(d), n);
  }

  Covering out;
  out.rows = n;
  out.cols = n;
  out.tiles.assign(tiles.begin(), tiles.end());
  cell_owners(out);  // perfect-cover sanity
  return out;
}

namespace {

std::string set_str(const std::vector<std::int64_t>& set) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) out << ',';
    out << set[i];
  }
  out << '}';
  return out.str();
}

}  // namespace

std::string serialize_vh(const VHElement& e) {
  if (e.balanced) return "B" + set_str(e.companions) + set_str(e.opposite);
  const std::string largest = "{" + std::to_string(e.largest) + "*}";
  if (e.side == Side::Left) return largest + set_str(e.companions) + set_str(e.opposite);
  return set_str(e.opposite) + largest + set_str(e.companions);
}

namespace {

struct Group {
  std::vector<std::int64_t> values;
  bool starred = false;
};

std::vector<Group> parse_groups(const std::string& text, std::size_t pos) {
  std::vector<Group> groups;
  while (pos < text.size()) {
    if (text[pos] != '{') throw std::invalid_argument("parse_vh: expected '{'");
    const std::size_t close = text.find('}', pos);
    if (close == std::string::npos) throw std::invalid_argument("parse_vh: unterminated group");
    std::string body = text.substr(pos + 1, close - pos - 1);
    Group g;
    if (!body.empty() && body.back() == '*') {
      g.starred = true;
      body.pop_back();
    }
    if (!body.empty()) {
      std::istringstream in(body);
      std::string item;
      while (std::getline(in, item, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
          throw std::invalid_argument("parse_vh: bad integer in group");
        g.values.push_back(std::stoll(item));
      }
      if (!body.empty() && body.back() == ',') throw std::invalid_argument("parse_vh: bad group");
    }
    groups.push_back(std::move(g));
    pos = close + 1;
  }
  return groups;
}

}  // namespace

VHElement parse_vh(const std::string& text, std::int64_t n) {
  std::string s = text;
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("parse_vh: empty input");

  VHElement e;
  if (s[0] == 'B') {
    auto groups = parse_groups(s, 1);
    if (groups.size() != 2 || groups[0].starred || groups[1].starred)
      throw std::invalid_argument("parse_vh: balanced element needs two plain groups");
    e.balanced = true;
    e.companions = std::move(groups[0].values);
    e.opposite = std::move(groups[1].values);
  } else {
    auto groups = parse_groups(s, 0);
    if (groups.size() != 3) throw std::invalid_argument("parse_vh: expected three groups");
    int starred = -1;
    for (int g = 0; g < 3; ++g) {
      if (groups[static_cast<std::size_t>(g)].starred) {
        if (starred != -1) throw std::invalid_argument("parse_vh: multiple starred groups");
        starred = g;
      }
    }
    if (starred != 0 && starred != 1)
      throw std::invalid_argument("parse_vh: dominant group must be first or second");
    const Group& dom = groups[static_cast<std::size_t>(starred)];
    if (dom.values.size() != 1)
      throw std::invalid_argument("parse_vh: dominant group must hold one size");
    e.largest = dom.values[0];
    e.diag_index = n - 1 - e.largest;
    if (starred == 0) {
      e.side = Side::Left;
      e.companions = groups[1].values;
      e.opposite = groups[2].values;
    } else {
      e.side = Side::Right;
      e.opposite = groups[0].values;
      e.companions = groups[2].values;
    }
  }
  validate_vh(e, n);
  return e;
}

VhCost vh_generation_cost(std::int64_t n, std::int64_t k) {
  if (n < 2) throw std::invalid_argument("vh_generation_cost: n must be >= 2");
  VhCost out;
  if (k < 0) return out;

  const std::int64_t cap_out = n - 3 > 0 ? n - 3 : 0;
  const std::int64_t cap_in = (n - 2) / 2 > 0 ? (n - 2) / 2 : 0;
  out.preprocessing = BigUint(static_cast<std::uint64_t>(cap_out + cap_in + 2));
  const std::int64_t i_max = (n - 1) / 2;
  if (i_max >= 1) out.preprocessing += BigUint(static_cast<std::uint64_t>(cap_in));

  std::int64_t act_out = cap_out;
  std::int64_t act_in = i_max >= 1 ? 0 : cap_in;
  KsumCostModel km;
  const BigUint two(2);

  auto shifts = [](std::int64_t from, std::int64_t to) {
    return BigUint(static_cast<std::uint64_t>(from > to ? from - to : to - from));
  };

  for (std::int64_t i = 1; i <= i_max; ++i) {
    out.preprocessing += BigUint(1);
    const std::int64_t a = n - i - 2;
    const std::int64_t b = i - 1;
    out.preprocessing += shifts(act_out, a);
    out.preprocessing += shifts(act_in, b);
    act_out = a;
    act_in = b;
    const std::int64_t d0 = n - i - 1;
    const std::int64_t s = k - d0;
    if (s < 0) continue;
    const std::int64_t k1_hi = std::min(s, triangle(a));
    const std::int64_t k1_lo = std::max<std::int64_t>(0, s - triangle(b));
    for (std::int64_t k1 = k1_hi; k1 >= k1_lo; --k1) {
      out.steps += BigUint(1);
      KsumCost ca = km.gen_cost(a, k1);
      KsumCost cb = km.gen_cost(b, s - k1);
      out.steps += ca.steps + ca.outputs * cb.steps + ca.outputs * cb.outputs * two;
      out.outputs += two * ca.outputs * cb.outputs;
    }
  }

  const std::int64_t h = (n - 2) / 2;
  out.preprocessing += shifts(act_out, h);
  out.preprocessing += shifts(act_in, h);
  const std::int64_t k1_lo = std::max<std::int64_t>(0, k - triangle(h));
  const std::int64_t k1_hi = std::min(k, triangle(h));
  for (std::int64_t k1 = k1_lo; k1 <= k1_hi; ++k1) {
    out.steps += BigUint(1);
    KsumCost ca = km.gen_cost(h, k1);
    KsumCost cb = km.gen_cost(h, k - k1);
    out.steps += ca.steps + ca.outputs * cb.steps + ca.outputs * cb.outputs;
    out.outputs += ca.outputs * cb.outputs;
  }
  return out;
}

}  // namespace tatami
