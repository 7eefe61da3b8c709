#include "tatami/oracle.hpp"

#include <string>

namespace tatami {

namespace {

constexpr int kGuardCells = 144;

class Search {
 public:
  Search(const OracleQuery& q, const std::function<void(const Covering&)>& visit)
      : q_(q), visit_(visit), owner_(static_cast<std::size_t>(q.rows) * q.cols, -1) {}

  Histogram run() {
    extend(0);
    return hist_;
  }

 private:
  int rows() const { return q_.rows; }
  int cols() const { return q_.cols; }
  int& owner(int r, int c) { return owner_[static_cast<std::size_t>(r) * cols() + c]; }

  // 0-based corner check
  bool is_forced_corner(int r, int c) const {
    return q_.top_corners && r == 0 && (c == 0 || c == cols() - 1);
  }

  // The lattice point between rows r,r+1 and cols c,c+1 (0-based r,c of its
  // top-left cell); reports true when four distinct tiles meet there.
  bool four_meet(int r, int c) {
    if (r < 0 || c < 0 || r >= rows() - 1 || c >= cols() - 1) return false;
    const int a = owner(r, c), b = owner(r, c + 1), d = owner(r + 1, c), e = owner(r + 1, c + 1);
    if (a < 0 || b < 0 || d < 0 || e < 0) return false;
    return a != b && a != d && a != e && b != d && b != e && d != e;
  }

  bool cell_breaks_tatami(int r, int c) {
    return four_meet(r - 1, c - 1) || four_meet(r - 1, c) || four_meet(r, c - 1) ||
           four_meet(r, c);
  }

  bool monomino_budget_ok() const {
    if (!q_.monominoes) return true;
    const int remaining_cells = rows() * cols() - covered_;
    const int remaining_monos = *q_.monominoes - mono_count_;
    return remaining_monos >= 0 && remaining_monos <= remaining_cells &&
           (remaining_cells - remaining_monos) % 2 == 0;
  }

  void emit() {
    std::int64_t key = 0;
    if (q_.classify == Classify::VerticalCount) key = v_count_;
    if (q_.classify == Classify::HorizontalCount) key = h_count_;
    ++hist_[key];
    if (visit_) {
      Covering c;
      c.rows = rows();
      c.cols = cols();
      c.tiles = tiles_;
      visit_(c);
    }
  }

  void extend(int from) {
    int idx = from;
    while (idx < rows() * cols() && owner_[static_cast<std::size_t>(idx)] != -1) ++idx;
    if (idx == rows() * cols()) {
      if (!q_.monominoes || mono_count_ == *q_.monominoes) emit();
      return;
    }
    const int r = idx / cols(), c = idx % cols();
    const int id = static_cast<int>(tiles_.size());

    // monomino
    if (!q_.monominoes || mono_count_ < *q_.monominoes) {
      owner(r, c) = id;
      ++mono_count_;
      ++covered_;
      if (!cell_breaks_tatami(r, c) && monomino_budget_ok()) {
        tiles_.push_back({TileKind::Monomino, r + 1, c + 1});
        extend(idx + 1);
        tiles_.pop_back();
      }
      --covered_;
      --mono_count_;
      owner(r, c) = -1;
    }

    // horizontal domino
    if (c + 1 < cols() && owner(r, c + 1) == -1 && !is_forced_corner(r, c) &&
        !is_forced_corner(r, c + 1)) {
      owner(r, c) = id;
      owner(r, c + 1) = id;
      covered_ += 2;
      ++h_count_;
      if (!cell_breaks_tatami(r, c) && !cell_breaks_tatami(r, c + 1) && monomino_budget_ok()) {
        tiles_.push_back({TileKind::HDomino, r + 1, c + 1});
        extend(idx + 1);
        tiles_.pop_back();
      }
      --h_count_;
      covered_ -= 2;
      owner(r, c) = -1;
      owner(r, c + 1) = -1;
    }

    // vertical domino
    if (r + 1 < rows() && !is_forced_corner(r, c)) {
      owner(r, c) = id;
      owner(r + 1, c) = id;
      covered_ += 2;
      ++v_count_;
      if (!cell_breaks_tatami(r, c) && !cell_breaks_tatami(r + 1, c) && monomino_budget_ok()) {
        tiles_.push_back({TileKind::VDomino, r + 1, c + 1});
        extend(idx + 1);
        tiles_.pop_back();
      }
      --v_count_;
      covered_ -= 2;
      owner(r, c) = -1;
      owner(r + 1, c) = -1;
    }
  }

  const OracleQuery& q_;
  const std::function<void(const Covering&)>& visit_;
  std::vector<int> owner_;
  std::vector<Tile> tiles_;
  Histogram hist_;
  int mono_count_ = 0;
  int v_count_ = 0;
  int h_count_ = 0;
  int covered_ = 0;
};

}  // namespace

Histogram enumerate_coverings(const OracleQuery& q,
                              const std::function<void(const Covering&)>& visit) {
  if (q.rows < 1 || q.cols < 1)
    throw std::invalid_argument("enumerate_coverings: rows and cols must be >= 1");
  if (q.monominoes) {
    const int cells = q.rows * q.cols;
    if (*q.monominoes < 0 || *q.monominoes > cells)
      throw std::invalid_argument("enumerate_coverings: monomino count out of range");
    if ((cells - *q.monominoes) % 2 != 0)
      throw std::invalid_argument("enumerate_coverings: cells minus monominoes must be even");
  }
  if (!q.ignore_guard && q.rows * q.cols > kGuardCells) {
    throw GuardError("enumerate_coverings: grid exceeds the " + std::to_string(kGuardCells) +
                     "-cell guard");
  }
  Search s(q, visit);
  return s.run();
}

Histogram oracle_vd_histogram(int n) {
  OracleQuery q;
  q.rows = n;
  q.cols = n;
  q.monominoes = n;
  q.top_corners = true;
  q.classify = n % 2 == 0 ? Classify::VerticalCount : Classify::HorizontalCount;
  return enumerate_coverings(q);
}

std::uint64_t oracle_vd(int n, int k) {
  Histogram h = oracle_vd_histogram(n);
  auto it = h.find(k);
  return it == h.end() ? 0 : it->second;
}

}  // namespace tatami
