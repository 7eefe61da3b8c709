#pragma once

// Explicit tiling model for rectangular grids: monominoes plus horizontal
// and vertical dominoes, the tatami validator ("no four tiles meet"), and
// the text / SVG / tile-list output formats.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tatami {

// A covering that is not a perfect cover (overlap, gap, out of bounds).
struct StructureError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// An exhaustive search refused because it exceeds its size guard.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class TileKind { Monomino, HDomino, VDomino };

struct Tile {
  TileKind kind;
  int row = 0;  // 1-based anchor, top-left cell of the tile
  int col = 0;

  friend bool operator==(const Tile& a, const Tile& b) {
    return a.kind == b.kind && a.row == b.row && a.col == b.col;
  }
  friend bool operator<(const Tile& a, const Tile& b) {
    if (a.row != b.row) return a.row < b.row;
    if (a.col != b.col) return a.col < b.col;
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  }
};

struct Covering {
  int rows = 0;
  int cols = 0;
  std::vector<Tile> tiles;  // canonical order: sorted by (row, col)

  friend bool operator==(const Covering& a, const Covering& b) {
    return a.rows == b.rows && a.cols == b.cols && a.tiles == b.tiles;
  }
};

struct TatamiReport {
  bool valid = true;
  // Interior lattice points (row boundary, col boundary) where four
  // distinct tiles meet; (i, j) lies between rows i, i+1 and cols j, j+1.
  std::vector<std::pair<int, int>> violations;
};

// Cell -> tile-index map; throws StructureError unless c is a perfect cover.
std::vector<int> cell_owners(const Covering& c);

TatamiReport validate_tatami(const Covering& c);

// Character grid: o monomino, <> horizontal domino, ^v vertical domino.
std::string render_ascii(const Covering& c);

// One rectangle per tile, fixed unit size, deterministic output.
std::string render_svg(const Covering& c);

// Header "grid ROWS COLS", then one tile per line (M|H|V row col) in
// canonical order. parse_tiles is the exact inverse and validates the cover.
std::string serialize_tiles(const Covering& c);
Covering parse_tiles(const std::string& text);

int count_kind(const Covering& c, TileKind kind);

}  // namespace tatami
