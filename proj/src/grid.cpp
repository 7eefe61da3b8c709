#include "tatami/grid.hpp"

#include <algorithm>
#include <sstream>

namespace tatami {

namespace {

void tile_cells(const Tile& t, int cells[2][2], int* n_cells) {
  cells[0][0] = t.row;
  cells[0][1] = t.col;
  *n_cells = 1;
  if (t.kind == TileKind::HDomino) {
    cells[1][0] = t.row;
    cells[1][1] = t.col + 1;
    *n_cells = 2;
  } else if (t.kind == TileKind::VDomino) {
    cells[1][0] = t.row + 1;
    cells[1][1] = t.col;
    *n_cells = 2;
  }
}

}  // namespace

std::vector<int> cell_owners(const Covering& c) {
  if (c.rows < 1 || c.cols < 1) throw StructureError("covering: rows and cols must be >= 1");
  std::vector<int> owner(static_cast<std::size_t>(c.rows) * c.cols, -1);
  for (std::size_t idx = 0; idx < c.tiles.size(); ++idx) {
    int cells[2][2];
    int n_cells = 0;
    tile_cells(c.tiles[idx], cells, &n_cells);
    for (int t = 0; t < n_cells; ++t) {
      const int r = cells[t][0], col = cells[t][1];
      if (r < 1 || r > c.rows || col < 1 || col > c.cols)
        throw StructureError("covering: tile out of bounds");
      auto& slot = owner[static_cast<std::size_t>(r - 1) * c.cols + (col - 1)];
      if (slot != -1) throw StructureError("covering: overlapping tiles");
      slot = static_cast<int>(idx);
    }
  }
  for (int v : owner) {
    if (v == -1) throw StructureError("covering: uncovered cell");
  }
  return owner;
}

TatamiReport validate_tatami(const Covering& c) {
  const std::vector<int> owner = cell_owners(c);
  TatamiReport report;
  for (int i = 1; i <= c.rows - 1; ++i) {
    for (int j = 1; j <= c.cols - 1; ++j) {
      const int a = owner[static_cast<std::size_t>(i - 1) * c.cols + (j - 1)];
      const int b = owner[static_cast<std::size_t>(i - 1) * c.cols + j];
      const int d = owner[static_cast<std::size_t>(i) * c.cols + (j - 1)];
      const int e = owner[static_cast<std::size_t>(i) * c.cols + j];
      if (a != b && a != d && a != e && b != d && b != e && d != e) {
        report.violations.emplace_back(i, j);
      }
    }
  }
  report.valid = report.violations.empty();
  return report;
}

std::string render_ascii(const Covering& c) {
  cell_owners(c);  // structural check
  std::string grid(static_cast<std::size_t>(c.rows) * c.cols, '?');
  auto at = [&](int r, int col) -> char& {
    return grid[static_cast<std::size_t>(r - 1) * c.cols + (col - 1)];
  };
  for (const Tile& t : c.tiles) {
    switch (t.kind) {
      case TileKind::Monomino:
        at(t.row, t.col) = 'o';
        break;
      case TileKind::HDomino:
        at(t.row, t.col) = '<';
        at(t.row, t.col + 1) = '>';
        break;
      case TileKind::VDomino:
        at(t.row, t.col) = '^';
        at(t.row + 1, t.col) = 'v';
        break;
    }
  }
  std::string out;
  out.reserve(grid.size() + static_cast<std::size_t>(c.rows));
  for (int r = 0; r < c.rows; ++r) {
    out.append(grid, static_cast<std::size_t>(r) * c.cols, static_cast<std::size_t>(c.cols));
    out.push_back('\n');
  }
  return out;
}

std::string render_svg(const Covering& c) {
  cell_owners(c);
  constexpr int kCell = 24;
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << c.cols * kCell
      << "\" height=\"" << c.rows * kCell << "\">\n";
  for (const Tile& t : c.tiles) {
    int w = 1, h = 1;
    const char* fill = "#d9d2c5";
    if (t.kind == TileKind::HDomino) {
      w = 2;
      fill = "#7fb3d5";
    } else if (t.kind == TileKind::VDomino) {
      h = 2;
      fill = "#f1948a";
    }
    out << "  <rect x=\"" << (t.col - 1) * kCell << "\" y=\"" << (t.row - 1) * kCell
        << "\" width=\"" << w * kCell << "\" height=\"" << h * kCell << "\" fill=\"" << fill
        << "\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string serialize_tiles(const Covering& c) {
  std::ostringstream out;
  out << "grid " << c.rows << ' ' << c.cols << '\n';
  for (const Tile& t : c.tiles) {
    const char k = t.kind == TileKind::Monomino ? 'M' : t.kind == TileKind::HDomino ? 'H' : 'V';
    out << k << ' ' << t.row << ' ' << t.col << '\n';
  }
  return out.str();
}

Covering parse_tiles(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Covering c;
  bool have_header = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    if (!have_header) {
      std::string word;
      if (!(ls >> word) || word != "grid" || !(ls >> c.rows >> c.cols))
        throw StructureError("parse_tiles: bad header");
      std::string extra;
      if (ls >> extra) throw StructureError("parse_tiles: bad header");
      have_header = true;
      continue;
    }
    char kind_ch = 0;
    Tile t;
    if (!(ls >> kind_ch >> t.row >> t.col)) throw StructureError("parse_tiles: bad tile line");
    std::string extra;
    if (ls >> extra) throw StructureError("parse_tiles: bad tile line");
    switch (kind_ch) {
      case 'M':
        t.kind = TileKind::Monomino;
        break;
      case 'H':
        t.kind = TileKind::HDomino;
        break;
      case 'V':
        t.kind = TileKind::VDomino;
        break;
      default:
        throw StructureError("parse_tiles: unknown tile kind");
    }
    c.tiles.push_back(t);
  }
  if (!have_header) throw StructureError("parse_tiles: missing header");
  std::sort(c.tiles.begin(), c.tiles.end());
  cell_owners(c);  // rejects overlap, gaps, out of bounds
  return c;
}

int count_kind(const Covering& c, TileKind kind) {
  int n = 0;
  for (const Tile& t : c.tiles) n += t.kind == kind ? 1 : 0;
  return n;
}

}  // namespace tatami
