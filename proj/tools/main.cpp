// Command-line front end for the tatami generators: subset sums, square
// coverings, strip coverings, the brute-force oracle, and the instrumented
// step-count benchmarks. All output is deterministic newline-delimited text.
//
// Exit codes: 0 success, 2 argument errors, 3 guard refusals.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tatami/bench.hpp"
#include "tatami/grid.hpp"
#include "tatami/ksum.hpp"
#include "tatami/oracle.hpp"
#include "tatami/square.hpp"
#include "tatami/strip.hpp"

namespace {

struct SubsetsArgs {
  std::int64_t n = 0, k = 0;
  bool count_only = false;
};

struct SquareArgs {
  std::int64_t n = 0, k = 0;
  bool count_only = false;
  std::string render = "repr";
};

struct StripArgs {
  std::int64_t r = 0, n = 0;
  bool count_only = false;
  std::string render;
  int margin = 2;
};

struct OracleSquareArgs {
  int n = 0;
  std::optional<int> k;
  bool force = false;
};

struct OracleRectArgs {
  int rows = 0, cols = 0;
  std::optional<int> monominoes;
  bool top_corners = false;
  std::string classify = "none";
  bool force = false;
  bool stream = false;
};

struct BenchArgs {
  std::string target;
  std::int64_t n = 0, k = 0, r = 0;
  bool all_k = false;
  bool analytic = false;
};

int run_subsets(const SubsetsArgs& args) {
  if (args.count_only) {
    std::cout << tatami::count_ksum(args.n, args.k) << '\n';
    return 0;
  }
  tatami::C4State st = tatami::init_c4(args.n);
  tatami::gen_ksum(st, args.n, args.k, [](tatami::SubsetView view) {
    if (view.empty()) {
      std::cout << "-\n";
      return;
    }
    bool first = true;
    for (std::int64_t v : view) {
      if (!first) std::cout << ' ';
      std::cout << v;
      first = false;
    }
    std::cout << '\n';
  });
  return 0;
}

int run_square(const SquareArgs& args) {
  if (args.count_only) {
    std::cout << tatami::count_vd(args.n, args.k) << '\n';
    return 0;
  }
  if (args.render != "repr" && args.n % 2 != 0) {
    throw std::invalid_argument("square: tile rendering is only defined for even n");
  }
  bool first = true;
  tatami::gen_vh(args.n, args.k, [&](const tatami::VHElementView& view) {
    if (args.render == "repr") {
      std::cout << tatami::serialize_vh(view.materialize()) << '\n';
      return;
    }
    tatami::Covering c = tatami::render_square(view.materialize(), static_cast<int>(args.n));
    if (!first) std::cout << '\n';
    first = false;
    if (args.render == "ascii") {
      std::cout << tatami::render_ascii(c);
    } else if (args.render == "svg") {
      std::cout << tatami::render_svg(c);
    } else {
      std::cout << tatami::serialize_tiles(c);
    }
  });
  return 0;
}

int run_strip(const StripArgs& args) {
  if (args.count_only) {
    tatami::StripCounts counts = tatami::count_strip(args.r, args.n);
    std::cout << counts.vertical << ' ' << counts.horizontal << ' ' << counts.total << '\n';
    return 0;
  }
  bool first = true;
  tatami::gen_strip(args.r, args.n, [&](const tatami::StripCovering& s) {
    if (args.render == "schematic") {
      if (!first) std::cout << '\n';
      first = false;
      std::cout << tatami::render_strip_schematic(s, args.margin);
    } else {
      std::cout << tatami::format_strip_line(s) << '\n';
    }
  });
  return 0;
}

void print_histogram(const tatami::Histogram& hist) {
  std::uint64_t total = 0;
  for (const auto& [key, value] : hist) {
    std::cout << key << ' ' << value << '\n';
    total += value;
  }
  std::cout << "total " << total << '\n';
}

int run_oracle_square(const OracleSquareArgs& args) {
  if (args.n < 2) throw std::invalid_argument("oracle square: n must be >= 2");
  tatami::OracleQuery q;
  q.rows = args.n;
  q.cols = args.n;
  q.monominoes = args.n;
  q.top_corners = true;
  q.classify = args.n % 2 == 0 ? tatami::Classify::VerticalCount : tatami::Classify::HorizontalCount;
  q.ignore_guard = args.force;
  tatami::Histogram hist = tatami::enumerate_coverings(q);
  if (args.k) {
    auto it = hist.find(*args.k);
    std::cout << *args.k << ' ' << (it == hist.end() ? 0 : it->second) << '\n';
  } else {
    print_histogram(hist);
  }
  return 0;
}

int run_oracle_rect(const OracleRectArgs& args) {
  tatami::OracleQuery q;
  q.rows = args.rows;
  q.cols = args.cols;
  q.monominoes = args.monominoes;
  q.top_corners = args.top_corners;
  if (args.classify == "v") {
    q.classify = tatami::Classify::VerticalCount;
  } else if (args.classify == "h") {
    q.classify = tatami::Classify::HorizontalCount;
  } else if (args.classify == "none") {
    q.classify = tatami::Classify::None;
  } else {
    throw std::invalid_argument("oracle rect: --classify must be v, h, or none");
  }
  q.ignore_guard = args.force;
  std::function<void(const tatami::Covering&)> visit;
  if (args.stream) {
    visit = [](const tatami::Covering& c) { std::cout << tatami::serialize_tiles(c) << '\n'; };
  }
  tatami::Histogram hist = tatami::enumerate_coverings(q, visit);
  print_histogram(hist);
  return 0;
}

int run_bench(const BenchArgs& args) {
  if (args.target == "subsets") {
    if (args.all_k) {
      for (std::int64_t k = 0; k <= tatami::triangle(args.n); ++k) {
        std::cout << tatami::format_report(tatami::bench_subsets(args.n, k, args.analytic))
                  << '\n';
      }
    } else {
      std::cout << tatami::format_report(tatami::bench_subsets(args.n, args.k, args.analytic))
                << '\n';
    }
  } else if (args.target == "square") {
    if (args.all_k) {
      for (std::int64_t k = 0; k <= tatami::triangle(args.n - 2); ++k) {
        std::cout << tatami::format_report(tatami::bench_square(args.n, k, args.analytic))
                  << '\n';
      }
    } else {
      std::cout << tatami::format_report(tatami::bench_square(args.n, args.k, args.analytic))
                << '\n';
    }
  } else if (args.target == "strip") {
    std::cout << tatami::format_report(tatami::bench_strip(args.r, args.n, args.analytic))
              << '\n';
  } else {
    throw std::invalid_argument("bench: unknown target '" + args.target + "'");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exhaustive generation of monomino-domino tatami coverings"};
  app.require_subcommand(1);

  SubsetsArgs subsets_args;
  auto* subsets = app.add_subcommand("subsets", "List the subsets of {1..n} that sum to k");
  subsets->add_option("n", subsets_args.n, "Ground-set size")->required();
  subsets->add_option("k", subsets_args.k, "Target sum")->required();
  subsets->add_flag("--count", subsets_args.count_only, "Print only the count");

  SquareArgs square_args;
  auto* square = app.add_subcommand("square", "List n x n coverings with n monominoes by vertical-domino count");
  square->add_option("n", square_args.n, "Grid size")->required();
  square->add_option("k", square_args.k, "Vertical dominoes (horizontal for odd n)")->required();
  square->add_flag("--count", square_args.count_only, "Print only the count");
  square->add_option("--render", square_args.render, "Output form: repr, ascii, svg, tiles")
      ->check(CLI::IsMember({"repr", "ascii", "svg", "tiles"}));

  StripArgs strip_args;
  auto* strip = app.add_subcommand("strip", "List height-r strip coverings with n features");
  strip->add_option("r", strip_args.r, "Strip height")->required();
  strip->add_option("n", strip_args.n, "Feature count")->required();
  strip->add_flag("--count", strip_args.count_only, "Print V H R counts only");
  strip->add_option("--render", strip_args.render, "Output form: schematic")
      ->check(CLI::IsMember({"schematic"}));
  strip->add_option("--margin", strip_args.margin, "Bond fill columns around features")
      ->check(CLI::PositiveNumber);

  auto* oracle = app.add_subcommand("oracle", "Brute-force covering enumeration");
  oracle->require_subcommand(1);
  OracleSquareArgs oracle_square_args;
  auto* oracle_square = oracle->add_subcommand("square", "n x n, n monominoes, top corners");
  oracle_square->add_option("n", oracle_square_args.n, "Grid size")->required();
  oracle_square->add_option("k", oracle_square_args.k, "Report only this class value");
  oracle_square->add_flag("--force", oracle_square_args.force, "Override the size guard");

  OracleRectArgs oracle_rect_args;
  auto* oracle_rect = oracle->add_subcommand("rect", "Arbitrary rectangle query");
  oracle_rect->add_option("rows", oracle_rect_args.rows, "Rows")->required();
  oracle_rect->add_option("cols", oracle_rect_args.cols, "Columns")->required();
  oracle_rect->add_option("--monominoes", oracle_rect_args.monominoes, "Exact monomino count");
  oracle_rect->add_flag("--top-corners", oracle_rect_args.top_corners,
                        "Require monominoes at (1,1) and (1,cols)");
  oracle_rect->add_option("--classify", oracle_rect_args.classify, "Histogram key: v, h, none");
  oracle_rect->add_flag("--force", oracle_rect_args.force, "Override the size guard");
  oracle_rect->add_flag("--stream", oracle_rect_args.stream, "Stream coverings in tile format");

  BenchArgs bench_args;
  auto* bench = app.add_subcommand("bench", "Instrumented step counts for the CAT certificates");
  bench->add_option("target", bench_args.target, "subsets, square, or strip")->required();
  bench->add_option("--n", bench_args.n, "n parameter");
  bench->add_option("--k", bench_args.k, "k parameter");
  bench->add_option("--r", bench_args.r, "strip height");
  bench->add_flag("--all-k", bench_args.all_k, "One record per k");
  bench->add_flag("--analytic", bench_args.analytic, "Evaluate the exact cost model instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (subsets->parsed()) return run_subsets(subsets_args);
    if (square->parsed()) return run_square(square_args);
    if (strip->parsed()) return run_strip(strip_args);
    if (oracle->parsed()) {
      if (oracle_square->parsed()) return run_oracle_square(oracle_square_args);
      return run_oracle_rect(oracle_rect_args);
    }
    if (bench->parsed()) return run_bench(bench_args);
  } catch (const tatami::GuardError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
