#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "tatami/oracle.hpp"
#include "tatami/square.hpp"

using namespace tatami;

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

std::vector<std::string> serialized_elements(std::int64_t n, std::int64_t k) {
  std::vector<std::string> out;
  gen_vh(n, k, [&](const VHElementView& v) { out.push_back(serialize_vh(v.materialize())); });
  return out;
}

}  // namespace

TEST_CASE("count_vd spot values") {
  CHECK(count_vd(8, 7) == BigUint(24));
  CHECK(count_vd(8, 0) == BigUint(1));
  CHECK(count_vd(2, 0) == BigUint(1));
  CHECK(count_vd(2, 1) == BigUint(0));
  CHECK(count_vd(3, 0) == BigUint(1));
  CHECK(count_vd(3, 1) == BigUint(2));
  CHECK(count_vd(4, 5) == BigUint(0));
  CHECK_THROWS_AS(count_vd(1, 0), std::invalid_argument);
}

TEST_CASE("generation count equals count_vd for n up to 12") {
  for (std::int64_t n = 2; n <= 12; ++n) {
    for (std::int64_t k = -1; k <= triangle(n - 2) + 2; ++k) {
      const std::uint64_t count = gen_vh(n, k, [](const VHElementView&) {});
      CHECK(count_vd(n, k) == BigUint(count));
    }
  }
}

TEST_CASE("VD(8,7) listing matches the pinned order and the reference multiset") {
  const std::vector<std::string> got = serialized_elements(8, 7);
  REQUIRE(got.size() == 24);
  CHECK(got == read_lines(std::string(TATAMI_DATA_DIR) + "/vd87_pinned_order.txt"));

  std::multiset<std::string> reference;
  for (const std::string& s :
       read_lines(std::string(TATAMI_DATA_DIR) + "/vd87_reference_listing.txt"))
    reference.insert(s);
  CHECK(std::multiset<std::string>(got.begin(), got.end()) == reference);
}

TEST_CASE("k = 0 yields the single balanced empty element") {
  for (std::int64_t n : {2, 4, 6, 8, 10}) {
    std::vector<VHElement> got;
    gen_vh(n, 0, [&](const VHElementView& v) { got.push_back(v.materialize()); });
    REQUIRE(got.size() == 1);
    CHECK(got[0].balanced);
    CHECK(got[0].companions.empty());
    CHECK(got[0].opposite.empty());
  }
  CHECK(gen_vh(2, 1, [](const VHElementView&) {}) == 0);
}

TEST_CASE("a deep dominant element of VH(18,24) is visited") {
  VHElement wanted;
  wanted.balanced = false;
  wanted.side = Side::Left;
  wanted.diag_index = 5;
  wanted.largest = 12;
  wanted.companions = {3, 8};
  wanted.opposite = {1};
  bool found = false;
  gen_vh(18, 24, [&](const VHElementView& v) {
    if (!v.balanced && v.materialize() == wanted) found = true;
  });
  CHECK(found);
}

TEST_CASE("dominant elements arrive in Left/Right pairs with equal data") {
  for (std::int64_t k : {3, 6, 9}) {
    std::vector<VHElement> dominants;
    gen_vh(9, k, [&](const VHElementView& v) {
      if (!v.balanced) dominants.push_back(v.materialize());
    });
    REQUIRE(dominants.size() % 2 == 0);
    for (std::size_t i = 0; i < dominants.size(); i += 2) {
      CHECK(dominants[i].side == Side::Left);
      CHECK(dominants[i + 1].side == Side::Right);
      CHECK(dominants[i].largest == dominants[i + 1].largest);
      CHECK(dominants[i].companions == dominants[i + 1].companions);
      CHECK(dominants[i].opposite == dominants[i + 1].opposite);
    }
  }
}

TEST_CASE("diagonal sizes of every visited element sum to k") {
  for (std::int64_t n : {7, 10}) {
    for (std::int64_t k = 0; k <= triangle(n - 2); ++k) {
      gen_vh(n, k, [&](const VHElementView& v) {
        std::int64_t sum = v.balanced ? 0 : v.largest;
        for (std::int64_t d : v.companions) sum += d;
        for (std::int64_t d : v.opposite) sum += d;
        CHECK(sum == k);
      });
    }
  }
}

TEST_CASE("serialize and parse are inverse") {
  VHElement left;
  left.side = Side::Left;
  left.largest = 6;
  left.diag_index = 1;
  left.companions = {1};
  CHECK(serialize_vh(left) == "{6*}{1}{}");
  CHECK(parse_vh("{6*}{1}{}", 8) == left);

  VHElement balanced;
  balanced.balanced = true;
  balanced.companions = {1};
  balanced.opposite = {1, 2, 3};
  CHECK(serialize_vh(balanced) == "B{1}{1,2,3}");
  CHECK(parse_vh("B{1}{1,2,3}", 8) == balanced);

  for (std::int64_t k = 0; k <= 21; ++k) {
    gen_vh(8, k, [&](const VHElementView& v) {
      const VHElement e = v.materialize();
      CHECK(parse_vh(serialize_vh(e), 8) == e);
    });
  }
}

TEST_CASE("parse_vh rejects invalid elements") {
  CHECK_THROWS_AS(parse_vh("{7*}{}{}", 8), std::invalid_argument);    // i = 0
  CHECK_THROWS_AS(parse_vh("{3*}{}{}", 8), std::invalid_argument);    // i beyond range
  CHECK_THROWS_AS(parse_vh("{4*}{4}{}", 8), std::invalid_argument);   // companion too big
  CHECK_THROWS_AS(parse_vh("{6*}{1}{1}", 8), std::invalid_argument);  // opposite beyond i-1
  CHECK_THROWS_AS(parse_vh("B{4}{}", 8), std::invalid_argument);      // beyond floor((n-2)/2)
  CHECK_THROWS_AS(parse_vh("B{2,1}{}", 8), std::invalid_argument);    // not ascending
  CHECK_THROWS_AS(parse_vh("B{1,1}{}", 8), std::invalid_argument);    // repeated
  CHECK_THROWS_AS(parse_vh("{6}{1}{}", 8), std::invalid_argument);    // no starred group
  CHECK_THROWS_AS(parse_vh("{6*}{1*}{}", 8), std::invalid_argument);  // two stars
  CHECK_THROWS_AS(parse_vh("{6*}{1}", 8), std::invalid_argument);     // missing group
  CHECK_THROWS_AS(parse_vh("B{x}{}", 8), std::invalid_argument);      // junk
  CHECK_THROWS_AS(parse_vh("", 8), std::invalid_argument);
}

TEST_CASE("the balanced empty element renders to the all-horizontal base") {
  VHElement empty;
  empty.balanced = true;
  const Covering base = render_square(empty, 8);
  CHECK(base == base_covering(8));
  CHECK(count_kind(base, TileKind::Monomino) == 8);
  CHECK(count_kind(base, TileKind::VDomino) == 0);
  CHECK(count_kind(base, TileKind::HDomino) == 28);
}

TEST_CASE("the first element of VD(8,7) renders with 7 verticals") {
  const Covering c = render_square(parse_vh("{6*}{1}{}", 8), 8);
  CHECK(count_kind(c, TileKind::Monomino) == 8);
  CHECK(count_kind(c, TileKind::VDomino) == 7);
  CHECK(count_kind(c, TileKind::HDomino) == 21);
  CHECK(validate_tatami(c).valid);
}

TEST_CASE("the 24 renders of VD(8,7) are distinct and tatami") {
  std::set<std::string> seen;
  gen_vh(8, 7, [&](const VHElementView& v) {
    const Covering c = render_square(v.materialize(), 8);
    CHECK(validate_tatami(c).valid);
    CHECK(count_kind(c, TileKind::VDomino) == 7);
    CHECK(seen.insert(serialize_tiles(c)).second);
  });
  CHECK(seen.size() == 24);
}

TEST_CASE("render_square rejects odd n and invalid elements") {
  VHElement empty;
  empty.balanced = true;
  CHECK_THROWS_AS(render_square(empty, 7), std::invalid_argument);
  VHElement bad;
  bad.balanced = true;
  bad.companions = {9};
  CHECK_THROWS_AS(render_square(bad, 8), std::invalid_argument);
}

TEST_CASE("rendered sets equal the oracle sets up to n = 10") {
  for (int n : {4, 6, 8, 10}) {
    std::map<int, std::set<std::string>> oracle_sets;
    OracleQuery q;
    q.rows = q.cols = n;
    q.monominoes = n;
    q.top_corners = true;
    q.classify = Classify::VerticalCount;
    enumerate_coverings(q, [&](const Covering& c) {
      oracle_sets[count_kind(c, TileKind::VDomino)].insert(serialize_tiles(c));
    });
    std::map<int, std::set<std::string>> rendered;
    for (int k = 0; k <= static_cast<int>(triangle(n - 2)); ++k) {
      gen_vh(n, k, [&](const VHElementView& v) {
        rendered[k].insert(serialize_tiles(render_square(v.materialize(), n)));
      });
      if (rendered[k].empty()) rendered.erase(k);
    }
    CHECK(oracle_sets == rendered);
  }
}
