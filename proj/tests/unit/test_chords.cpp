#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>

#include "homobraid/chords.hpp"
#include "homobraid/error.hpp"
#include "oracles.hpp"

using namespace homobraid;

namespace {

ChordConfig disk(std::size_t n, const oracle::Matching& a, const oracle::Matching& b) {
  ChordConfig cfg;
  for (std::size_t i = 0; i < n; ++i) cfg.points.push_back(std::to_string(i + 1));
  for (auto [x, y] : a) cfg.a.emplace_back(x, y);
  for (auto [x, y] : b) cfg.b.emplace_back(x, y);
  return cfg;
}

std::string fixture(const char* name) {
  std::ifstream in(std::string(HOMOBRAID_FIXTURES) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void check_pair(const ChordConfig& cfg, const WitnessPair& w) {
  const std::size_t n = cfg.points.size();
  CHECK(is_right_of(w.right.b, w.right.a, w.right.p, n));
  CHECK_FALSE(is_right_of(w.left.b, w.left.a, w.left.p, n));
  for (const Witness* x : {&w.right, &w.left}) {
    CHECK(std::find(cfg.a.begin(), cfg.a.end(), x->a) != cfg.a.end());
    CHECK(std::find(cfg.b.begin(), cfg.b.end(), x->b) != cfg.b.end());
    CHECK(x->a.has(x->p));
    CHECK(x->b.has(x->p));
  }
}

}  // namespace

TEST_CASE("right-of convention") {
  // points 1..4 are indices 0..3
  CHECK(is_right_of(Chord(0, 1), Chord(0, 2), 0, 4));
  CHECK_FALSE(is_right_of(Chord(0, 2), Chord(0, 1), 0, 4));
  CHECK(is_right_of(Chord(2, 3), Chord(2, 0), 2, 4));
  CHECK_THROWS_AS(is_right_of(Chord(0, 1), Chord(0, 1), 0, 4), Error);
  CHECK_THROWS_AS(is_right_of(Chord(0, 1), Chord(2, 3), 0, 4), Error);
}

TEST_CASE("right-of is antisymmetric") {
  for (std::size_t n = 3; n <= 8; ++n) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          if (x == p || y == p || x == y) continue;
          CHECK(is_right_of(Chord(p, x), Chord(p, y), p, n) !=
                is_right_of(Chord(p, y), Chord(p, x), p, n));
          CHECK(is_right_of(Chord(p, x), Chord(p, y), p, n) ==
                oracle::right_of(static_cast<int>(p), static_cast<int>(x), static_cast<int>(y),
                                 static_cast<int>(n)));
        }
      }
    }
  }
}

TEST_CASE("four-point swap") {
  const auto cfg = disk(4, {{0, 1}, {2, 3}}, {{0, 3}, {1, 2}});
  const auto r = find_witnesses(cfg);
  REQUIRE(std::holds_alternative<WitnessPair>(r));
  check_pair(cfg, std::get<WitnessPair>(r));
  const auto counts = oracle::brute_witnesses({{0, 1}, {2, 3}}, {{0, 3}, {1, 2}}, 4);
  CHECK(counts.right == 2);
  CHECK(counts.left == 2);
}

TEST_CASE("equal chord sets") {
  const auto cfg = disk(4, {{0, 1}, {2, 3}}, {{2, 3}, {0, 1}});
  CHECK(std::holds_alternative<ChordsEqual>(find_witnesses(cfg)));
}

TEST_CASE("validation names the violated clause") {
  auto message = [](const ChordConfig& cfg) {
    try {
      validate_chord_config(cfg);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kChordConfig);
      return std::string(e.what());
    }
    return std::string();
  };
  CHECK(message(disk(4, {{0, 2}, {1, 3}}, {{0, 2}, {1, 3}})).find("disjointness") != std::string::npos);
  CHECK(message(disk(4, {{0, 1}, {1, 2}}, {{0, 1}})).find("disjointness") != std::string::npos);
  CHECK(message(disk(4, {{0, 1}}, {{2, 3}})).find("same endpoints") != std::string::npos);
  auto poly = disk(4, {{0, 1}, {2, 3}}, {{0, 3}, {1, 2}});
  poly.side_of = {0, 0, 1, 1};
  CHECK(message(poly).find("same side") != std::string::npos);
  poly.side_of = {0, 1, 0, 1};
  CHECK(message(poly).find("runs") != std::string::npos);
}

TEST_CASE("swapping A and B swaps right and left") {
  std::vector<oracle::Matching> ms;
  oracle::noncrossing_matchings(0, 8, ms);
  for (const auto& a : ms) {
    for (const auto& b : ms) {
      if (a == b) continue;
      const auto ab = std::get<WitnessPair>(find_witnesses(disk(8, a, b)));
      const auto ba = std::get<WitnessPair>(find_witnesses(disk(8, b, a)));
      CHECK(ab.right.p == ba.left.p);
      CHECK(ab.left.p == ba.right.p);
      CHECK(ab.right.a == ba.left.b);
    }
  }
}

TEST_CASE("witnesses agree with brute force on partial matchings") {
  // Chord sets need not cover every point; unused points are skipped.
  const auto cfg = disk(6, {{0, 3}, {4, 5}}, {{0, 5}, {3, 4}});
  const auto w = std::get<WitnessPair>(find_witnesses(cfg));
  check_pair(cfg, w);
  const auto c = oracle::brute_witnesses({{0, 3}, {4, 5}}, {{0, 5}, {3, 4}}, 6);
  CHECK(c.right > 0);
  CHECK(c.left > 0);
}

TEST_CASE("four-gon configuration with six points") {
  const auto cfg = parse_chord_config(fixture("six_points_four_sides.chords"));
  CHECK(cfg.polygon_mode());
  const auto w = std::get<WitnessPair>(find_witnesses(cfg));
  check_pair(cfg, w);
  CHECK(w.different_sides);
  CHECK(cfg.points[w.right.p] == "p1");
  // p5 is a left witness whose chords end on different sides.
  const std::size_t p5 = 4;
  const Chord a(4, 1), b(4, 3);
  CHECK(std::find(cfg.a.begin(), cfg.a.end(), a) != cfg.a.end());
  CHECK(std::find(cfg.b.begin(), cfg.b.end(), b) != cfg.b.end());
  CHECK_FALSE(is_right_of(b, a, p5, cfg.points.size()));
  CHECK(cfg.side_of[a.other(p5)] != cfg.side_of[b.other(p5)]);
}

TEST_CASE("chord file parsing") {
  const auto cfg = parse_chord_config(fixture("swap4.chords"));
  CHECK(cfg.points.size() == 4);
  CHECK(parse_chord_config(write_chord_config(cfg)).a == cfg.a);
  const auto poly = parse_chord_config(fixture("six_points_four_sides.chords"));
  const auto again = parse_chord_config(write_chord_config(poly));
  CHECK(again.side_of.size() == 6);
  CHECK(write_chord_config(again) == write_chord_config(poly));
  for (const char* bad : {"points a b\nA a-b\n", "points a b\nA a-c\nB a-b\n", "points a a\nA\nB\n",
                          "points a b\nA ab\nB a-b\n", "foo\n", "points a-b c\nA\nB\n"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_chord_config(bad), Error);
  }
}
