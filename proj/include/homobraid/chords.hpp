#pragma once

// Chord sets in a disk (or a polygon) with endpoints on the boundary, and
// witnesses for two chord sets with the same endpoints being different.
//
// Points are indices into the circular order of boundary points. Convention:
// at a shared endpoint p, chord a is right of chord b when a's other endpoint
// comes first reading the circular order from just after p.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace homobraid {

struct Chord {
  std::size_t p = 0;
  std::size_t q = 0;

  Chord() = default;
  Chord(std::size_t x, std::size_t y) : p(x < y ? x : y), q(x < y ? y : x) {}

  bool has(std::size_t x) const { return p == x || q == x; }
  std::size_t other(std::size_t x) const { return x == p ? q : p; }
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

struct ChordConfig {
  std::vector<std::string> points;  // circular order
  // Polygon mode: side index of every point (sides are runs of consecutive
  // points). Empty in disk mode.
  std::vector<int> side_of;
  std::vector<Chord> a;
  std::vector<Chord> b;

  bool polygon_mode() const { return !side_of.empty(); }
};

// Throws Error(kChordConfig) unless a and b are distinct chords sharing
// exactly the endpoint p, or an index is out of range.
bool is_right_of(const Chord& a, const Chord& b, std::size_t p, std::size_t point_count);

// Throws Error(kChordConfig) naming the violated clause.
void validate_chord_config(const ChordConfig& cfg);

struct Witness {
  Chord a;  // from A
  Chord b;  // from B
  std::size_t p = 0;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct WitnessPair {
  Witness right;  // b right of a at p
  Witness left;   // b left of a at p
  // Polygon mode: in both witnesses the other endpoints of a and b lie on
  // different sides.
  bool different_sides = false;
};

struct ChordsEqual {};

using WitnessResult = std::variant<ChordsEqual, WitnessPair>;

// Scans endpoints in circular order and returns the first right and the
// first left witness (in polygon mode, preferring different-side ones).
WitnessResult find_witnesses(const ChordConfig& cfg);

// Text format ('#' comments):
//   points p1 p2 p3 p4
//   sides p1 p2 | p3 p4        (optional; runs of consecutive points)
//   A p1-p2 p3-p4
//   B p1-p4 p2-p3
ChordConfig parse_chord_config(std::string_view text);
std::string write_chord_config(const ChordConfig& cfg);
std::string render_chord(const ChordConfig& cfg, const Chord& c);

}  // namespace homobraid
