#pragma once

// Surfaces as polygons glued along labelled sides.
//
// Every polygon is listed counter-clockwise. A side carries an edge label and
// a direction; a label used by two sides glues them, and an orientable gluing
// requires the two sides to traverse the edge in opposite directions. Labels
// used once form the boundary.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homobraid/braid.hpp"

namespace homobraid {

struct Side {
  int edge = 0;
  bool reversed = false;

  friend bool operator==(const Side&, const Side&) = default;
};

using Polygon = std::vector<Side>;

struct SideRef {
  std::size_t face = 0;
  std::size_t position = 0;

  friend bool operator==(const SideRef&, const SideRef&) = default;
};

class CombinatorialSurface {
 public:
  CombinatorialSurface() = default;
  // Throws Error(kEdgeOveruse) for a label used more than twice and
  // Error(kNonOrientable) for a pair traversed in the same direction.
  explicit CombinatorialSurface(std::vector<Polygon> polygons);

  const std::vector<Polygon>& polygons() const noexcept { return polygons_; }
  std::size_t face_count() const noexcept { return polygons_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  bool is_paired(SideRef s) const;
  // The side glued to s; s must be paired.
  SideRef partner(SideRef s) const;

 private:
  std::vector<Polygon> polygons_;
  std::vector<long> partner_;  // flat side index of the partner, or -1
  std::vector<std::size_t> offsets_;
  std::size_t edge_count_ = 0;
};

CombinatorialSurface build_surface(std::vector<Polygon> polygons);
// Named form: "-x" traverses edge x backwards.
CombinatorialSurface build_surface(const std::vector<std::vector<std::string>>& polygons);

struct SurfaceInvariants {
  int euler_char = 0;
  int boundary_components = 0;
  int genus = 0;
  bool connected = true;
  int vertices = 0;
  int edges = 0;
  int faces = 0;
};

// Whole-surface totals; for disconnected input genus is the sum over
// components and connected is false.
SurfaceInvariants surface_invariants(const CombinatorialSurface& surface);
std::vector<SurfaceInvariants> component_invariants(const CombinatorialSurface& surface);

// Boundary walk: cycles of unpaired sides, each side appearing exactly once.
std::vector<std::vector<SideRef>> boundary_cycles(const CombinatorialSurface& surface);

// Incremental assembly with stable face ids. Used to build Seifert surfaces
// and to glue pages along summing regions.
class SurfaceBuilder {
 public:
  int new_edge() { return next_edge_++; }
  std::size_t add_face(Polygon polygon);
  // Appends all faces of `page` with fresh labels; returns the id of its first face.
  std::size_t add_surface(const CombinatorialSurface& page);

  const Polygon& face(std::size_t id) const { return faces_.at(id); }
  bool alive(std::size_t id) const { return alive_.at(id); }
  std::size_t face_slots() const noexcept { return faces_.size(); }
  int label_uses(int edge) const;

  // Identifies face b with face a, side j of a meeting side (j + offset) of b.
  // At every position exactly one of the two sides must be glued within its
  // own page. The merged face keeps the glued sides and replaces face a;
  // face b dies. Throws Error(kInvalidArgument) on a parity mismatch.
  void merge_faces(std::size_t a, std::size_t b, std::size_t offset);
  // Smallest offset making the two faces complementary, if any.
  std::optional<std::size_t> complementary_offset(std::size_t a, std::size_t b) const;

  // Alive faces in id order. face_map[id] is the new index or -1.
  CombinatorialSurface build(std::vector<long>* face_map = nullptr) const;

 private:
  std::vector<Polygon> faces_;
  std::vector<bool> alive_;
  std::vector<int> uses_;
  int next_edge_ = 0;
};

// Seifert surface of the closure: one disk per strand (bands attached in word
// order around each disk) plus one band rectangle per letter.
CombinatorialSurface seifert_surface_of_word(const BraidWord& word);

// Text format:
//   homobraid-surface 1
//   polygon a b -a c
// one polygon per line, sides counter-clockwise, '#' starts a comment.
std::string write_surface(const CombinatorialSurface& surface);
CombinatorialSurface read_surface(std::string_view text);

}  // namespace homobraid
