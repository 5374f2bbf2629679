#include <algorithm>
#include <map>
#include <set>

#include "homobraid/error.hpp"
#include "homobraid/open_book_tree.hpp"

namespace homobraid {
namespace {

struct LocalPage {
  SurfaceBuilder builder;
  std::map<std::size_t, std::size_t> region_face;  // edge -> face
};

using Incident = std::vector<std::pair<std::size_t, Placement>>;

void hopf_page(LocalPage& out, const Incident& incident) {
  SurfaceBuilder& b = out.builder;
  std::vector<std::pair<int, std::size_t>> slots;
  for (const auto& [edge, p] : incident) slots.emplace_back(std::get<RingSlot>(p).slot, edge);
  std::sort(slots.begin(), slots.end());
  if (slots.empty()) {
    const int x = b.new_edge();
    b.add_face({{b.new_edge(), false}, {x, false}, {b.new_edge(), false}, {x, true}});
    return;
  }
  const std::size_t squares = 2 * slots.size();
  std::vector<int> x(squares);
  for (auto& e : x) e = b.new_edge();
  for (std::size_t t = 0; t < squares; ++t) {
    const std::size_t f = b.add_face({{b.new_edge(), false},
                                      {x[(t + 1) % squares], false},
                                      {b.new_edge(), false},
                                      {x[t], true}});
    if (t % 2 == 0) out.region_face[slots[t / 2].second] = f;
  }
}

void torus_page(LocalPage& out, int twists, const Incident& incident) {
  SurfaceBuilder& b = out.builder;
  const int m = std::abs(twists);
  std::vector<int> low(static_cast<std::size_t>(m)), up(static_cast<std::size_t>(m));
  for (int t = 0; t < m; ++t) {
    low[static_cast<std::size_t>(t)] = b.new_edge();
    up[static_cast<std::size_t>(t)] = b.new_edge();
  }
  std::map<int, std::size_t> cocore;  // band -> edge
  std::map<DiskEnd, std::pair<std::size_t, const DiskRegion*>> disk_region;
  for (const auto& [edge, p] : incident) {
    if (const auto* bc = std::get_if<BandCocore>(&p)) cocore[bc->band] = edge;
    if (const auto* d = std::get_if<DiskRegion>(&p)) disk_region[d->disk] = {edge, d};
  }
  for (DiskEnd end : {DiskEnd::kBottom, DiskEnd::kTop}) {
    const auto& att = end == DiskEnd::kBottom ? low : up;
    auto it = disk_region.find(end);
    if (it == disk_region.end()) {
      Polygon disk;
      for (int t = 0; t < m; ++t) {
        disk.push_back({att[static_cast<std::size_t>(t)], false});
        disk.push_back({b.new_edge(), false});
      }
      b.add_face(std::move(disk));
      continue;
    }
    const DiskRegion& region = *it->second.second;
    Polygon center;
    std::vector<Polygon> caps;
    for (const auto& cap : region.caps) {
      const int chord = b.new_edge();
      center.push_back({chord, false});
      if (cap.empty()) continue;
      Polygon face{{b.new_edge(), false}};
      for (int band : cap) {
        face.push_back({att[static_cast<std::size_t>(band)], false});
        face.push_back({b.new_edge(), false});
      }
      face.push_back({chord, true});
      caps.push_back(std::move(face));
    }
    out.region_face[it->second.first] = b.add_face(std::move(center));
    for (auto& face : caps) b.add_face(std::move(face));
  }
  for (int t = 0; t < m; ++t) {
    const std::size_t f = b.add_face({{low[static_cast<std::size_t>(t)], true},
                                      {b.new_edge(), false},
                                      {up[static_cast<std::size_t>(t)], true},
                                      {b.new_edge(), false}});
    if (auto c = cocore.find(t); c != cocore.end()) out.region_face[c->second] = f;
  }
}

LocalPage base_vertex_page(const TreeOfOpenBooks& base, std::size_t v) {
  Incident incident;
  for (std::size_t i = 0; i < base.edges().size(); ++i) {
    const auto& e = base.edges()[i];
    if (e.a == v) incident.emplace_back(i, e.region.on_a);
    if (e.b == v) incident.emplace_back(i, e.region.on_b);
  }
  LocalPage out;
  const auto& kind = base.vertices()[v].kind;
  if (std::holds_alternative<HopfBand>(kind)) {
    hopf_page(out, incident);
  } else if (const auto* t = std::get_if<TorusBlock>(&kind)) {
    torus_page(out, t->twists, incident);
  } else {
    throw Error(ErrorCode::kMalformedTree, "base trees cannot contain contracted blocks");
  }
  return out;
}

// Pages of `subset` glued along the base edges inside it; the map gives the
// final face of every region on an edge leaving the subset.
CombinatorialSurface assemble(const TreeOfOpenBooks& base, const std::set<std::size_t>& subset,
                              std::map<std::size_t, std::size_t>* outer_faces) {
  SurfaceBuilder b;
  std::map<std::size_t, std::vector<std::size_t>> faces_of_edge;
  for (std::size_t v : subset) {
    LocalPage local = base_vertex_page(base, v);
    const std::size_t first = b.add_surface(local.builder.build());
    // build() keeps live faces in id order and no face of a fresh page is dead.
    for (const auto& [edge, face] : local.region_face) faces_of_edge[edge].push_back(first + face);
  }
  std::map<std::size_t, std::size_t> outer;
  for (const auto& [edge, faces] : faces_of_edge) {
    if (faces.size() == 1) {
      outer[edge] = faces.front();
      continue;
    }
    const auto offset = b.complementary_offset(faces[0], faces[1]);
    if (!offset) {
      throw Error(ErrorCode::kMalformedTree, "summing region on edge '" + base.edges()[edge].name +
                                                 "' does not alternate between the pages");
    }
    b.merge_faces(faces[0], faces[1], *offset);
  }
  std::vector<long> face_map;
  CombinatorialSurface surface = b.build(&face_map);
  if (outer_faces) {
    for (const auto& [edge, face] : outer) {
      (*outer_faces)[edge] = static_cast<std::size_t>(face_map[face]);
    }
  }
  return surface;
}

}  // namespace

VertexPage vertex_page(const TreeOfOpenBooks& tree, std::size_t v) {
  if (v >= tree.size()) throw Error(ErrorCode::kInvalidArgument, "no such vertex");
  const TreeOfOpenBooks& base = tree.base() ? *tree.base() : tree;
  const auto mem = tree.members(v);
  std::map<std::size_t, std::size_t> outer;
  VertexPage out{assemble(base, {mem.begin(), mem.end()}, &outer), {}};
  for (std::size_t i = 0; i < tree.edges().size(); ++i) {
    const auto& e = tree.edges()[i];
    if (e.a != v && e.b != v) continue;
    const std::size_t base_edge = tree.base() ? *e.base_edge : i;
    out.region_faces.emplace_back(i, outer.at(base_edge));
  }
  return out;
}

CombinatorialSurface page_of_tree(const TreeOfOpenBooks& tree) {
  const TreeOfOpenBooks& base = tree.base() ? *tree.base() : tree;
  std::set<std::size_t> all;
  for (std::size_t v = 0; v < base.size(); ++v) all.insert(v);
  return assemble(base, all, nullptr);
}

}  // namespace homobraid
