#include "homobraid/surface.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "homobraid/error.hpp"
#include "union_find.hpp"

namespace homobraid {

CombinatorialSurface::CombinatorialSurface(std::vector<Polygon> polygons)
    : polygons_(std::move(polygons)) {
  std::size_t total = 0;
  offsets_.reserve(polygons_.size());
  for (const Polygon& p : polygons_) {
    if (p.empty()) throw Error(ErrorCode::kInvalidArgument, "polygon without sides");
    offsets_.push_back(total);
    total += p.size();
  }
  partner_.assign(total, -1);
  std::unordered_map<int, std::vector<std::size_t>> uses;
  for (std::size_t f = 0; f < polygons_.size(); ++f) {
    for (std::size_t k = 0; k < polygons_[f].size(); ++k) {
      uses[polygons_[f][k].edge].push_back(offsets_[f] + k);
    }
  }
  auto side_at = [this](std::size_t flat) -> const Side& {
    auto it = std::upper_bound(offsets_.begin(), offsets_.end(), flat);
    const auto f = static_cast<std::size_t>(it - offsets_.begin()) - 1;
    return polygons_[f][flat - offsets_[f]];
  };
  for (const auto& [edge, slots] : uses) {
    if (slots.size() > 2) {
      throw Error(ErrorCode::kEdgeOveruse,
                  "edge " + std::to_string(edge) + " used " + std::to_string(slots.size()) +
                      " times");
    }
    if (slots.size() == 2) {
      if (side_at(slots[0]).reversed == side_at(slots[1]).reversed) {
        throw Error(ErrorCode::kNonOrientable,
                    "edge " + std::to_string(edge) + " glued without orientation reversal");
      }
      partner_[slots[0]] = static_cast<long>(slots[1]);
      partner_[slots[1]] = static_cast<long>(slots[0]);
    }
  }
  edge_count_ = uses.size();
}

bool CombinatorialSurface::is_paired(SideRef s) const {
  return partner_.at(offsets_.at(s.face) + s.position) >= 0;
}

SideRef CombinatorialSurface::partner(SideRef s) const {
  const long flat = partner_.at(offsets_.at(s.face) + s.position);
  if (flat < 0) throw Error(ErrorCode::kInvalidArgument, "side is on the boundary");
  const auto f = static_cast<std::size_t>(
      std::upper_bound(offsets_.begin(), offsets_.end(), static_cast<std::size_t>(flat)) -
      offsets_.begin() - 1);
  return {f, static_cast<std::size_t>(flat) - offsets_[f]};
}

CombinatorialSurface build_surface(std::vector<Polygon> polygons) {
  return CombinatorialSurface(std::move(polygons));
}

CombinatorialSurface build_surface(const std::vector<std::vector<std::string>>& polygons) {
  std::map<std::string, int> ids;
  std::vector<Polygon> out;
  for (const auto& poly : polygons) {
    Polygon p;
    for (const std::string& name : poly) {
      const bool reversed = !name.empty() && name.front() == '-';
      const std::string label = reversed ? name.substr(1) : name;
      if (label.empty()) throw Error(ErrorCode::kParse, "empty edge label");
      auto [it, fresh] = ids.try_emplace(label, static_cast<int>(ids.size()));
      p.push_back({it->second, reversed});
    }
    out.push_back(std::move(p));
  }
  return CombinatorialSurface(std::move(out));
}

namespace {

// Corner k of a face sits between sides k-1 and k.
struct CornerIndex {
  std::vector<std::size_t> offsets;
  std::size_t total = 0;

  explicit CornerIndex(const CombinatorialSurface& s) {
    for (const Polygon& p : s.polygons()) {
      offsets.push_back(total);
      total += p.size();
    }
  }
  std::size_t at(std::size_t face, std::size_t k, std::size_t size) const {
    return offsets[face] + (k % size);
  }
};

SideRef next_boundary_side(const CombinatorialSurface& s, SideRef side) {
  const auto& polys = s.polygons();
  SideRef cand{side.face, (side.position + 1) % polys[side.face].size()};
  // Rotate around the end vertex until a boundary side leaves it.
  for (std::size_t guard = 0; s.is_paired(cand); ++guard) {
    if (guard > 4 * s.edge_count() + 4) {
      throw Error(ErrorCode::kInvalidArgument, "boundary walk does not close up");
    }
    const SideRef t = s.partner(cand);
    cand = {t.face, (t.position + 1) % polys[t.face].size()};
  }
  return cand;
}

struct Decomposition {
  std::vector<std::size_t> face_component;
  std::size_t components = 0;
};

Decomposition face_components(const CombinatorialSurface& s) {
  detail::UnionFind uf(s.face_count());
  for (std::size_t f = 0; f < s.face_count(); ++f) {
    for (std::size_t k = 0; k < s.polygons()[f].size(); ++k) {
      if (s.is_paired({f, k})) uf.unite(f, s.partner({f, k}).face);
    }
  }
  Decomposition d;
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t f = 0; f < s.face_count(); ++f) {
    auto [it, fresh] = ids.try_emplace(uf.find(f), ids.size());
    d.face_component.push_back(it->second);
  }
  d.components = ids.size();
  return d;
}

}  // namespace

std::vector<std::vector<SideRef>> boundary_cycles(const CombinatorialSurface& s) {
  std::vector<std::vector<SideRef>> cycles;
  std::vector<std::vector<bool>> seen;
  for (const Polygon& p : s.polygons()) seen.emplace_back(p.size(), false);
  for (std::size_t f = 0; f < s.face_count(); ++f) {
    for (std::size_t k = 0; k < s.polygons()[f].size(); ++k) {
      if (s.is_paired({f, k}) || seen[f][k]) continue;
      std::vector<SideRef> cycle;
      SideRef cur{f, k};
      while (!seen[cur.face][cur.position]) {
        seen[cur.face][cur.position] = true;
        cycle.push_back(cur);
        cur = next_boundary_side(s, cur);
      }
      if (!(cur == SideRef{f, k})) {
        throw Error(ErrorCode::kInvalidArgument, "boundary walk merges into another cycle");
      }
      cycles.push_back(std::move(cycle));
    }
  }
  return cycles;
}

std::vector<SurfaceInvariants> component_invariants(const CombinatorialSurface& s) {
  const Decomposition d = face_components(s);
  std::vector<SurfaceInvariants> out(d.components);

  CornerIndex corners(s);
  detail::UnionFind uf(corners.total);
  std::map<int, std::size_t> edge_component;
  for (std::size_t f = 0; f < s.face_count(); ++f) {
    const Polygon& p = s.polygons()[f];
    out[d.face_component[f]].faces += 1;
    for (std::size_t k = 0; k < p.size(); ++k) {
      edge_component[p[k].edge] = d.face_component[f];
      if (!s.is_paired({f, k})) continue;
      const SideRef t = s.partner({f, k});
      if (t.face < f || (t.face == f && t.position < k)) continue;
      const Polygon& q = s.polygons()[t.face];
      // Tail/head corners of each occurrence with respect to the edge direction.
      auto ends = [&](std::size_t face, std::size_t pos, const Side& side, std::size_t size) {
        std::size_t from = corners.at(face, pos, size);
        std::size_t to = corners.at(face, pos + 1, size);
        return side.reversed ? std::pair{to, from} : std::pair{from, to};
      };
      const auto [tail1, head1] = ends(f, k, p[k], p.size());
      const auto [tail2, head2] = ends(t.face, t.position, q[t.position], q.size());
      uf.unite(tail1, tail2);
      uf.unite(head1, head2);
    }
  }
  std::map<std::size_t, std::size_t> vertex_component;
  for (std::size_t f = 0; f < s.face_count(); ++f) {
    for (std::size_t k = 0; k < s.polygons()[f].size(); ++k) {
      vertex_component[uf.find(corners.at(f, k, s.polygons()[f].size()))] = d.face_component[f];
    }
  }
  for (const auto& [v, c] : vertex_component) out[c].vertices += 1;
  for (const auto& [e, c] : edge_component) out[c].edges += 1;
  for (const auto& cycle : boundary_cycles(s)) {
    out[d.face_component[cycle.front().face]].boundary_components += 1;
  }
  for (auto& inv : out) {
    inv.euler_char = inv.vertices - inv.edges + inv.faces;
    inv.connected = true;
    const int twice = 2 - inv.boundary_components - inv.euler_char;
    if (twice < 0 || twice % 2 != 0) {
      throw Error(ErrorCode::kInvalidArgument, "cell complex is not a surface with boundary");
    }
    inv.genus = twice / 2;
  }
  return out;
}

SurfaceInvariants surface_invariants(const CombinatorialSurface& s) {
  const auto parts = component_invariants(s);
  SurfaceInvariants total;
  total.connected = parts.size() <= 1;
  for (const auto& p : parts) {
    total.euler_char += p.euler_char;
    total.boundary_components += p.boundary_components;
    total.genus += p.genus;
    total.vertices += p.vertices;
    total.edges += p.edges;
    total.faces += p.faces;
  }
  return total;
}

std::size_t SurfaceBuilder::add_face(Polygon polygon) {
  for (const Side& side : polygon) {
    if (side.edge < 0 || side.edge >= next_edge_) {
      throw Error(ErrorCode::kInvalidArgument, "face uses an unallocated edge label");
    }
    if (static_cast<std::size_t>(side.edge) >= uses_.size()) {
      uses_.resize(static_cast<std::size_t>(side.edge) + 1, 0);
    }
    ++uses_[static_cast<std::size_t>(side.edge)];
  }
  faces_.push_back(std::move(polygon));
  alive_.push_back(true);
  return faces_.size() - 1;
}

std::size_t SurfaceBuilder::add_surface(const CombinatorialSurface& page) {
  std::map<int, int> fresh;
  const std::size_t first = faces_.size();
  for (const Polygon& p : page.polygons()) {
    Polygon copy;
    for (const Side& side : p) {
      auto [it, inserted] = fresh.try_emplace(side.edge, 0);
      if (inserted) it->second = new_edge();
      copy.push_back({it->second, side.reversed});
    }
    add_face(std::move(copy));
  }
  return first;
}

int SurfaceBuilder::label_uses(int edge) const {
  return static_cast<std::size_t>(edge) < uses_.size() ? uses_[static_cast<std::size_t>(edge)] : 0;
}

std::optional<std::size_t> SurfaceBuilder::complementary_offset(std::size_t a,
                                                                std::size_t b) const {
  const Polygon& pa = faces_.at(a);
  const Polygon& pb = faces_.at(b);
  if (pa.size() != pb.size() || pa.size() % 2 != 0) return std::nullopt;
  for (std::size_t offset = 0; offset < pa.size(); ++offset) {
    bool ok = true;
    for (std::size_t j = 0; j < pa.size() && ok; ++j) {
      const bool glued_a = label_uses(pa[j].edge) == 2;
      const bool glued_b = label_uses(pb[(j + offset) % pb.size()].edge) == 2;
      ok = glued_a != glued_b;
    }
    if (ok) return offset;
  }
  return std::nullopt;
}

void SurfaceBuilder::merge_faces(std::size_t a, std::size_t b, std::size_t offset) {
  if (a == b || !alive_.at(a) || !alive_.at(b)) {
    throw Error(ErrorCode::kInvalidArgument, "summing region faces must be distinct and live");
  }
  const Polygon pa = faces_[a];
  const Polygon pb = faces_[b];
  if (pa.size() != pb.size() || pa.size() % 2 != 0) {
    throw Error(ErrorCode::kInvalidArgument, "summing regions differ in side count");
  }
  Polygon merged;
  for (std::size_t j = 0; j < pa.size(); ++j) {
    const Side& sa = pa[j];
    const Side& sb = pb[(j + offset) % pb.size()];
    const bool glued_a = label_uses(sa.edge) == 2;
    const bool glued_b = label_uses(sb.edge) == 2;
    if (glued_a == glued_b) {
      throw Error(ErrorCode::kInvalidArgument,
                  "summing region sides do not alternate between the two pages");
    }
    const Side& keep = glued_a ? sa : sb;
    const Side& drop = glued_a ? sb : sa;
    --uses_[static_cast<std::size_t>(drop.edge)];
    merged.push_back(keep);
  }
  faces_[a] = std::move(merged);
  faces_[b].clear();
  alive_[b] = false;
}

CombinatorialSurface SurfaceBuilder::build(std::vector<long>* face_map) const {
  std::vector<Polygon> out;
  std::map<int, int> relabel;
  if (face_map) face_map->assign(faces_.size(), -1);
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    if (!alive_[f]) continue;
    if (face_map) (*face_map)[f] = static_cast<long>(out.size());
    Polygon p;
    for (const Side& side : faces_[f]) {
      auto [it, fresh] = relabel.try_emplace(side.edge, static_cast<int>(relabel.size()));
      p.push_back({it->second, side.reversed});
    }
    out.push_back(std::move(p));
  }
  return CombinatorialSurface(std::move(out));
}

CombinatorialSurface seifert_surface_of_word(const BraidWord& word) {
  SurfaceBuilder b;
  const auto& letters = word.letters();
  // attach[t] = {edge on lower disk, edge on upper disk} for letter t.
  std::vector<std::pair<int, int>> attach;
  for (std::size_t t = 0; t < letters.size(); ++t) attach.emplace_back(b.new_edge(), b.new_edge());
  for (int disk = 1; disk <= word.strands(); ++disk) {
    Polygon p;
    for (std::size_t t = 0; t < letters.size(); ++t) {
      const int idx = letters[t].index;
      if (idx == disk) {
        p.push_back({attach[t].first, false});
      } else if (idx == disk - 1) {
        p.push_back({attach[t].second, false});
      } else {
        continue;
      }
      p.push_back({b.new_edge(), false});
    }
    if (p.empty()) p.push_back({b.new_edge(), false});
    b.add_face(std::move(p));
  }
  for (std::size_t t = 0; t < letters.size(); ++t) {
    b.add_face({{attach[t].first, true},
                {b.new_edge(), false},
                {attach[t].second, true},
                {b.new_edge(), false}});
  }
  return b.build();
}

std::string write_surface(const CombinatorialSurface& surface) {
  std::ostringstream out;
  out << "homobraid-surface 1\n";
  for (const Polygon& p : surface.polygons()) {
    out << "polygon";
    for (const Side& s : p) out << ' ' << (s.reversed ? "-" : "") << 'e' << s.edge;
    out << '\n';
  }
  return out.str();
}

CombinatorialSurface read_surface(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  std::vector<std::vector<std::string>> polygons;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::string keyword;
    if (!(words >> keyword)) continue;
    if (!header) {
      std::string version;
      if (keyword != "homobraid-surface" || !(words >> version) || version != "1") {
        throw Error(ErrorCode::kParse, "expected header 'homobraid-surface 1'", lineno);
      }
      header = true;
      continue;
    }
    if (keyword != "polygon") {
      throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": unknown record '" +
                                         keyword + "'",
                  lineno);
    }
    std::vector<std::string> sides;
    for (std::string tok; words >> tok;) sides.push_back(tok);
    if (sides.empty()) {
      throw Error(ErrorCode::kParse, "line " + std::to_string(lineno) + ": polygon without sides",
                  lineno);
    }
    polygons.push_back(std::move(sides));
  }
  if (!header) throw Error(ErrorCode::kParse, "missing header 'homobraid-surface 1'");
  return build_surface(polygons);
}

}  // namespace homobraid
