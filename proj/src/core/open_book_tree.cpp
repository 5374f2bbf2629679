#include "homobraid/open_book_tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "homobraid/error.hpp"
#include "homobraid/primeness.hpp"
#include "union_find.hpp"

namespace homobraid {

std::string_view veering_name(Veering v) {
  switch (v) {
    case Veering::kStrictlyRight: return "right";
    case Veering::kStrictlyLeft: return "left";
    case Veering::kUnknown: return "unknown";
  }
  return "unknown";
}

Veering veering_of(Sign s) {
  return s == Sign::kPositive ? Veering::kStrictlyRight : Veering::kStrictlyLeft;
}

std::string_view essentiality_name(Essentiality e) {
  switch (e) {
    case Essentiality::kNotEssential: return "none";
    case Essentiality::kSeesawAtLeastFour: return "seesaw-at-least-four";
    case Essentiality::kAnnulusCocore: return "annulus-cocore";
    case Essentiality::kAssertedByInput: return "asserted-by-input";
  }
  return "none";
}

std::string_view cited_result_name(CitedResult r) {
  switch (r) {
    case CitedResult::kStrictlyVeeringHasNoFixedArcs: return "strictly-veering-has-no-fixed-arcs";
    case CitedResult::kSameVeeringSumStaysStrict: return "same-veering-sum-stays-strict";
    case CitedResult::kOppositeVeeringSumHasNoFixedArcs:
      return "opposite-veering-sum-has-no-fixed-arcs";
    case CitedResult::kVeeringTreeHasNoFixedArcs: return "veering-tree-has-no-fixed-arcs";
    case CitedResult::kFigureEightPlumbingKeepsNoFixedArcs:
      return "figure-eight-plumbing-keeps-no-fixed-arcs";
  }
  return "unknown";
}

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw Error(ErrorCode::kMalformedTree, what);
}

int placement_sides(const Placement& p) {
  if (const auto* d = std::get_if<DiskRegion>(&p)) return static_cast<int>(d->caps.size());
  return 4;
}

void check_disk_region(const DiskRegion& d, int bands, const std::string& where) {
  const std::size_t n = d.caps.size();
  if (n < 2 || n % 2 != 0) malformed(where + ": disk region needs an even number >= 2 of sides");
  for (std::size_t j = 0; j < n; ++j) {
    if (d.caps[j].empty() == d.caps[(j + 1) % n].empty()) {
      malformed(where + ": disk region sides must alternate between the two pages");
    }
  }
  std::vector<int> order;
  for (const auto& cap : d.caps) order.insert(order.end(), cap.begin(), cap.end());
  if (static_cast<int>(order.size()) != bands) {
    malformed(where + ": disk region caps must cover each band exactly once");
  }
  for (std::size_t t = 0; t < order.size(); ++t) {
    const int expected = (order.front() + static_cast<int>(t)) % bands;
    if (order[t] != expected) {
      malformed(where + ": disk region caps must follow the band attachment order");
    }
  }
}

bool overlaps(const Placement& p, const Placement& q) {
  if (p.index() != q.index()) return false;
  if (const auto* r = std::get_if<RingSlot>(&p)) return r->slot == std::get<RingSlot>(q).slot;
  if (const auto* b = std::get_if<BandCocore>(&p)) return b->band == std::get<BandCocore>(q).band;
  return std::get<DiskRegion>(p).disk == std::get<DiskRegion>(q).disk;
}

}  // namespace

TreeOfOpenBooks::TreeOfOpenBooks(std::vector<OpenBookVertex> vertices, std::vector<TreeEdge> edges,
                                 std::shared_ptr<const TreeOfOpenBooks> base)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), base_(std::move(base)) {
  const std::size_t n = vertices_.size();
  if (n == 0) malformed("a tree of open books needs at least one vertex");
  if (edges_.size() != n - 1) malformed("a tree on " + std::to_string(n) + " vertices has " +
                                        std::to_string(n - 1) + " edges");
  std::set<std::string> names;
  for (const auto& v : vertices_) {
    if (v.name.empty() || v.name.find_first_of(" \t\n,/") != std::string::npos) {
      malformed("vertex name '" + v.name + "' is not a plain identifier");
    }
    if (!names.insert(v.name).second) malformed("duplicate vertex name '" + v.name + "'");
    if (const auto* t = std::get_if<TorusBlock>(&v.kind)) {
      if (t->twists > -2 && t->twists < 2) malformed(v.name + ": torus block needs |k| >= 2");
      const Veering expected = veering_of(t->twists > 0 ? Sign::kPositive : Sign::kNegative);
      if (v.veering != Veering::kUnknown && v.veering != expected) {
        malformed(v.name + ": veering contradicts the sign of the torus block");
      }
    } else if (const auto* h = std::get_if<HopfBand>(&v.kind)) {
      if (v.veering != Veering::kUnknown && v.veering != veering_of(h->sign)) {
        malformed(v.name + ": veering contradicts the sign of the Hopf band");
      }
    } else if (!base_) {
      malformed(v.name + ": contracted blocks only exist in block trees");
    }
  }
  adjacency_.assign(n, {});
  detail::UnionFind uf(n);
  for (const auto& e : edges_) {
    if (e.a >= n || e.b >= n || e.a == e.b) malformed("edge '" + e.name + "' has bad endpoints");
    if (!uf.unite(e.a, e.b)) malformed("edges contain a cycle at '" + e.name + "'");
    adjacency_[e.a].push_back(e.b);
    adjacency_[e.b].push_back(e.a);
  }
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());

  if (base_) {
    for (const auto& e : edges_) {
      if (!e.base_edge || *e.base_edge >= base_->edges().size()) {
        malformed("block tree edge '" + e.name + "' lacks its base edge");
      }
      const auto& be = base_->edges()[*e.base_edge];
      const auto ma = members(e.a);
      const auto mb = members(e.b);
      auto has = [](const std::vector<std::size_t>& m, std::size_t x) {
        return std::find(m.begin(), m.end(), x) != m.end();
      };
      if (!has(ma, be.a) || !has(mb, be.b)) {
        malformed("block tree edge '" + e.name + "' does not match its base edge");
      }
    }
    return;
  }

  std::vector<std::vector<const Placement*>> at_vertex(n);
  for (const auto& e : edges_) {
    if (e.base_edge) malformed("edge '" + e.name + "' refers to a base tree that does not exist");
    const auto& r = e.region;
    for (const auto& [v, p] : {std::pair{e.a, &r.on_a}, std::pair{e.b, &r.on_b}}) {
      const std::string where = "edge '" + e.name + "' at " + vertices_[v].name;
      const auto& kind = vertices_[v].kind;
      if (std::holds_alternative<HopfBand>(kind)) {
        const auto* slot = std::get_if<RingSlot>(p);
        if (!slot || slot->slot < 0) malformed(where + ": Hopf bands take ring:<slot> placements");
      } else if (const auto* t = std::get_if<TorusBlock>(&kind)) {
        const int bands = std::abs(t->twists);
        if (std::holds_alternative<RingSlot>(*p)) {
          malformed(where + ": torus blocks take band or disk placements");
        }
        if (const auto* b = std::get_if<BandCocore>(p); b && (b->band < 0 || b->band >= bands)) {
          malformed(where + ": band index out of range");
        }
        if (const auto* d = std::get_if<DiskRegion>(p)) check_disk_region(*d, bands, where);
      }
      if (placement_sides(*p) != r.sides) malformed(where + ": placement and side count differ");
      for (const Placement* q : at_vertex[v]) {
        if (overlaps(*p, *q)) {
          throw Error(ErrorCode::kRegionOverlap, where + ": summing regions overlap");
        }
      }
      at_vertex[v].push_back(p);
    }
    const auto* da = std::get_if<DiskRegion>(&r.on_a);
    const auto* db = std::get_if<DiskRegion>(&r.on_b);
    if (da && db) {
      for (std::size_t j = 0; j < da->caps.size(); ++j) {
        if (da->caps[j].empty() == db->caps[j].empty()) {
          malformed("edge '" + e.name + "': disk regions do not alternate between the pages");
        }
      }
    }
  }
}

bool TreeOfOpenBooks::adjacent(std::size_t u, std::size_t v) const {
  const auto& adj = adjacency_.at(u);
  return std::binary_search(adj.begin(), adj.end(), v);
}

std::optional<std::size_t> TreeOfOpenBooks::edge_between(std::size_t u, std::size_t v) const {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto& e = edges_[i];
    if ((e.a == u && e.b == v) || (e.a == v && e.b == u)) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> TreeOfOpenBooks::find_vertex(std::string_view name) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (vertices_[i].name == name) return i;
  }
  return std::nullopt;
}

std::vector<std::size_t> TreeOfOpenBooks::members(std::size_t v) const {
  if (!base_) return {v};
  if (const auto* c = std::get_if<CompositeBlock>(&vertices_.at(v).kind)) return c->members;
  // Singleton blocks keep their original kind; find the base vertex by name.
  if (auto id = base_->find_vertex(vertices_[v].name)) return {*id};
  malformed("block vertex '" + vertices_[v].name + "' has no base vertex");
}

TreeOfOpenBooks braid_tree(const BraidWord& word) {
  if (!is_homogeneous(word)) throw Error(ErrorCode::kNotHomogeneous, "word is not homogeneous");
  if (word.strands() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "braid trees need at least two strands");
  }
  if (is_split(word)) throw Error(ErrorCode::kSplit, "word is split");
  if (!(destabilize_fully(word).reduced == word)) {
    throw Error(ErrorCode::kDestabilizable, "word admits a Markov destabilization");
  }
  const int n = word.strands();
  const auto profile = homogeneity_profile(word);
  std::vector<OpenBookVertex> vertices;
  for (int i = 1; i < n; ++i) {
    const int count = word.count(i);
    if (count < 2) {
      throw Error(ErrorCode::kDestabilizable,
                  "generator " + std::to_string(i) + " occurs once; its torus block is trivial");
    }
    const Sign sign = *profile.sign_of(i);
    vertices.push_back({"s" + std::to_string(i), TorusBlock{sign_value(sign) * count},
                        veering_of(sign)});
  }
  std::vector<TreeEdge> edges;
  for (int i = 2; i < n; ++i) {
    // Blocks V_1..V_g of W_{i-1,i}; entries are (generator, band index).
    std::vector<std::pair<int, std::vector<int>>> blocks;
    std::map<int, int> seen;
    for (const Letter& l : word.letters()) {
      if (l.index != i - 1 && l.index != i) continue;
      if (blocks.empty() || blocks.back().first != l.index) blocks.push_back({l.index, {}});
      blocks.back().second.push_back(seen[l.index]++);
    }
    const std::size_t g = blocks.size();
    if (g % 2 == 1) {
      // First and last block use the same generator and share a cap.
      auto& first = blocks.front().second;
      auto last = blocks.back().second;
      last.insert(last.end(), first.begin(), first.end());
      first = std::move(last);
      blocks.pop_back();
    }
    DiskRegion lower{DiskEnd::kTop, {}};     // on the page of generator i-1
    DiskRegion upper{DiskEnd::kBottom, {}};  // on the page of generator i
    for (const auto& [gen, bands] : blocks) {
      lower.caps.push_back(gen == i - 1 ? bands : std::vector<int>{});
      upper.caps.push_back(gen == i ? bands : std::vector<int>{});
    }
    const int sides = static_cast<int>(blocks.size());
    const Essentiality ess =
        g >= 4 ? Essentiality::kSeesawAtLeastFour : Essentiality::kNotEssential;
    edges.push_back({"strand" + std::to_string(i), static_cast<std::size_t>(i - 2),
                     static_cast<std::size_t>(i - 1), SummingRegion{sides, lower, upper, ess},
                     std::nullopt});
  }
  return TreeOfOpenBooks(std::move(vertices), std::move(edges));
}

bool is_veering_bipartite(const TreeOfOpenBooks& tree) {
  for (const auto& e : tree.edges()) {
    const Veering a = tree.vertices()[e.a].veering;
    const Veering b = tree.vertices()[e.b].veering;
    if (a == Veering::kUnknown || a == b) return false;
  }
  return true;
}

TreeOfOpenBooks block_tree(const TreeOfOpenBooks& tree) {
  const std::size_t n = tree.size();
  for (const auto& v : tree.vertices()) {
    if (v.veering == Veering::kUnknown) {
      throw Error(ErrorCode::kUnknownVeering, "vertex '" + v.name + "' has no certified veering");
    }
  }
  detail::UnionFind uf(n);
  for (const auto& e : tree.edges()) {
    if (tree.vertices()[e.a].veering == tree.vertices()[e.b].veering) uf.unite(e.a, e.b);
  }
  if (uf.classes() == n) return tree;

  std::map<std::size_t, std::size_t> block_of_root;
  std::vector<std::size_t> block(n);
  std::vector<std::vector<std::size_t>> block_members;
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, fresh] = block_of_root.try_emplace(uf.find(v), block_members.size());
    if (fresh) block_members.emplace_back();
    block[v] = it->second;
    block_members[it->second].push_back(v);
  }

  auto base = tree.base() ? tree.base() : std::make_shared<const TreeOfOpenBooks>(tree);
  std::vector<OpenBookVertex> vertices;
  for (const auto& mem : block_members) {
    if (mem.size() == 1) {
      vertices.push_back(tree.vertices()[mem.front()]);
      continue;
    }
    CompositeBlock comp;
    std::string name;
    for (std::size_t v : mem) {
      const auto sub = tree.members(v);
      comp.members.insert(comp.members.end(), sub.begin(), sub.end());
      name += (name.empty() ? "" : "+") + tree.vertices()[v].name;
    }
    std::sort(comp.members.begin(), comp.members.end());
    vertices.push_back({name, comp, tree.vertices()[mem.front()].veering});
  }
  std::vector<TreeEdge> edges;
  for (std::size_t i = 0; i < tree.edges().size(); ++i) {
    const auto& e = tree.edges()[i];
    if (block[e.a] == block[e.b]) continue;
    TreeEdge be = e;
    be.a = block[e.a];
    be.b = block[e.b];
    be.base_edge = tree.base() ? e.base_edge : std::optional<std::size_t>(i);
    edges.push_back(std::move(be));
  }
  return TreeOfOpenBooks(std::move(vertices), std::move(edges), std::move(base));
}

void validate_growing(const TreeOfOpenBooks& tree, const Growing& growing) {
  const std::size_t n = tree.size();
  if (growing.order.size() != n) {
    throw Error(ErrorCode::kInvalidGrowing, "a growing lists every vertex exactly once");
  }
  std::vector<bool> grown(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t v = growing.order[j];
    if (v >= n || grown[v]) {
      throw Error(ErrorCode::kInvalidGrowing, "a growing lists every vertex exactly once");
    }
    if (j > 0) {
      const auto& adj = tree.neighbors(v);
      if (std::none_of(adj.begin(), adj.end(), [&](std::size_t u) { return grown[u]; })) {
        throw Error(ErrorCode::kInvalidGrowing,
                    "vertex '" + tree.vertices()[v].name + "' is not adjacent to a grown vertex");
      }
    }
    grown[v] = true;
  }
}

GrowingRange::iterator::iterator(const TreeOfOpenBooks* tree)
    : tree_(tree), grown_(tree->size(), false), done_(false) {
  descend();
}

std::vector<std::size_t> GrowingRange::iterator::frontier() const {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < tree_->size(); ++v) {
    if (grown_[v]) continue;
    if (current_.order.empty()) {
      out.push_back(v);
      continue;
    }
    const auto& adj = tree_->neighbors(v);
    if (std::any_of(adj.begin(), adj.end(), [&](std::size_t u) { return grown_[u]; })) {
      out.push_back(v);
    }
  }
  return out;
}

void GrowingRange::iterator::descend() {
  while (current_.order.size() < tree_->size()) {
    candidates_.push_back(frontier());
    choice_.push_back(0);
    const std::size_t v = candidates_.back().front();
    current_.order.push_back(v);
    grown_[v] = true;
  }
}

GrowingRange::iterator& GrowingRange::iterator::operator++() {
  while (!choice_.empty()) {
    grown_[current_.order.back()] = false;
    current_.order.pop_back();
    if (++choice_.back() < candidates_.back().size()) {
      const std::size_t v = candidates_.back()[choice_.back()];
      current_.order.push_back(v);
      grown_[v] = true;
      descend();
      return *this;
    }
    candidates_.pop_back();
    choice_.pop_back();
  }
  done_ = true;
  return *this;
}

std::vector<Growing> all_growings(const TreeOfOpenBooks& tree) {
  std::vector<Growing> out;
  for (const Growing& g : growings(tree)) out.push_back(g);
  return out;
}

std::string MonodromyWord::render() const {
  std::string out;
  for (const auto& l : letters) out += (out.empty() ? "" : ".") + l;
  return out;
}

MonodromyWord growing_word(const TreeOfOpenBooks& tree, const Growing& growing) {
  validate_growing(tree, growing);
  MonodromyWord w;
  for (auto it = growing.order.rbegin(); it != growing.order.rend(); ++it) {
    w.letters.push_back(tree.vertices()[*it].name);
  }
  return w;
}

CommutationRelation CommutationRelation::from_tree(const TreeOfOpenBooks& tree) {
  std::set<std::string> alphabet;
  for (const auto& v : tree.vertices()) alphabet.insert(v.name);
  CommutationRelation rel(std::move(alphabet));
  for (std::size_t u = 0; u < tree.size(); ++u) {
    for (std::size_t v = u + 1; v < tree.size(); ++v) {
      if (!tree.adjacent(u, v)) rel.add(tree.vertices()[u].name, tree.vertices()[v].name);
    }
  }
  return rel;
}

void CommutationRelation::add(const std::string& a, const std::string& b) {
  if (a == b) throw Error(ErrorCode::kInvalidArgument, "a letter does not commute with itself");
  if (!alphabet_.count(a) || !alphabet_.count(b)) {
    throw Error(ErrorCode::kAlphabetMismatch, "commuting letters must be in the alphabet");
  }
  pairs_.insert(std::minmax(a, b));
}

bool CommutationRelation::commute(const std::string& a, const std::string& b) const {
  return a != b && pairs_.count(std::minmax(a, b)) > 0;
}

std::vector<std::vector<std::string>> foata_normal_form(const std::vector<std::string>& word,
                                                        const CommutationRelation& rel) {
  // Level of a letter: one more than the deepest earlier letter it does not
  // commute with.
  std::vector<std::size_t> level(word.size(), 0);
  std::size_t depth = 0;
  for (std::size_t j = 0; j < word.size(); ++j) {
    std::size_t lv = 0;
    for (std::size_t i = 0; i < j; ++i) {
      if (!rel.commute(word[i], word[j])) lv = std::max(lv, level[i] + 1);
    }
    level[j] = lv;
    depth = std::max(depth, lv + 1);
  }
  std::vector<std::vector<std::string>> steps(depth);
  for (std::size_t j = 0; j < word.size(); ++j) steps[level[j]].push_back(word[j]);
  for (auto& s : steps) std::sort(s.begin(), s.end());
  return steps;
}

bool trace_cyclic_equivalent(const std::vector<std::string>& w1,
                             const std::vector<std::string>& w2,
                             const CommutationRelation& rel) {
  const std::set<std::string> a(w1.begin(), w1.end());
  const std::set<std::string> b(w2.begin(), w2.end());
  if (a != b) throw Error(ErrorCode::kAlphabetMismatch, "words use different letters");
  for (const auto& l : a) {
    if (!rel.alphabet().count(l)) {
      throw Error(ErrorCode::kAlphabetMismatch, "letter '" + l + "' is outside the alphabet");
    }
  }
  if (w1.size() != w2.size()) return false;
  // Orbit of w1 under moving a minimal letter of the trace to the end.
  using Form = std::vector<std::vector<std::string>>;
  const Form target = foata_normal_form(w2, rel);
  std::set<Form> seen{foata_normal_form(w1, rel)};
  std::vector<Form> todo(seen.begin(), seen.end());
  while (!todo.empty()) {
    const Form f = std::move(todo.back());
    todo.pop_back();
    if (f == target) return true;
    if (f.empty()) continue;
    for (std::size_t k = 0; k < f[0].size(); ++k) {
      std::vector<std::string> word;
      for (std::size_t s = 0; s < f.size(); ++s) {
        for (std::size_t i = 0; i < f[s].size(); ++i) {
          if (s != 0 || i != k) word.push_back(f[s][i]);
        }
      }
      word.push_back(f[0][k]);
      Form next = foata_normal_form(word, rel);
      if (seen.insert(next).second) todo.push_back(std::move(next));
    }
  }
  return false;
}

std::string TwistSymbol::render() const {
  return (sign == Sign::kPositive ? "+" : "-") + vertex + "." + std::to_string(index);
}

Growing expand_growing(const TreeOfOpenBooks& tree, const Growing& growing) {
  validate_growing(tree, growing);
  if (!tree.base()) return growing;
  const TreeOfOpenBooks& base = *tree.base();
  std::vector<bool> grown(base.size(), false);
  Growing out;
  for (std::size_t j = 0; j < growing.order.size(); ++j) {
    const std::size_t block = growing.order[j];
    const auto mem = tree.members(block);
    const std::set<std::size_t> inside(mem.begin(), mem.end());
    std::size_t entry = *inside.begin();
    if (j > 0) {
      for (std::size_t u : tree.neighbors(block)) {
        const auto e = tree.edge_between(block, u);
        const auto& be = base.edges()[*tree.edges()[*e].base_edge];
        const std::size_t outside = inside.count(be.a) ? be.b : be.a;
        if (grown[outside]) {
          entry = inside.count(be.a) ? be.a : be.b;
          break;
        }
      }
    }
    std::queue<std::size_t> todo;
    todo.push(entry);
    grown[entry] = true;
    while (!todo.empty()) {
      const std::size_t v = todo.front();
      todo.pop();
      out.order.push_back(v);
      for (std::size_t u : base.neighbors(v)) {
        if (inside.count(u) && !grown[u]) {
          grown[u] = true;
          todo.push(u);
        }
      }
    }
  }
  validate_growing(base, out);
  return out;
}

std::vector<TwistSymbol> monodromy_factorization(const TreeOfOpenBooks& tree,
                                                 const Growing& growing) {
  const Growing flat = expand_growing(tree, growing);
  const TreeOfOpenBooks& base = tree.base() ? *tree.base() : tree;
  std::vector<TwistSymbol> out;
  for (std::size_t v : flat.order) {
    const auto& vert = base.vertices()[v];
    if (const auto* t = std::get_if<TorusBlock>(&vert.kind)) {
      const Sign s = t->twists > 0 ? Sign::kPositive : Sign::kNegative;
      for (int i = 1; i < std::abs(t->twists); ++i) out.push_back({vert.name, i, s});
    } else if (const auto* h = std::get_if<HopfBand>(&vert.kind)) {
      out.push_back({vert.name, 1, h->sign});
    }
  }
  return out;
}

namespace {

Growing breadth_first_growing(const TreeOfOpenBooks& tree) {
  Growing g;
  std::vector<bool> seen(tree.size(), false);
  std::queue<std::size_t> todo;
  todo.push(0);
  seen[0] = true;
  while (!todo.empty()) {
    const std::size_t v = todo.front();
    todo.pop();
    g.order.push_back(v);
    for (std::size_t u : tree.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = true;
        todo.push(u);
      }
    }
  }
  return g;
}

std::vector<Citation> citation_chain(const TreeOfOpenBooks& blocks, const Growing& order) {
  std::vector<Citation> out;
  for (std::size_t b : order.order) {
    if (blocks.members(b).size() > 1) {
      out.push_back({CitedResult::kSameVeeringSumStaysStrict, blocks.vertices()[b].name});
    }
  }
  if (blocks.size() == 1) {
    out.push_back({CitedResult::kStrictlyVeeringHasNoFixedArcs, blocks.vertices()[0].name});
  }
  std::vector<bool> grown(blocks.size(), false);
  for (std::size_t b : order.order) {
    for (std::size_t u : blocks.neighbors(b)) {
      if (grown[u]) {
        out.push_back({CitedResult::kOppositeVeeringSumHasNoFixedArcs,
                       blocks.edges()[*blocks.edge_between(b, u)].name});
      }
    }
    grown[b] = true;
  }
  out.push_back({CitedResult::kVeeringTreeHasNoFixedArcs, "tree"});
  return out;
}

}  // namespace

PrimenessCertificate primeness_certificate(const TreeOfOpenBooks& tree) {
  for (const auto& v : tree.vertices()) {
    if (v.veering == Veering::kUnknown) {
      throw Error(ErrorCode::kUnknownVeering, "vertex '" + v.name + "' has no certified veering");
    }
  }
  for (std::size_t i = 0; i < tree.edges().size(); ++i) {
    const auto& e = tree.edges()[i];
    if (!e.region.is_essential()) {
      throw Error(ErrorCode::kNonEssentialEdge,
                  "summing region on edge '" + e.name + "' (" + std::to_string(e.region.sides) +
                      " sides) is not essential",
                  i);
    }
  }
  TreeOfOpenBooks blocks = block_tree(tree);
  Growing block_growing = breadth_first_growing(blocks);
  Growing flat = expand_growing(blocks, block_growing);
  auto monodromy = monodromy_factorization(blocks, block_growing);
  auto citations = citation_chain(blocks, block_growing);
  return {std::move(blocks), std::move(block_growing), std::move(flat), std::move(monodromy),
          std::move(citations)};
}

std::optional<std::string> validate_certificate(const PrimenessCertificate& cert) {
  const TreeOfOpenBooks& blocks = cert.block_tree;
  if (!is_veering_bipartite(blocks)) return "block tree is not bipartite with respect to veering";
  for (const auto& e : blocks.edges()) {
    if (!e.region.is_essential()) return "edge '" + e.name + "' is not essential";
  }
  const TreeOfOpenBooks& base = blocks.base() ? *blocks.base() : blocks;
  for (const auto& v : base.vertices()) {
    if (v.veering == Veering::kUnknown) return "vertex '" + v.name + "' has unknown veering";
  }
  for (const auto& e : base.edges()) {
    if (!e.region.is_essential()) return "base edge '" + e.name + "' is not essential";
  }
  try {
    validate_growing(blocks, cert.block_growing);
    validate_growing(base, cert.growing);
  } catch (const Error& err) {
    return std::string("invalid growing: ") + err.what();
  }
  // Every block is grown completely before the next one starts.
  std::map<std::size_t, std::size_t> block_of;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t v : blocks.members(b)) block_of[v] = b;
  }
  std::vector<std::size_t> seq;
  for (std::size_t v : cert.growing.order) {
    if (seq.empty() || seq.back() != block_of.at(v)) seq.push_back(block_of.at(v));
  }
  if (seq != cert.block_growing.order) return "growing leaves a block before exhausting it";
  if (cert.monodromy != monodromy_factorization(blocks, cert.block_growing)) {
    return "monodromy word does not match the growing";
  }
  const int chi = surface_invariants(page_of_tree(blocks)).euler_char;
  if (static_cast<int>(cert.monodromy.size()) != 1 - chi) {
    return "monodromy length differs from the first Betti number of the page";
  }
  std::vector<std::pair<CitedResult, std::string>> got;
  for (const auto& c : cert.citations) got.emplace_back(c.result, c.subject);
  std::vector<std::pair<CitedResult, std::string>> want;
  for (const auto& c : citation_chain(blocks, cert.block_growing)) want.emplace_back(c.result, c.subject);
  if (got != want) return "citation chain does not match the block structure";
  return std::nullopt;
}

TreeOfOpenBooks arborescent_tree(const PlaneTree& plane) {
  const std::size_t n = plane.signs.size();
  if (n == 0 || plane.rotation.size() != n) malformed("plane tree needs a sign and rotation per vertex");
  std::size_t degree_sum = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& rot = plane.rotation[v];
    std::set<std::size_t> distinct(rot.begin(), rot.end());
    if (distinct.size() != rot.size()) malformed("circular order repeats a neighbour");
    for (std::size_t u : rot) {
      if (u >= n || u == v) malformed("circular order names a bad neighbour");
      const auto& back = plane.rotation[u];
      if (std::find(back.begin(), back.end(), v) == back.end()) {
        malformed("circular orders are not symmetric");
      }
    }
    degree_sum += rot.size();
  }
  if (degree_sum != 2 * (n - 1)) malformed("plane graph is not a tree");

  // Orient from vertex 0; rotations of non-root vertices start at the parent.
  std::vector<long> parent(n, -1);
  std::vector<std::size_t> order{0};
  std::vector<bool> seen(n, false);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t u : plane.rotation[order[i]]) {
      if (!seen[u]) {
        seen[u] = true;
        parent[u] = static_cast<long>(order[i]);
        order.push_back(u);
      }
    }
  }
  if (order.size() != n) malformed("plane graph is not connected");
  auto slot_of = [&](std::size_t v, std::size_t u) {
    const auto& rot = plane.rotation[v];
    const auto pos = static_cast<std::size_t>(std::find(rot.begin(), rot.end(), u) - rot.begin());
    std::size_t start = 0;
    if (parent[v] >= 0) {
      start = static_cast<std::size_t>(
          std::find(rot.begin(), rot.end(), static_cast<std::size_t>(parent[v])) - rot.begin());
    }
    return static_cast<int>((pos + rot.size() - start) % rot.size());
  };

  std::vector<OpenBookVertex> vertices;
  for (std::size_t v = 0; v < n; ++v) {
    vertices.push_back({"h" + std::to_string(v), HopfBand{plane.signs[v]}, veering_of(plane.signs[v])});
  }
  std::vector<TreeEdge> edges;
  for (std::size_t v : order) {
    if (parent[v] < 0) continue;
    const auto p = static_cast<std::size_t>(parent[v]);
    edges.push_back({vertices[p].name + "-" + vertices[v].name, p, v,
                     SummingRegion{4, RingSlot{slot_of(p, v)}, RingSlot{slot_of(v, p)},
                                   Essentiality::kAnnulusCocore},
                     std::nullopt});
  }
  return TreeOfOpenBooks(std::move(vertices), std::move(edges));
}

FigureEightPlumbing figure_eight_plumb(const TreeOfOpenBooks& tree, std::size_t v,
                                       const SummingRegion& region, bool fixed_arcs_meet_region) {
  if (tree.base()) {
    throw Error(ErrorCode::kInvalidArgument, "plumb onto the base tree, not a block tree");
  }
  if (v >= tree.size()) throw Error(ErrorCode::kInvalidArgument, "no such vertex");
  if (!region.is_essential()) {
    throw Error(ErrorCode::kNonEssentialRegion, "figure-eight plumbing needs an essential region");
  }
  if (region.sides != 4) {
    throw Error(ErrorCode::kInvalidArgument, "plumbing regions are squares");
  }
  for (const auto& e : tree.edges()) {
    if (e.a == v && overlaps(e.region.on_a, region.on_a)) {
      throw Error(ErrorCode::kRegionOverlap, "region overlaps the region of edge '" + e.name + "'");
    }
    if (e.b == v && overlaps(e.region.on_b, region.on_a)) {
      throw Error(ErrorCode::kRegionOverlap, "region overlaps the region of edge '" + e.name + "'");
    }
  }
  std::vector<OpenBookVertex> vertices = tree.vertices();
  std::vector<TreeEdge> edges = tree.edges();
  const std::string tag = std::to_string(tree.size());
  const std::size_t p = vertices.size();
  const std::size_t n = p + 1;
  vertices.push_back({"p" + tag, HopfBand{Sign::kPositive}, Veering::kStrictlyRight});
  vertices.push_back({"n" + tag, HopfBand{Sign::kNegative}, Veering::kStrictlyLeft});
  edges.push_back({vertices[v].name + "-" + vertices[p].name, v, p,
                   SummingRegion{4, region.on_a, RingSlot{0}, region.essential}, std::nullopt});
  edges.push_back({vertices[p].name + "-" + vertices[n].name, p, n,
                   SummingRegion{4, RingSlot{1}, RingSlot{0}, Essentiality::kAnnulusCocore},
                   std::nullopt});
  FigureEightPlumbing out{TreeOfOpenBooks(std::move(vertices), std::move(edges)),
                          fixed_arcs_meet_region, {}};
  if (fixed_arcs_meet_region) {
    out.citations.push_back({CitedResult::kOppositeVeeringSumHasNoFixedArcs,
                             out.tree.edges().back().name});
    out.citations.push_back({CitedResult::kFigureEightPlumbingKeepsNoFixedArcs,
                             out.tree.vertices()[v].name});
  }
  return out;
}

}  // namespace homobraid
