#pragma once

// Trees of open books: symbolic open books (torus-link blocks, Hopf bands and
// contracted blocks of those) joined along summing regions.
//
// Monodromies are never represented as maps. A vertex carries a certified
// veering label and a page; the monodromy of the glued open book is tracked
// as a word in the vertices (or in their Dehn twist factors).

#include <cstddef>
#include <iterator>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "homobraid/braid.hpp"
#include "homobraid/surface.hpp"

namespace homobraid {

enum class Veering { kStrictlyRight, kStrictlyLeft, kUnknown };

std::string_view veering_name(Veering v);
Veering veering_of(Sign s);

// Fiber surface of the T(2, k) torus link, |k| >= 2: two disks and |k| bands.
struct TorusBlock {
  int twists = 2;
};

// Annulus with a single Dehn twist about its core.
struct HopfBand {
  Sign sign = Sign::kPositive;
};

// A maximal same-veering subtree contracted to one vertex.
struct CompositeBlock {
  std::vector<std::size_t> members;  // vertex ids of the base tree
};

using VertexKind = std::variant<TorusBlock, HopfBand, CompositeBlock>;

struct OpenBookVertex {
  std::string name;
  VertexKind kind;
  Veering veering = Veering::kUnknown;
};

// Where a summing region sits on one page.
struct RingSlot {
  int slot = 0;  // position of a cocore square in the circular order of the annulus
  friend bool operator==(const RingSlot&, const RingSlot&) = default;
};

struct BandCocore {
  int band = 0;  // the band rectangle itself, a neighbourhood of its cocore
  friend bool operator==(const BandCocore&, const BandCocore&) = default;
};

enum class DiskEnd { kBottom, kTop };

// Polygon inside one disk of a torus block. Side j cuts off caps[j], the
// run of this page's bands attached beyond it (in attachment order). An
// empty cap marks a side lying on this page's boundary.
struct DiskRegion {
  DiskEnd disk = DiskEnd::kBottom;
  std::vector<std::vector<int>> caps;
  friend bool operator==(const DiskRegion&, const DiskRegion&) = default;
};

using Placement = std::variant<RingSlot, BandCocore, DiskRegion>;

std::string placement_to_string(const Placement& p);
Placement placement_from_string(std::string_view text);

enum class Essentiality {
  kNotEssential,
  kSeesawAtLeastFour,
  kAnnulusCocore,
  kAssertedByInput,
};

std::string_view essentiality_name(Essentiality e);

struct SummingRegion {
  int sides = 4;
  Placement on_a;  // placement on the edge's first endpoint
  Placement on_b;
  Essentiality essential = Essentiality::kNotEssential;

  bool is_essential() const { return essential != Essentiality::kNotEssential; }
};

struct TreeEdge {
  std::string name;
  std::size_t a = 0;
  std::size_t b = 0;
  SummingRegion region;
  // Block trees only: the edge of the base tree this edge comes from; the
  // placements then refer to that edge's endpoints in the base tree.
  std::optional<std::size_t> base_edge;
};

class TreeOfOpenBooks {
 public:
  // Validates shape (a tree), veering labels against signs, placements
  // against vertex kinds, and disjointness of regions at every vertex.
  TreeOfOpenBooks(std::vector<OpenBookVertex> vertices, std::vector<TreeEdge> edges,
                  std::shared_ptr<const TreeOfOpenBooks> base = nullptr);

  const std::vector<OpenBookVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<TreeEdge>& edges() const noexcept { return edges_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  const std::shared_ptr<const TreeOfOpenBooks>& base() const noexcept { return base_; }

  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  bool adjacent(std::size_t u, std::size_t v) const;
  std::optional<std::size_t> edge_between(std::size_t u, std::size_t v) const;
  std::optional<std::size_t> find_vertex(std::string_view name) const;
  // Base-tree vertices represented by v ({v} itself when there is no base).
  std::vector<std::size_t> members(std::size_t v) const;

 private:
  std::vector<OpenBookVertex> vertices_;
  std::vector<TreeEdge> edges_;
  std::shared_ptr<const TreeOfOpenBooks> base_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

// Tree of torus blocks of a homogeneous, non-split, fully destabilized word on
// n >= 2 strands: vertex i-1 is T(2, k_i) for generator i, edges join
// consecutive generators along the summing polygon in disk i.
TreeOfOpenBooks braid_tree(const BraidWord& word);

// Contracts maximal same-veering subtrees. Returns the input unchanged when
// it is already bipartite with respect to veering.
TreeOfOpenBooks block_tree(const TreeOfOpenBooks& tree);
bool is_veering_bipartite(const TreeOfOpenBooks& tree);

struct Growing {
  std::vector<std::size_t> order;
  friend bool operator==(const Growing&, const Growing&) = default;
};

// Throws Error(kInvalidGrowing).
void validate_growing(const TreeOfOpenBooks& tree, const Growing& growing);

// Lazily enumerates every growing in lexicographic order of vertex ids.
class GrowingRange {
 public:
  explicit GrowingRange(const TreeOfOpenBooks& tree) : tree_(&tree) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Growing;
    using difference_type = std::ptrdiff_t;
    using pointer = const Growing*;
    using reference = const Growing&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class GrowingRange;
    explicit iterator(const TreeOfOpenBooks* tree);
    void descend();
    std::vector<std::size_t> frontier() const;

    const TreeOfOpenBooks* tree_ = nullptr;
    std::vector<std::vector<std::size_t>> candidates_;
    std::vector<std::size_t> choice_;
    std::vector<bool> grown_;
    Growing current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(tree_); }
  iterator end() const { return iterator(); }

 private:
  const TreeOfOpenBooks* tree_;
};

inline GrowingRange growings(const TreeOfOpenBooks& tree) { return GrowingRange(tree); }
std::vector<Growing> all_growings(const TreeOfOpenBooks& tree);

// Letters are written left to right as in phi_n o ... o phi_1: the rightmost
// letter is applied first, so the growing appears reversed.
struct MonodromyWord {
  std::vector<std::string> letters;
  std::string render() const;  // letters joined by '.'
};

MonodromyWord growing_word(const TreeOfOpenBooks& tree, const Growing& growing);

// Symmetric relation on an alphabet of letters.
class CommutationRelation {
 public:
  explicit CommutationRelation(std::set<std::string> alphabet) : alphabet_(std::move(alphabet)) {}
  // Distinct vertices commute exactly when they are not joined by an edge.
  static CommutationRelation from_tree(const TreeOfOpenBooks& tree);

  void add(const std::string& a, const std::string& b);
  bool commute(const std::string& a, const std::string& b) const;
  const std::set<std::string>& alphabet() const noexcept { return alphabet_; }

 private:
  std::set<std::string> alphabet_;
  std::set<std::pair<std::string, std::string>> pairs_;
};

// Cartier-Foata normal form: maximal steps of pairwise commuting letters,
// each step sorted.
std::vector<std::vector<std::string>> foata_normal_form(const std::vector<std::string>& word,
                                                        const CommutationRelation& rel);

// True iff w2 is reachable from w1 by commuting adjacent letters and moving
// the first letter to the end (cyclic transposition of traces). Throws
// Error(kAlphabetMismatch) when the words use different letter sets or
// letters outside the relation's alphabet.
bool trace_cyclic_equivalent(const std::vector<std::string>& w1,
                             const std::vector<std::string>& w2,
                             const CommutationRelation& rel);

struct TwistSymbol {
  std::string vertex;  // base-tree vertex the Dehn twist belongs to
  int index = 1;       // 1-based within the vertex
  Sign sign = Sign::kPositive;

  friend bool operator==(const TwistSymbol&, const TwistSymbol&) = default;
  std::string render() const;
};

// Dehn twist factors in application order of the growing: T(2, k) expands
// to |k| - 1 twists of sign k, a Hopf band to one twist, a contracted block
// to its members in a growing that enters at the vertex adjacent to the
// previously grown blocks.
std::vector<TwistSymbol> monodromy_factorization(const TreeOfOpenBooks& tree,
                                                 const Growing& growing);

// For block trees: the base-tree growing obtained by growing each block
// completely as soon as it is entered. Identity for trees without a base.
Growing expand_growing(const TreeOfOpenBooks& tree, const Growing& growing);

// Results a certificate relies on, in the order they are applied.
enum class CitedResult {
  kStrictlyVeeringHasNoFixedArcs,      // a strictly veering open book fixes no essential arc
  kSameVeeringSumStaysStrict,          // essential sums of same-veering books stay strictly veering
  kOppositeVeeringSumHasNoFixedArcs,   // no-fixed-arc criterion for an opposite-veering sum
  kVeeringTreeHasNoFixedArcs,          // conclusion for the whole tree of open books
  kFigureEightPlumbingKeepsNoFixedArcs,
};

std::string_view cited_result_name(CitedResult r);

struct Citation {
  CitedResult result;
  std::string subject;  // block or edge the result is applied to
};

struct PrimenessCertificate {
  TreeOfOpenBooks block_tree;
  Growing block_growing;  // growing of block_tree
  Growing growing;        // base-tree growing exhausting each block before leaving it
  std::vector<TwistSymbol> monodromy;
  std::vector<Citation> citations;
};

// Throws Error(kUnknownVeering) or Error(kNonEssentialEdge) (position = edge index).
PrimenessCertificate primeness_certificate(const TreeOfOpenBooks& tree);

// Re-checks a certificate from its contents alone; returns the first
// problem found, or nullopt when it is valid.
std::optional<std::string> validate_certificate(const PrimenessCertificate& cert);

// Plane tree with a sign per vertex; rotation[v] lists v's neighbours in
// circular order.
struct PlaneTree {
  std::vector<Sign> signs;
  std::vector<std::vector<std::size_t>> rotation;
};

// Text form: node := '(' sign node* ')', children in circular order,
// e.g. "(+(+)(-(+)))". Throws Error(kMalformedTree).
PlaneTree parse_plane_tree(std::string_view text);
std::string render_plane_tree(const PlaneTree& tree);

// Hopf band per vertex, cocore squares placed in the circular order starting
// at the parent edge (root: as listed). Throws Error(kMalformedTree).
TreeOfOpenBooks arborescent_tree(const PlaneTree& tree);

struct FigureEightPlumbing {
  TreeOfOpenBooks tree;
  // Set when the caller asserts that every fixed essential arc of the
  // original open book meets the plumbing region.
  bool no_fixed_essential_arcs = false;
  std::vector<Citation> citations;
};

// Appends a positive Hopf band p on `region` at vertex v and a negative Hopf
// band n plumbed to p. region.on_a is the placement on v.
// Throws Error(kNonEssentialRegion) or Error(kRegionOverlap).
FigureEightPlumbing figure_eight_plumb(const TreeOfOpenBooks& tree, std::size_t v,
                                       const SummingRegion& region,
                                       bool fixed_arcs_meet_region);

// Page of a single vertex with one face per incident summing region;
// region_faces[i] is the face of the i-th incident edge (in edge order).
struct VertexPage {
  CombinatorialSurface page;
  std::vector<std::pair<std::size_t, std::size_t>> region_faces;  // (edge, face)
};

VertexPage vertex_page(const TreeOfOpenBooks& tree, std::size_t v);

// Vertex pages glued along every summing region.
CombinatorialSurface page_of_tree(const TreeOfOpenBooks& tree);

// Text format, one record per line ('#' comments):
//   homobraid-tree 1
//   vertex <name> torus <k> <veering>
//   vertex <name> hopf <+|-> <veering>
//   edge <name> <vertexA> <vertexB> sides=<2m> essential=<provenance> a=<placement> b=<placement>
//   block <name> <member>...        (block trees only, after the base records)
// veering is right | left | unknown; placements are ring:<slot>,
// band:<index> or disk:<bottom|top>:<cap>/<cap>/... with a cap being a
// comma separated band list or '-'.
std::string write_tree(const TreeOfOpenBooks& tree);
TreeOfOpenBooks read_tree(std::string_view text);

}  // namespace homobraid
