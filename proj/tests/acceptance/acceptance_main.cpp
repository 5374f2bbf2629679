#include <algorithm>
#include <cstdio>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "homobraid/braid.hpp"
#include "homobraid/chords.hpp"
#include "homobraid/corpus.hpp"
#include "homobraid/error.hpp"
#include "homobraid/open_book_tree.hpp"
#include "homobraid/primeness.hpp"
#include "homobraid/surface.hpp"
#include "oracles.hpp"
#include "tree_shapes.hpp"

using namespace homobraid;

namespace {

const char* kBetaPrime = "3 -4 1^-2 3^2 2^2 -4 -1 3^2 2 -4";
const char* kBetaComp = "3^5 1^-3 2^3 4^-3";
const char* kKnot63 = "1^-2 2 1^-1 2^2";

// Collects the first few failure descriptions of a criterion.
struct Check {
  std::vector<std::string> failures;
  long cases = 0;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 5) failures.push_back(what);
  }
};

int report(int id, const char* title, const std::function<void(Check&)>& body) {
  Check c;
  try {
    body(c);
  } catch (const std::exception& e) {
    c.failures.push_back(std::string("exception: ") + e.what());
  }
  const bool ok = c.failures.empty();
  std::printf("%s %2d %s (%ld cases)\n", ok ? "PASS" : "FAIL", id, title, c.cases);
  for (const auto& f : c.failures) std::printf("       %s\n", f.c_str());
  return ok ? 0 : 1;
}

std::string seesaw_string(const BraidWord& w) {
  std::string s;
  for (const auto& [i, g] : seesaw_profile(w)) s += (s.empty() ? "" : ",") + std::to_string(g);
  return s;
}

BraidWord word_of(const std::vector<int>& w, int strands) {
  std::vector<Letter> letters;
  for (int k : w) letters.push_back({std::abs(k), k > 0 ? Sign::kPositive : Sign::kNegative});
  return BraidWord(strands, std::move(letters));
}

PlaneTree plane_from(const oracle::Adjacency& adj, std::mt19937_64& rng) {
  PlaneTree t;
  std::bernoulli_distribution coin(0.5);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    t.signs.push_back(coin(rng) ? Sign::kPositive : Sign::kNegative);
    t.rotation.push_back(adj[v]);
  }
  return t;
}

std::vector<BraidWord> corpus(std::uint64_t seed, int count, int max_strands, int max_letters) {
  std::mt19937_64 rng(seed);
  std::vector<BraidWord> out;
  for (int i = 0; i < count; ++i) out.push_back(random_homogeneous_word(rng, max_strands, max_letters));
  return out;
}

// Reduced split components with at least two strands; single-strand
// reductions are unknots with no tree.
std::vector<BraidWord> reduced_components(const BraidWord& w) {
  std::vector<BraidWord> out;
  for (const auto& c : split_components(w)) {
    auto r = destabilize_fully(c).reduced;
    if (r.strands() >= 2) out.push_back(std::move(r));
  }
  return out;
}

bool certifies(const BraidWord& reduced) {
  try {
    return !validate_certificate(primeness_certificate(braid_tree(reduced)));
  } catch (const Error&) {
    return false;
  }
}

void check_length_identity(Check& c, const TreeOfOpenBooks& t, const std::string& label,
                           std::mt19937_64& rng) {
  const int chi = surface_invariants(page_of_tree(t)).euler_char;
  const auto gs = all_growings(t);
  std::vector<Growing> sample{gs.front(), gs.back()};
  if (gs.size() > 2) sample.push_back(gs[rng() % gs.size()]);
  for (const auto& g : sample) {
    const auto m = monodromy_factorization(t, g);
    c.expect(static_cast<int>(m.size()) == 1 - chi,
             label + ": length " + std::to_string(m.size()) + " vs 1 - chi = " +
                 std::to_string(1 - chi));
  }
}

}  // namespace

int main() {
  int failed = 0;

  failed += report(1, "composite fixture: seesaw, verdict, factorization", [](Check& c) {
    const BraidWord w = parse_word(kBetaComp);
    c.expect(seesaw_string(w) == "2,2,2", "seesaw " + seesaw_string(w));
    c.expect(primeness_verdict(w).status == PrimenessStatus::kComposite, "verdict");
    const auto s = prime_factorization(w).canonical_summands();
    c.expect(s == std::vector<std::string>{"1^-3", "1^-3", "1^3", "1^5"}, "summands");
  });

  failed += report(2, "prime fixture: seesaw, verdict, certificate, closure", [](Check& c) {
    const BraidWord w = parse_word(kBetaPrime);
    c.expect(seesaw_string(w) == "4,4,6", "seesaw " + seesaw_string(w));
    c.expect(primeness_verdict(w).status == PrimenessStatus::kPrime, "verdict");
    const auto cert = primeness_certificate(braid_tree(w));
    std::string veering;
    for (const auto& v : cert.block_tree.vertices()) {
      veering += std::string(veering.empty() ? "" : ",") +
                 (v.veering == Veering::kStrictlyLeft ? "L" : "R");
    }
    c.expect(veering == "L,R,L", "block veering " + veering);
    c.expect(!validate_certificate(cert), "certificate validates");
    const auto st = closure_stats(w);
    c.expect(st.components == 1 && st.euler_char == -9 && st.genus == 5, "closure stats");
  });

  failed += report(3, "6_3 fixture: prime, one component, genus 2", [](Check& c) {
    const BraidWord w = parse_word(kKnot63);
    c.expect(primeness_verdict(w).status == PrimenessStatus::kPrime, "verdict");
    const auto st = closure_stats(w);
    c.expect(st.components == 1 && st.genus == 2, "closure stats");
  });

  failed += report(4, "each generator once: unknot, destabilizes to empty (n <= 7)", [](Check& c) {
    for (int n = 2; n <= 7; ++n) {
      std::vector<int> order(n - 1);
      std::iota(order.begin(), order.end(), 1);
      do {
        for (int signs = 0; signs < (1 << (n - 1)); ++signs) {
          std::vector<int> w;
          for (int k : order) w.push_back((signs >> (k - 1)) & 1 ? -k : k);
          const BraidWord word = word_of(w, n);
          const auto r = destabilize_fully(word).reduced;
          c.expect(is_unknot_homogeneous(word) && r.empty() && r.strands() == 1,
                   render_word(word));
        }
      } while (std::next_permutation(order.begin(), order.end()));
    }
  });

  failed += report(5, "additivity of b1 and genus, idempotent factorization", [](Check& c) {
    for (const auto& w : corpus(5, 1000, 6, 12)) {
      const auto f = prime_factorization(w);
      int b1 = 0;
      for (const auto& comp : split_components(w)) {
        b1 += *closure_stats(destabilize_fully(comp).reduced).first_betti;
      }
      int summand_b1 = 0, summand_genus = 0;
      std::vector<std::string> again;
      for (const auto& s : f.summands) {
        const auto st = closure_stats(s);
        summand_b1 += *st.first_betti;
        summand_genus += *st.genus;
        for (auto& x : prime_factorization(s).canonical_summands()) again.push_back(x);
      }
      std::sort(again.begin(), again.end());
      const std::string label = render_word(w) + " on " + std::to_string(w.strands());
      c.expect(b1 == summand_b1, label + ": b1");
      c.expect(closure_stats(w).genus == summand_genus, label + ": genus");
      c.expect(again == f.canonical_summands(), label + ": idempotence");
    }
  });

  failed += report(6, "certificate succeeds iff verdict is prime", [](Check& c) {
    for (const auto& w : corpus(5, 1000, 6, 12)) {
      bool all = true;
      for (const auto& r : reduced_components(w)) {
        const bool prime = primeness_verdict(r).status == PrimenessStatus::kPrime;
        const bool cert = certifies(r);
        c.expect(prime == cert, render_word(r));
        all = all && cert;
      }
      c.expect(all == (primeness_verdict(w).status == PrimenessStatus::kPrime), render_word(w));
    }
  });

  failed += report(7, "Seifert surface matches closure stats; plumbed pages", [](Check& c) {
    std::mt19937_64 rng(7);
    auto check_word = [&](const std::vector<int>& letters, int n) {
      const BraidWord w = word_of(letters, n);
      const auto inv = surface_invariants(seifert_surface_of_word(w));
      const auto st = closure_stats(w);
      const int chi = n - static_cast<int>(letters.size());
      const int mu = oracle::closure_components(letters, n);
      c.expect(inv.euler_char == chi && st.euler_char == chi && inv.boundary_components == mu &&
                   st.components == mu,
               render_word(w) + " on " + std::to_string(n));
    };
    // Exhaustive over short words, then per homogeneous sign pattern.
    for (int n = 2; n <= 4; ++n) {
      for (int len = 0; len <= 5; ++len) {
        std::vector<int> digits(len, 0);
        const int base = 2 * (n - 1);
        while (true) {
          std::vector<int> w;
          for (int d : digits) w.push_back(d % 2 ? -(d / 2 + 1) : d / 2 + 1);
          check_word(w, n);
          int i = 0;
          while (i < len && ++digits[i] == base) digits[i++] = 0;
          if (i == len) break;
        }
      }
    }
    for (int n = 2; n <= 5; ++n) {
      for (int signs = 0; signs < (1 << (n - 1)); ++signs) {
        for (int t = 0; t < 100; ++t) {
          const int len = std::uniform_int_distribution<int>(0, 10)(rng);
          std::vector<int> w;
          for (int j = 0; j < len; ++j) {
            const int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
            w.push_back((signs >> (k - 1)) & 1 ? -k : k);
          }
          check_word(w, n);
        }
      }
      for (int t = 0; t < 500; ++t) {
        const int len = std::uniform_int_distribution<int>(0, 10)(rng);
        std::vector<int> w;
        for (int j = 0; j < len; ++j) {
          const int k = std::uniform_int_distribution<int>(1, n - 1)(rng);
          w.push_back(rng() % 2 ? -k : k);
        }
        check_word(w, n);
      }
    }
    for (std::size_t n = 1; n <= 6; ++n) {
      for (const auto& shape : oracle::unlabeled_trees(n)) {
        const auto t = arborescent_tree(plane_from(shape, rng));
        const auto inv = surface_invariants(page_of_tree(t));
        c.expect(inv.euler_char == -static_cast<int>(t.edges().size()),
                 "tree on " + std::to_string(n) + " vertices");
      }
    }
  });

  failed += report(8, "all growings give trace-cyclic equivalent monodromy (<= 7 vertices)",
                   [](Check& c) {
    std::mt19937_64 rng(8);
    auto check_tree = [&](const TreeOfOpenBooks& t, const std::string& label) {
      const auto rel = CommutationRelation::from_tree(t);
      const auto gs = all_growings(t);
      const auto reference = growing_word(t, gs.front()).letters;
      // Equivalence is transitive, so comparing with one growing covers all pairs.
      for (const auto& g : gs) {
        c.expect(trace_cyclic_equivalent(reference, growing_word(t, g).letters, rel), label);
      }
    };
    for (std::size_t n = 1; n <= 7; ++n) {
      for (const auto& shape : oracle::unlabeled_trees(n)) {
        for (int labels = 0; labels < 3; ++labels) {
          const auto t = arborescent_tree(plane_from(shape, rng));
          check_tree(t, "tree on " + std::to_string(n) + " vertices");
          check_tree(block_tree(t), "block tree on " + std::to_string(n) + " vertices");
        }
      }
    }
  });

  failed += report(9, "chord witnesses exist and validate (<= 10 points, <= 5 sides)", [](Check& c) {
    auto run = [&](std::size_t n, const std::vector<int>& side_of, const std::vector<oracle::Matching>& ms) {
      auto chords = [](const oracle::Matching& m) {
        std::vector<Chord> out;
        for (auto [x, y] : m) out.emplace_back(x, y);
        return out;
      };
      for (const auto& a : ms) {
        for (const auto& b : ms) {
          ChordConfig cfg;
          for (std::size_t i = 0; i < n; ++i) cfg.points.push_back("p" + std::to_string(i));
          cfg.side_of = side_of;
          cfg.a = chords(a);
          cfg.b = chords(b);
          const auto r = find_witnesses(cfg);
          const std::string label = std::to_string(n) + " points";
          if (a == b) {
            c.expect(std::holds_alternative<ChordsEqual>(r), label + ": equal");
            continue;
          }
          if (!std::holds_alternative<WitnessPair>(r)) {
            c.expect(false, label + ": no witnesses");
            continue;
          }
          const auto& w = std::get<WitnessPair>(r);
          auto member = [](const std::vector<Chord>& v, const Chord& x) {
            return std::find(v.begin(), v.end(), x) != v.end();
          };
          for (const Witness* x : {&w.right, &w.left}) {
            c.expect(member(cfg.a, x->a) && member(cfg.b, x->b) && x->a.has(x->p) && x->b.has(x->p) &&
                         x->a != x->b,
                     label + ": witness chords");
          }
          c.expect(is_right_of(w.right.b, w.right.a, w.right.p, n), label + ": right");
          c.expect(!is_right_of(w.left.b, w.left.a, w.left.p, n), label + ": left");
          if (w.different_sides) {
            for (const Witness* x : {&w.right, &w.left}) {
              c.expect(side_of[x->a.other(x->p)] != side_of[x->b.other(x->p)], label + ": sides");
            }
          }
        }
      }
    };
    for (std::size_t n = 2; n <= 10; n += 2) {
      std::vector<oracle::Matching> ms;
      oracle::noncrossing_matchings(0, static_cast<int>(n), ms);
      run(n, {}, ms);
      // Sides: cut 0..n-1 into k runs of consecutive points.
      for (std::size_t k = 2; k <= 5 && k <= n; ++k) {
        std::vector<bool> cut(n - 1, false);
        std::fill(cut.begin(), cut.begin() + static_cast<long>(k - 1), true);
        std::sort(cut.begin(), cut.end());
        do {
          std::vector<int> side_of{0};
          for (std::size_t i = 0; i + 1 < n; ++i) side_of.push_back(side_of.back() + (cut[i] ? 1 : 0));
          std::vector<oracle::Matching> allowed;
          for (const auto& m : ms) {
            bool ok = true;
            for (auto [x, y] : m) ok = ok && side_of[x] != side_of[y];
            if (ok) allowed.push_back(m);
          }
          run(n, side_of, allowed);
        } while (std::next_permutation(cut.begin(), cut.end()));
      }
    }
  });

  failed += report(10, "monodromy length equals 1 - chi(page)", [](Check& c) {
    std::mt19937_64 rng(10);
    for (const auto& w : corpus(5, 1000, 6, 12)) {
      for (const auto& r : reduced_components(w)) {
        std::optional<TreeOfOpenBooks> t;
        try {
          t = braid_tree(r);
        } catch (const Error&) {
          continue;
        }
        check_length_identity(c, *t, render_word(r), rng);
        check_length_identity(c, block_tree(*t), render_word(r) + " blocks", rng);
      }
    }
    for (std::size_t n = 1; n <= 7; ++n) {
      for (const auto& shape : oracle::unlabeled_trees(n)) {
        const auto t = arborescent_tree(plane_from(shape, rng));
        check_length_identity(c, t, "arborescent", rng);
        check_length_identity(c, block_tree(t), "arborescent blocks", rng);
      }
    }
    const auto prime = braid_tree(parse_word(kBetaPrime));
    const SummingRegion region{4, BandCocore{1}, RingSlot{0}, Essentiality::kAssertedByInput};
    check_length_identity(c, figure_eight_plumb(prime, 2, region, true).tree, "figure-eight", rng);
  });

  return failed == 0 ? 0 : 1;
}
