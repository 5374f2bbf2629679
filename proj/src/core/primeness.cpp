#include "homobraid/primeness.hpp"

#include <algorithm>
#include <stdexcept>

#include "homobraid/error.hpp"

namespace homobraid {

std::set<int> decomposition_strands(const BraidWord& word) {
  std::set<int> out;
  for (const auto& [i, g] : seesaw_profile(word)) {
    if (g == 2 || g == 3) out.insert(i);
  }
  return out;
}

bool satisfies_prime_criterion(const BraidWord& reduced) {
  if (reduced.strands() <= 2) return true;
  const auto profile = seesaw_profile(reduced);
  return std::all_of(profile.begin(), profile.end(), [](const auto& kv) { return kv.second >= 4; });
}

PrimenessVerdict primeness_verdict(const BraidWord& word) {
  if (!is_homogeneous(word)) return {PrimenessStatus::kInconclusiveNotHomogeneous, std::nullopt};
  for (const SplitComponent& comp : split_component_intervals(word)) {
    const auto d = destabilize_fully(comp.word);
    if (satisfies_prime_criterion(d.reduced)) continue;
    const auto strands = decomposition_strands(d.reduced);
    if (strands.empty()) {
      throw std::logic_error("non-split reduced word fails the criterion without a circle");
    }
    return {PrimenessStatus::kComposite, comp.first_strand - 1 + d.m_minus + *strands.begin()};
  }
  return {PrimenessStatus::kPrime, std::nullopt};
}

namespace {

bool each_generator_once(const BraidWord& w) {
  for (int i = 1; i < w.strands(); ++i) {
    if (w.count(i) != 1) return false;
  }
  return true;
}

class Factorizer {
 public:
  explicit Factorizer(PrimeFactorization& out) : out_(out) {}

  // Returns the number of summands emitted for this (possibly split) word.
  int run(const BraidWord& word, int depth, bool record_components) {
    const auto comps = split_components(word);
    if (comps.size() > 1) {
      out_.provenance.push_back({FactorizationStep::Kind::kSplit, depth, render_word(word),
                                 word.strands(), 0, 0, 0, static_cast<int>(comps.size())});
    }
    int emitted = 0;
    for (const BraidWord& c : comps) {
      const int n = run_non_split(c, depth + (comps.size() > 1 ? 1 : 0));
      if (record_components) out_.summands_per_component.push_back(n);
      emitted += n;
    }
    return emitted;
  }

 private:
  int run_non_split(const BraidWord& word, int depth) {
    const auto d = destabilize_fully(word);
    if (d.m_minus + d.m_plus > 0) {
      out_.provenance.push_back({FactorizationStep::Kind::kDestabilize, depth, render_word(word),
                                 word.strands(), 0, d.m_minus, d.m_plus, 0});
    }
    const BraidWord& w = d.reduced;
    if (w.empty()) {
      // Only a split unknot factor can reduce to nothing.
      ++out_.unknot_components;
      return 0;
    }
    const auto strands = decomposition_strands(w);
    if (strands.empty()) {
      out_.summands.push_back(w);
      return 1;
    }
    const int i = *strands.begin();
    const BraidWord lower = subword(w, 1, i - 1);
    const BraidWord upper = subword(w, i, w.strands() - 1);
    // Both halves must be non-split non-trivial links, otherwise the circle
    // would not be honest.
    for (const BraidWord* half : {&lower, &upper}) {
      if (is_split(*half) || each_generator_once(*half)) {
        throw std::logic_error("decomposition strand " + std::to_string(i) + " of " +
                               render_word(w) + " is not honest");
      }
    }
    out_.provenance.push_back({FactorizationStep::Kind::kDecompose, depth, render_word(w),
                               w.strands(), i, 0, 0, 2});
    return run_non_split(lower, depth + 1) + run_non_split(upper, depth + 1);
  }

  PrimeFactorization& out_;
};

}  // namespace

std::vector<std::string> PrimeFactorization::canonical_summands() const {
  std::vector<std::string> out;
  for (const BraidWord& w : summands) out.push_back(render_word(w));
  std::sort(out.begin(), out.end());
  return out;
}

PrimeFactorization prime_factorization(const BraidWord& word) {
  if (!is_homogeneous(word)) {
    throw Error(ErrorCode::kNotHomogeneous, "prime factorization needs a homogeneous word");
  }
  PrimeFactorization result;
  Factorizer(result).run(word, 0, true);
  return result;
}

bool is_unknot_homogeneous(const BraidWord& word) {
  if (!is_homogeneous(word)) throw Error(ErrorCode::kNotHomogeneous, "word is not homogeneous");
  if (is_split(word)) throw Error(ErrorCode::kSplit, "word is split");
  const bool once = each_generator_once(word);
  if (once != destabilize_fully(word).reduced.empty()) {
    throw std::logic_error("visual triviality disagrees with destabilization for " +
                           render_word(word));
  }
  return once;
}

}  // namespace homobraid
