#pragma once

// Decomposition circles, primeness verdicts and prime factorizations of
// closures of homogeneous braid words.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homobraid/braid.hpp"

namespace homobraid {

// Strands 2 <= i <= n-1 with g_i in {2, 3}; these are exactly the strands
// carrying a decomposition circle of the braid diagram.
std::set<int> decomposition_strands(const BraidWord& word);

enum class PrimenessStatus { kPrime, kComposite, kInconclusiveNotHomogeneous };

struct PrimenessVerdict {
  PrimenessStatus status = PrimenessStatus::kPrime;
  // For kComposite: a strand of the input word carrying an honest
  // decomposition circle (smallest one found, numbered in the input word).
  std::optional<int> witness_strand;
};

PrimenessVerdict primeness_verdict(const BraidWord& word);

struct FactorizationStep {
  enum class Kind { kSplit, kDestabilize, kDecompose };
  Kind kind;
  int depth = 0;
  std::string word;   // canonical rendering of the word the step acts on
  int strands = 0;
  int strand = 0;     // kDecompose: the decomposition strand (local numbering)
  int m_minus = 0;    // kDestabilize
  int m_plus = 0;
  int parts = 0;      // kSplit: number of split components
};

// Summands are fully destabilized non-split words in canonical form.
struct PrimeFactorization {
  std::vector<BraidWord> summands;
  int unknot_components = 0;
  // summands_per_component[c] counts the summands produced by split
  // component c; unknots contribute 0 there.
  std::vector<int> summands_per_component;
  std::vector<FactorizationStep> provenance;

  // Summands rendered canonically and sorted, for multiset comparison.
  std::vector<std::string> canonical_summands() const;
};

// Throws Error(kNotHomogeneous) for non-homogeneous input.
PrimeFactorization prime_factorization(const BraidWord& word);

// Throws Error(kNotHomogeneous) or Error(kSplit).
bool is_unknot_homogeneous(const BraidWord& word);

// Shared by the verdict and the factorization: a non-split, fully
// destabilized word is prime iff it has at most two strands or all g_i >= 4.
bool satisfies_prime_criterion(const BraidWord& reduced);

}  // namespace homobraid
