#pragma once

// Braid words and the word-level combinatorics of their closures.
//
// Letters are Artin generators sigma_i^{+1} / sigma_i^{-1} with 1 <= i < n.
// Everything in this header is a pure function of immutable values.

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace homobraid {

enum class Sign { kPositive, kNegative };

inline int sign_value(Sign s) { return s == Sign::kPositive ? 1 : -1; }
inline Sign opposite(Sign s) {
  return s == Sign::kPositive ? Sign::kNegative : Sign::kPositive;
}

struct Letter {
  int index = 1;
  Sign sign = Sign::kPositive;

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

class BraidWord {
 public:
  BraidWord() = default;
  // Throws Error(kInvalidArgument) unless strands >= 1 and every index < strands.
  BraidWord(int strands, std::vector<Letter> letters);

  int strands() const noexcept { return strands_; }
  const std::vector<Letter>& letters() const noexcept { return letters_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  // Number of occurrences of sigma_index^{+-1}.
  int count(int index) const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 1;
  std::vector<Letter> letters_;
};

// Grammar: tokens separated by whitespace or commas; each token is `k` or
// `k^e` with k, e nonzero integers. `k` stands for sigma_|k| with the sign of
// k, and `k^e` for |e| copies of sigma_|k| carrying sign(k) * sign(e).
// Without `strands`, the word lives on max|k| + 1 strands (1 when empty).
// Parse errors carry the zero-based token position.
BraidWord parse_word(std::string_view text, std::optional<int> strands = std::nullopt);

// Inverse of parse_word up to the strand count: runs of equal letters are
// compacted to `i^e` with signed exponent, single letters print as `i`/`-i`.
std::string render_word(const BraidWord& word);

enum class GeneratorUse { kAbsent, kOnlyPositive, kOnlyNegative, kMixed };

struct HomogeneityProfile {
  // uses[i - 1] classifies generator i.
  std::vector<GeneratorUse> uses;

  bool is_homogeneous() const;
  // Sign of generator i when it occurs homogeneously.
  std::optional<Sign> sign_of(int index) const;
};

HomogeneityProfile homogeneity_profile(const BraidWord& word);
bool is_homogeneous(const BraidWord& word);

std::set<int> unused_generators(const BraidWord& word);
bool is_split(const BraidWord& word);

// A maximal strand interval not cut by an unused generator.
struct SplitComponent {
  int first_strand = 1;  // 1-based strand of the original word
  BraidWord word;
};

std::vector<SplitComponent> split_component_intervals(const BraidWord& word);
std::vector<BraidWord> split_components(const BraidWord& word);

// W_{i,j}: drops every letter with index outside [i, j] and shifts the rest
// down by i - 1. The result lives on j - i + 2 strands.
BraidWord subword(const BraidWord& word, int i, int j);

// seesaw[i] = g_i(W) for 2 <= i <= n - 1: the number of maximal blocks of
// W_{i-1,i} that use a single generator.
using SeesawProfile = std::map<int, int>;
SeesawProfile seesaw_profile(const BraidWord& word);
int seesaw_number(const BraidWord& word, int i);

struct DestabilizationResult {
  BraidWord reduced;
  int m_minus = 0;  // removals at the bottom (sigma_1)
  int m_plus = 0;   // removals at the top (sigma_{n-1})
};

enum class DestabilizationOrder {
  kAlternateTopFirst,    // one top step, one bottom step, repeat
  kAlternateBottomFirst,
  kTopExhaustedFirst,    // all top steps, then all bottom steps, repeat
};

// Removes a generator sigma_{n-1} or sigma_1 occurring exactly once together
// with its outer strand, until neither end admits a removal.
DestabilizationResult destabilize_fully(
    const BraidWord& word,
    DestabilizationOrder order = DestabilizationOrder::kAlternateTopFirst);

// perm[p - 1] is the exit position of the strand entering at position p.
struct StrandPermutation {
  std::vector<int> image;

  int cycle_count() const;
  StrandPermutation then(const StrandPermutation& next) const;
};

StrandPermutation strand_permutation(const BraidWord& word);

struct ClosureStats {
  int components = 1;     // mu
  int euler_char = 1;     // chi of the Seifert surface, n - c
  std::optional<int> first_betti;  // 1 - chi, only for non-split words
  std::optional<int> genus;
  bool genus_is_split_sum = false;  // summed over split components
  bool genus_is_minimal = false;    // set for homogeneous words
};

ClosureStats closure_stats(const BraidWord& word);

}  // namespace homobraid
