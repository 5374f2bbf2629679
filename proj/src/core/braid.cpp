#include "homobraid/braid.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "homobraid/error.hpp"

namespace homobraid {

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) {
    throw Error(ErrorCode::kInvalidArgument, "a braid word needs at least one strand");
  }
  for (const Letter& l : letters_) {
    if (l.index < 1 || l.index >= strands_) {
      throw Error(ErrorCode::kInvalidArgument,
                  "generator index " + std::to_string(l.index) + " outside 1.." +
                      std::to_string(strands_ - 1));
    }
  }
}

int BraidWord::count(int index) const {
  return static_cast<int>(std::count_if(letters_.begin(), letters_.end(),
                                        [index](const Letter& l) { return l.index == index; }));
}

namespace {

std::vector<std::string_view> tokenize(std::string_view text) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ',' || c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (i < text.size()) {
    while (i < text.size() && is_sep(text[i])) ++i;
    std::size_t start = i;
    while (i < text.size() && !is_sep(text[i])) ++i;
    if (i > start) tokens.push_back(text.substr(start, i - start));
  }
  return tokens;
}

// Accepts an optional leading '+' or '-' followed by digits, nothing else.
std::optional<long> parse_int(std::string_view s) {
  if (s.empty()) return std::nullopt;
  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (s.empty()) return std::nullopt;
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return negative ? -value : value;
}

constexpr long kMaxExponent = 1'000'000;

}  // namespace

BraidWord parse_word(std::string_view text, std::optional<int> strands) {
  if (strands && *strands < 1) {
    throw Error(ErrorCode::kParse, "strand count must be positive");
  }
  std::vector<Letter> letters;
  int max_index = 0;
  const auto tokens = tokenize(text);
  for (std::size_t pos = 0; pos < tokens.size(); ++pos) {
    std::string_view tok = tokens[pos];
    auto fail = [&](const std::string& reason) -> Error {
      return Error(ErrorCode::kParse,
                   "token " + std::to_string(pos + 1) + " '" + std::string(tok) + "': " + reason, pos);
    };
    std::string_view base = tok;
    std::string_view exponent;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      base = tok.substr(0, caret);
      exponent = tok.substr(caret + 1);
      if (exponent.empty()) throw fail("missing exponent");
    }
    auto k = parse_int(base);
    if (!k) throw fail("expected a signed generator index");
    if (*k == 0) throw fail("generator index 0 does not exist");
    long e = 1;
    if (!exponent.empty()) {
      auto parsed = parse_int(exponent);
      if (!parsed) throw fail("expected a signed integer exponent");
      if (*parsed == 0) throw fail("exponent 0 is not allowed");
      e = *parsed;
    }
    long index = std::labs(*k);
    if (std::labs(e) > kMaxExponent) throw fail("exponent too large");
    if (strands && index >= *strands) {
      throw fail("generator " + std::to_string(index) + " needs more than " +
                 std::to_string(*strands) + " strands");
    }
    if (index > 1'000'000) throw fail("generator index too large");
    Sign sign = ((*k > 0) == (e > 0)) ? Sign::kPositive : Sign::kNegative;
    letters.insert(letters.end(), static_cast<std::size_t>(std::labs(e)),
                   Letter{static_cast<int>(index), sign});
    max_index = std::max(max_index, static_cast<int>(index));
  }
  return BraidWord(strands.value_or(max_index + 1), std::move(letters));
}

std::string render_word(const BraidWord& word) {
  std::ostringstream out;
  const auto& ls = word.letters();
  bool first = true;
  for (std::size_t i = 0; i < ls.size();) {
    std::size_t j = i;
    while (j < ls.size() && ls[j] == ls[i]) ++j;
    const long run = static_cast<long>(j - i);
    if (!first) out << ' ';
    first = false;
    if (run == 1) {
      out << (ls[i].sign == Sign::kNegative ? "-" : "") << ls[i].index;
    } else {
      out << ls[i].index << '^' << (ls[i].sign == Sign::kNegative ? -run : run);
    }
    i = j;
  }
  return out.str();
}

bool HomogeneityProfile::is_homogeneous() const {
  return std::none_of(uses.begin(), uses.end(),
                      [](GeneratorUse u) { return u == GeneratorUse::kMixed; });
}

std::optional<Sign> HomogeneityProfile::sign_of(int index) const {
  switch (uses.at(static_cast<std::size_t>(index - 1))) {
    case GeneratorUse::kOnlyPositive: return Sign::kPositive;
    case GeneratorUse::kOnlyNegative: return Sign::kNegative;
    default: return std::nullopt;
  }
}

HomogeneityProfile homogeneity_profile(const BraidWord& word) {
  HomogeneityProfile profile;
  profile.uses.assign(static_cast<std::size_t>(word.strands() - 1), GeneratorUse::kAbsent);
  for (const Letter& l : word.letters()) {
    auto& u = profile.uses[static_cast<std::size_t>(l.index - 1)];
    const GeneratorUse mine =
        l.sign == Sign::kPositive ? GeneratorUse::kOnlyPositive : GeneratorUse::kOnlyNegative;
    if (u == GeneratorUse::kAbsent) {
      u = mine;
    } else if (u != mine) {
      u = GeneratorUse::kMixed;
    }
  }
  return profile;
}

bool is_homogeneous(const BraidWord& word) { return homogeneity_profile(word).is_homogeneous(); }

std::set<int> unused_generators(const BraidWord& word) {
  std::vector<bool> used(static_cast<std::size_t>(word.strands()), false);
  for (const Letter& l : word.letters()) used[static_cast<std::size_t>(l.index)] = true;
  std::set<int> unused;
  for (int i = 1; i < word.strands(); ++i) {
    if (!used[static_cast<std::size_t>(i)]) unused.insert(i);
  }
  return unused;
}

bool is_split(const BraidWord& word) { return !unused_generators(word).empty(); }

std::vector<SplitComponent> split_component_intervals(const BraidWord& word) {
  const auto cuts = unused_generators(word);
  std::vector<SplitComponent> out;
  int lo = 1;
  auto emit = [&](int hi) {
    // strands lo..hi, generators lo..hi-1
    if (hi == lo) {
      out.push_back({lo, BraidWord(1, {})});
    } else {
      out.push_back({lo, subword(word, lo, hi - 1)});
    }
  };
  for (int cut : cuts) {
    emit(cut);
    lo = cut + 1;
  }
  emit(word.strands());
  return out;
}

std::vector<BraidWord> split_components(const BraidWord& word) {
  std::vector<BraidWord> out;
  for (auto& c : split_component_intervals(word)) out.push_back(std::move(c.word));
  return out;
}

BraidWord subword(const BraidWord& word, int i, int j) {
  if (i < 1 || j < i || j > word.strands() - 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "subword range [" + std::to_string(i) + ", " + std::to_string(j) +
                    "] outside 1.." + std::to_string(word.strands() - 1));
  }
  std::vector<Letter> kept;
  for (const Letter& l : word.letters()) {
    if (l.index >= i && l.index <= j) kept.push_back({l.index - i + 1, l.sign});
  }
  return BraidWord(j - i + 2, std::move(kept));
}

int seesaw_number(const BraidWord& word, int i) {
  if (i < 2 || i > word.strands() - 1) {
    throw Error(ErrorCode::kInvalidArgument, "seesaw index out of range");
  }
  int blocks = 0;
  int last = 0;
  for (const Letter& l : word.letters()) {
    if (l.index != i - 1 && l.index != i) continue;
    if (l.index != last) {
      ++blocks;
      last = l.index;
    }
  }
  return blocks;
}

SeesawProfile seesaw_profile(const BraidWord& word) {
  SeesawProfile profile;
  for (int i = 2; i <= word.strands() - 1; ++i) profile[i] = seesaw_number(word, i);
  return profile;
}

namespace {

std::optional<BraidWord> destabilize_top(const BraidWord& w) {
  const int top = w.strands() - 1;
  if (top < 1 || w.count(top) != 1) return std::nullopt;
  std::vector<Letter> kept;
  for (const Letter& l : w.letters()) {
    if (l.index != top) kept.push_back(l);
  }
  return BraidWord(w.strands() - 1, std::move(kept));
}

std::optional<BraidWord> destabilize_bottom(const BraidWord& w) {
  if (w.strands() < 2 || w.count(1) != 1) return std::nullopt;
  std::vector<Letter> kept;
  for (const Letter& l : w.letters()) {
    if (l.index != 1) kept.push_back({l.index - 1, l.sign});
  }
  return BraidWord(w.strands() - 1, std::move(kept));
}

}  // namespace

DestabilizationResult destabilize_fully(const BraidWord& word, DestabilizationOrder order) {
  DestabilizationResult r{word, 0, 0};
  auto top_once = [&r]() {
    if (auto next = destabilize_top(r.reduced)) {
      r.reduced = std::move(*next);
      ++r.m_plus;
      return true;
    }
    return false;
  };
  auto bottom_once = [&r]() {
    if (auto next = destabilize_bottom(r.reduced)) {
      r.reduced = std::move(*next);
      ++r.m_minus;
      return true;
    }
    return false;
  };
  for (bool progress = true; progress;) {
    progress = false;
    switch (order) {
      case DestabilizationOrder::kAlternateTopFirst:
        progress |= top_once();
        progress |= bottom_once();
        break;
      case DestabilizationOrder::kAlternateBottomFirst:
        progress |= bottom_once();
        progress |= top_once();
        break;
      case DestabilizationOrder::kTopExhaustedFirst:
        while (top_once()) progress = true;
        while (bottom_once()) progress = true;
        break;
    }
  }
  return r;
}

int StrandPermutation::cycle_count() const {
  std::vector<bool> seen(image.size(), false);
  int cycles = 0;
  for (std::size_t s = 0; s < image.size(); ++s) {
    if (seen[s]) continue;
    ++cycles;
    for (std::size_t p = s; !seen[p]; p = static_cast<std::size_t>(image[p] - 1)) seen[p] = true;
  }
  return cycles;
}

StrandPermutation StrandPermutation::then(const StrandPermutation& next) const {
  StrandPermutation out;
  out.image.resize(image.size());
  for (std::size_t p = 0; p < image.size(); ++p) {
    out.image[p] = next.image.at(static_cast<std::size_t>(image[p] - 1));
  }
  return out;
}

StrandPermutation strand_permutation(const BraidWord& word) {
  // Follow every strand through the word; each letter swaps positions i, i+1.
  std::vector<int> at_position(static_cast<std::size_t>(word.strands()));
  std::iota(at_position.begin(), at_position.end(), 1);  // strand occupying each position
  for (const Letter& l : word.letters()) {
    std::swap(at_position[static_cast<std::size_t>(l.index - 1)],
              at_position[static_cast<std::size_t>(l.index)]);
  }
  StrandPermutation perm;
  perm.image.resize(at_position.size());
  for (std::size_t pos = 0; pos < at_position.size(); ++pos) {
    perm.image[static_cast<std::size_t>(at_position[pos] - 1)] = static_cast<int>(pos + 1);
  }
  return perm;
}

ClosureStats closure_stats(const BraidWord& word) {
  ClosureStats s;
  s.components = strand_permutation(word).cycle_count();
  s.euler_char = word.strands() - static_cast<int>(word.length());
  const bool split = is_split(word);
  s.genus_is_minimal = is_homogeneous(word);
  if (!split) {
    s.first_betti = 1 - s.euler_char;
    const int twice = 2 - s.components - s.euler_char;
    assert(twice % 2 == 0 && twice >= 0);
    if (twice % 2 == 0) s.genus = twice / 2;
    return s;
  }
  s.genus_is_split_sum = true;
  int total = 0;
  for (const BraidWord& c : split_components(word)) {
    const int mu = strand_permutation(c).cycle_count();
    const int twice = 2 - mu - (c.strands() - static_cast<int>(c.length()));
    assert(twice % 2 == 0 && twice >= 0);
    if (twice % 2 != 0) return s;
    total += twice / 2;
  }
  s.genus = total;
  return s;
}

}  // namespace homobraid
