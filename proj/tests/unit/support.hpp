#pragma once

#include <random>
#include <string>
#include <vector>

#include "homobraid/braid.hpp"
#include "oracles.hpp"

namespace fixtures {

inline const char* kBetaPrime = "3 -4 1^-2 3^2 2^2 -4 -1 3^2 2 -4";
inline const char* kBetaComp = "3^5 1^-3 2^3 4^-3";
inline const char* kKnot63 = "1^-2 2 1^-1 2^2";

inline oracle::Word to_oracle(const homobraid::BraidWord& w) {
  oracle::Word out;
  for (const auto& l : w.letters()) out.push_back(l.sign == homobraid::Sign::kPositive ? l.index : -l.index);
  return out;
}

inline homobraid::BraidWord from_oracle(const oracle::Word& w, int strands) {
  std::vector<homobraid::Letter> letters;
  for (int k : w) {
    letters.push_back({std::abs(k), k > 0 ? homobraid::Sign::kPositive : homobraid::Sign::kNegative});
  }
  return homobraid::BraidWord(strands, std::move(letters));
}

// Any word, not necessarily homogeneous.
inline homobraid::BraidWord random_word(std::mt19937_64& rng, int max_strands, int max_letters) {
  const int n = std::uniform_int_distribution<int>(2, max_strands)(rng);
  const int c = std::uniform_int_distribution<int>(0, max_letters)(rng);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution coin(0.5);
  oracle::Word w;
  for (int t = 0; t < c; ++t) w.push_back(coin(rng) ? gen(rng) : -gen(rng));
  return from_oracle(w, n);
}

}  // namespace fixtures
