#pragma once

// Random homogeneous words for fixture generation and property tests.

#include <cstdint>
#include <random>
#include <string>

#include "homobraid/braid.hpp"

namespace homobraid {

// Strands uniform in [2, max_strands], length uniform in [0, max_letters],
// one random sign per generator.
BraidWord random_homogeneous_word(std::mt19937_64& rng, int max_strands, int max_letters);

// One line per word: `<word>\t<strands>\t<verdict>\t<summand>;<summand>...`.
std::string generate_corpus(std::uint64_t seed, int count, int max_strands, int max_letters);

}  // namespace homobraid
