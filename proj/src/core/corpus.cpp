#include "homobraid/corpus.hpp"

#include <sstream>

#include "homobraid/error.hpp"
#include "homobraid/primeness.hpp"

namespace homobraid {

BraidWord random_homogeneous_word(std::mt19937_64& rng, int max_strands, int max_letters) {
  if (max_strands < 2 || max_letters < 0) {
    throw Error(ErrorCode::kInvalidArgument, "corpus needs max_strands >= 2 and max_letters >= 0");
  }
  const int n = std::uniform_int_distribution<int>(2, max_strands)(rng);
  const int c = std::uniform_int_distribution<int>(0, max_letters)(rng);
  std::vector<Sign> signs;
  std::bernoulli_distribution coin(0.5);
  for (int i = 1; i < n; ++i) signs.push_back(coin(rng) ? Sign::kPositive : Sign::kNegative);
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::vector<Letter> letters;
  for (int t = 0; t < c; ++t) {
    const int i = gen(rng);
    letters.push_back({i, signs[static_cast<std::size_t>(i - 1)]});
  }
  return BraidWord(n, std::move(letters));
}

std::string generate_corpus(std::uint64_t seed, int count, int max_strands, int max_letters) {
  if (count < 0) throw Error(ErrorCode::kInvalidArgument, "count must be non-negative");
  std::mt19937_64 rng(seed);
  std::ostringstream out;
  out << "# word\tstrands\tverdict\tsummands\n";
  for (int k = 0; k < count; ++k) {
    const BraidWord w = random_homogeneous_word(rng, max_strands, max_letters);
    const auto v = primeness_verdict(w);
    out << render_word(w) << '\t' << w.strands() << '\t'
        << (v.status == PrimenessStatus::kPrime ? "prime" : "composite") << '\t';
    const auto summands = prime_factorization(w).canonical_summands();
    for (std::size_t i = 0; i < summands.size(); ++i) out << (i ? ";" : "") << summands[i];
    out << '\n';
  }
  return out.str();
}

}  // namespace homobraid
