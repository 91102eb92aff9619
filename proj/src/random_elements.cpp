#include "necklace/random_elements.hpp"

#include "necklace/lyndon.hpp"

namespace necklace {

Rational Rng::coefficient(int max_num, int max_den) {
  int num = 0;
  while (num == 0) num = below(2 * max_num + 1) - max_num;
  int den = 1 + below(max_den);
  return Rational(num) / Rational(den);
}

TensorSeries random_series(AlphabetPtr alphabet, int cutoff, Rng& rng, int n_terms,
                           int min_weight) {
  TensorSeries s(alphabet, cutoff);
  for (int t = 0; t < n_terms; ++t) {
    int w = min_weight + rng.below(cutoff - min_weight + 1);
    Word word;
    int remaining = w;
    while (remaining > 0) {
      Letter l = static_cast<Letter>(rng.below(alphabet->size()));
      if (alphabet->weight(l) > remaining) continue;
      word.push_back(static_cast<char>(l));
      remaining -= alphabet->weight(l);
    }
    s.add_term(word, rng.coefficient());
  }
  return s;
}

LieElement random_lie(AlphabetPtr alphabet, int cutoff, Rng& rng, int n_terms, int min_weight,
                      int max_weight) {
  if (max_weight < 0) max_weight = cutoff;
  TensorSeries s(alphabet, cutoff);
  for (int t = 0; t < n_terms; ++t) {
    int w = min_weight + rng.below(max_weight - min_weight + 1);
    auto lw = lyndon_words(*alphabet, w);
    if (lw.empty()) continue;
    const Word& pick = lw[static_cast<size_t>(rng.below(static_cast<int>(lw.size())))];
    s += rng.coefficient() * lyndon_bracket(alphabet, cutoff, pick);
  }
  return LieElement::certified(std::move(s));
}

GroupLike random_grouplike(AlphabetPtr alphabet, int cutoff, Rng& rng, int n_terms) {
  return exp(random_lie(alphabet, cutoff, rng, n_terms));
}

TangentialDerivation random_tder(const SurfaceAlgebra& S, int cutoff, Rng& rng, int n_terms) {
  std::vector<TensorSeries> xs, ys, zs;
  for (int i = 1; i <= S.genus(); ++i) {
    xs.push_back(random_lie(S.alphabet(), cutoff, rng, n_terms, 2).series());
    ys.push_back(random_lie(S.alphabet(), cutoff, rng, n_terms, 2).series());
  }
  for (int j = 1; j <= S.punctures(); ++j)
    zs.push_back(random_lie(S.alphabet(), cutoff, rng, n_terms, 1).series());
  return TangentialDerivation(S, cutoff, std::move(xs), std::move(ys), std::move(zs));
}

}  // namespace necklace
