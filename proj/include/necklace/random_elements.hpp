#pragma once

#include <cstdint>
#include <random>

#include "necklace/kv.hpp"
#include "necklace/lie.hpp"
#include "necklace/tensor_series.hpp"

namespace necklace {

/// Deterministic RNG for the property suites: identical streams for
/// identical seeds on every platform (no distribution objects).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  /// Uniform-ish integer in [0, n).
  int below(int n) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(n)); }
  /// Small nonzero rational with numerator in [-max, max] and denominator in [1, den].
  Rational coefficient(int max_num = 5, int max_den = 3);

 private:
  std::mt19937_64 engine_;
};

/// Sparse random series: up to n_terms words of weight in [min_weight, cutoff].
TensorSeries random_series(AlphabetPtr alphabet, int cutoff, Rng& rng, int n_terms,
                           int min_weight = 0);

/// Random primitive element: a combination of bracketed Lyndon words of
/// weights in [min_weight, max_weight].
LieElement random_lie(AlphabetPtr alphabet, int cutoff, Rng& rng, int n_terms,
                      int min_weight = 1, int max_weight = -1);

GroupLike random_grouplike(AlphabetPtr alphabet, int cutoff, Rng& rng, int n_terms);

/// Random positive tangential derivation with sparse Lie images.
TangentialDerivation random_tder(const SurfaceAlgebra& S, int cutoff, Rng& rng, int n_terms);

}  // namespace necklace
