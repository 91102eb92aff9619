#pragma once

#include <vector>

#include "necklace/coproduct.hpp"
#include "necklace/cyclic.hpp"
#include "necklace/tensor_series.hpp"

namespace necklace {

/// Eulerian idempotent machinery for the PBW decomposition
/// T = ⊕_m Sym^m(L). e1 is the convolution logarithm of the identity;
/// e_m is its m-th convolution power divided by m!.
class EulerianProjector {
 public:
  EulerianProjector(AlphabetPtr alphabet, int cutoff);

  /// e1 on a single word (memoized).
  const TensorSeries& e1_word(const Word& w);

  /// The Sym^m component of a. m = 1 is the projection onto primitives.
  TensorSeries project(const TensorSeries& a, int m);

  /// ϖ1 = e1: the first Eulerian idempotent applied to a.
  TensorSeries primitive_part(const TensorSeries& a) { return project(a, 1); }

 private:
  AlphabetPtr alphabet_;
  int cutoff_ = 0;
  std::map<Word, TensorSeries> cache_;
};

/// One-shot convenience: the Sym^m component of a under PBW.
TensorSeries eulerian_projection(const TensorSeries& a, int m);

/// (1/m!) Σ_σ f_{σ(1)} ... f_{σ(m)}: the PBW symmetrization of Lie factors.
TensorSeries symmetrize(const std::vector<TensorSeries>& factors);

/// |u^m| for primitive u.
CyclicSeries power_trace(const TensorSeries& u, int m);

struct SpanMembership {
  bool member = false;
  std::vector<Rational> coefficients;  // aligned with targets when member
};

/// Exact test of |u^m| ∈ span{ |v_j^m| } (Theorem-of-powers membership).
SpanMembership membership_in_power_span(const TensorSeries& u,
                                        const std::vector<TensorSeries>& targets, int m);

}  // namespace necklace
