#pragma once

#include <vector>

#include "necklace/tensor_series.hpp"

namespace necklace {

/// Continuous algebra endomorphism of the completed tensor algebra, given
/// by its images on generators and extended multiplicatively.
class AlgebraMorphism {
 public:
  AlgebraMorphism(AlphabetPtr alphabet, int cutoff, std::vector<TensorSeries> images);
  static AlgebraMorphism identity(AlphabetPtr alphabet, int cutoff);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int cutoff() const { return cutoff_; }
  const TensorSeries& image(Letter l) const { return images_.at(l); }

  TensorSeries apply(const TensorSeries& s) const;

  /// image(l) = l + (terms of strictly higher weight) for every generator.
  bool is_graded_identity() const;

  /// this ∘ inner.
  AlgebraMorphism compose(const AlgebraMorphism& inner) const;

  /// Degree-by-degree inverse; requires is_graded_identity().
  AlgebraMorphism inverse() const;

 private:
  AlphabetPtr alphabet_;
  int cutoff_ = 0;
  std::vector<TensorSeries> images_;
};

}  // namespace necklace
