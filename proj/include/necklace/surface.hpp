#pragma once

#include "necklace/tensor_series.hpp"

namespace necklace {

/// The graded algebra of the surface Σ_{g,n+1}: generators x_i, y_i of
/// weight 1 and z_j of weight 2, with ω = Σ [x_i,y_i] + Σ z_j.
class SurfaceAlgebra {
 public:
  SurfaceAlgebra(int genus, int punctures);

  int genus() const { return genus_; }
  int punctures() const { return punctures_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  Letter x(int i) const;  // 1-based
  Letter y(int i) const;
  Letter z(int j) const;

  TensorSeries gen(Letter l, int cutoff) const;
  /// ω0 = Σ_i [x_i, y_i].
  TensorSeries omega0(int cutoff) const;
  /// ω = ω0 + Σ_j z_j.
  TensorSeries omega(int cutoff) const;

 private:
  int genus_ = 0;
  int punctures_ = 0;
  AlphabetPtr alphabet_;
};

}  // namespace necklace
