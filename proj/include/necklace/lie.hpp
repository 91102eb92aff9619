#pragma once

#include <optional>
#include <vector>

#include "necklace/coproduct.hpp"
#include "necklace/lyndon.hpp"
#include "necklace/tensor_series.hpp"

namespace necklace {

struct NoSolutionError : std::runtime_error {
  explicit NoSolutionError(int weight_)
      : std::runtime_error("no solution at weight " + std::to_string(weight_)),
        weight(weight_) {}
  int weight;
};

struct HypothesisFailsError : std::runtime_error {
  explicit HypothesisFailsError(const std::string& what) : std::runtime_error(what) {}
};

/// Primitivity-certified tensor series (element of the free Lie algebra).
class LieElement {
 public:
  explicit LieElement(TensorSeries s);
  /// Wrap without re-running the primitivity check (for series that are
  /// primitive by construction).
  static LieElement certified(TensorSeries s);

  const TensorSeries& series() const { return series_; }
  const AlphabetPtr& alphabet() const { return series_.alphabet(); }
  int cutoff() const { return series_.cutoff(); }

 private:
  LieElement() = default;
  TensorSeries series_;
};

/// Group-like-certified tensor series: constant term 1, Δg = g⊗g.
class GroupLike {
 public:
  explicit GroupLike(TensorSeries s);
  static GroupLike certified(TensorSeries s);

  const TensorSeries& series() const { return series_; }
  int cutoff() const { return series_.cutoff(); }
  LieElement log() const;

 private:
  GroupLike() = default;
  TensorSeries series_;
};

GroupLike exp(const LieElement& a);

/// Baker-Campbell-Hausdorff: log(exp(u) exp(v)), truncated.
LieElement bch(const LieElement& u, const LieElement& v);
TensorSeries bch(const TensorSeries& u, const TensorSeries& v);

/// Solve [z, u] = b for u, where z is a linear (single-letter words only),
/// weight-homogeneous, nonzero element. The solution is the deterministic
/// necklace-chain one. With constrain_to_lie, the K[[z]] kernel component is
/// stripped so that u is primitive (requires b primitive).
TensorSeries solve_ad(const TensorSeries& z, const TensorSeries& b, bool constrain_to_lie);

/// Basis of { u ∈ (T⊗T)_m : [Δz, u] = 0 } together with the comparison
/// against the z^i ⊗ z^j lattice.
struct CentralizerResult {
  std::vector<PairSeries> basis;
  int dim = 0;
  bool matches_power_lattice = false;
};
CentralizerResult centralizer_of_delta(const TensorSeries& z, int m);

/// Basis of { a ∈ T_m : [z, a] ∈ L }, compared against (L + K[[z]])_m.
struct NormalizerResult {
  std::vector<TensorSeries> basis;
  int dim = 0;
  bool matches_lie_plus_powers = false;
};
NormalizerResult ad_normalizer_structure(const TensorSeries& z, int m);

/// Solve a = [x, b] under the hypothesis |a x^l| = 0 for 1 <= l <= l_max
/// (each trace checked within the cutoff).
TensorSeries solve_x_divisibility(const TensorSeries& x, const TensorSeries& a, int l_max);

}  // namespace necklace
