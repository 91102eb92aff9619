#pragma once

#include <vector>

#include "necklace/morphism.hpp"
#include "necklace/tensor_series.hpp"

namespace necklace {

/// Continuous derivation of the completed tensor algebra, given by its
/// images on generators and extended by the Leibniz rule.
class Derivation {
 public:
  Derivation(AlphabetPtr alphabet, int cutoff, std::vector<TensorSeries> images);
  static Derivation zero(AlphabetPtr alphabet, int cutoff);
  /// The inner derivation a -> [a, generator_image] is not built here; see kv.

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int cutoff() const { return cutoff_; }
  const TensorSeries& image(Letter l) const { return images_.at(l); }

  TensorSeries apply(const TensorSeries& s) const;

  /// Raises weight by at least one on every generator (Der^+).
  bool is_positive() const;

  Derivation& operator+=(const Derivation& other);
  Derivation& operator*=(const Rational& c);

 private:
  AlphabetPtr alphabet_;
  int cutoff_ = 0;
  std::vector<TensorSeries> images_;
};

Derivation operator+(Derivation a, const Derivation& b);
Derivation operator*(const Rational& c, Derivation a);

/// [u, v] = u ∘ v - v ∘ u (a derivation again).
Derivation der_bracket(const Derivation& u, const Derivation& v);

/// exp(u) as an algebra automorphism; requires a positive derivation.
AlgebraMorphism exp_derivation(const Derivation& u);

/// log of a graded-identity automorphism, as a derivation.
Derivation log_morphism(const AlgebraMorphism& f);

/// (e^u - 1)/u applied to s: Σ_{k>=0} u^k(s) / (k+1)!.
TensorSeries exp_integral(const Derivation& u, const TensorSeries& s);

}  // namespace necklace
