#pragma once

#include <vector>

#include "necklace/lie.hpp"
#include "necklace/tensor_series.hpp"

namespace necklace {

struct TracesDifferError : std::runtime_error {
  TracesDifferError() : std::runtime_error("traces |exp a| and |exp z| differ") {}
};

/// Symplectic vector space of dimension 2g with basis x1, y1, ..., xg, yg
/// (all weight 1), pairing <x_i, y_i> = 1 = -<y_i, x_i>, and
/// ω0 = Σ [x_i, y_i].
class SymplecticSpace {
 public:
  explicit SymplecticSpace(int genus);

  int genus() const { return genus_; }
  int dim() const { return 2 * genus_; }
  const AlphabetPtr& alphabet() const { return alphabet_; }

  Letter x(int i) const;  // 1-based
  Letter y(int i) const;

  Rational pairing(Letter a, Letter b) const;
  /// Bilinear extension of the pairing to linear series.
  Rational pairing(const TensorSeries& a, const TensorSeries& b) const;
  /// C applied to the degree-2 component of t: Σ c_{ab} <a,b>.
  Rational full_contraction(const TensorSeries& t) const;

  TensorSeries omega0(int cutoff) const;
  /// π(t): projection of a degree-2 tensor onto Q = Ker C along K ω0.
  TensorSeries pi(const TensorSeries& t) const;

 private:
  int genus_ = 0;
  AlphabetPtr alphabet_;
};

/// One step of a contraction pattern: keep a letter, contract a letter
/// pair to a scalar by C, or project a letter pair into Q by π.
enum class Slot { Id, C, Pi };

/// Apply a pattern of slots positionally to every word of a (each word's
/// length must match the total arity of the pattern).
TensorSeries contract(const SymplecticSpace& V, const TensorSeries& a,
                      const std::vector<Slot>& pattern);

/// C^{⊗l} |ω0^l| computed by actual contraction of the embedded trace.
Rational trace_contraction_m0(int genus, int l);
/// The closed form l((2g)^l + (-1)^l 2g).
Rational trace_contraction_m0_formula(int genus, int l);

/// Scalar λ with (1 ⊗ C^{⊗l}) |a ω0^l| = λ a for a in V (computed on a
/// basis letter by contraction; the caller compares against the closed
/// form (2g)^l + 2 (-1)^l Σ_{j<l} (-2g)^j).
Rational trace_contraction_m1(const SymplecticSpace& V, Letter a, int l);
Rational trace_contraction_m1_formula(int genus, int l);

/// Exact LHS = RHS check of the two contraction lemmas for
/// (π ⊗ 1^{m-4} ⊗ π)(1^m ⊗ C^l)|u_1...u_m ω0^l|.
bool verify_lemma_odd(const SymplecticSpace& V, const std::vector<TensorSeries>& u, int l);
bool verify_lemma_even(const SymplecticSpace& V, const std::vector<TensorSeries>& u, int l);

/// Solve a = [ω0, b] under the hypothesis |a ω0^l| = 0 for every l >= 1
/// representable within the cutoff.
TensorSeries solve_omega_bracket(const SymplecticSpace& V, const TensorSeries& a);

struct SplittingReport {
  bool ok = false;
  int dim_ad_omega = 0;
  int dim_v_tensor_q = 0;
  int dim_total = 0;
};
/// V^{⊗3} = [ω0, V] ⊕ (V ⊗ Q): trivial intersection and matching dimensions.
SplittingReport verify_v3_splitting(int genus);

/// Conjugacy normalizer for z with nonzero linear term: returns group-like g
/// with a = g z g^{-1}, built degree by degree. Throws TracesDifferError when
/// |exp a| != |exp z| within the cutoff.
GroupLike normalize_conjugacy_linear(const TensorSeries& z, const TensorSeries& a);

/// Conjugacy normalizer onto ω0 for the symplectic case.
GroupLike normalize_conjugacy_symplectic(const SymplecticSpace& V, const TensorSeries& a);

}  // namespace necklace
