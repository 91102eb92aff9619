#pragma once

#include <optional>
#include <vector>

#include "necklace/cyclic.hpp"
#include "necklace/derivation.hpp"
#include "necklace/lie.hpp"
#include "necklace/surface.hpp"
#include "necklace/symplectic.hpp"

namespace necklace {

/// Rotation numbers of a framing. Construction enforces Poincaré-Hopf:
/// Σ_j rot(γ_j) - rot(γ_0) = 1 - 2g - n.
struct Framing {
  Framing(const SurfaceAlgebra& S, std::vector<int> rot_alpha, std::vector<int> rot_beta,
          std::vector<int> rot_gamma, int rot_gamma0);
  /// The framing with all interior rotations zero and rot(γ_0) = 2g + n - 1.
  static Framing blackboard_like(const SurfaceAlgebra& S);

  std::vector<int> rot_alpha, rot_beta, rot_gamma;
  int rot_gamma0 = 0;
};

/// Element of tder^+: a positive tangential derivation, stored by the
/// images of x_i, y_i and the generators u_j with u(z_j) = [z_j, u_j].
class TangentialDerivation {
 public:
  TangentialDerivation(const SurfaceAlgebra& S, int cutoff,
                       std::vector<TensorSeries> x_images, std::vector<TensorSeries> y_images,
                       std::vector<TensorSeries> z_generators);
  static TangentialDerivation zero(const SurfaceAlgebra& S, int cutoff);
  /// The inner derivation a -> [a, l] (its z-generators are all l).
  static TangentialDerivation inner(const SurfaceAlgebra& S, const TensorSeries& ell);

  const SurfaceAlgebra& surface() const { return surface_; }
  int cutoff() const { return cutoff_; }
  const TensorSeries& x_image(int i) const { return x_images_.at(static_cast<size_t>(i - 1)); }
  const TensorSeries& y_image(int i) const { return y_images_.at(static_cast<size_t>(i - 1)); }
  const TensorSeries& z_generator(int j) const {
    return z_generators_.at(static_cast<size_t>(j - 1));
  }

  /// The underlying derivation of A (z_j -> [z_j, u_j]).
  Derivation derivation() const;

  TangentialDerivation& operator+=(const TangentialDerivation& other);
  TangentialDerivation& operator*=(const Rational& c);

 private:
  SurfaceAlgebra surface_;
  int cutoff_ = 0;
  std::vector<TensorSeries> x_images_, y_images_, z_generators_;
};

TangentialDerivation operator+(TangentialDerivation a, const TangentialDerivation& b);
TangentialDerivation operator*(const Rational& c, TangentialDerivation a);

/// tder bracket: derivation bracket with generators u(v_j) - v(u_j) + [u_j, v_j].
TangentialDerivation tder_bracket(const TangentialDerivation& u, const TangentialDerivation& v);

/// div(u) = | Σ_i (∂_{x_i} u(x_i) + ∂_{y_i} u(y_i)) + Σ_j ∂_{z_j} u(z_j) |.
CyclicSeries divergence(const TangentialDerivation& u);

/// c_f(u) = Σ_j rot(γ_j) |u_j|.
CyclicSeries framing_cocycle(const TangentialDerivation& u, const Framing& f);

/// Element of TAut stored by its logarithm in tder^+.
class TangentialAutomorphism {
 public:
  explicit TangentialAutomorphism(TangentialDerivation log_u);
  static TangentialAutomorphism identity(const SurfaceAlgebra& S, int cutoff);
  /// Inner automorphism F_l = exp(u_l): a -> e^{-l} a e^{l}.
  static TangentialAutomorphism inner(const SurfaceAlgebra& S, const TensorSeries& ell);

  const TangentialDerivation& log_u() const { return log_; }
  const SurfaceAlgebra& surface() const { return log_.surface(); }
  int cutoff() const { return log_.cutoff(); }

  AlgebraMorphism morphism() const;
  AlgebraMorphism inverse_morphism() const;
  TensorSeries apply(const TensorSeries& s) const;
  CyclicSeries apply(const CyclicSeries& s) const;

  /// Conjugators f_j with F(z_j) = e^{-f_j} z_j e^{f_j}.
  std::vector<TensorSeries> conjugators() const;

  /// this ∘ other; the composite's z-generators are recovered from the
  /// composed action and normalized to have no z_j coefficient.
  TangentialAutomorphism compose(const TangentialAutomorphism& other) const;

 private:
  TangentialDerivation log_;
};

/// j(F) = ((e^u - 1)/u) div(u) for F = exp(u).
CyclicSeries j_cocycle(const TangentialAutomorphism& F);
/// C_f(F): the framing cocycle integrated by the same series.
CyclicSeries framing_cocycle(const TangentialAutomorphism& F, const Framing& f);
/// j_f = j - C_f.
CyclicSeries j_f(const TangentialAutomorphism& F, const Framing& f);

/// p = Σ_i (rot(β_i) x_i - rot(α_i) y_i).
TensorSeries p_series(const SurfaceAlgebra& S, const Framing& f, int cutoff);
CyclicSeries p_element(const SurfaceAlgebra& S, const Framing& f, int cutoff);

/// r = Σ_i | log((e^{x_i}-1)/x_i) + log((e^{y_i}-1)/y_i) |.
CyclicSeries r_element(const SurfaceAlgebra& S, int cutoff);

/// ξ = log( Π_i e^{x_i} e^{y_i} e^{-x_i} e^{-y_i} Π_j e^{z_j} ).
TensorSeries xi_element(const SurfaceAlgebra& S, int cutoff);

/// Reduced word in the free group generators α_i, β_i, γ_j.
struct FreeGroupWord {
  enum class Kind { Alpha, Beta, Gamma };
  struct Syllable {
    Kind kind;
    int index;     // 1-based
    int exponent;  // +1 or -1
  };
  std::vector<Syllable> syllables;

  void append(Kind kind, int index, int exponent);
  /// γ_0 = Π α_i β_i α_i^{-1} β_i^{-1} Π γ_j.
  static FreeGroupWord gamma0(const SurfaceAlgebra& S);
};

/// A group-like expansion given by its values on the generators.
struct Expansion {
  std::vector<GroupLike> alpha, beta, gamma;
  GroupLike evaluate(const SurfaceAlgebra& S, const FreeGroupWord& w) const;
};

/// θ_exp: α_i -> e^{x_i}, β_i -> e^{y_i}, γ_j -> e^{z_j}.
Expansion theta_exp(const SurfaceAlgebra& S, int cutoff);
/// θ_F = F^{-1} ∘ θ_exp.
Expansion theta_of(const TangentialAutomorphism& F);

/// Tangential: each θ(γ_j) is conjugate to e^{z_j} (tested by the
/// conjugacy normalizer). Special: tangential and θ(γ_0) = e^ω.
bool is_tangential_expansion(const SurfaceAlgebra& S, const Expansion& theta);
bool is_special_expansion(const SurfaceAlgebra& S, const Expansion& theta);

/// KV I: F(ω) = ξ exactly.
bool check_kv1(const TangentialAutomorphism& F);

struct Kv1PrimeResult {
  bool conjugate = false;       //!< |exp F(ω)| = |exp ξ| and an l_0 was produced
  TensorSeries ell0;            //!< F(ω) = e^{-l_0} ξ e^{l_0}
};
Kv1PrimeResult check_kv1_prime(const TangentialAutomorphism& F);

struct Kv2PrimeResult {
  bool member = false;
  int failing_weight = -1;                     //!< set when not a member
  std::vector<std::vector<Rational>> h_gamma;  //!< h_j coefficients (s^1, s^2, ...)
  std::vector<Rational> h_xi;                  //!< h coefficients (s^1, s^2, ...)
};
/// KV II': per-weight membership of j_f(F) + rot(γ_0)|l_0| - r - |p| in
/// span{ |z_j^m|, |ξ^m| }. l_0's z_j coefficients are dropped first (they
/// are absorbed in the linear terms of the h_j).
Kv2PrimeResult check_kv2_prime(const TangentialAutomorphism& F, const Framing& f,
                               const TensorSeries& ell0);

struct Kv1SolveReport {
  TangentialAutomorphism F;
  std::vector<int> solution_dims;  //!< affine solution-space dimension per weight
};
/// Build a tangential F with gr F = id and F(ω) = ξ through the cutoff,
/// degree by degree. Throws NoSolutionError on an obstructed weight.
Kv1SolveReport solve_kv1(const SurfaceAlgebra& S, int cutoff);

}  // namespace necklace
