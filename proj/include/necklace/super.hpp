#pragma once

#include <map>
#include <memory>
#include <vector>

#include "necklace/cyclic.hpp"
#include "necklace/derivation.hpp"
#include "necklace/goldman.hpp"
#include "necklace/surface.hpp"

namespace necklace {

struct NotTangentialError : std::runtime_error {
  explicit NotTangentialError(int weight_)
      : std::runtime_error("derivation is not tangential (weight " + std::to_string(weight_) +
                           ")"),
        weight(weight_) {}
  int weight;
};

/// Index of a super generator: even letters coincide with the base surface
/// alphabet; the odd partner of even letter l is l + evens().
using SLetter = unsigned char;
using SuperWord = std::string;

/// The superalgebra D_A: one odd partner ∂_g per even generator g, with
/// wt(∂_g) = -wt(g).
class SuperAlphabet {
 public:
  explicit SuperAlphabet(const SurfaceAlgebra& S);

  const SurfaceAlgebra& surface() const { return surface_; }
  const AlphabetPtr& base() const { return surface_.alphabet(); }
  int evens() const { return base()->size(); }
  int size() const { return 2 * evens(); }

  bool is_odd(SLetter l) const { return l >= evens(); }
  SLetter partner(SLetter l) const {
    return static_cast<SLetter>(is_odd(l) ? l - evens() : l + evens());
  }
  int weight(SLetter l) const {
    return is_odd(l) ? -base()->weight(static_cast<Letter>(l - evens()))
                     : base()->weight(static_cast<Letter>(l));
  }
  std::string name(SLetter l) const {
    return is_odd(l) ? "d" + base()->name(static_cast<Letter>(l - evens()))
                     : base()->name(static_cast<Letter>(l));
  }

  int word_weight(const SuperWord& w) const;
  int word_parity(const SuperWord& w) const;  // number of odd letters mod 2
  int partial_degree(const SuperWord& w) const;

 private:
  SurfaceAlgebra surface_;
};

using SuperAlphabetPtr = std::shared_ptr<const SuperAlphabet>;

struct CanonicalSuperWord {
  SuperWord word;
  int sign = 1;
  bool zero = false;  // odd-symmetric under rotation
};
/// Minimal rotation with accumulated Koszul sign; zero when the class is
/// odd-symmetric under some rotation.
CanonicalSuperWord canonicalize_super(const SuperAlphabet& sa, const SuperWord& w);

/// Element of |D_A|: sparse map from sign-canonical cyclic super-words to
/// rationals. Terms of weight above the cutoff are dropped (negative
/// weights are always kept).
class SuperCyclicSeries {
 public:
  SuperCyclicSeries() = default;
  SuperCyclicSeries(SuperAlphabetPtr alphabet, int cutoff);

  const SuperAlphabetPtr& alphabet() const { return alphabet_; }
  int cutoff() const { return cutoff_; }
  const std::map<SuperWord, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const SuperWord& w, const Rational& c);
  void add_scaled(const SuperCyclicSeries& other, const Rational& c);

  bool operator==(const SuperCyclicSeries& other) const;
  SuperCyclicSeries& operator+=(const SuperCyclicSeries& other);
  SuperCyclicSeries& operator-=(const SuperCyclicSeries& other);
  SuperCyclicSeries& operator*=(const Rational& c);

 private:
  SuperAlphabetPtr alphabet_;
  int cutoff_ = 0;
  std::map<SuperWord, Rational> terms_;
};

SuperCyclicSeries operator+(SuperCyclicSeries a, const SuperCyclicSeries& b);
SuperCyclicSeries operator-(SuperCyclicSeries a, const SuperCyclicSeries& b);
SuperCyclicSeries operator*(const Rational& c, SuperCyclicSeries a);

/// |A| = |D^0| inclusion and the ∂-degree-0 projection back.
SuperCyclicSeries from_cyclic(SuperAlphabetPtr sa, const CyclicSeries& c);
CyclicSeries to_cyclic(const SuperCyclicSeries& s);

/// The necklace Schouten bracket: contraction of letter pairs along
/// {∂_r, u_r} = 1⊗1 with Koszul signs; degree additive minus one in ∂.
SuperCyclicSeries schouten(const SuperCyclicSeries& p, const SuperCyclicSeries& q);

/// Π = Σ_i |∂_{x_i} ∂_{y_i}| + Σ_j |z_j ∂_{z_j} ∂_{z_j}|.
SuperCyclicSeries poisson_bivector(SuperAlphabetPtr sa, int cutoff);

/// |α E| for a linear super-word α, with E = Σ_r (u_r ∂_r - ∂_r u_r).
SuperCyclicSeries e_insert(SuperAlphabetPtr sa, const SuperWord& alpha, int cutoff);
/// Applied to the canonical representative of every term.
SuperCyclicSeries e_insert(const SuperCyclicSeries& alpha);

/// Interpret a ∂-degree-1 class as a derivation of A.
Derivation to_derivation(const SuperCyclicSeries& p);

/// ∂ evaluation: ∂(P)(a_1, ..., a_k) by iterated Schouten brackets,
/// plugging the last argument first.
CyclicSeries partial_eval(const SuperCyclicSeries& p, const std::vector<CyclicSeries>& args);

/// Canonical classes of fixed ∂-degree and weight, ordered.
std::vector<SuperWord> super_classes(const SuperAlphabet& sa, int partial_degree, int weight);

struct CohomologyReport {
  int degree = 0;
  int weight = 0;
  int dim_space = 0;    //!< dim of the quotient 𝒟^k at this weight
  int dim_ker = 0;      //!< cocycles in the quotient
  int dim_im = 0;       //!< coboundaries in the quotient
  int dim_h = 0;
  std::vector<SuperCyclicSeries> representatives;
};

/// Non-commutative Poisson cohomology of d = [Π, ·] on 𝒟 = |D|/|D E| in
/// degree k ∈ {0, 1} at one weight.
CohomologyReport cohomology(const SurfaceAlgebra& S, int k, int weight);

struct FullyTangentialReport {
  bool tangential = false;
  int failing_weight = -1;
  std::vector<TensorSeries> witnesses;  //!< a_j with φ(z_j) = [a_j, z_j]
  TensorSeries witness0;                //!< a_0 for z_0 = -ω
};

/// Find witnesses a_j with φ(z_j) = [a_j, z_j] (j = 1..n) and a_0 with
/// φ(z_0) = [a_0, z_0] for z_0 = -ω. Requires (g,n) ≠ (0,1).
FullyTangentialReport is_fully_tangential(const SurfaceAlgebra& S, const Derivation& phi);

}  // namespace necklace
