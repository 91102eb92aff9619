#pragma once

#include <map>
#include <vector>

#include "necklace/derivation.hpp"
#include "necklace/linalg.hpp"
#include "necklace/morphism.hpp"
#include "necklace/tensor_series.hpp"

namespace necklace {

/// Lexicographically minimal rotation (Booth's algorithm).
Word canonical_rotation(const Word& w);

/// Element of |T| = T/[T,T]: sparse map from canonical cyclic words to
/// rationals, truncated by weight.
class CyclicSeries {
 public:
  CyclicSeries() = default;
  CyclicSeries(AlphabetPtr alphabet, int cutoff);
  static CyclicSeries zero(AlphabetPtr alphabet, int cutoff);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int cutoff() const { return cutoff_; }
  const std::map<Word, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff_class(const Word& any_rotation) const;

  /// Accumulate c on the class of w (w is canonicalized here).
  void add_term(const Word& w, const Rational& c);
  void add_scaled(const CyclicSeries& other, const Rational& c);

  bool operator==(const CyclicSeries& other) const;
  CyclicSeries& operator+=(const CyclicSeries& other);
  CyclicSeries& operator-=(const CyclicSeries& other);
  CyclicSeries& operator*=(const Rational& c);

 private:
  AlphabetPtr alphabet_;
  int cutoff_ = 0;
  std::map<Word, Rational> terms_;
};

CyclicSeries operator+(CyclicSeries a, const CyclicSeries& b);
CyclicSeries operator-(CyclicSeries a, const CyclicSeries& b);
CyclicSeries operator-(CyclicSeries a);
CyclicSeries operator*(const Rational& c, CyclicSeries a);

/// Natural projection |·| : T -> |T|. Linear, kills commutators.
CyclicSeries trace(const TensorSeries& a);

/// |w| -> Σ_{k=0}^{l-1} ν^k(w): sum of all rotations, with multiplicity for
/// periodic words. The image consists of ν-invariant tensors.
TensorSeries embed(const CyclicSeries& c);

CyclicSeries weight_component(const CyclicSeries& a, int k);
CyclicSeries truncate(const CyclicSeries& a, int n);

/// Induced action on |T| of an algebra morphism / derivation of T.
CyclicSeries apply(const AlgebraMorphism& f, const CyclicSeries& c);
CyclicSeries apply(const Derivation& u, const CyclicSeries& c);

/// (e^u - 1)/u on |T|.
CyclicSeries exp_integral(const Derivation& u, const CyclicSeries& c);

/// Right partial derivative: the decomposition a = Σ_g (∂_g a) g by last
/// letter. Requires zero constant term.
TensorSeries right_partial(Letter g, const TensorSeries& a);

/// Canonical cyclic words of exactly the given weight, ordered.
std::vector<Word> cyclic_words_of_weight(const Alphabet& alphabet, int weight);

/// Coordinates of a weight-homogeneous piece over an ordered class list.
class CyclicIndex {
 public:
  CyclicIndex() = default;
  explicit CyclicIndex(std::vector<Word> canonical_words);
  static CyclicIndex of_weight(const Alphabet& alphabet, int weight);

  int size() const { return static_cast<int>(words_.size()); }
  const std::vector<Word>& words() const { return words_; }
  const Word& word(int i) const { return words_.at(static_cast<size_t>(i)); }
  int at(const Word& canonical) const;

 private:
  std::vector<Word> words_;
  std::map<Word, int> pos_;
};

VecQ to_vector(const CyclicSeries& s, const CyclicIndex& idx);
CyclicSeries from_vector(AlphabetPtr alphabet, int cutoff, const CyclicIndex& idx,
                         const VecQ& v);

}  // namespace necklace
