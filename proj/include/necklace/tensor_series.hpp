#pragma once

#include <map>
#include <stdexcept>

#include "necklace/alphabet.hpp"
#include "necklace/rational.hpp"

namespace necklace {

struct PreconditionError : std::runtime_error {
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// Weight-truncated element of the completed tensor algebra: a finitely
/// supported map Word -> Rational, all stored words of weight <= cutoff.
/// The cutoff travels with the value; binary operations truncate to the
/// minimum of the operands' cutoffs. No zero coefficients are stored.
class TensorSeries {
 public:
  TensorSeries() = default;
  TensorSeries(AlphabetPtr alphabet, int cutoff);

  static TensorSeries zero(AlphabetPtr alphabet, int cutoff);
  static TensorSeries unit(AlphabetPtr alphabet, int cutoff);
  static TensorSeries scalar(AlphabetPtr alphabet, int cutoff, const Rational& c);
  static TensorSeries generator(AlphabetPtr alphabet, int cutoff, Letter l);
  static TensorSeries monomial(AlphabetPtr alphabet, int cutoff, const Word& w,
                               const Rational& c = Rational(1));

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int cutoff() const { return cutoff_; }
  const std::map<Word, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Word& w) const;
  Rational constant_term() const { return coeff(Word{}); }
  /// Minimal weight in the support; cutoff+1 for the zero series.
  int min_weight() const;
  int term_count() const { return static_cast<int>(terms_.size()); }

  /// Accumulate c on word w, dropping the entry when it cancels. Words
  /// heavier than the cutoff are discarded.
  void add_term(const Word& w, const Rational& c);

  void add_scaled(const TensorSeries& other, const Rational& c);

  bool operator==(const TensorSeries& other) const;

  TensorSeries& operator+=(const TensorSeries& other);
  TensorSeries& operator-=(const TensorSeries& other);
  TensorSeries& operator*=(const Rational& c);
  TensorSeries& operator/=(const Rational& c);

 private:
  AlphabetPtr alphabet_;
  int cutoff_ = 0;
  std::map<Word, Rational> terms_;
};

TensorSeries operator+(TensorSeries a, const TensorSeries& b);
TensorSeries operator-(TensorSeries a, const TensorSeries& b);
TensorSeries operator-(TensorSeries a);
TensorSeries operator*(const Rational& c, TensorSeries a);
TensorSeries operator*(TensorSeries a, const Rational& c);
TensorSeries operator/(TensorSeries a, const Rational& c);

/// Concatenation product, truncated at min(cutoff(a), cutoff(b)).
TensorSeries mul(const TensorSeries& a, const TensorSeries& b);
TensorSeries operator*(const TensorSeries& a, const TensorSeries& b);

/// [a,b] = ab - ba.
TensorSeries bracket(const TensorSeries& a, const TensorSeries& b);

/// Lower the cutoff to min(n, cutoff(a)) and drop heavier terms.
TensorSeries truncate(const TensorSeries& a, int n);

/// The weight-k homogeneous part (same cutoff). Requires 0 <= k <= cutoff.
TensorSeries weight_component(const TensorSeries& a, int k);

/// Components of every tensor length (word letter count) k.
TensorSeries length_component(const TensorSeries& a, int k);
int max_length(const TensorSeries& a);

/// exp of a series without constant term.
TensorSeries exp_series(const TensorSeries& a);
/// log of a series with constant term 1.
TensorSeries log_series(const TensorSeries& g);
/// Multiplicative inverse of a series with nonzero constant term.
TensorSeries inverse_series(const TensorSeries& g);

/// g a g^{-1}.
TensorSeries conjugate(const TensorSeries& g, const TensorSeries& a);

}  // namespace necklace
