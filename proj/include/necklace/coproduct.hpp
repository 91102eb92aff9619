#pragma once

#include <map>
#include <utility>

#include "necklace/tensor_series.hpp"

namespace necklace {

/// Sparse element of T ⊗ T over a common alphabet: map (Word, Word) -> Rational,
/// truncated by total weight. This is the same sparse engine as TensorSeries,
/// run over the product alphabet of word pairs.
class PairSeries {
 public:
  using Key = std::pair<Word, Word>;

  PairSeries() = default;
  PairSeries(AlphabetPtr alphabet, int cutoff);

  static PairSeries zero(AlphabetPtr alphabet, int cutoff);
  /// a ⊗ b.
  static PairSeries tensor(const TensorSeries& a, const TensorSeries& b);

  const AlphabetPtr& alphabet() const { return alphabet_; }
  int cutoff() const { return cutoff_; }
  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Word& left, const Word& right, const Rational& c);
  void add_scaled(const PairSeries& other, const Rational& c);

  bool operator==(const PairSeries& other) const;
  PairSeries& operator+=(const PairSeries& other);
  PairSeries& operator-=(const PairSeries& other);
  PairSeries& operator*=(const Rational& c);

 private:
  AlphabetPtr alphabet_;
  int cutoff_ = 0;
  std::map<Key, Rational> terms_;
};

PairSeries operator+(PairSeries a, const PairSeries& b);
PairSeries operator-(PairSeries a, const PairSeries& b);
PairSeries operator*(const Rational& c, PairSeries a);

/// Componentwise concatenation product on T ⊗ T.
PairSeries mul(const PairSeries& a, const PairSeries& b);
PairSeries bracket(const PairSeries& a, const PairSeries& b);

/// The standard coproduct with every generator primitive, as an algebra
/// morphism T -> T ⊗ T; truncated by total weight.
PairSeries coproduct(const TensorSeries& a);

/// Exact check of Δa = a⊗1 + 1⊗a through the cutoff.
bool is_primitive(const TensorSeries& a);
/// Exact check of Δg = g⊗g and constant term 1.
bool is_grouplike(const TensorSeries& g);

}  // namespace necklace
