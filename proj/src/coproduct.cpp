#include "necklace/coproduct.hpp"

#include <algorithm>

namespace necklace {

PairSeries::PairSeries(AlphabetPtr alphabet, int cutoff)
    : alphabet_(std::move(alphabet)), cutoff_(cutoff) {
  if (!alphabet_) throw std::invalid_argument("null alphabet");
}

PairSeries PairSeries::zero(AlphabetPtr alphabet, int cutoff) {
  return PairSeries(std::move(alphabet), cutoff);
}

PairSeries PairSeries::tensor(const TensorSeries& a, const TensorSeries& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  PairSeries out(a.alphabet(), std::min(a.cutoff(), b.cutoff()));
  for (const auto& [wa, ca] : a.terms())
    for (const auto& [wb, cb] : b.terms()) out.add_term(wa, wb, ca * cb);
  return out;
}

void PairSeries::add_term(const Word& left, const Word& right, const Rational& c) {
  if (c == 0) return;
  if (alphabet_->word_weight(left) + alphabet_->word_weight(right) > cutoff_) return;
  auto [it, inserted] = terms_.try_emplace(Key{left, right}, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void PairSeries::add_scaled(const PairSeries& other, const Rational& c) {
  require_same_alphabet(alphabet_, other.alphabet_);
  cutoff_ = std::min(cutoff_, other.cutoff_);
  std::erase_if(terms_, [&](const auto& t) {
    return alphabet_->word_weight(t.first.first) + alphabet_->word_weight(t.first.second) >
           cutoff_;
  });
  if (c == 0) return;
  for (const auto& [k, v] : other.terms_) add_term(k.first, k.second, v * c);
}

bool PairSeries::operator==(const PairSeries& other) const {
  return same_alphabet(alphabet_, other.alphabet_) && cutoff_ == other.cutoff_ &&
         terms_ == other.terms_;
}

PairSeries& PairSeries::operator+=(const PairSeries& other) {
  add_scaled(other, Rational(1));
  return *this;
}

PairSeries& PairSeries::operator-=(const PairSeries& other) {
  add_scaled(other, Rational(-1));
  return *this;
}

PairSeries& PairSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

PairSeries operator+(PairSeries a, const PairSeries& b) { return a += b; }
PairSeries operator-(PairSeries a, const PairSeries& b) { return a -= b; }
PairSeries operator*(const Rational& c, PairSeries a) { return a *= c; }

PairSeries mul(const PairSeries& a, const PairSeries& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  PairSeries out(a.alphabet(), std::min(a.cutoff(), b.cutoff()));
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      out.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

PairSeries bracket(const PairSeries& a, const PairSeries& b) {
  return mul(a, b) - mul(b, a);
}

PairSeries coproduct(const TensorSeries& a) {
  PairSeries out(a.alphabet(), a.cutoff());
  for (const auto& [w, c] : a.terms()) {
    const int n = static_cast<int>(w.size());
    // Δ(l1...ln) = Σ_{S ⊆ [n]} w_S ⊗ w_{S^c}: each letter is primitive.
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Word left, right;
      for (int i = 0; i < n; ++i) {
        if (mask & (1u << i))
          left.push_back(w[i]);
        else
          right.push_back(w[i]);
      }
      out.add_term(left, right, c);
    }
  }
  return out;
}

bool is_primitive(const TensorSeries& a) {
  if (a.constant_term() != 0) return false;
  PairSeries expected =
      PairSeries::tensor(a, TensorSeries::unit(a.alphabet(), a.cutoff())) +
      PairSeries::tensor(TensorSeries::unit(a.alphabet(), a.cutoff()), a);
  return coproduct(a) == expected;
}

bool is_grouplike(const TensorSeries& g) {
  if (g.constant_term() != 1) return false;
  return coproduct(g) == PairSeries::tensor(g, g);
}

}  // namespace necklace
