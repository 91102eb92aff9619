#include "necklace/tensor_series.hpp"

#include <algorithm>
#include <vector>

namespace necklace {

TensorSeries::TensorSeries(AlphabetPtr alphabet, int cutoff)
    : alphabet_(std::move(alphabet)), cutoff_(cutoff) {
  if (!alphabet_) throw std::invalid_argument("null alphabet");
  if (cutoff_ < 0) throw std::invalid_argument("negative cutoff");
}

TensorSeries TensorSeries::zero(AlphabetPtr alphabet, int cutoff) {
  return TensorSeries(std::move(alphabet), cutoff);
}

TensorSeries TensorSeries::unit(AlphabetPtr alphabet, int cutoff) {
  return scalar(std::move(alphabet), cutoff, Rational(1));
}

TensorSeries TensorSeries::scalar(AlphabetPtr alphabet, int cutoff, const Rational& c) {
  TensorSeries s(std::move(alphabet), cutoff);
  s.add_term(Word{}, c);
  return s;
}

TensorSeries TensorSeries::generator(AlphabetPtr alphabet, int cutoff, Letter l) {
  TensorSeries s(std::move(alphabet), cutoff);
  Word w;
  w.push_back(static_cast<char>(l));
  s.add_term(w, Rational(1));
  return s;
}

TensorSeries TensorSeries::monomial(AlphabetPtr alphabet, int cutoff, const Word& w,
                                    const Rational& c) {
  TensorSeries s(std::move(alphabet), cutoff);
  s.add_term(w, c);
  return s;
}

Rational TensorSeries::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

int TensorSeries::min_weight() const {
  int m = cutoff_ + 1;
  for (const auto& [w, c] : terms_) m = std::min(m, alphabet_->word_weight(w));
  return m;
}

void TensorSeries::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  if (alphabet_->word_weight(w) > cutoff_) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void TensorSeries::add_scaled(const TensorSeries& other, const Rational& c) {
  require_same_alphabet(alphabet_, other.alphabet_);
  cutoff_ = std::min(cutoff_, other.cutoff_);
  std::erase_if(terms_, [&](const auto& t) { return alphabet_->word_weight(t.first) > cutoff_; });
  if (c == 0) return;
  for (const auto& [w, v] : other.terms_) add_term(w, v * c);
}

bool TensorSeries::operator==(const TensorSeries& other) const {
  return same_alphabet(alphabet_, other.alphabet_) && cutoff_ == other.cutoff_ &&
         terms_ == other.terms_;
}

TensorSeries& TensorSeries::operator+=(const TensorSeries& other) {
  add_scaled(other, Rational(1));
  return *this;
}

TensorSeries& TensorSeries::operator-=(const TensorSeries& other) {
  add_scaled(other, Rational(-1));
  return *this;
}

TensorSeries& TensorSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

TensorSeries& TensorSeries::operator/=(const Rational& c) {
  if (c == 0) throw std::invalid_argument("division by zero");
  for (auto& [w, v] : terms_) v /= c;
  return *this;
}

TensorSeries operator+(TensorSeries a, const TensorSeries& b) { return a += b; }
TensorSeries operator-(TensorSeries a, const TensorSeries& b) { return a -= b; }

TensorSeries operator-(TensorSeries a) { return a *= Rational(-1); }

TensorSeries operator*(const Rational& c, TensorSeries a) { return a *= c; }
TensorSeries operator*(TensorSeries a, const Rational& c) { return a *= c; }
TensorSeries operator/(TensorSeries a, const Rational& c) { return a /= c; }

namespace {
struct FlatTerm {
  const Word* word;
  int weight;
  const Rational* coeff;
};

std::vector<FlatTerm> flatten_by_weight(const TensorSeries& s) {
  std::vector<FlatTerm> out;
  out.reserve(s.terms().size());
  for (const auto& [w, c] : s.terms())
    out.push_back({&w, s.alphabet()->word_weight(w), &c});
  std::stable_sort(out.begin(), out.end(),
                   [](const FlatTerm& a, const FlatTerm& b) { return a.weight < b.weight; });
  return out;
}
}  // namespace

TensorSeries mul(const TensorSeries& a, const TensorSeries& b) {
  require_same_alphabet(a.alphabet(), b.alphabet());
  TensorSeries out(a.alphabet(), std::min(a.cutoff(), b.cutoff()));
  auto fa = flatten_by_weight(a);
  auto fb = flatten_by_weight(b);
  for (const auto& ta : fa) {
    if (ta.weight > out.cutoff()) break;
    for (const auto& tb : fb) {
      if (ta.weight + tb.weight > out.cutoff()) break;
      out.add_term(*ta.word + *tb.word, *ta.coeff * *tb.coeff);
    }
  }
  return out;
}

TensorSeries operator*(const TensorSeries& a, const TensorSeries& b) { return mul(a, b); }

TensorSeries bracket(const TensorSeries& a, const TensorSeries& b) {
  return mul(a, b) - mul(b, a);
}

TensorSeries truncate(const TensorSeries& a, int n) {
  TensorSeries out(a.alphabet(), std::min(n, a.cutoff()));
  for (const auto& [w, c] : a.terms()) out.add_term(w, c);
  return out;
}

TensorSeries weight_component(const TensorSeries& a, int k) {
  if (k < 0 || k > a.cutoff()) throw std::out_of_range("weight_component: k out of range");
  TensorSeries out(a.alphabet(), a.cutoff());
  for (const auto& [w, c] : a.terms())
    if (a.alphabet()->word_weight(w) == k) out.add_term(w, c);
  return out;
}

TensorSeries length_component(const TensorSeries& a, int k) {
  TensorSeries out(a.alphabet(), a.cutoff());
  for (const auto& [w, c] : a.terms())
    if (static_cast<int>(w.size()) == k) out.add_term(w, c);
  return out;
}

int max_length(const TensorSeries& a) {
  int m = 0;
  for (const auto& [w, c] : a.terms()) m = std::max<int>(m, static_cast<int>(w.size()));
  return m;
}

TensorSeries exp_series(const TensorSeries& a) {
  if (a.constant_term() != 0)
    throw PreconditionError("exp: nonzero constant term");
  TensorSeries result = TensorSeries::unit(a.alphabet(), a.cutoff());
  TensorSeries term = result;
  for (int k = 1; !term.is_zero(); ++k) {
    term = mul(term, a);
    term /= Rational(k);
    result += term;
  }
  return result;
}

TensorSeries log_series(const TensorSeries& g) {
  if (g.constant_term() != 1)
    throw PreconditionError("log: constant term must be 1");
  TensorSeries h = g - TensorSeries::unit(g.alphabet(), g.cutoff());
  TensorSeries result(g.alphabet(), g.cutoff());
  TensorSeries hk = h;
  Rational sign(1);
  for (int k = 1; !hk.is_zero(); ++k) {
    result.add_scaled(hk, sign / Rational(k));
    hk = mul(hk, h);
    sign = -sign;
  }
  return result;
}

TensorSeries inverse_series(const TensorSeries& g) {
  Rational c = g.constant_term();
  if (c == 0) throw PreconditionError("inverse: zero constant term");
  TensorSeries h = g / c - TensorSeries::unit(g.alphabet(), g.cutoff());
  TensorSeries result = TensorSeries::unit(g.alphabet(), g.cutoff());
  TensorSeries hk = h;
  Rational sign(-1);
  while (!hk.is_zero()) {
    result.add_scaled(hk, sign);
    hk = mul(hk, h);
    sign = -sign;
  }
  return result / c;
}

TensorSeries conjugate(const TensorSeries& g, const TensorSeries& a) {
  return mul(mul(g, a), inverse_series(g));
}

}  // namespace necklace
