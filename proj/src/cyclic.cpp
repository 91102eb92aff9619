#include "necklace/cyclic.hpp"

#include <algorithm>

#include "necklace/lyndon.hpp"

namespace necklace {

Word canonical_rotation(const Word& w) {
  const size_t n = w.size();
  if (n <= 1) return w;
  // Booth's least-rotation algorithm on the doubled word.
  Word s = w + w;
  std::vector<ptrdiff_t> f(2 * n, -1);
  size_t k = 0;
  for (size_t j = 1; j < 2 * n; ++j) {
    char sj = s[j];
    ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != s[k + static_cast<size_t>(i) + 1]) {
      if (sj < s[k + static_cast<size_t>(i) + 1]) k = j - static_cast<size_t>(i) - 1;
      i = f[static_cast<size_t>(i)];
    }
    if (sj != s[k + static_cast<size_t>(i) + 1]) {
      if (sj < s[k]) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  return s.substr(k, n);
}

CyclicSeries::CyclicSeries(AlphabetPtr alphabet, int cutoff)
    : alphabet_(std::move(alphabet)), cutoff_(cutoff) {
  if (!alphabet_) throw std::invalid_argument("null alphabet");
}

CyclicSeries CyclicSeries::zero(AlphabetPtr alphabet, int cutoff) {
  return CyclicSeries(std::move(alphabet), cutoff);
}

Rational CyclicSeries::coeff_class(const Word& any_rotation) const {
  auto it = terms_.find(canonical_rotation(any_rotation));
  return it == terms_.end() ? Rational(0) : it->second;
}

void CyclicSeries::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  if (alphabet_->word_weight(w) > cutoff_) return;
  Word canon = canonical_rotation(w);
  auto [it, inserted] = terms_.try_emplace(std::move(canon), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void CyclicSeries::add_scaled(const CyclicSeries& other, const Rational& c) {
  require_same_alphabet(alphabet_, other.alphabet_);
  cutoff_ = std::min(cutoff_, other.cutoff_);
  std::erase_if(terms_, [&](const auto& t) { return alphabet_->word_weight(t.first) > cutoff_; });
  if (c == 0) return;
  for (const auto& [w, v] : other.terms_) add_term(w, v * c);
}

bool CyclicSeries::operator==(const CyclicSeries& other) const {
  return same_alphabet(alphabet_, other.alphabet_) && cutoff_ == other.cutoff_ &&
         terms_ == other.terms_;
}

CyclicSeries& CyclicSeries::operator+=(const CyclicSeries& other) {
  add_scaled(other, Rational(1));
  return *this;
}

CyclicSeries& CyclicSeries::operator-=(const CyclicSeries& other) {
  add_scaled(other, Rational(-1));
  return *this;
}

CyclicSeries& CyclicSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

CyclicSeries operator+(CyclicSeries a, const CyclicSeries& b) { return a += b; }
CyclicSeries operator-(CyclicSeries a, const CyclicSeries& b) { return a -= b; }
CyclicSeries operator-(CyclicSeries a) { return a *= Rational(-1); }
CyclicSeries operator*(const Rational& c, CyclicSeries a) { return a *= c; }

CyclicSeries trace(const TensorSeries& a) {
  CyclicSeries out(a.alphabet(), a.cutoff());
  for (const auto& [w, c] : a.terms()) out.add_term(w, c);
  return out;
}

TensorSeries embed(const CyclicSeries& c) {
  TensorSeries out(c.alphabet(), c.cutoff());
  for (const auto& [w, v] : c.terms()) {
    if (w.empty()) {
      out.add_term(w, v);
      continue;
    }
    for (size_t k = 0; k < w.size(); ++k) out.add_term(w.substr(k) + w.substr(0, k), v);
  }
  return out;
}

CyclicSeries weight_component(const CyclicSeries& a, int k) {
  if (k < 0 || k > a.cutoff()) throw std::out_of_range("weight_component: k out of range");
  CyclicSeries out(a.alphabet(), a.cutoff());
  for (const auto& [w, c] : a.terms())
    if (a.alphabet()->word_weight(w) == k) out.add_term(w, c);
  return out;
}

CyclicSeries truncate(const CyclicSeries& a, int n) {
  CyclicSeries out(a.alphabet(), std::min(n, a.cutoff()));
  for (const auto& [w, c] : a.terms()) out.add_term(w, c);
  return out;
}

CyclicSeries apply(const AlgebraMorphism& f, const CyclicSeries& c) {
  CyclicSeries out(c.alphabet(), std::min(f.cutoff(), c.cutoff()));
  for (const auto& [w, v] : c.terms()) {
    TensorSeries img = f.apply(TensorSeries::monomial(c.alphabet(), out.cutoff(), w, v));
    for (const auto& [wi, ci] : img.terms()) out.add_term(wi, ci);
  }
  return out;
}

CyclicSeries apply(const Derivation& u, const CyclicSeries& c) {
  CyclicSeries out(c.alphabet(), std::min(u.cutoff(), c.cutoff()));
  for (const auto& [w, v] : c.terms()) {
    TensorSeries img = u.apply(TensorSeries::monomial(c.alphabet(), out.cutoff(), w, v));
    for (const auto& [wi, ci] : img.terms()) out.add_term(wi, ci);
  }
  return out;
}

CyclicSeries exp_integral(const Derivation& u, const CyclicSeries& c) {
  CyclicSeries acc = c;
  CyclicSeries term = c;
  for (int k = 1; !term.is_zero(); ++k) {
    term = apply(u, term);
    term *= Rational(1) / Rational(k + 1);
    acc += term;
  }
  return acc;
}

TensorSeries right_partial(Letter g, const TensorSeries& a) {
  if (a.constant_term() != 0)
    throw PreconditionError("right_partial: nonzero constant term");
  TensorSeries out(a.alphabet(), a.cutoff());
  for (const auto& [w, c] : a.terms()) {
    if (!w.empty() && static_cast<unsigned char>(w.back()) == g)
      out.add_term(w.substr(0, w.size() - 1), c);
  }
  return out;
}

std::vector<Word> cyclic_words_of_weight(const Alphabet& alphabet, int weight) {
  std::vector<Word> canon;
  for (const Word& w : words_of_weight(alphabet, weight))
    canon.push_back(canonical_rotation(w));
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  return canon;
}

CyclicIndex::CyclicIndex(std::vector<Word> canonical_words) : words_(std::move(canonical_words)) {
  for (size_t i = 0; i < words_.size(); ++i) pos_[words_[i]] = static_cast<int>(i);
}

CyclicIndex CyclicIndex::of_weight(const Alphabet& alphabet, int weight) {
  return CyclicIndex(cyclic_words_of_weight(alphabet, weight));
}

int CyclicIndex::at(const Word& canonical) const {
  auto it = pos_.find(canonical);
  if (it == pos_.end()) throw std::out_of_range("CyclicIndex: class not present");
  return it->second;
}

VecQ to_vector(const CyclicSeries& s, const CyclicIndex& idx) {
  VecQ v = VecQ::Zero(idx.size());
  for (int i = 0; i < idx.size(); ++i) {
    auto it = s.terms().find(idx.word(i));
    if (it != s.terms().end()) v(i) = it->second;
  }
  return v;
}

CyclicSeries from_vector(AlphabetPtr alphabet, int cutoff, const CyclicIndex& idx,
                         const VecQ& v) {
  CyclicSeries s(std::move(alphabet), cutoff);
  for (int i = 0; i < idx.size(); ++i) s.add_term(idx.word(i), v(i));
  return s;
}

}  // namespace necklace
