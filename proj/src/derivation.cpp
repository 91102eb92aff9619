#include "necklace/derivation.hpp"

namespace necklace {

Derivation::Derivation(AlphabetPtr alphabet, int cutoff, std::vector<TensorSeries> images)
    : alphabet_(std::move(alphabet)), cutoff_(cutoff), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != alphabet_->size())
    throw std::invalid_argument("derivation needs one image per generator");
  for (auto& img : images_) {
    require_same_alphabet(img.alphabet(), alphabet_);
    img = truncate(img, cutoff_);
  }
}

Derivation Derivation::zero(AlphabetPtr alphabet, int cutoff) {
  std::vector<TensorSeries> images(static_cast<size_t>(alphabet->size()),
                                   TensorSeries(alphabet, cutoff));
  return Derivation(alphabet, cutoff, std::move(images));
}

TensorSeries Derivation::apply(const TensorSeries& s) const {
  require_same_alphabet(s.alphabet(), alphabet_);
  int cutoff = std::min(cutoff_, s.cutoff());
  TensorSeries out(alphabet_, cutoff);
  for (const auto& [w, c] : s.terms()) {
    for (size_t p = 0; p < w.size(); ++p) {
      const TensorSeries& img = images_[static_cast<unsigned char>(w[p])];
      Word prefix = w.substr(0, p);
      Word suffix = w.substr(p + 1);
      for (const auto& [wi, ci] : img.terms()) out.add_term(prefix + wi + suffix, c * ci);
    }
  }
  return out;
}

bool Derivation::is_positive() const {
  for (int l = 0; l < alphabet_->size(); ++l)
    if (!images_[static_cast<size_t>(l)].is_zero() &&
        images_[static_cast<size_t>(l)].min_weight() <= alphabet_->weight(static_cast<Letter>(l)))
      return false;
  return true;
}

Derivation& Derivation::operator+=(const Derivation& other) {
  require_same_alphabet(alphabet_, other.alphabet_);
  cutoff_ = std::min(cutoff_, other.cutoff_);
  for (int l = 0; l < alphabet_->size(); ++l) {
    images_[static_cast<size_t>(l)] =
        truncate(images_[static_cast<size_t>(l)], cutoff_) +
        truncate(other.images_[static_cast<size_t>(l)], cutoff_);
  }
  return *this;
}

Derivation& Derivation::operator*=(const Rational& c) {
  for (auto& img : images_) img *= c;
  return *this;
}

Derivation operator+(Derivation a, const Derivation& b) { return a += b; }
Derivation operator*(const Rational& c, Derivation a) { return a *= c; }

Derivation der_bracket(const Derivation& u, const Derivation& v) {
  require_same_alphabet(u.alphabet(), v.alphabet());
  int cutoff = std::min(u.cutoff(), v.cutoff());
  std::vector<TensorSeries> images;
  for (int l = 0; l < u.alphabet()->size(); ++l) {
    images.push_back(u.apply(v.image(static_cast<Letter>(l))) -
                     v.apply(u.image(static_cast<Letter>(l))));
  }
  return Derivation(u.alphabet(), cutoff, std::move(images));
}

AlgebraMorphism exp_derivation(const Derivation& u) {
  if (!u.is_positive())
    throw PreconditionError("exp_derivation: derivation must raise weight");
  std::vector<TensorSeries> images;
  for (int l = 0; l < u.alphabet()->size(); ++l) {
    TensorSeries gen = TensorSeries::generator(u.alphabet(), u.cutoff(), static_cast<Letter>(l));
    TensorSeries acc = gen;
    TensorSeries term = gen;
    for (int k = 1; !term.is_zero(); ++k) {
      term = u.apply(term) / Rational(k);
      acc += term;
    }
    images.push_back(std::move(acc));
  }
  return AlgebraMorphism(u.alphabet(), u.cutoff(), std::move(images));
}

Derivation log_morphism(const AlgebraMorphism& f) {
  if (!f.is_graded_identity())
    throw PreconditionError("log_morphism: associated graded must be the identity");
  std::vector<TensorSeries> images;
  for (int l = 0; l < f.alphabet()->size(); ++l) {
    TensorSeries gen = TensorSeries::generator(f.alphabet(), f.cutoff(), static_cast<Letter>(l));
    // log(F)(l) = Σ (-1)^{k+1}/k (F - id)^k (l); each pass raises weight.
    TensorSeries acc(f.alphabet(), f.cutoff());
    TensorSeries power = gen;
    Rational sign(1);
    for (int k = 1;; ++k) {
      power = f.apply(power) - power;
      if (power.is_zero()) break;
      acc.add_scaled(power, sign / Rational(k));
      sign = -sign;
    }
    images.push_back(std::move(acc));
  }
  return Derivation(f.alphabet(), f.cutoff(), std::move(images));
}

TensorSeries exp_integral(const Derivation& u, const TensorSeries& s) {
  TensorSeries acc = s;
  TensorSeries term = s;
  for (int k = 1; !term.is_zero(); ++k) {
    term = u.apply(term) / Rational(k + 1);
    acc += term;
  }
  return acc;
}

}  // namespace necklace
