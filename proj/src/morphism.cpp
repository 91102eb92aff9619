#include "necklace/morphism.hpp"

namespace necklace {

AlgebraMorphism::AlgebraMorphism(AlphabetPtr alphabet, int cutoff,
                                 std::vector<TensorSeries> images)
    : alphabet_(std::move(alphabet)), cutoff_(cutoff), images_(std::move(images)) {
  if (static_cast<int>(images_.size()) != alphabet_->size())
    throw std::invalid_argument("morphism needs one image per generator");
  for (auto& img : images_) {
    require_same_alphabet(img.alphabet(), alphabet_);
    img = truncate(img, cutoff_);
  }
}

AlgebraMorphism AlgebraMorphism::identity(AlphabetPtr alphabet, int cutoff) {
  std::vector<TensorSeries> images;
  for (int l = 0; l < alphabet->size(); ++l)
    images.push_back(TensorSeries::generator(alphabet, cutoff, static_cast<Letter>(l)));
  return AlgebraMorphism(alphabet, cutoff, std::move(images));
}

TensorSeries AlgebraMorphism::apply(const TensorSeries& s) const {
  require_same_alphabet(s.alphabet(), alphabet_);
  int cutoff = std::min(cutoff_, s.cutoff());
  TensorSeries out(alphabet_, cutoff);
  for (const auto& [w, c] : s.terms()) {
    TensorSeries prod = TensorSeries::scalar(alphabet_, cutoff, c);
    for (char lc : w) {
      prod = mul(prod, images_[static_cast<unsigned char>(lc)]);
      if (prod.is_zero()) break;
    }
    out += prod;
  }
  return out;
}

bool AlgebraMorphism::is_graded_identity() const {
  for (int l = 0; l < alphabet_->size(); ++l) {
    TensorSeries diff =
        images_[static_cast<size_t>(l)] -
        TensorSeries::generator(alphabet_, cutoff_, static_cast<Letter>(l));
    if (diff.min_weight() <= alphabet_->weight(static_cast<Letter>(l))) return false;
  }
  return true;
}

AlgebraMorphism AlgebraMorphism::compose(const AlgebraMorphism& inner) const {
  require_same_alphabet(alphabet_, inner.alphabet_);
  std::vector<TensorSeries> images;
  for (int l = 0; l < alphabet_->size(); ++l)
    images.push_back(apply(inner.images_[static_cast<size_t>(l)]));
  return AlgebraMorphism(alphabet_, std::min(cutoff_, inner.cutoff_), std::move(images));
}

AlgebraMorphism AlgebraMorphism::inverse() const {
  // Accept corrections that raise the weight, or keep it while raising the
  // tensor degree (the filtration-triangular case): both make the fixpoint
  // iteration below terminate within the cutoff.
  for (int l = 0; l < alphabet_->size(); ++l) {
    TensorSeries diff =
        images_[static_cast<size_t>(l)] -
        TensorSeries::generator(alphabet_, cutoff_, static_cast<Letter>(l));
    int wl = alphabet_->weight(static_cast<Letter>(l));
    for (const auto& [w, c] : diff.terms()) {
      int wt = alphabet_->word_weight(w);
      if (wt < wl || (wt == wl && w.size() < 2))
        throw PreconditionError("morphism inverse: not filtration-triangular");
    }
  }
  AlgebraMorphism g = identity(alphabet_, cutoff_);
  // G(l) = l - G(F(l) - l); each pass pushes the error further out in the
  // (weight, degree) order, which is bounded by the cutoff in both slots.
  const int max_pass = (cutoff_ + 2) * (cutoff_ + 2);
  for (int iter = 0; iter <= max_pass; ++iter) {
    std::vector<TensorSeries> next;
    bool changed = false;
    for (int l = 0; l < alphabet_->size(); ++l) {
      TensorSeries gen = TensorSeries::generator(alphabet_, cutoff_, static_cast<Letter>(l));
      TensorSeries h = images_[static_cast<size_t>(l)] - gen;
      TensorSeries img = gen - g.apply(h);
      if (!(img == g.images_[static_cast<size_t>(l)])) changed = true;
      next.push_back(std::move(img));
    }
    g = AlgebraMorphism(alphabet_, cutoff_, std::move(next));
    if (!changed) break;
  }
  for (int l = 0; l < alphabet_->size(); ++l) {
    TensorSeries gen = TensorSeries::generator(alphabet_, cutoff_, static_cast<Letter>(l));
    if (!(g.apply(images_[static_cast<size_t>(l)]) == gen))
      throw std::logic_error("morphism inverse: fixpoint verification failed");
  }
  return g;
}

}  // namespace necklace
