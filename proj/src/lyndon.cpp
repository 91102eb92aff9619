#include "necklace/lyndon.hpp"

#include <algorithm>

namespace necklace {

namespace {
void enumerate_words(const Alphabet& alphabet, int remaining, Word& prefix,
                     std::vector<Word>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int l = 0; l < alphabet.size(); ++l) {
    int w = alphabet.weight(static_cast<Letter>(l));
    if (w > remaining) continue;
    prefix.push_back(static_cast<char>(l));
    enumerate_words(alphabet, remaining - w, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace

std::vector<Word> words_of_weight(const Alphabet& alphabet, int weight) {
  std::vector<Word> out;
  Word prefix;
  enumerate_words(alphabet, weight, prefix, out);
  return out;
}

WordIndex::WordIndex(std::vector<Word> words) : words_(std::move(words)) {
  for (size_t i = 0; i < words_.size(); ++i) pos_[words_[i]] = static_cast<int>(i);
}

WordIndex WordIndex::of_weight(const Alphabet& alphabet, int weight) {
  return WordIndex(words_of_weight(alphabet, weight));
}

std::optional<int> WordIndex::find(const Word& w) const {
  auto it = pos_.find(w);
  if (it == pos_.end()) return std::nullopt;
  return it->second;
}

int WordIndex::at(const Word& w) const {
  auto i = find(w);
  if (!i) throw std::out_of_range("WordIndex: word not present");
  return *i;
}

VecQ to_vector(const TensorSeries& s, const WordIndex& idx) {
  VecQ v = VecQ::Zero(idx.size());
  for (int i = 0; i < idx.size(); ++i) v(i) = s.coeff(idx.word(i));
  return v;
}

TensorSeries from_vector(AlphabetPtr alphabet, int cutoff, const WordIndex& idx, const VecQ& v) {
  TensorSeries s(std::move(alphabet), cutoff);
  for (int i = 0; i < idx.size(); ++i) s.add_term(idx.word(i), v(i));
  return s;
}

std::vector<Word> lyndon_words(const Alphabet& alphabet, int weight) {
  // Duval generation of Lyndon words of length <= weight, filtered by weight.
  std::vector<Word> out;
  const int k = alphabet.size();
  if (k == 0 || weight <= 0) return out;
  const int max_len = weight;  // generator weights are >= 1
  Word w(1, char(0));
  while (!w.empty()) {
    if (alphabet.word_weight(w) == weight) out.push_back(w);
    Word t = w;
    while (static_cast<int>(t.size()) < max_len)
      t.push_back(t[t.size() % w.size()]);
    while (!t.empty() && static_cast<unsigned char>(t.back()) == k - 1) t.pop_back();
    if (t.empty()) break;
    t.back() = static_cast<char>(t.back() + 1);
    w = t;
  }
  std::sort(out.begin(), out.end());
  return out;
}

TensorSeries lyndon_bracket(AlphabetPtr alphabet, int cutoff, const Word& lw) {
  if (lw.size() == 1)
    return TensorSeries::generator(alphabet, cutoff,
                                   static_cast<Letter>(static_cast<unsigned char>(lw[0])));
  // Standard factorization: v = lexicographically smallest proper suffix.
  size_t split = 1;
  for (size_t i = 2; i < lw.size(); ++i)
    if (lw.substr(i) < lw.substr(split)) split = i;
  TensorSeries left = lyndon_bracket(alphabet, cutoff, lw.substr(0, split));
  TensorSeries right = lyndon_bracket(alphabet, cutoff, lw.substr(split));
  return bracket(left, right);
}

LieBasis lie_basis(AlphabetPtr alphabet, int weight) {
  LieBasis b;
  b.lyndon = lyndon_words(*alphabet, weight);
  b.word_index = WordIndex::of_weight(*alphabet, weight);
  b.matrix = MatQ::Zero(b.word_index.size(), static_cast<int>(b.lyndon.size()));
  for (size_t j = 0; j < b.lyndon.size(); ++j) {
    b.elements.push_back(lyndon_bracket(alphabet, weight, b.lyndon[j]));
    b.matrix.col(static_cast<int>(j)) = to_vector(b.elements.back(), b.word_index);
  }
  return b;
}

int lie_dimension(const Alphabet& alphabet, int weight) {
  return static_cast<int>(lyndon_words(alphabet, weight).size());
}

}  // namespace necklace
