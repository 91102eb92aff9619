#pragma once

#include <optional>
#include <vector>

#include "necklace/linalg.hpp"
#include "necklace/tensor_series.hpp"

namespace necklace {

/// All words of exactly the given weight, lexicographically ordered.
std::vector<Word> words_of_weight(const Alphabet& alphabet, int weight);

/// Indexed ordered word list, for moving between series and coordinates.
class WordIndex {
 public:
  WordIndex() = default;
  explicit WordIndex(std::vector<Word> words);
  static WordIndex of_weight(const Alphabet& alphabet, int weight);

  int size() const { return static_cast<int>(words_.size()); }
  const std::vector<Word>& words() const { return words_; }
  const Word& word(int i) const { return words_.at(static_cast<size_t>(i)); }
  std::optional<int> find(const Word& w) const;
  int at(const Word& w) const;

 private:
  std::vector<Word> words_;
  std::map<Word, int> pos_;
};

/// Coordinates of s over the index (coefficients of the indexed words).
VecQ to_vector(const TensorSeries& s, const WordIndex& idx);
TensorSeries from_vector(AlphabetPtr alphabet, int cutoff, const WordIndex& idx, const VecQ& v);

/// Lyndon words of exactly the given weight, lexicographic order.
std::vector<Word> lyndon_words(const Alphabet& alphabet, int weight);

/// Right-normed standard-factorization bracketing of a Lyndon word,
/// expanded in the tensor algebra.
TensorSeries lyndon_bracket(AlphabetPtr alphabet, int cutoff, const Word& lyndon_word);

/// Basis of the weight-k graded component of the free Lie algebra.
struct LieBasis {
  std::vector<Word> lyndon;             //!< Lyndon words of the weight
  std::vector<TensorSeries> elements;   //!< their bracketed expansions
  WordIndex word_index;                 //!< all words of the weight
  MatQ matrix;                          //!< columns = bracket coordinates
};
LieBasis lie_basis(AlphabetPtr alphabet, int weight);

/// Number-theoretic dimension of the weight-k component (generalized Witt
/// count, computed by enumeration of Lyndon words).
int lie_dimension(const Alphabet& alphabet, int weight);

}  // namespace necklace
