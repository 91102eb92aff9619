#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace necklace {

/// Index of a generator inside its alphabet. Words are strings of these.
using Letter = unsigned char;

/// A word in the tensor algebra: the sequence of letter indices. The empty
/// word is the algebra unit. Letter indices follow the alphabet's total
/// order, so lexicographic comparison of words is the alphabet order.
using Word = std::string;

struct Generator {
  std::string name;
  int weight = 1;
};

class Alphabet;
using AlphabetPtr = std::shared_ptr<const Alphabet>;

/// Ordered weighted alphabet. Generators are totally ordered by index;
/// surface alphabets use the order x1 < y1 < ... < xg < yg < z1 < ... < zn.
class Alphabet {
 public:
  explicit Alphabet(std::vector<Generator> gens);

  /// Surface alphabet for \Sigma_{g,n+1}: x_i, y_i of weight 1, z_j of weight 2.
  static AlphabetPtr surface(int genus, int punctures);
  /// Generic basis alphabet b1..bd with explicit weights.
  static AlphabetPtr basis(const std::vector<int>& weights);
  /// Generic basis alphabet b1..bd, all weights 1.
  static AlphabetPtr basis(int dimension);

  int size() const { return static_cast<int>(gens_.size()); }
  const Generator& gen(Letter l) const { return gens_.at(l); }
  const std::string& name(Letter l) const { return gens_.at(l).name; }
  int weight(Letter l) const { return gens_.at(l).weight; }

  std::optional<Letter> find(const std::string& name) const;
  Letter require(const std::string& name) const;

  int word_weight(const Word& w) const;
  int min_generator_weight() const;

  bool operator==(const Alphabet& other) const;

 private:
  std::vector<Generator> gens_;
};

/// Structural compatibility of the alphabets behind two values.
bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);
void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b);

/// Human-readable rendering "x1.y1.z1" ("1" for the empty word).
std::string word_to_string(const Alphabet& alphabet, const Word& w);

struct AlphabetMismatch : std::runtime_error {
  AlphabetMismatch() : std::runtime_error("alphabet mismatch") {}
};

}  // namespace necklace
