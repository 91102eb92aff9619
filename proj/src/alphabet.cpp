#include "necklace/alphabet.hpp"

#include <algorithm>

namespace necklace {

Alphabet::Alphabet(std::vector<Generator> gens) : gens_(std::move(gens)) {
  if (gens_.size() > 200) throw std::invalid_argument("alphabet too large");
  for (const auto& g : gens_) {
    if (g.weight < 1) throw std::invalid_argument("generator weight must be >= 1");
    if (g.name.empty()) throw std::invalid_argument("generator needs a name");
  }
  for (size_t i = 0; i < gens_.size(); ++i)
    for (size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i].name == gens_[j].name)
        throw std::invalid_argument("duplicate generator name: " + gens_[i].name);
}

AlphabetPtr Alphabet::surface(int genus, int punctures) {
  if (genus < 0 || punctures < 0) throw std::invalid_argument("surface(g,n): negative parameter");
  std::vector<Generator> gens;
  for (int i = 1; i <= genus; ++i) {
    gens.push_back({"x" + std::to_string(i), 1});
    gens.push_back({"y" + std::to_string(i), 1});
  }
  for (int j = 1; j <= punctures; ++j) gens.push_back({"z" + std::to_string(j), 2});
  return std::make_shared<Alphabet>(std::move(gens));
}

AlphabetPtr Alphabet::basis(const std::vector<int>& weights) {
  std::vector<Generator> gens;
  for (size_t k = 0; k < weights.size(); ++k)
    gens.push_back({"b" + std::to_string(k + 1), weights[k]});
  return std::make_shared<Alphabet>(std::move(gens));
}

AlphabetPtr Alphabet::basis(int dimension) {
  return basis(std::vector<int>(dimension, 1));
}

std::optional<Letter> Alphabet::find(const std::string& name) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return static_cast<Letter>(i);
  return std::nullopt;
}

Letter Alphabet::require(const std::string& name) const {
  auto l = find(name);
  if (!l) throw std::invalid_argument("no generator named '" + name + "'");
  return *l;
}

int Alphabet::word_weight(const Word& w) const {
  int total = 0;
  for (unsigned char l : w) total += weight(l);
  return total;
}

int Alphabet::min_generator_weight() const {
  int m = 0;
  for (const auto& g : gens_) m = (m == 0) ? g.weight : std::min(m, g.weight);
  return m == 0 ? 1 : m;
}

bool Alphabet::operator==(const Alphabet& other) const {
  if (gens_.size() != other.gens_.size()) return false;
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name != other.gens_[i].name || gens_[i].weight != other.gens_[i].weight)
      return false;
  return true;
}

bool same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

void require_same_alphabet(const AlphabetPtr& a, const AlphabetPtr& b) {
  if (!same_alphabet(a, b)) throw AlphabetMismatch{};
}

std::string word_to_string(const Alphabet& alphabet, const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += alphabet.name(static_cast<Letter>(static_cast<unsigned char>(w[i])));
  }
  return out;
}

}  // namespace necklace
