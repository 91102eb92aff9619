#include "necklace/pbw.hpp"

#include <algorithm>
#include <numeric>

namespace necklace {

namespace {

// Enumerate set partitions of {0..n-1} as restricted growth strings and
// hand each to the visitor as the list of blocks (position lists).
template <class Visitor>
void for_each_set_partition(int n, Visitor&& visit) {
  std::vector<int> rgs(static_cast<size_t>(n), 0);
  std::vector<std::vector<int>> blocks;
  auto emit = [&]() {
    int k = *std::max_element(rgs.begin(), rgs.end()) + 1;
    blocks.assign(static_cast<size_t>(k), {});
    for (int i = 0; i < n; ++i) blocks[static_cast<size_t>(rgs[static_cast<size_t>(i)])].push_back(i);
    visit(blocks);
  };
  if (n == 0) return;
  // Iterate RGS in lexicographic order: rgs[0] = 0, rgs[i] <= max(prefix)+1.
  while (true) {
    emit();
    int i = n - 1;
    for (; i > 0; --i) {
      int prefix_max = *std::max_element(rgs.begin(), rgs.begin() + i);
      if (rgs[static_cast<size_t>(i)] <= prefix_max) break;
    }
    if (i == 0) break;
    ++rgs[static_cast<size_t>(i)];
    std::fill(rgs.begin() + i + 1, rgs.end(), 0);
  }
}

Word subword(const Word& w, const std::vector<int>& positions) {
  Word out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(w[static_cast<size_t>(p)]);
  return out;
}

}  // namespace

EulerianProjector::EulerianProjector(AlphabetPtr alphabet, int cutoff)
    : alphabet_(std::move(alphabet)), cutoff_(cutoff) {}

const TensorSeries& EulerianProjector::e1_word(const Word& w) {
  auto it = cache_.find(w);
  if (it != cache_.end()) return it->second;

  TensorSeries acc(alphabet_, cutoff_);
  const int n = static_cast<int>(w.size());
  if (n > 0) {
    // e1(w) = Σ_k (-1)^{k+1}/k Σ_{ordered partitions into k nonempty blocks}
    //         w_{B_1} w_{B_2} ... w_{B_k}
    for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
      const int k = static_cast<int>(blocks.size());
      Rational c = Rational((k % 2 == 1) ? 1 : -1) / Rational(k);
      std::vector<int> order(blocks.size());
      std::iota(order.begin(), order.end(), 0);
      do {
        Word prod;
        for (int b : order) {
          Word part = subword(w, blocks[static_cast<size_t>(b)]);
          prod += part;
        }
        acc.add_term(prod, c);
      } while (std::next_permutation(order.begin(), order.end()));
    });
  }
  return cache_.emplace(w, std::move(acc)).first->second;
}

TensorSeries EulerianProjector::project(const TensorSeries& a, int m) {
  require_same_alphabet(a.alphabet(), alphabet_);
  TensorSeries out(alphabet_, std::min(cutoff_, a.cutoff()));
  if (m < 0) return out;
  for (const auto& [w, coeff] : a.terms()) {
    const int n = static_cast<int>(w.size());
    if (m == 0) {
      if (n == 0) out.add_term(w, coeff);
      continue;
    }
    if (n < m) continue;  // fewer letters than blocks
    // e_m(w) = (1/m!) Σ_{partitions into m nonempty blocks, ordered}
    //          e1(w_{B_1}) ... e1(w_{B_m})
    Rational norm = coeff / factorial(m);
    for_each_set_partition(n, [&](const std::vector<std::vector<int>>& blocks) {
      if (static_cast<int>(blocks.size()) != m) return;
      std::vector<int> order(blocks.size());
      std::iota(order.begin(), order.end(), 0);
      do {
        TensorSeries prod = TensorSeries::scalar(alphabet_, out.cutoff(), norm);
        for (int b : order) {
          prod = mul(prod, e1_word(subword(w, blocks[static_cast<size_t>(b)])));
          if (prod.is_zero()) break;
        }
        out += prod;
      } while (std::next_permutation(order.begin(), order.end()));
    });
  }
  return out;
}

TensorSeries eulerian_projection(const TensorSeries& a, int m) {
  EulerianProjector proj(a.alphabet(), a.cutoff());
  return proj.project(a, m);
}

TensorSeries symmetrize(const std::vector<TensorSeries>& factors) {
  if (factors.empty()) throw std::invalid_argument("symmetrize: no factors");
  const auto& alphabet = factors.front().alphabet();
  int cutoff = factors.front().cutoff();
  for (const auto& f : factors) {
    require_same_alphabet(f.alphabet(), alphabet);
    cutoff = std::min(cutoff, f.cutoff());
  }
  const int m = static_cast<int>(factors.size());
  std::vector<int> order(factors.size());
  std::iota(order.begin(), order.end(), 0);
  TensorSeries acc(alphabet, cutoff);
  do {
    TensorSeries prod = TensorSeries::unit(alphabet, cutoff);
    for (int i : order) prod = mul(prod, factors[static_cast<size_t>(i)]);
    acc += prod;
  } while (std::next_permutation(order.begin(), order.end()));
  return acc / factorial(m);
}

CyclicSeries power_trace(const TensorSeries& u, int m) {
  if (u.constant_term() != 0)
    throw PreconditionError("power_trace: nonzero constant term");
  TensorSeries p = TensorSeries::unit(u.alphabet(), u.cutoff());
  for (int i = 0; i < m; ++i) p = mul(p, u);
  return trace(p);
}

SpanMembership membership_in_power_span(const TensorSeries& u,
                                        const std::vector<TensorSeries>& targets, int m) {
  int cutoff = u.cutoff();
  for (const auto& t : targets) cutoff = std::min(cutoff, t.cutoff());
  CyclicSeries lhs = truncate(power_trace(u, m), cutoff);
  std::vector<CyclicSeries> cols;
  for (const auto& t : targets) cols.push_back(truncate(power_trace(t, m), cutoff));

  // Index the union of all appearing classes.
  std::map<Word, int> pos;
  auto note = [&](const CyclicSeries& s) {
    for (const auto& [w, c] : s.terms())
      pos.try_emplace(w, static_cast<int>(pos.size()));
  };
  note(lhs);
  for (const auto& c : cols) note(c);

  MatQ mat = MatQ::Zero(static_cast<int>(pos.size()), static_cast<int>(cols.size()));
  VecQ rhs = VecQ::Zero(static_cast<int>(pos.size()));
  for (const auto& [w, c] : lhs.terms()) rhs(pos.at(w)) = c;
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [w, c] : cols[j].terms()) mat(pos.at(w), static_cast<int>(j)) = c;

  SpanMembership result;
  auto sol = try_solve(mat, rhs);
  if (sol) {
    result.member = true;
    for (int j = 0; j < sol->size(); ++j) result.coefficients.push_back((*sol)(j));
  }
  return result;
}

}  // namespace necklace
