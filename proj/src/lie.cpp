#include "necklace/lie.hpp"

#include <algorithm>

#include "necklace/cyclic.hpp"
#include "necklace/morphism.hpp"

namespace necklace {

LieElement::LieElement(TensorSeries s) {
  if (!is_primitive(s)) throw PreconditionError("LieElement: series is not primitive");
  series_ = std::move(s);
}

LieElement LieElement::certified(TensorSeries s) {
  LieElement e;
  e.series_ = std::move(s);
  return e;
}

GroupLike::GroupLike(TensorSeries s) {
  if (!is_grouplike(s)) throw PreconditionError("GroupLike: series is not group-like");
  series_ = std::move(s);
}

GroupLike GroupLike::certified(TensorSeries s) {
  GroupLike g;
  g.series_ = std::move(s);
  return g;
}

LieElement GroupLike::log() const { return LieElement::certified(log_series(series_)); }

GroupLike exp(const LieElement& a) { return GroupLike::certified(exp_series(a.series())); }

TensorSeries bch(const TensorSeries& u, const TensorSeries& v) {
  return log_series(mul(exp_series(u), exp_series(v)));
}

LieElement bch(const LieElement& u, const LieElement& v) {
  return LieElement::certified(bch(u.series(), v.series()));
}

namespace {

Word rot_left(const Word& w) { return w.substr(1) + w[0]; }

// Distinct rotations of w in rot_left order, starting from w itself.
std::vector<Word> distinct_rotations(const Word& w) {
  std::vector<Word> rots;
  Word cur = w;
  do {
    rots.push_back(cur);
    cur = rot_left(cur);
  } while (cur != w);
  return rots;
}

// Solve [e, u] = b for a single letter e. The equation couples only the
// rotations of one cyclic class: writing the unknown through its edge
// coefficients c_w on words v = e w, the class equations read
//   b_{v_i} = c_i [v_i starts with e] - c_{i-1} [v_{i-1} starts with e]
// along the rotation cycle, which is solved by one chain walk.
std::optional<TensorSeries> solve_ad_letter(Letter e, const TensorSeries& b) {
  TensorSeries u(b.alphabet(), b.cutoff());
  std::map<Word, bool> done;  // canonical class -> processed
  for (const auto& [w0, c0] : b.terms()) {
    Word canon = canonical_rotation(w0);
    if (done.count(canon)) continue;
    done[canon] = true;
    if (canon.empty()) return std::nullopt;  // constants are not in the image

    std::vector<Word> rots = distinct_rotations(canon);
    const size_t period = rots.size();
    std::vector<Rational> rhs(period);
    std::vector<bool> starts(period);
    size_t start_count = 0;
    for (size_t i = 0; i < period; ++i) {
      rhs[i] = b.coeff(rots[i]);
      starts[i] = static_cast<unsigned char>(rots[i][0]) == e;
      if (starts[i]) ++start_count;
    }

    if (start_count == 0 || start_count == period) {
      // No letter e in the class (no edges), or the pure power e^m (the
      // kernel class, where ad_e contributes nothing): b must vanish.
      for (const auto& r : rhs)
        if (r != 0) return std::nullopt;
      continue;
    }

    size_t gap = 0;
    while (starts[gap]) ++gap;
    std::vector<Rational> c(period);
    for (size_t s = 1; s <= period; ++s) {
      size_t i = (gap + s) % period;
      size_t prev = (i + period - 1) % period;
      Rational inflow = starts[prev] ? c[prev] : Rational(0);
      if (starts[i]) {
        c[i] = rhs[i] + inflow;
      } else if (rhs[i] != -inflow) {
        return std::nullopt;
      }
    }
    // The walk starts after a gap node and ends by re-checking it, so every
    // class equation has been visited exactly once.
    for (size_t i = 0; i < period; ++i)
      if (starts[i]) u.add_term(rots[i].substr(1), c[i]);
  }
  return u;
}

struct LinearShape {
  Letter pivot;       // letter with nonzero coefficient
  Rational pivot_coeff;
  bool is_single_letter;
  int weight;
};

LinearShape analyze_linear(const TensorSeries& z) {
  if (z.is_zero()) throw PreconditionError("solve_ad: z must be nonzero");
  LinearShape shape{};
  int weight = -1;
  for (const auto& [w, c] : z.terms()) {
    if (w.size() != 1) throw PreconditionError("solve_ad: z must be linear (length-1 words)");
    int wt = z.alphabet()->word_weight(w);
    if (weight == -1) weight = wt;
    if (wt != weight)
      throw PreconditionError("solve_ad: z must be weight-homogeneous");
  }
  shape.weight = weight;
  const auto& first = *z.terms().begin();
  shape.pivot = static_cast<Letter>(static_cast<unsigned char>(first.first[0]));
  shape.pivot_coeff = first.second;
  shape.is_single_letter = z.terms().size() == 1;
  return shape;
}

}  // namespace

TensorSeries solve_ad(const TensorSeries& z, const TensorSeries& b, bool constrain_to_lie) {
  LinearShape shape = analyze_linear(z);
  if (constrain_to_lie && !is_primitive(b))
    throw PreconditionError("solve_ad: constrain_to_lie requires a primitive right-hand side");
  TensorSeries u;
  if (shape.is_single_letter) {
    auto sol = solve_ad_letter(shape.pivot, b / shape.pivot_coeff);
    if (!sol) throw NoSolutionError(b.min_weight());
    u = *sol;
  } else {
    // Change of variables sending the pivot letter to z; then the letter
    // solve applies. M: e -> z fixing other letters; N = M^{-1}.
    const auto& alphabet = z.alphabet();
    int cutoff = b.cutoff();
    std::vector<TensorSeries> m_images, n_images;
    for (int l = 0; l < alphabet->size(); ++l) {
      TensorSeries gen = TensorSeries::generator(alphabet, cutoff, static_cast<Letter>(l));
      if (static_cast<Letter>(l) == shape.pivot) {
        m_images.push_back(truncate(z, cutoff));
        TensorSeries rest = truncate(z, cutoff) - shape.pivot_coeff * gen;
        n_images.push_back((gen - rest) / shape.pivot_coeff);
      } else {
        m_images.push_back(gen);
        n_images.push_back(gen);
      }
    }
    AlgebraMorphism M(alphabet, cutoff, std::move(m_images));
    AlgebraMorphism N(alphabet, cutoff, std::move(n_images));
    auto sol = solve_ad_letter(shape.pivot, N.apply(b));
    if (!sol) throw NoSolutionError(b.min_weight());
    u = M.apply(*sol);
  }
  if (constrain_to_lie && !is_primitive(u))
    throw std::logic_error("solve_ad: expected primitive solution (Lemma on L + K[[z]])");
  if (!(bracket(z, u) == truncate(b, u.cutoff())))
    throw std::logic_error("solve_ad: back-substitution failed");
  return u;
}

namespace {

struct PairIndex {
  std::vector<PairSeries::Key> keys;
  std::map<PairSeries::Key, int> pos;

  static PairIndex of_weight(const Alphabet& alphabet, int m) {
    PairIndex idx;
    for (int k = 0; k <= m; ++k) {
      for (const Word& w1 : words_of_weight(alphabet, k))
        for (const Word& w2 : words_of_weight(alphabet, m - k)) {
          idx.pos[{w1, w2}] = static_cast<int>(idx.keys.size());
          idx.keys.push_back({w1, w2});
        }
    }
    return idx;
  }
};

VecQ pair_to_vector(const PairSeries& s, const PairIndex& idx) {
  VecQ v = VecQ::Zero(static_cast<int>(idx.keys.size()));
  for (const auto& [k, c] : s.terms()) v(idx.pos.at(k)) = c;
  return v;
}

void check_v_or_wedge2(const TensorSeries& z) {
  if (z.is_zero()) throw PreconditionError("z must be nonzero");
  int len = -1, wt = -1;
  for (const auto& [w, c] : z.terms()) {
    if (len == -1) {
      len = static_cast<int>(w.size());
      wt = z.alphabet()->word_weight(w);
    }
    if (static_cast<int>(w.size()) != len || z.alphabet()->word_weight(w) != wt)
      throw PreconditionError("z must be homogeneous");
  }
  if (len == 1) return;
  if (len != 2) throw PreconditionError("z must lie in V or in degree-2 tensors");
  for (const auto& [w, c] : z.terms()) {
    Word swapped{w[1], w[0]};
    if (z.coeff(swapped) != -c)
      throw PreconditionError("degree-2 z must be antisymmetric (wedge-square)");
  }
}

TensorSeries power_of(const TensorSeries& z, int k, int cutoff) {
  TensorSeries p = TensorSeries::unit(z.alphabet(), cutoff);
  for (int i = 0; i < k; ++i) p = mul(p, truncate(z, cutoff));
  return p;
}

}  // namespace

CentralizerResult centralizer_of_delta(const TensorSeries& z, int m) {
  check_v_or_wedge2(z);
  const auto& alphabet = z.alphabet();
  const int d = z.min_weight();
  const int cutoff = m + d;

  PairIndex dom = PairIndex::of_weight(*alphabet, m);
  PairIndex img = PairIndex::of_weight(*alphabet, m + d);

  TensorSeries zc = truncate(z, cutoff);
  TensorSeries unit = TensorSeries::unit(alphabet, cutoff);
  PairSeries delta_z = PairSeries::tensor(zc, unit) + PairSeries::tensor(unit, zc);

  MatQ A = MatQ::Zero(static_cast<int>(img.keys.size()), static_cast<int>(dom.keys.size()));
  for (size_t j = 0; j < dom.keys.size(); ++j) {
    PairSeries u = PairSeries::zero(alphabet, cutoff);
    u.add_term(dom.keys[j].first, dom.keys[j].second, Rational(1));
    A.col(static_cast<int>(j)) = pair_to_vector(bracket(delta_z, u), img);
  }

  CentralizerResult result;
  MatQ K = kernel_basis(A);
  result.dim = static_cast<int>(K.cols());
  for (int j = 0; j < K.cols(); ++j) {
    PairSeries s = PairSeries::zero(alphabet, cutoff);
    for (size_t i = 0; i < dom.keys.size(); ++i)
      s.add_term(dom.keys[i].first, dom.keys[i].second, K(static_cast<int>(i), j));
    result.basis.push_back(std::move(s));
  }

  // Expected lattice span{ z^i ⊗ z^j : (i+j) d = m }.
  MatQ lattice = MatQ::Zero(static_cast<int>(dom.keys.size()), 0);
  if (m % d == 0) {
    int total = m / d;
    lattice = MatQ::Zero(static_cast<int>(dom.keys.size()), total + 1);
    for (int i = 0; i <= total; ++i) {
      PairSeries zz = PairSeries::tensor(power_of(z, i, cutoff), power_of(z, total - i, cutoff));
      lattice.col(i) = pair_to_vector(zz, dom);
    }
  }
  result.matches_power_lattice = spans_equal(K, lattice);
  return result;
}

NormalizerResult ad_normalizer_structure(const TensorSeries& z, int m) {
  check_v_or_wedge2(z);
  const auto& alphabet = z.alphabet();
  const int d = z.min_weight();
  const int cutoff = m + d;

  WordIndex dom = WordIndex::of_weight(*alphabet, m);
  WordIndex img = WordIndex::of_weight(*alphabet, m + d);
  TensorSeries zc = truncate(z, cutoff);

  LieBasis lie_img = lie_basis(alphabet, m + d);
  QuotientSpace mod_lie(lie_img.matrix, img.size());

  MatQ A = MatQ::Zero(mod_lie.dim(), dom.size());
  for (int j = 0; j < dom.size(); ++j) {
    TensorSeries w = TensorSeries::monomial(alphabet, cutoff, dom.word(j));
    A.col(j) = mod_lie.reduce(to_vector(bracket(zc, w), img));
  }

  NormalizerResult result;
  MatQ K = kernel_basis(A);
  result.dim = static_cast<int>(K.cols());
  for (int j = 0; j < K.cols(); ++j)
    result.basis.push_back(from_vector(alphabet, cutoff, dom, K.col(j)));

  // Expected span: (L + K[[z]])_m.
  LieBasis lie_dom = lie_basis(alphabet, m);
  MatQ expected = lie_dom.matrix;
  if (expected.rows() != dom.size()) expected = MatQ::Zero(dom.size(), 0);
  if (m % d == 0) {
    expected.conservativeResize(Eigen::NoChange, expected.cols() + 1);
    expected.col(expected.cols() - 1) = to_vector(power_of(z, m / d, cutoff), dom);
  }
  result.matches_lie_plus_powers = spans_equal(K, expected);
  return result;
}

TensorSeries solve_x_divisibility(const TensorSeries& x, const TensorSeries& a, int l_max) {
  LinearShape shape = analyze_linear(x);
  for (int l = 1; l <= l_max; ++l) {
    TensorSeries xl = power_of(x, l, a.cutoff());
    CyclicSeries t = trace(mul(a, xl));
    if (!t.is_zero())
      throw HypothesisFailsError("solve_x_divisibility: |a x^" + std::to_string(l) +
                                 "| is nonzero");
  }
  return solve_ad(x, a, false);
}

}  // namespace necklace
