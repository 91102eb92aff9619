#include "necklace/goldman.hpp"

#include "necklace/linalg.hpp"

namespace necklace {

namespace {

// +1 for (x_i, y_i), -1 for (y_i, x_i), 0 otherwise; z letters pair by the
// KKS rule handled separately.
int symplectic_sign(const SurfaceAlgebra& S, Letter a, Letter b) {
  int two_g = 2 * S.genus();
  if (a >= two_g || b >= two_g) return 0;
  if (a % 2 == 0 && b == a + 1) return 1;
  if (a % 2 == 1 && b == a - 1) return -1;
  return 0;
}

Word opened(const Word& w, size_t p) { return w.substr(p + 1) + w.substr(0, p); }

}  // namespace

CyclicSeries goldman_bracket(const SurfaceAlgebra& S, const CyclicSeries& a,
                             const CyclicSeries& b) {
  require_same_alphabet(a.alphabet(), S.alphabet());
  require_same_alphabet(b.alphabet(), S.alphabet());
  CyclicSeries out(a.alphabet(), std::min(a.cutoff(), b.cutoff()));
  const int two_g = 2 * S.genus();
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      Rational c = ca * cb;
      for (size_t p = 0; p < wa.size(); ++p) {
        Letter la = static_cast<Letter>(static_cast<unsigned char>(wa[p]));
        for (size_t q = 0; q < wb.size(); ++q) {
          Letter lb = static_cast<Letter>(static_cast<unsigned char>(wb[q]));
          int sg = symplectic_sign(S, la, lb);
          if (sg != 0) {
            out.add_term(opened(wa, p) + opened(wb, q), Rational(sg) * c);
          } else if (la == lb && la >= two_g) {
            Word oa = opened(wa, p), ob = opened(wb, q);
            Word zj(1, wa[p]);
            out.add_term(oa + ob + zj, c);
            out.add_term(oa + zj + ob, -c);
          }
        }
      }
    }
  }
  return out;
}

namespace {

TensorSeries power_of(const TensorSeries& t, int k) {
  TensorSeries p = TensorSeries::unit(t.alphabet(), t.cutoff());
  for (int i = 0; i < k; ++i) p = mul(p, t);
  return p;
}

// span{ |ω^m|, |z_j^m| } restricted to weight k, as columns over the index.
MatQ predicted_center(const SurfaceAlgebra& S, int k, const CyclicIndex& idx) {
  std::vector<VecQ> cols;
  if (k % 2 == 0) {
    int m = k / 2;
    cols.push_back(to_vector(trace(power_of(S.omega(k), m)), idx));
    for (int j = 1; j <= S.punctures(); ++j) {
      TensorSeries zj = S.gen(S.z(j), k);
      cols.push_back(to_vector(trace(power_of(zj, m)), idx));
    }
  }
  MatQ mat = MatQ::Zero(idx.size(), static_cast<int>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) mat.col(static_cast<int>(j)) = cols[j];
  return mat;
}

}  // namespace

CenterReport center_component(const SurfaceAlgebra& S, int k,
                              const std::vector<int>& test_weights) {
  CyclicIndex idx = CyclicIndex::of_weight(*S.alphabet(), k);

  struct Block {
    int t = 0;
    int row0 = 0;
    CyclicIndex out;
    std::vector<Word> basis_words;
  };
  std::vector<Block> blocks;
  int rows = 0;
  for (int t : test_weights) {
    if (k + t - 2 < 0) continue;  // no landing classes: bracket is trivially zero
    Block blk;
    blk.t = t;
    blk.row0 = rows;
    blk.out = CyclicIndex::of_weight(*S.alphabet(), k + t - 2);
    blk.basis_words = cyclic_words_of_weight(*S.alphabet(), t);
    rows += blk.out.size() * static_cast<int>(blk.basis_words.size());
    blocks.push_back(std::move(blk));
  }

  MatQ M = MatQ::Zero(rows, idx.size());
  for (int j = 0; j < idx.size(); ++j) {
    for (const Block& blk : blocks) {
      // bracket output is homogeneous of weight k + t - 2; carry a cutoff
      // large enough that nothing is truncated away
      int cut = k + blk.t;
      CyclicSeries cj(S.alphabet(), cut);
      cj.add_term(idx.word(j), Rational(1));
      for (size_t bi = 0; bi < blk.basis_words.size(); ++bi) {
        CyclicSeries w(S.alphabet(), cut);
        w.add_term(blk.basis_words[bi], Rational(1));
        CyclicSeries br = goldman_bracket(S, cj, w);
        M.block(blk.row0 + static_cast<int>(bi) * blk.out.size(), j, blk.out.size(), 1) =
            to_vector(br, blk.out);
      }
    }
  }

  CenterReport rep;
  MatQ K = kernel_basis(M);
  rep.dim = static_cast<int>(K.cols());
  for (int j = 0; j < K.cols(); ++j)
    rep.basis.push_back(from_vector(S.alphabet(), k, idx, K.col(j)));
  rep.matches_prediction = spans_equal(K, predicted_center(S, k, idx));
  return rep;
}

bool is_central(const SurfaceAlgebra& S, const CyclicSeries& c,
                const std::vector<int>& test_weights) {
  for (int t : test_weights) {
    // re-carry c at a cutoff high enough that no bracket output truncates
    CyclicSeries c_ext(S.alphabet(), c.cutoff() + t);
    for (const auto& [w, v] : c.terms()) c_ext.add_term(w, v);
    for (const Word& w : cyclic_words_of_weight(*S.alphabet(), t)) {
      CyclicSeries basis_elt(S.alphabet(), c.cutoff() + t);
      basis_elt.add_term(w, Rational(1));
      if (!goldman_bracket(S, c_ext, basis_elt).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace necklace
