#include "necklace/super.hpp"

#include <algorithm>

#include "necklace/linalg.hpp"
#include "necklace/lie.hpp"
#include "necklace/lyndon.hpp"

namespace necklace {

SuperAlphabet::SuperAlphabet(const SurfaceAlgebra& S) : surface_(S) {}

int SuperAlphabet::word_weight(const SuperWord& w) const {
  int total = 0;
  for (unsigned char l : w) total += weight(static_cast<SLetter>(l));
  return total;
}

int SuperAlphabet::word_parity(const SuperWord& w) const {
  return partial_degree(w) % 2;
}

int SuperAlphabet::partial_degree(const SuperWord& w) const {
  int k = 0;
  for (unsigned char l : w) k += is_odd(static_cast<SLetter>(l)) ? 1 : 0;
  return k;
}

CanonicalSuperWord canonicalize_super(const SuperAlphabet& sa, const SuperWord& w) {
  CanonicalSuperWord out;
  const size_t n = w.size();
  if (n == 0) {
    out.word = w;
    return out;
  }
  SuperWord cur = w;
  int sign = 1;
  SuperWord best = w;
  int best_sign = 1;
  bool conflict = false;
  for (size_t r = 1; r <= n; ++r) {
    // rotate left by one: move the front letter past the rest
    int front_odd = sa.is_odd(static_cast<SLetter>(static_cast<unsigned char>(cur[0]))) ? 1 : 0;
    int rest_par = sa.word_parity(cur.substr(1));
    if (front_odd && rest_par) sign = -sign;
    cur = cur.substr(1) + cur[0];
    if (r == n) break;
    if (cur < best) {
      best = cur;
      best_sign = sign;
      conflict = false;
    } else if (cur == best && sign != best_sign) {
      conflict = true;
    }
  }
  // after n rotations cur == w again; a sign flip over the full cycle also
  // forces the class to vanish
  if (cur == w && sign != 1) conflict = true;
  out.word = best;
  out.sign = best_sign;
  out.zero = conflict;
  return out;
}

SuperCyclicSeries::SuperCyclicSeries(SuperAlphabetPtr alphabet, int cutoff)
    : alphabet_(std::move(alphabet)), cutoff_(cutoff) {
  if (!alphabet_) throw std::invalid_argument("null super alphabet");
}

void SuperCyclicSeries::add_term(const SuperWord& w, const Rational& c) {
  if (c == 0) return;
  if (alphabet_->word_weight(w) > cutoff_) return;
  CanonicalSuperWord canon = canonicalize_super(*alphabet_, w);
  if (canon.zero) return;
  Rational v = c * Rational(canon.sign);
  auto [it, inserted] = terms_.try_emplace(canon.word, v);
  if (!inserted) {
    it->second += v;
    if (it->second == 0) terms_.erase(it);
  }
}

void SuperCyclicSeries::add_scaled(const SuperCyclicSeries& other, const Rational& c) {
  if (alphabet_ != other.alphabet_ && !(alphabet_ && other.alphabet_ &&
                                        same_alphabet(alphabet_->base(), other.alphabet_->base())))
    throw AlphabetMismatch{};
  cutoff_ = std::min(cutoff_, other.cutoff_);
  std::erase_if(terms_, [&](const auto& t) { return alphabet_->word_weight(t.first) > cutoff_; });
  if (c == 0) return;
  for (const auto& [w, v] : other.terms_) add_term(w, v * c);
}

bool SuperCyclicSeries::operator==(const SuperCyclicSeries& other) const {
  return cutoff_ == other.cutoff_ && terms_ == other.terms_;
}

SuperCyclicSeries& SuperCyclicSeries::operator+=(const SuperCyclicSeries& other) {
  add_scaled(other, Rational(1));
  return *this;
}

SuperCyclicSeries& SuperCyclicSeries::operator-=(const SuperCyclicSeries& other) {
  add_scaled(other, Rational(-1));
  return *this;
}

SuperCyclicSeries& SuperCyclicSeries::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

SuperCyclicSeries operator+(SuperCyclicSeries a, const SuperCyclicSeries& b) { return a += b; }
SuperCyclicSeries operator-(SuperCyclicSeries a, const SuperCyclicSeries& b) { return a -= b; }
SuperCyclicSeries operator*(const Rational& c, SuperCyclicSeries a) { return a *= c; }

SuperCyclicSeries from_cyclic(SuperAlphabetPtr sa, const CyclicSeries& c) {
  SuperCyclicSeries out(sa, c.cutoff());
  for (const auto& [w, v] : c.terms()) out.add_term(w, v);
  return out;
}

CyclicSeries to_cyclic(const SuperCyclicSeries& s) {
  CyclicSeries out(s.alphabet()->base(), s.cutoff());
  for (const auto& [w, v] : s.terms()) {
    if (s.alphabet()->partial_degree(w) != 0)
      throw PreconditionError("to_cyclic: nonzero partial degree");
    out.add_term(w, v);
  }
  return out;
}

namespace {

// <s, t>: +1 for (∂_r, u_r), -1 for (u_r, ∂_r), 0 otherwise.
int letter_pairing(const SuperAlphabet& sa, SLetter s, SLetter t) {
  if (sa.partner(s) != t) return 0;
  return sa.is_odd(s) ? 1 : -1;
}

// Koszul sign of rotating w to start at position i.
int rotation_sign(const SuperAlphabet& sa, const SuperWord& w, size_t i) {
  if (i == 0) return 1;
  int p1 = sa.word_parity(w.substr(0, i));
  int p2 = sa.word_parity(w.substr(i));
  return (p1 && p2) ? -1 : 1;
}

}  // namespace

SuperCyclicSeries schouten(const SuperCyclicSeries& p, const SuperCyclicSeries& q) {
  const SuperAlphabet& sa = *p.alphabet();
  SuperCyclicSeries out(p.alphabet(), std::min(p.cutoff(), q.cutoff()));
  for (const auto& [wp, cp] : p.terms()) {
    for (const auto& [wq, cq] : q.terms()) {
      for (size_t i = 0; i < wp.size(); ++i) {
        SLetter s = static_cast<SLetter>(static_cast<unsigned char>(wp[i]));
        for (size_t j = 0; j < wq.size(); ++j) {
          SLetter t = static_cast<SLetter>(static_cast<unsigned char>(wq[j]));
          int pair = letter_pairing(sa, s, t);
          if (pair == 0) continue;
          SuperWord rest_p = wp.substr(i + 1) + wp.substr(0, i);
          SuperWord rest_q = wq.substr(j + 1) + wq.substr(0, j);
          int sign = rotation_sign(sa, wp, i) * rotation_sign(sa, wq, j) * pair;
          // moving the contracted front letter of P to the splice point
          if (sa.is_odd(s) && sa.word_parity(rest_p)) sign = -sign;
          out.add_term(rest_p + rest_q, cp * cq * Rational(sign));
        }
      }
    }
  }
  return out;
}

SuperCyclicSeries poisson_bivector(SuperAlphabetPtr sa, int cutoff) {
  const SurfaceAlgebra& S = sa->surface();
  SuperCyclicSeries pi(sa, cutoff);
  const int e = sa->evens();
  for (int i = 1; i <= S.genus(); ++i) {
    SuperWord w;
    w.push_back(static_cast<char>(S.x(i) + e));
    w.push_back(static_cast<char>(S.y(i) + e));
    pi.add_term(w, Rational(1));
  }
  for (int j = 1; j <= S.punctures(); ++j) {
    SuperWord w;
    w.push_back(static_cast<char>(S.z(j)));
    w.push_back(static_cast<char>(S.z(j) + e));
    w.push_back(static_cast<char>(S.z(j) + e));
    pi.add_term(w, Rational(1));
  }
  return pi;
}

SuperCyclicSeries e_insert(SuperAlphabetPtr sa, const SuperWord& alpha, int cutoff) {
  SuperCyclicSeries out(sa, cutoff);
  for (int r = 0; r < sa->evens(); ++r) {
    SLetter u = static_cast<SLetter>(r);
    SLetter du = static_cast<SLetter>(r + sa->evens());
    SuperWord w1 = alpha;
    w1.push_back(static_cast<char>(u));
    w1.push_back(static_cast<char>(du));
    out.add_term(w1, Rational(1));
    SuperWord w2 = alpha;
    w2.push_back(static_cast<char>(du));
    w2.push_back(static_cast<char>(u));
    out.add_term(w2, Rational(-1));
  }
  return out;
}

SuperCyclicSeries e_insert(const SuperCyclicSeries& alpha) {
  SuperCyclicSeries out(alpha.alphabet(), alpha.cutoff());
  for (const auto& [w, c] : alpha.terms())
    out += c * e_insert(alpha.alphabet(), w, alpha.cutoff());
  return out;
}

Derivation to_derivation(const SuperCyclicSeries& p) {
  const SuperAlphabet& sa = *p.alphabet();
  const auto& base = sa.base();
  int cutoff = p.cutoff();
  std::vector<TensorSeries> images(static_cast<size_t>(base->size()),
                                   TensorSeries(base, cutoff));
  for (const auto& [w, c] : p.terms()) {
    if (sa.partial_degree(w) != 1)
      throw PreconditionError("to_derivation: partial degree must be 1");
    size_t i = 0;
    while (!sa.is_odd(static_cast<SLetter>(static_cast<unsigned char>(w[i])))) ++i;
    int sign = rotation_sign(sa, w, i);
    SLetter dr = static_cast<SLetter>(static_cast<unsigned char>(w[i]));
    SuperWord f = w.substr(i + 1) + w.substr(0, i);
    images[static_cast<size_t>(sa.partner(dr))].add_term(f, c * Rational(sign));
  }
  return Derivation(base, cutoff, std::move(images));
}

CyclicSeries partial_eval(const SuperCyclicSeries& p, const std::vector<CyclicSeries>& args) {
  if (static_cast<int>(args.size()) == 0) return to_cyclic(p);
  SuperCyclicSeries acc = p;
  for (auto it = args.rbegin(); it != args.rend(); ++it)
    acc = schouten(acc, from_cyclic(p.alphabet(), *it));
  return to_cyclic(acc);
}

namespace {
void enumerate_super_words(const SuperAlphabet& sa, int odd_left, int weight, SuperWord& prefix,
                           std::vector<SuperWord>& out) {
  int w = sa.word_weight(prefix);
  if (odd_left == 0 && w == weight) out.push_back(prefix);
  // bound: even letters only add weight; odd letters subtract at most 2 each
  if (w > weight + 2 * odd_left) return;
  if (static_cast<int>(prefix.size()) > weight + 2 * static_cast<int>(sa.surface().punctures() + sa.surface().genus()) * 2 + 8)
    return;
  for (int l = 0; l < sa.size(); ++l) {
    bool odd = sa.is_odd(static_cast<SLetter>(l));
    if (odd && odd_left == 0) continue;
    prefix.push_back(static_cast<char>(l));
    enumerate_super_words(sa, odd_left - (odd ? 1 : 0), weight, prefix, out);
    prefix.pop_back();
  }
}
}  // namespace

std::vector<SuperWord> super_classes(const SuperAlphabet& sa, int partial_degree, int weight) {
  std::vector<SuperWord> all;
  SuperWord prefix;
  enumerate_super_words(sa, partial_degree, weight, prefix, all);
  std::vector<SuperWord> canon;
  for (const auto& w : all) {
    if (sa.partial_degree(w) != partial_degree) continue;
    CanonicalSuperWord c = canonicalize_super(sa, w);
    if (!c.zero) canon.push_back(c.word);
  }
  std::sort(canon.begin(), canon.end());
  canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
  return canon;
}

namespace {

VecQ super_to_vector(const SuperCyclicSeries& s, const std::map<SuperWord, int>& pos, int dim) {
  VecQ v = VecQ::Zero(dim);
  for (const auto& [w, c] : s.terms()) {
    auto it = pos.find(w);
    if (it == pos.end()) throw std::logic_error("super_to_vector: class outside the index");
    v(it->second) = c;
  }
  return v;
}

struct GradedPiece {
  std::vector<SuperWord> classes;
  std::map<SuperWord, int> pos;
  MatQ ideal;  // |D^{k-1} E| spanning columns inside this piece
};

GradedPiece graded_piece(const SuperAlphabet& sa, SuperAlphabetPtr sap, int k, int weight,
                         int cutoff) {
  GradedPiece g;
  g.classes = super_classes(sa, k, weight);
  for (size_t i = 0; i < g.classes.size(); ++i)
    g.pos[g.classes[i]] = static_cast<int>(i);
  std::vector<SuperWord> alphas;
  if (k >= 1) {
    SuperWord prefix;
    enumerate_super_words(sa, k - 1, weight, prefix, alphas);
  }
  g.ideal = MatQ::Zero(static_cast<int>(g.classes.size()), static_cast<int>(alphas.size()));
  for (size_t a = 0; a < alphas.size(); ++a)
    g.ideal.col(static_cast<int>(a)) =
        super_to_vector(e_insert(sap, alphas[a], cutoff), g.pos, static_cast<int>(g.classes.size()));
  return g;
}

}  // namespace

CohomologyReport cohomology(const SurfaceAlgebra& S, int k, int weight) {
  if (k != 0 && k != 1) throw PreconditionError("cohomology: degree must be 0 or 1");
  auto sap = std::make_shared<const SuperAlphabet>(S);
  const SuperAlphabet& sa = *sap;
  const int cutoff = std::max(weight + 4, 4);
  SuperCyclicSeries pi = poisson_bivector(sap, cutoff);

  GradedPiece here = graded_piece(sa, sap, k, weight, cutoff);
  GradedPiece target = graded_piece(sa, sap, k + 1, weight - 2, cutoff);
  QuotientSpace target_quot(target.ideal, static_cast<int>(target.classes.size()));

  const int dim_here = static_cast<int>(here.classes.size());
  MatQ d = MatQ::Zero(target_quot.dim(), dim_here);
  for (int j = 0; j < dim_here; ++j) {
    SuperCyclicSeries cls(sap, cutoff);
    cls.add_term(here.classes[static_cast<size_t>(j)], Rational(1));
    SuperCyclicSeries img = schouten(pi, cls);
    d.col(j) = target_quot.reduce(
        super_to_vector(img, target.pos, static_cast<int>(target.classes.size())));
  }

  MatQ zmat = kernel_basis(d);  // cocycles, in full coordinates of `here`

  // coboundaries: d of the previous level, plus the E-ideal at this level
  MatQ prev_images(dim_here, 0);
  if (k == 1) {
    GradedPiece prev = graded_piece(sa, sap, 0, weight + 2, cutoff);
    prev_images = MatQ::Zero(dim_here, static_cast<int>(prev.classes.size()));
    for (size_t j = 0; j < prev.classes.size(); ++j) {
      SuperCyclicSeries cls(sap, cutoff);
      cls.add_term(prev.classes[j], Rational(1));
      SuperCyclicSeries img = schouten(pi, cls);
      prev_images.col(static_cast<int>(j)) = super_to_vector(img, here.pos, dim_here);
    }
  }

  const int rank_ideal = rank_of(here.ideal);
  MatQ ideal_and_im(dim_here, here.ideal.cols() + prev_images.cols());
  if (ideal_and_im.cols() > 0) ideal_and_im << here.ideal, prev_images;

  CohomologyReport rep;
  rep.degree = k;
  rep.weight = weight;
  rep.dim_space = dim_here - rank_ideal;
  rep.dim_ker = static_cast<int>(zmat.cols()) - rank_ideal;  // ideal ⊆ kernel
  rep.dim_im = rank_of(ideal_and_im) - rank_ideal;
  rep.dim_h = rep.dim_ker - rep.dim_im;

  // representatives: kernel vectors independent modulo (ideal + image)
  QuotientSpace mod_bdry(ideal_and_im, dim_here);
  MatQ chosen(mod_bdry.dim(), 0);
  for (int j = 0; j < zmat.cols() && static_cast<int>(rep.representatives.size()) < rep.dim_h;
       ++j) {
    VecQ red = mod_bdry.reduce(zmat.col(j));
    MatQ trial(mod_bdry.dim(), chosen.cols() + 1);
    if (chosen.cols() > 0) trial << chosen, red;
    else trial = red;
    if (rank_of(trial) > rank_of(chosen)) {
      chosen = trial;
      SuperCyclicSeries s(sap, cutoff);
      for (int i = 0; i < dim_here; ++i)
        s.add_term(here.classes[static_cast<size_t>(i)], zmat(i, j));
      rep.representatives.push_back(std::move(s));
    }
  }
  return rep;
}

FullyTangentialReport is_fully_tangential(const SurfaceAlgebra& S, const Derivation& phi) {
  if (S.genus() == 0 && S.punctures() == 1)
    throw PreconditionError("is_fully_tangential: (g,n) = (0,1) is excluded");
  FullyTangentialReport rep;
  const int cutoff = phi.cutoff();
  for (int j = 1; j <= S.punctures(); ++j) {
    TensorSeries zj = S.gen(S.z(j), cutoff);
    TensorSeries rhs = -phi.apply(zj);
    try {
      rep.witnesses.push_back(solve_ad(zj, rhs, false));
    } catch (const NoSolutionError& e) {
      rep.failing_weight = e.weight;
      return rep;
    }
  }
  // z_0 = -ω: φ(z_0) = [a_0, z_0] ⟺ [ω, a_0] = -φ(ω).
  TensorSeries omega = S.omega(cutoff);
  TensorSeries rhs = -phi.apply(omega);
  TensorSeries a0(S.alphabet(), cutoff);
  for (int w = 0; w <= cutoff; ++w) {
    TensorSeries rw = weight_component(rhs, w);
    if (rw.is_zero()) continue;
    if (w < 2) {
      rep.failing_weight = w;
      return rep;
    }
    WordIndex dom = WordIndex::of_weight(*S.alphabet(), w - 2);
    WordIndex img = WordIndex::of_weight(*S.alphabet(), w);
    MatQ A = MatQ::Zero(img.size(), dom.size());
    for (int t = 0; t < dom.size(); ++t) {
      TensorSeries wt = TensorSeries::monomial(S.alphabet(), cutoff, dom.word(t));
      A.col(t) = to_vector(bracket(omega, wt), img);
    }
    auto sol = try_solve(A, to_vector(rw, img));
    if (!sol) {
      rep.failing_weight = w;
      return rep;
    }
    a0 += from_vector(S.alphabet(), cutoff, dom, *sol);
  }
  rep.witness0 = a0;
  rep.tangential = true;
  return rep;
}

}  // namespace necklace
