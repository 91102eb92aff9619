#include "necklace/symplectic.hpp"

#include <algorithm>

#include "necklace/cyclic.hpp"
#include "necklace/morphism.hpp"
#include "necklace/pbw.hpp"

namespace necklace {

SymplecticSpace::SymplecticSpace(int genus)
    : genus_(genus), alphabet_(Alphabet::surface(genus, 0)) {
  if (genus < 1) throw std::invalid_argument("symplectic space needs genus >= 1");
}

Letter SymplecticSpace::x(int i) const {
  if (i < 1 || i > genus_) throw std::out_of_range("x index");
  return static_cast<Letter>(2 * (i - 1));
}

Letter SymplecticSpace::y(int i) const {
  if (i < 1 || i > genus_) throw std::out_of_range("y index");
  return static_cast<Letter>(2 * (i - 1) + 1);
}

Rational SymplecticSpace::pairing(Letter a, Letter b) const {
  if (a % 2 == 0 && b == a + 1) return Rational(1);
  if (a % 2 == 1 && b == a - 1) return Rational(-1);
  return Rational(0);
}

Rational SymplecticSpace::pairing(const TensorSeries& a, const TensorSeries& b) const {
  Rational acc(0);
  for (const auto& [wa, ca] : a.terms()) {
    if (wa.size() != 1) throw PreconditionError("pairing: linear elements expected");
    for (const auto& [wb, cb] : b.terms()) {
      if (wb.size() != 1) throw PreconditionError("pairing: linear elements expected");
      acc += ca * cb *
             pairing(static_cast<Letter>(static_cast<unsigned char>(wa[0])),
                     static_cast<Letter>(static_cast<unsigned char>(wb[0])));
    }
  }
  return acc;
}

Rational SymplecticSpace::full_contraction(const TensorSeries& t) const {
  Rational acc(0);
  for (const auto& [w, c] : t.terms()) {
    if (w.size() != 2) throw PreconditionError("full_contraction: degree-2 tensor expected");
    acc += c * pairing(static_cast<Letter>(static_cast<unsigned char>(w[0])),
                       static_cast<Letter>(static_cast<unsigned char>(w[1])));
  }
  return acc;
}

TensorSeries SymplecticSpace::omega0(int cutoff) const {
  TensorSeries w(alphabet_, cutoff);
  for (int i = 1; i <= genus_; ++i)
    w += bracket(TensorSeries::generator(alphabet_, cutoff, x(i)),
                 TensorSeries::generator(alphabet_, cutoff, y(i)));
  return w;
}

TensorSeries SymplecticSpace::pi(const TensorSeries& t) const {
  Rational c = full_contraction(t);
  return t - (c / Rational(2 * genus_)) * omega0(t.cutoff());
}

TensorSeries contract(const SymplecticSpace& V, const TensorSeries& a,
                      const std::vector<Slot>& pattern) {
  require_same_alphabet(a.alphabet(), V.alphabet());
  int arity = 0;
  for (Slot s : pattern) arity += (s == Slot::Id) ? 1 : 2;
  TensorSeries out(a.alphabet(), a.cutoff());
  for (const auto& [w, c] : a.terms()) {
    if (static_cast<int>(w.size()) != arity)
      throw PreconditionError("contract: word length does not match pattern arity");
    TensorSeries factor = TensorSeries::scalar(a.alphabet(), a.cutoff(), c);
    size_t pos = 0;
    bool dead = false;
    for (Slot s : pattern) {
      if (s == Slot::Id) {
        factor = mul(factor, TensorSeries::generator(
                                 a.alphabet(), a.cutoff(),
                                 static_cast<Letter>(static_cast<unsigned char>(w[pos]))));
        pos += 1;
      } else if (s == Slot::C) {
        Rational p = V.pairing(static_cast<Letter>(static_cast<unsigned char>(w[pos])),
                               static_cast<Letter>(static_cast<unsigned char>(w[pos + 1])));
        if (p == 0) {
          dead = true;
          break;
        }
        factor *= p;
        pos += 2;
      } else {
        TensorSeries pair2 = TensorSeries::monomial(a.alphabet(), a.cutoff(), w.substr(pos, 2));
        factor = mul(factor, V.pi(pair2));
        if (factor.is_zero()) {
          dead = true;
          break;
        }
        pos += 2;
      }
    }
    if (!dead) out += factor;
  }
  return out;
}

namespace {
TensorSeries power_of(const TensorSeries& t, int k) {
  TensorSeries p = TensorSeries::unit(t.alphabet(), t.cutoff());
  for (int i = 0; i < k; ++i) p = mul(p, t);
  return p;
}
}  // namespace

Rational trace_contraction_m0(int genus, int l) {
  if (l < 1) throw PreconditionError("trace_contraction_m0: l >= 1 required");
  SymplecticSpace V(genus);
  int cutoff = 2 * l;
  TensorSeries wl = power_of(V.omega0(cutoff), l);
  TensorSeries emb = embed(trace(wl));
  std::vector<Slot> pattern(static_cast<size_t>(l), Slot::C);
  TensorSeries res = contract(V, emb, pattern);
  return res.constant_term();
}

Rational trace_contraction_m0_formula(int genus, int l) {
  Rational two_g(2 * genus);
  Rational p(1);
  for (int i = 0; i < l; ++i) p *= two_g;
  Rational sign(l % 2 == 0 ? 1 : -1);
  return Rational(l) * (p + sign * two_g);
}

Rational trace_contraction_m1(const SymplecticSpace& V, Letter a, int l) {
  int cutoff = 1 + 2 * l;
  TensorSeries av = TensorSeries::generator(V.alphabet(), cutoff, a);
  TensorSeries word = mul(av, power_of(V.omega0(cutoff), l));
  TensorSeries emb = embed(trace(word));
  std::vector<Slot> pattern;
  pattern.push_back(Slot::Id);
  for (int i = 0; i < l; ++i) pattern.push_back(Slot::C);
  TensorSeries res = contract(V, emb, pattern);
  // Result must be a scalar multiple of a.
  Word wa(1, static_cast<char>(a));
  Rational lambda = res.coeff(wa);
  if (!(res == TensorSeries::monomial(V.alphabet(), cutoff, wa, lambda)))
    throw std::logic_error("trace_contraction_m1: result not proportional to the letter");
  return lambda;
}

Rational trace_contraction_m1_formula(int genus, int l) {
  Rational two_g(2 * genus);
  Rational p(1);
  for (int i = 0; i < l; ++i) p *= two_g;
  Rational geo(0), pw(1);
  for (int j = 0; j < l; ++j) {
    geo += pw;
    pw *= -two_g;
  }
  Rational sign(l % 2 == 0 ? 1 : -1);
  return p + Rational(2) * sign * geo;
}

namespace {

// Cont(u_i ... u_j) = C(u_i, u_{i+1}) C(u_{i+2}, u_{i+3}) ... (1-based
// inclusive range with an even letter count; empty range gives 1).
Rational cont_factor(const SymplecticSpace& V, const std::vector<TensorSeries>& u, int i, int j) {
  Rational acc(1);
  for (int k = i; k < j; k += 2) {
    acc *= V.pairing(u[static_cast<size_t>(k - 1)], u[static_cast<size_t>(k)]);
    if (acc == 0) return acc;
  }
  return acc;
}

TensorSeries product_range(const SymplecticSpace& V, const std::vector<TensorSeries>& u, int i,
                           int j, int cutoff) {
  TensorSeries p = TensorSeries::unit(V.alphabet(), cutoff);
  for (int k = i; k <= j; ++k) p = mul(p, u[static_cast<size_t>(k - 1)]);
  return p;
}

// Φ-type sum shared by the two lemmas.
TensorSeries phi_sum(const SymplecticSpace& V, const std::vector<TensorSeries>& u, int cutoff) {
  const int m = static_cast<int>(u.size());
  TensorSeries acc(V.alphabet(), cutoff);
  TensorSeries w0 = V.omega0(cutoff);
  for (int k = 1; k <= m - 1; k += 2) {
    Rational sign(((k - 1) / 2) % 2 == 0 ? 1 : -1);
    TensorSeries omega_pow = power_of(w0, (k - 1) / 2);
    // Cont(u_{m-k+1} ... u_{m-1}) u_m ω0^{(k-1)/2} u_1 ... u_{m-k}
    Rational c1 = cont_factor(V, u, m - k + 1, m - 1);
    if (c1 != 0) {
      TensorSeries t = mul(u[static_cast<size_t>(m - 1)], omega_pow);
      t = mul(t, product_range(V, u, 1, m - k, cutoff));
      acc += sign * c1 * t;
    }
    // Cont(u_2 ... u_k) u_{k+1} ... u_m ω0^{(k-1)/2} u_1
    Rational c2 = cont_factor(V, u, 2, k);
    if (c2 != 0) {
      TensorSeries t = product_range(V, u, k + 1, m, cutoff);
      t = mul(t, omega_pow);
      t = mul(t, u[0]);
      acc += sign * c2 * t;
    }
  }
  return acc;
}

TensorSeries outer_pi_pattern(const SymplecticSpace& V, const TensorSeries& t, int m) {
  std::vector<Slot> pattern;
  pattern.push_back(Slot::Pi);
  for (int i = 0; i < m - 4; ++i) pattern.push_back(Slot::Id);
  pattern.push_back(Slot::Pi);
  return contract(V, t, pattern);
}

Rational pow_rat(const Rational& base, int k) {
  Rational p(1);
  for (int i = 0; i < k; ++i) p *= base;
  return p;
}

}  // namespace

bool verify_lemma_odd(const SymplecticSpace& V, const std::vector<TensorSeries>& u, int l) {
  const int m = static_cast<int>(u.size());
  if (m < 5 || m % 2 == 0) throw PreconditionError("lemma (odd): m odd and >= 5 required");
  if (l < (m + 1) / 2) throw PreconditionError("lemma (odd): l >= (m+1)/2 required");
  const int cutoff = m + 2 * l;

  TensorSeries word = mul(product_range(V, u, 1, m, cutoff), power_of(V.omega0(cutoff), l));
  std::vector<Slot> inner(static_cast<size_t>(m), Slot::Id);
  for (int i = 0; i < l; ++i) inner.push_back(Slot::C);
  TensorSeries lhs = outer_pi_pattern(V, contract(V, embed(trace(word)), inner), m);

  TensorSeries rhs_inner =
      pow_rat(Rational(2 * V.genus()), l) * product_range(V, u, 1, m, cutoff) +
      Rational(l % 2 == 0 ? 1 : -1) * phi_sum(V, u, cutoff);
  TensorSeries rhs = outer_pi_pattern(V, rhs_inner, m);
  return lhs == rhs;
}

bool verify_lemma_even(const SymplecticSpace& V, const std::vector<TensorSeries>& u, int l) {
  const int m = static_cast<int>(u.size());
  if (m < 4 || m % 2 == 1) throw PreconditionError("lemma (even): m even and >= 4 required");
  if (l < m / 2) throw PreconditionError("lemma (even): l >= m/2 required");
  const int cutoff = m + 2 * l;

  TensorSeries word = mul(product_range(V, u, 1, m, cutoff), power_of(V.omega0(cutoff), l));
  std::vector<Slot> inner(static_cast<size_t>(m), Slot::Id);
  for (int i = 0; i < l; ++i) inner.push_back(Slot::C);
  TensorSeries lhs = outer_pi_pattern(V, contract(V, embed(trace(word)), inner), m);

  Rational sign_l(l % 2 == 0 ? 1 : -1);
  // Φ1 = (-1)^{m/2-1} Cont(u_2 ... u_{m-1}) u_m ω0^{m/2-1} u_1
  TensorSeries phi1(V.alphabet(), cutoff);
  Rational c1 = cont_factor(V, u, 2, m - 1);
  if (c1 != 0) {
    TensorSeries t = mul(u[static_cast<size_t>(m - 1)], power_of(V.omega0(cutoff), m / 2 - 1));
    t = mul(t, u[0]);
    phi1 = Rational((m / 2 - 1) % 2 == 0 ? 1 : -1) * c1 * t;
  }
  TensorSeries rhs_inner = pow_rat(Rational(2 * V.genus()), l) * product_range(V, u, 1, m, cutoff) +
                           Rational(l - m / 2) * sign_l * phi1 + sign_l * phi_sum(V, u, cutoff);
  TensorSeries rhs = outer_pi_pattern(V, rhs_inner, m);
  return lhs == rhs;
}

TensorSeries solve_omega_bracket(const SymplecticSpace& V, const TensorSeries& a) {
  require_same_alphabet(a.alphabet(), V.alphabet());
  TensorSeries w0 = V.omega0(a.cutoff());
  // Hypothesis |a ω0^l| = 0 for every l >= 1 representable within cutoff.
  if (!a.is_zero()) {
    for (int l = 1; a.min_weight() + 2 * l <= a.cutoff(); ++l) {
      if (!trace(mul(a, power_of(w0, l))).is_zero())
        throw HypothesisFailsError("solve_omega_bracket: |a ω0^" + std::to_string(l) +
                                   "| is nonzero");
    }
  }
  TensorSeries b(a.alphabet(), a.cutoff());
  for (int w = 0; w <= a.cutoff(); ++w) {
    TensorSeries aw = weight_component(a, w);
    if (aw.is_zero()) continue;
    if (w < 2) throw NoSolutionError(w);
    WordIndex dom = WordIndex::of_weight(*V.alphabet(), w - 2);
    WordIndex img = WordIndex::of_weight(*V.alphabet(), w);
    MatQ A = MatQ::Zero(img.size(), dom.size());
    for (int j = 0; j < dom.size(); ++j) {
      TensorSeries wj = TensorSeries::monomial(a.alphabet(), a.cutoff(), dom.word(j));
      A.col(j) = to_vector(bracket(w0, wj), img);
    }
    auto sol = try_solve(A, to_vector(aw, img));
    if (!sol) throw NoSolutionError(w);
    b += from_vector(a.alphabet(), a.cutoff(), dom, *sol);
  }
  if (!(bracket(w0, b) == a)) throw std::logic_error("solve_omega_bracket: verification failed");
  return b;
}

SplittingReport verify_v3_splitting(int genus) {
  SymplecticSpace V(genus);
  const int d = V.dim();
  const int cutoff = 3;
  WordIndex w3 = WordIndex::of_weight(*V.alphabet(), 3);
  TensorSeries w0 = V.omega0(cutoff);

  MatQ ad_cols = MatQ::Zero(w3.size(), d);
  for (int l = 0; l < d; ++l) {
    TensorSeries e = TensorSeries::generator(V.alphabet(), cutoff, static_cast<Letter>(l));
    ad_cols.col(l) = to_vector(bracket(w0, e), w3);
  }

  // Q = Ker C inside V ⊗ V.
  WordIndex w2 = WordIndex::of_weight(*V.alphabet(), 2);
  MatQ c_row = MatQ::Zero(1, w2.size());
  for (int j = 0; j < w2.size(); ++j) {
    const Word& w = w2.word(j);
    c_row(0, j) = V.pairing(static_cast<Letter>(static_cast<unsigned char>(w[0])),
                            static_cast<Letter>(static_cast<unsigned char>(w[1])));
  }
  MatQ q_basis = kernel_basis(c_row);

  MatQ vq_cols = MatQ::Zero(w3.size(), d * static_cast<int>(q_basis.cols()));
  int col = 0;
  for (int l = 0; l < d; ++l) {
    for (int qj = 0; qj < q_basis.cols(); ++qj, ++col) {
      for (int j = 0; j < w2.size(); ++j) {
        if (q_basis(j, qj) == 0) continue;
        Word w;
        w.push_back(static_cast<char>(l));
        w += w2.word(j);
        vq_cols(w3.at(w), col) += q_basis(j, qj);
      }
    }
  }

  SplittingReport rep;
  rep.dim_ad_omega = rank_of(ad_cols);
  rep.dim_v_tensor_q = rank_of(vq_cols);
  rep.dim_total = w3.size();
  MatQ joint(w3.size(), ad_cols.cols() + vq_cols.cols());
  joint << ad_cols, vq_cols;
  rep.ok = (rep.dim_ad_omega + rep.dim_v_tensor_q == rep.dim_total) &&
           (rank_of(joint) == rep.dim_total);
  return rep;
}

namespace {

void require_equal_exp_traces(const TensorSeries& a, const TensorSeries& z) {
  if (!(trace(exp_series(a)) == trace(exp_series(z)))) throw TracesDifferError{};
}

// The degree-by-degree conjugation loop: conjugate `a` onto `target` where
// target is linear (solve via ad) or ω0 (solve via the symplectic route).
// Returns log of the accumulated conjugator v with
// exp(ad v)(a) = target, i.e. a = e^{-v} target e^{v}.
TensorSeries conjugation_loop(const TensorSeries& target, const TensorSeries& a, int target_degree,
                              const SymplecticSpace* V, EulerianProjector* proj) {
  const auto& alphabet = a.alphabet();
  const int cutoff = a.cutoff();
  TensorSeries current = a;
  TensorSeries v(alphabet, cutoff);  // log of the conjugator so far
  const int minwt = alphabet->min_generator_weight();

  for (int k = 1; (k + target_degree) * minwt <= cutoff; ++k) {
    TensorSeries diff = current - target;
    TensorSeries b = length_component(diff, k + target_degree);
    // everything of lower degree must already agree
    for (int d = 0; d < k + target_degree; ++d)
      if (!length_component(diff, d).is_zero())
        throw std::logic_error("conjugation: lower-degree discrepancy survived");
    if (b.is_zero()) continue;

    TensorSeries u_k;
    if (V == nullptr) {
      u_k = solve_ad(target, b, /*constrain_to_lie=*/true);
    } else {
      TensorSeries raw = solve_omega_bracket(*V, b);
      u_k = proj->primitive_part(raw);  // strip the K[[ω0]] kernel component
      if (!(bracket(target, u_k) == b))
        throw std::logic_error("conjugation: Lie stripping changed the bracket");
    }
    // exp(ad u_k): current -> e^{u} current e^{-u}
    TensorSeries eu = exp_series(u_k);
    current = mul(mul(eu, current), inverse_series(eu));
    v = bch(u_k, v);
  }
  TensorSeries rest = current - target;
  if (!rest.is_zero()) throw std::logic_error("conjugation: did not converge within cutoff");
  return v;
}

}  // namespace

GroupLike normalize_conjugacy_linear(const TensorSeries& z, const TensorSeries& a) {
  require_same_alphabet(z.alphabet(), a.alphabet());
  const int cutoff = std::min(z.cutoff(), a.cutoff());
  TensorSeries zc = truncate(z, cutoff), ac = truncate(a, cutoff);
  require_equal_exp_traces(ac, zc);

  TensorSeries z1 = length_component(zc, 1);
  if (z1.is_zero())
    throw PreconditionError("normalize_conjugacy_linear: z needs a nonzero linear term");

  TensorSeries work = ac;
  bool use_phi = !(zc == z1);
  AlgebraMorphism phi = AlgebraMorphism::identity(zc.alphabet(), cutoff);
  if (use_phi) {
    // φ maps z1 to z and fixes the rest of a basis completion chosen by
    // alphabet order: pivot -> pivot + (z - z1)/c.
    const auto& first = *z1.terms().begin();
    Letter pivot = static_cast<Letter>(static_cast<unsigned char>(first.first[0]));
    Rational c = first.second;
    TensorSeries tail = zc - z1;
    if (tail.min_weight() < zc.alphabet()->weight(pivot))
      throw PreconditionError(
          "normalize_conjugacy_linear: tail of z below the pivot letter weight");
    std::vector<TensorSeries> images;
    for (int l = 0; l < zc.alphabet()->size(); ++l) {
      TensorSeries gen = TensorSeries::generator(zc.alphabet(), cutoff, static_cast<Letter>(l));
      if (static_cast<Letter>(l) == pivot)
        images.push_back(gen + tail / c);
      else
        images.push_back(gen);
    }
    phi = AlgebraMorphism(zc.alphabet(), cutoff, std::move(images));
    work = phi.inverse().apply(ac);
  }

  TensorSeries v = conjugation_loop(z1, work, 1, nullptr, nullptr);
  TensorSeries g = exp_series(-v);
  if (use_phi) g = phi.apply(g);
  if (!(conjugate(g, zc) == ac))
    throw std::logic_error("normalize_conjugacy_linear: conjugator verification failed");
  return GroupLike::certified(g);
}

GroupLike normalize_conjugacy_symplectic(const SymplecticSpace& V, const TensorSeries& a) {
  require_same_alphabet(V.alphabet(), a.alphabet());
  TensorSeries w0 = V.omega0(a.cutoff());
  require_equal_exp_traces(a, w0);
  EulerianProjector proj(a.alphabet(), a.cutoff());
  TensorSeries v = conjugation_loop(w0, a, 2, &V, &proj);
  TensorSeries g = exp_series(-v);
  if (!(conjugate(g, w0) == a))
    throw std::logic_error("normalize_conjugacy_symplectic: conjugator verification failed");
  return GroupLike::certified(g);
}

}  // namespace necklace
