#include "necklace/kv.hpp"

#include <algorithm>

namespace necklace {

Framing::Framing(const SurfaceAlgebra& S, std::vector<int> rot_alpha_, std::vector<int> rot_beta_,
                 std::vector<int> rot_gamma_, int rot_gamma0_)
    : rot_alpha(std::move(rot_alpha_)),
      rot_beta(std::move(rot_beta_)),
      rot_gamma(std::move(rot_gamma_)),
      rot_gamma0(rot_gamma0_) {
  if (static_cast<int>(rot_alpha.size()) != S.genus() ||
      static_cast<int>(rot_beta.size()) != S.genus() ||
      static_cast<int>(rot_gamma.size()) != S.punctures())
    throw PreconditionError("framing: rotation vector sizes do not match the surface");
  int sum = 0;
  for (int r : rot_gamma) sum += r;
  if (sum - rot_gamma0 != 1 - 2 * S.genus() - S.punctures())
    throw PreconditionError("framing: Poincaré-Hopf constraint violated");
}

Framing Framing::blackboard_like(const SurfaceAlgebra& S) {
  return Framing(S, std::vector<int>(static_cast<size_t>(S.genus()), 0),
                 std::vector<int>(static_cast<size_t>(S.genus()), 0),
                 std::vector<int>(static_cast<size_t>(S.punctures()), 0),
                 2 * S.genus() + S.punctures() - 1);
}

TangentialDerivation::TangentialDerivation(const SurfaceAlgebra& S, int cutoff,
                                           std::vector<TensorSeries> x_images,
                                           std::vector<TensorSeries> y_images,
                                           std::vector<TensorSeries> z_generators)
    : surface_(S),
      cutoff_(cutoff),
      x_images_(std::move(x_images)),
      y_images_(std::move(y_images)),
      z_generators_(std::move(z_generators)) {
  if (static_cast<int>(x_images_.size()) != S.genus() ||
      static_cast<int>(y_images_.size()) != S.genus() ||
      static_cast<int>(z_generators_.size()) != S.punctures())
    throw PreconditionError("tangential derivation: image counts do not match the surface");
  auto fix = [&](std::vector<TensorSeries>& v) {
    for (auto& s : v) {
      require_same_alphabet(s.alphabet(), S.alphabet());
      s = truncate(s, cutoff_);
    }
  };
  fix(x_images_);
  fix(y_images_);
  fix(z_generators_);
}

TangentialDerivation TangentialDerivation::zero(const SurfaceAlgebra& S, int cutoff) {
  TensorSeries z(S.alphabet(), cutoff);
  return TangentialDerivation(
      S, cutoff, std::vector<TensorSeries>(static_cast<size_t>(S.genus()), z),
      std::vector<TensorSeries>(static_cast<size_t>(S.genus()), z),
      std::vector<TensorSeries>(static_cast<size_t>(S.punctures()), z));
}

TangentialDerivation TangentialDerivation::inner(const SurfaceAlgebra& S,
                                                 const TensorSeries& ell) {
  int cutoff = ell.cutoff();
  std::vector<TensorSeries> xs, ys, zs;
  for (int i = 1; i <= S.genus(); ++i) {
    xs.push_back(bracket(S.gen(S.x(i), cutoff), ell));
    ys.push_back(bracket(S.gen(S.y(i), cutoff), ell));
  }
  for (int j = 1; j <= S.punctures(); ++j) zs.push_back(ell);
  return TangentialDerivation(S, cutoff, std::move(xs), std::move(ys), std::move(zs));
}

Derivation TangentialDerivation::derivation() const {
  std::vector<TensorSeries> images;
  for (int i = 1; i <= surface_.genus(); ++i) {
    images.push_back(x_image(i));
    images.push_back(y_image(i));
  }
  for (int j = 1; j <= surface_.punctures(); ++j) {
    TensorSeries zj = surface_.gen(surface_.z(j), cutoff_);
    images.push_back(bracket(zj, z_generator(j)));
  }
  return Derivation(surface_.alphabet(), cutoff_, std::move(images));
}

TangentialDerivation& TangentialDerivation::operator+=(const TangentialDerivation& other) {
  cutoff_ = std::min(cutoff_, other.cutoff_);
  for (size_t i = 0; i < x_images_.size(); ++i) {
    x_images_[i] = truncate(x_images_[i], cutoff_) + truncate(other.x_images_[i], cutoff_);
    y_images_[i] = truncate(y_images_[i], cutoff_) + truncate(other.y_images_[i], cutoff_);
  }
  for (size_t j = 0; j < z_generators_.size(); ++j)
    z_generators_[j] = truncate(z_generators_[j], cutoff_) + truncate(other.z_generators_[j], cutoff_);
  return *this;
}

TangentialDerivation& TangentialDerivation::operator*=(const Rational& c) {
  for (auto& s : x_images_) s *= c;
  for (auto& s : y_images_) s *= c;
  for (auto& s : z_generators_) s *= c;
  return *this;
}

TangentialDerivation operator+(TangentialDerivation a, const TangentialDerivation& b) {
  return a += b;
}
TangentialDerivation operator*(const Rational& c, TangentialDerivation a) { return a *= c; }

TangentialDerivation tder_bracket(const TangentialDerivation& u, const TangentialDerivation& v) {
  const SurfaceAlgebra& S = u.surface();
  int cutoff = std::min(u.cutoff(), v.cutoff());
  Derivation du = u.derivation(), dv = v.derivation();
  std::vector<TensorSeries> xs, ys, zs;
  for (int i = 1; i <= S.genus(); ++i) {
    xs.push_back(du.apply(v.x_image(i)) - dv.apply(u.x_image(i)));
    ys.push_back(du.apply(v.y_image(i)) - dv.apply(u.y_image(i)));
  }
  for (int j = 1; j <= S.punctures(); ++j) {
    zs.push_back(du.apply(v.z_generator(j)) - dv.apply(u.z_generator(j)) +
                 bracket(u.z_generator(j), v.z_generator(j)));
  }
  return TangentialDerivation(S, cutoff, std::move(xs), std::move(ys), std::move(zs));
}

CyclicSeries divergence(const TangentialDerivation& u) {
  const SurfaceAlgebra& S = u.surface();
  TensorSeries acc(S.alphabet(), u.cutoff());
  Derivation d = u.derivation();
  for (int i = 1; i <= S.genus(); ++i) {
    acc += right_partial(S.x(i), d.image(S.x(i)));
    acc += right_partial(S.y(i), d.image(S.y(i)));
  }
  for (int j = 1; j <= S.punctures(); ++j)
    acc += right_partial(S.z(j), d.image(S.z(j)));
  return trace(acc);
}

CyclicSeries framing_cocycle(const TangentialDerivation& u, const Framing& f) {
  const SurfaceAlgebra& S = u.surface();
  CyclicSeries acc(S.alphabet(), u.cutoff());
  for (int j = 1; j <= S.punctures(); ++j)
    acc += Rational(f.rot_gamma[static_cast<size_t>(j - 1)]) * trace(u.z_generator(j));
  return acc;
}

TangentialAutomorphism::TangentialAutomorphism(TangentialDerivation log_u)
    : log_(std::move(log_u)) {
  if (!log_.derivation().is_positive())
    throw PreconditionError("TAut: the logarithm must raise weight (tder^+)");
}

TangentialAutomorphism TangentialAutomorphism::identity(const SurfaceAlgebra& S, int cutoff) {
  return TangentialAutomorphism(TangentialDerivation::zero(S, cutoff));
}

TangentialAutomorphism TangentialAutomorphism::inner(const SurfaceAlgebra& S,
                                                     const TensorSeries& ell) {
  return TangentialAutomorphism(TangentialDerivation::inner(S, ell));
}

AlgebraMorphism TangentialAutomorphism::morphism() const {
  return exp_derivation(log_.derivation());
}

AlgebraMorphism TangentialAutomorphism::inverse_morphism() const {
  return exp_derivation(Rational(-1) * log_.derivation());
}

TensorSeries TangentialAutomorphism::apply(const TensorSeries& s) const {
  return morphism().apply(s);
}

CyclicSeries TangentialAutomorphism::apply(const CyclicSeries& s) const {
  return necklace::apply(morphism(), s);
}

std::vector<TensorSeries> TangentialAutomorphism::conjugators() const {
  // f_j = ((e^u - 1)/u)(u_j), so that F(z_j) = e^{-f_j} z_j e^{f_j}.
  Derivation d = log_.derivation();
  std::vector<TensorSeries> out;
  for (int j = 1; j <= surface().punctures(); ++j)
    out.push_back(exp_integral(d, log_.z_generator(j)));
  return out;
}

TangentialAutomorphism TangentialAutomorphism::compose(
    const TangentialAutomorphism& other) const {
  const SurfaceAlgebra& S = surface();
  int cutoff = std::min(this->cutoff(), other.cutoff());
  AlgebraMorphism m = morphism().compose(other.morphism());
  Derivation w = log_morphism(m);
  std::vector<TensorSeries> xs, ys, zs;
  for (int i = 1; i <= S.genus(); ++i) {
    xs.push_back(w.image(S.x(i)));
    ys.push_back(w.image(S.y(i)));
  }
  for (int j = 1; j <= S.punctures(); ++j) {
    TensorSeries zj = S.gen(S.z(j), cutoff);
    TensorSeries wj = solve_ad(zj, w.image(S.z(j)), /*constrain_to_lie=*/true);
    zs.push_back(wj);
  }
  return TangentialAutomorphism(TangentialDerivation(S, cutoff, std::move(xs), std::move(ys),
                                                     std::move(zs)));
}

CyclicSeries j_cocycle(const TangentialAutomorphism& F) {
  Derivation d = F.log_u().derivation();
  return exp_integral(d, divergence(F.log_u()));
}

CyclicSeries framing_cocycle(const TangentialAutomorphism& F, const Framing& f) {
  Derivation d = F.log_u().derivation();
  return exp_integral(d, framing_cocycle(F.log_u(), f));
}

CyclicSeries j_f(const TangentialAutomorphism& F, const Framing& f) {
  return j_cocycle(F) - framing_cocycle(F, f);
}

TensorSeries p_series(const SurfaceAlgebra& S, const Framing& f, int cutoff) {
  TensorSeries p(S.alphabet(), cutoff);
  for (int i = 1; i <= S.genus(); ++i) {
    p += Rational(f.rot_beta[static_cast<size_t>(i - 1)]) * S.gen(S.x(i), cutoff);
    p -= Rational(f.rot_alpha[static_cast<size_t>(i - 1)]) * S.gen(S.y(i), cutoff);
  }
  return p;
}

CyclicSeries p_element(const SurfaceAlgebra& S, const Framing& f, int cutoff) {
  return trace(p_series(S, f, cutoff));
}

CyclicSeries r_element(const SurfaceAlgebra& S, int cutoff) {
  CyclicSeries acc(S.alphabet(), cutoff);
  for (int i = 1; i <= S.genus(); ++i) {
    for (Letter l : {S.x(i), S.y(i)}) {
      // (e^s - 1)/s = Σ_{k>=0} s^k/(k+1)!
      TensorSeries gen = S.gen(l, cutoff);
      TensorSeries q = TensorSeries::unit(S.alphabet(), cutoff);
      TensorSeries pw = gen;
      for (int k = 1; !pw.is_zero(); ++k) {
        q += pw / factorial(k + 1);
        pw = mul(pw, gen);
      }
      acc += trace(log_series(q));
    }
  }
  return acc;
}

TensorSeries xi_element(const SurfaceAlgebra& S, int cutoff) {
  TensorSeries prod = TensorSeries::unit(S.alphabet(), cutoff);
  for (int i = 1; i <= S.genus(); ++i) {
    TensorSeries ex = exp_series(S.gen(S.x(i), cutoff));
    TensorSeries ey = exp_series(S.gen(S.y(i), cutoff));
    TensorSeries exi = exp_series(-S.gen(S.x(i), cutoff));
    TensorSeries eyi = exp_series(-S.gen(S.y(i), cutoff));
    prod = mul(mul(mul(mul(prod, ex), ey), exi), eyi);
  }
  for (int j = 1; j <= S.punctures(); ++j)
    prod = mul(prod, exp_series(S.gen(S.z(j), cutoff)));
  return log_series(prod);
}

void FreeGroupWord::append(Kind kind, int index, int exponent) {
  if (exponent != 1 && exponent != -1)
    throw std::invalid_argument("free group word: exponent must be ±1");
  if (!syllables.empty()) {
    const Syllable& last = syllables.back();
    if (last.kind == kind && last.index == index && last.exponent == -exponent) {
      syllables.pop_back();  // keep the word reduced
      return;
    }
  }
  syllables.push_back({kind, index, exponent});
}

FreeGroupWord FreeGroupWord::gamma0(const SurfaceAlgebra& S) {
  FreeGroupWord w;
  for (int i = 1; i <= S.genus(); ++i) {
    w.append(Kind::Alpha, i, 1);
    w.append(Kind::Beta, i, 1);
    w.append(Kind::Alpha, i, -1);
    w.append(Kind::Beta, i, -1);
  }
  for (int j = 1; j <= S.punctures(); ++j) w.append(Kind::Gamma, j, 1);
  return w;
}

GroupLike Expansion::evaluate(const SurfaceAlgebra& S, const FreeGroupWord& w) const {
  if (alpha.empty() && beta.empty() && gamma.empty())
    throw PreconditionError("expansion: no generator images");
  int cutoff = 0;
  bool first = true;
  auto note = [&](const GroupLike& g) {
    cutoff = first ? g.cutoff() : std::min(cutoff, g.cutoff());
    first = false;
  };
  for (const auto& g : alpha) note(g);
  for (const auto& g : beta) note(g);
  for (const auto& g : gamma) note(g);

  TensorSeries acc = TensorSeries::unit(S.alphabet(), cutoff);
  for (const auto& syl : w.syllables) {
    const std::vector<GroupLike>* pool = nullptr;
    switch (syl.kind) {
      case FreeGroupWord::Kind::Alpha: pool = &alpha; break;
      case FreeGroupWord::Kind::Beta: pool = &beta; break;
      case FreeGroupWord::Kind::Gamma: pool = &gamma; break;
    }
    const TensorSeries& img = pool->at(static_cast<size_t>(syl.index - 1)).series();
    acc = mul(acc, syl.exponent == 1 ? img : inverse_series(img));
  }
  return GroupLike::certified(acc);
}

Expansion theta_exp(const SurfaceAlgebra& S, int cutoff) {
  Expansion t;
  for (int i = 1; i <= S.genus(); ++i) {
    t.alpha.push_back(GroupLike::certified(exp_series(S.gen(S.x(i), cutoff))));
    t.beta.push_back(GroupLike::certified(exp_series(S.gen(S.y(i), cutoff))));
  }
  for (int j = 1; j <= S.punctures(); ++j)
    t.gamma.push_back(GroupLike::certified(exp_series(S.gen(S.z(j), cutoff))));
  return t;
}

Expansion theta_of(const TangentialAutomorphism& F) {
  const SurfaceAlgebra& S = F.surface();
  AlgebraMorphism finv = F.inverse_morphism();
  Expansion base = theta_exp(S, F.cutoff());
  Expansion t;
  for (const auto& g : base.alpha) t.alpha.push_back(GroupLike::certified(finv.apply(g.series())));
  for (const auto& g : base.beta) t.beta.push_back(GroupLike::certified(finv.apply(g.series())));
  for (const auto& g : base.gamma) t.gamma.push_back(GroupLike::certified(finv.apply(g.series())));
  return t;
}

bool is_tangential_expansion(const SurfaceAlgebra& S, const Expansion& theta) {
  for (int j = 1; j <= S.punctures(); ++j) {
    const GroupLike& img = theta.gamma.at(static_cast<size_t>(j - 1));
    TensorSeries zj = S.gen(S.z(j), img.cutoff());
    try {
      normalize_conjugacy_linear(zj, img.log().series());
    } catch (const TracesDifferError&) {
      return false;
    }
  }
  return true;
}

bool is_special_expansion(const SurfaceAlgebra& S, const Expansion& theta) {
  if (!is_tangential_expansion(S, theta)) return false;
  GroupLike g0 = theta.evaluate(S, FreeGroupWord::gamma0(S));
  return g0.series() == exp_series(S.omega(g0.cutoff()));
}

bool check_kv1(const TangentialAutomorphism& F) {
  const SurfaceAlgebra& S = F.surface();
  return F.apply(S.omega(F.cutoff())) == xi_element(S, F.cutoff());
}

Kv1PrimeResult check_kv1_prime(const TangentialAutomorphism& F) {
  const SurfaceAlgebra& S = F.surface();
  const int cutoff = F.cutoff();
  TensorSeries a = F.apply(S.omega(cutoff));
  TensorSeries xi = xi_element(S, cutoff);

  Kv1PrimeResult result;
  if (!(trace(exp_series(a)) == trace(exp_series(xi)))) return result;

  TensorSeries g;  // e^{-l0}
  if (S.punctures() >= 1) {
    // ξ has the nonzero linear term Σ z_j: normalize a against ξ directly.
    GroupLike gl = normalize_conjugacy_linear(xi, a);
    g = gl.series();
  } else {
    // n = 0: both sides are conjugate to ω0; compose the two conjugators.
    SymplecticSpace V(S.genus());
    TensorSeries a_v(V.alphabet(), cutoff), xi_v(V.alphabet(), cutoff);
    for (const auto& [w, c] : a.terms()) a_v.add_term(w, c);
    for (const auto& [w, c] : xi.terms()) xi_v.add_term(w, c);
    GroupLike ga = normalize_conjugacy_symplectic(V, a_v);
    GroupLike gx = normalize_conjugacy_symplectic(V, xi_v);
    TensorSeries comp = mul(ga.series(), inverse_series(gx.series()));
    g = TensorSeries(S.alphabet(), cutoff);
    for (const auto& [w, c] : comp.terms()) g.add_term(w, c);
  }
  result.ell0 = -log_series(g);
  if (!(conjugate(g, xi) == a))
    throw std::logic_error("check_kv1_prime: conjugator verification failed");
  result.conjugate = true;
  return result;
}

Kv2PrimeResult check_kv2_prime(const TangentialAutomorphism& F, const Framing& f,
                               const TensorSeries& ell0) {
  const SurfaceAlgebra& S = F.surface();
  const int cutoff = F.cutoff();

  // |l_0| with the z_j coefficients dropped (absorbed into the h_j).
  CyclicSeries ell0_trace = trace(truncate(ell0, cutoff));
  CyclicSeries ell0_canon(S.alphabet(), cutoff);
  for (const auto& [w, c] : ell0_trace.terms()) {
    if (w.size() == 1 && static_cast<unsigned char>(w[0]) >= 2 * S.genus()) continue;
    ell0_canon.add_term(w, c);
  }

  CyclicSeries lhs = j_f(F, f) + Rational(f.rot_gamma0) * ell0_canon -
                     r_element(S, cutoff) - p_element(S, f, cutoff);

  // Columns |z_j^m| and |ξ^m|, m >= 1.
  TensorSeries xi = xi_element(S, cutoff);
  std::vector<CyclicSeries> cols;
  std::vector<std::pair<int, int>> col_tag;  // (j or 0 for ξ, m)
  for (int j = 1; j <= S.punctures(); ++j) {
    TensorSeries zj = S.gen(S.z(j), cutoff);
    TensorSeries p = TensorSeries::unit(S.alphabet(), cutoff);
    for (int m = 1; 2 * m <= cutoff; ++m) {
      p = mul(p, zj);
      cols.push_back(trace(p));
      col_tag.push_back({j, m});
    }
  }
  {
    TensorSeries p = TensorSeries::unit(S.alphabet(), cutoff);
    for (int m = 1; 2 * m <= cutoff; ++m) {
      p = mul(p, xi);
      cols.push_back(trace(p));
      col_tag.push_back({0, m});
    }
  }

  // Index union of classes, grouped by weight for the failure report.
  std::map<Word, int> pos;
  auto note = [&](const CyclicSeries& s) {
    for (const auto& [w, c] : s.terms()) pos.try_emplace(w, static_cast<int>(pos.size()));
  };
  note(lhs);
  for (const auto& c : cols) note(c);

  MatQ mat = MatQ::Zero(static_cast<int>(pos.size()), static_cast<int>(cols.size()));
  VecQ rhs = VecQ::Zero(static_cast<int>(pos.size()));
  for (const auto& [w, c] : lhs.terms()) rhs(pos.at(w)) = c;
  for (size_t j = 0; j < cols.size(); ++j)
    for (const auto& [w, c] : cols[j].terms()) mat(pos.at(w), static_cast<int>(j)) = c;

  Kv2PrimeResult result;
  auto sol = try_solve(mat, rhs);
  if (!sol) {
    // First weight at which the prefix system is inconsistent.
    for (int w = 0; w <= cutoff; ++w) {
      std::vector<int> keep;
      for (const auto& [word, i] : pos)
        if (S.alphabet()->word_weight(word) <= w) keep.push_back(i);
      MatQ m2 = MatQ::Zero(static_cast<int>(keep.size()), mat.cols());
      VecQ r2 = VecQ::Zero(static_cast<int>(keep.size()));
      for (size_t r = 0; r < keep.size(); ++r) {
        m2.row(static_cast<int>(r)) = mat.row(keep[r]);
        r2(static_cast<int>(r)) = rhs(keep[r]);
      }
      if (!try_solve(m2, r2)) {
        result.failing_weight = w;
        break;
      }
    }
    return result;
  }

  result.member = true;
  result.h_gamma.assign(static_cast<size_t>(S.punctures()), {});
  for (size_t c = 0; c < col_tag.size(); ++c) {
    auto [j, m] = col_tag[c];
    if (j == 0) {
      result.h_xi.resize(std::max<size_t>(result.h_xi.size(), static_cast<size_t>(m)), Rational(0));
      result.h_xi[static_cast<size_t>(m - 1)] = -(*sol)(static_cast<int>(c));
    } else {
      auto& hv = result.h_gamma[static_cast<size_t>(j - 1)];
      hv.resize(std::max<size_t>(hv.size(), static_cast<size_t>(m)), Rational(0));
      hv[static_cast<size_t>(m - 1)] = (*sol)(static_cast<int>(c));
    }
  }
  return result;
}

Kv1SolveReport solve_kv1(const SurfaceAlgebra& S, int cutoff) {
  if (S.genus() == 0 && S.punctures() == 0)
    throw PreconditionError("solve_kv1: ω = 0 for (g,n) = (0,0)");
  const auto& alphabet = S.alphabet();
  TensorSeries omega = S.omega(cutoff);
  TensorSeries xi = xi_element(S, cutoff);

  TangentialDerivation u = TangentialDerivation::zero(S, cutoff);
  std::vector<int> dims;

  for (int k = 1; k + 2 <= cutoff; ++k) {
    TensorSeries residual =
        weight_component(xi - exp_derivation(u.derivation()).apply(omega), k + 2);

    // Unknowns: a_i, b_i in L_{k+1} (images of x_i, y_i), c_j in L_k.
    LieBasis lb_img = lie_basis(alphabet, k + 1);
    LieBasis lb_gen = lie_basis(alphabet, k);
    WordIndex img_idx = WordIndex::of_weight(*alphabet, k + 2);

    const int na = static_cast<int>(lb_img.lyndon.size());
    const int nc = static_cast<int>(lb_gen.lyndon.size());
    const int ncols = 2 * S.genus() * na + S.punctures() * nc;
    MatQ A = MatQ::Zero(img_idx.size(), ncols);
    int col = 0;
    for (int i = 1; i <= S.genus(); ++i) {
      for (int t = 0; t < na; ++t, ++col) {
        TensorSeries img = bracket(lb_img.elements[static_cast<size_t>(t)],
                                   S.gen(S.y(i), cutoff));
        A.col(col) = to_vector(img, img_idx);
      }
      for (int t = 0; t < na; ++t, ++col) {
        TensorSeries img = bracket(S.gen(S.x(i), cutoff),
                                   lb_img.elements[static_cast<size_t>(t)]);
        A.col(col) = to_vector(img, img_idx);
      }
    }
    for (int j = 1; j <= S.punctures(); ++j) {
      for (int t = 0; t < nc; ++t, ++col) {
        TensorSeries img = bracket(S.gen(S.z(j), cutoff),
                                   lb_gen.elements[static_cast<size_t>(t)]);
        A.col(col) = to_vector(img, img_idx);
      }
    }

    auto sol = try_solve(A, to_vector(residual, img_idx));
    if (!sol) throw NoSolutionError(k + 2);
    dims.push_back(ncols - rank_of(A));

    // Assemble the weight-k piece of u and accumulate.
    std::vector<TensorSeries> xs, ys, zs;
    col = 0;
    for (int i = 1; i <= S.genus(); ++i) {
      TensorSeries ax(alphabet, cutoff), by(alphabet, cutoff);
      for (int t = 0; t < na; ++t, ++col)
        ax.add_scaled(lb_img.elements[static_cast<size_t>(t)], (*sol)(col));
      for (int t = 0; t < na; ++t, ++col)
        by.add_scaled(lb_img.elements[static_cast<size_t>(t)], (*sol)(col));
      xs.push_back(ax);
      ys.push_back(by);
    }
    for (int j = 1; j <= S.punctures(); ++j) {
      TensorSeries cz(alphabet, cutoff);
      for (int t = 0; t < nc; ++t, ++col)
        cz.add_scaled(lb_gen.elements[static_cast<size_t>(t)], (*sol)(col));
      zs.push_back(cz);
    }
    u += TangentialDerivation(S, cutoff, std::move(xs), std::move(ys), std::move(zs));
  }

  Kv1SolveReport report{TangentialAutomorphism(std::move(u)), std::move(dims)};
  if (!check_kv1(report.F)) throw std::logic_error("solve_kv1: verification failed");
  return report;
}

}  // namespace necklace
