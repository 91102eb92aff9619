#include <doctest.h>

#include "necklace/lie.hpp"
#include "necklace/pbw.hpp"
#include "necklace/random_elements.hpp"

using namespace necklace;

namespace {
TensorSeries gen(const AlphabetPtr& a, int cutoff, const char* name) {
  return TensorSeries::generator(a, cutoff, a->require(name));
}
}  // namespace

TEST_CASE("canonical rotation") {
  CHECK(canonical_rotation(Word{}) == Word{});
  CHECK(canonical_rotation(Word{char(1), char(0)}) == Word{char(0), char(1)});
  CHECK(canonical_rotation(Word{char(1), char(0), char(1)}) == Word{char(0), char(1), char(1)});
  // periodic word
  CHECK(canonical_rotation(Word{char(1), char(0), char(1), char(0)}) ==
        Word{char(0), char(1), char(0), char(1)});
}

TEST_CASE("trace: examples") {
  auto a = Alphabet::surface(1, 0);
  int N = 4;
  TensorSeries x = gen(a, N, "x1"), y = gen(a, N, "y1");
  CHECK(trace(mul(x, y)) == trace(mul(y, x)));
  CHECK(trace(bracket(x, y)).is_zero());

  Rng rng(5);
  for (int t = 0; t < 6; ++t) {
    TensorSeries u = random_series(a, N, rng, 5);
    TensorSeries v = random_series(a, N, rng, 5);
    CHECK(trace(mul(u, v) - mul(v, u)).is_zero());
  }
}

TEST_CASE("embed: examples and ν-invariance") {
  auto a = Alphabet::surface(1, 0);
  int N = 4;
  TensorSeries x = gen(a, N, "x1"), y = gen(a, N, "y1");

  CHECK(embed(trace(x)) == x);
  CHECK(embed(trace(mul(x, y))) == mul(x, y) + mul(y, x));
  CHECK(embed(trace(mul(x, x))) == Rational(2) * mul(x, x));

  // trace ∘ embed = length * identity on aperiodic classes
  CyclicSeries c(a, N);
  c.add_term(Word{char(0), char(0), char(1)}, Rational(1));
  CHECK(trace(embed(c)) == Rational(3) * c);
}

TEST_CASE("right_partial: last-letter decomposition") {
  auto a = Alphabet::surface(1, 1);
  int N = 4;
  TensorSeries x = gen(a, N, "x1"), y = gen(a, N, "y1"), z = gen(a, N, "z1");
  TensorSeries xy = mul(x, y);

  CHECK(right_partial(a->require("y1"), xy) == x);
  CHECK(right_partial(a->require("x1"), xy).is_zero());
  CHECK(right_partial(a->require("z1"), z) == TensorSeries::unit(a, N));

  TensorSeries s = xy + z;
  TensorSeries rebuilt(a, N);
  for (int l = 0; l < a->size(); ++l)
    rebuilt += mul(right_partial(static_cast<Letter>(l), s),
                   TensorSeries::generator(a, N, static_cast<Letter>(l)));
  CHECK(rebuilt == s);

  CHECK_THROWS_AS(right_partial(0, TensorSeries::unit(a, N)), PreconditionError);
}

TEST_CASE("eulerian projections: frozen weight-2 values") {
  auto a = Alphabet::surface(1, 0);
  int N = 4;
  TensorSeries x = gen(a, N, "x1"), y = gen(a, N, "y1");
  TensorSeries xy = mul(x, y);

  CHECK(eulerian_projection(x, 1) == x);
  // e1(xy) = (1/2)[x,y], e2(xy) = (1/2)(xy + yx)
  CHECK(eulerian_projection(xy, 1) == bracket(x, y) / Rational(2));
  CHECK(eulerian_projection(xy, 2) == (mul(x, y) + mul(y, x)) / Rational(2));
  CHECK(eulerian_projection(xy, 1) + eulerian_projection(xy, 2) == xy);
  // x^2 is already a symmetric square
  CHECK(eulerian_projection(mul(x, x), 2) == mul(x, x));
  CHECK(eulerian_projection(mul(x, x), 1).is_zero());
}

TEST_CASE("PBW completeness and primitivity of the first component") {
  auto a = Alphabet::surface(1, 1);
  int N = 5;
  Rng rng(23);
  EulerianProjector proj(a, N);
  for (int t = 0; t < 5; ++t) {
    TensorSeries s = random_series(a, N, rng, 6);
    TensorSeries sum(a, N);
    for (int m = 0; m <= N; ++m) sum += proj.project(s, m);
    CHECK(sum == s);
    CHECK(is_primitive(proj.project(s, 1)));
  }
}

TEST_CASE("symmetrize and idempotent orthogonality") {
  auto a = Alphabet::surface(1, 0);
  int N = 6;
  TensorSeries x = gen(a, N, "x1"), y = gen(a, N, "y1");

  CHECK(symmetrize({x}) == x);
  CHECK(symmetrize({x, y}) == (mul(x, y) + mul(y, x)) / Rational(2));

  Rng rng(31);
  std::vector<TensorSeries> factors;
  for (int i = 0; i < 3; ++i)
    factors.push_back(random_lie(a, N, rng, 2, 1, 2).series());
  TensorSeries sym = symmetrize(factors);
  EulerianProjector proj(a, N);
  CHECK(proj.project(sym, 3) == sym);
  CHECK(proj.project(sym, 1).is_zero());
  CHECK(proj.project(sym, 2).is_zero());
}

TEST_CASE("power traces and conjugation invariance") {
  auto a = Alphabet::surface(1, 0);
  int N = 6;
  Rng rng(41);
  TensorSeries u = random_lie(a, N, rng, 4).series();
  CHECK(power_trace(u, 0) == trace(TensorSeries::unit(a, N)));

  TensorSeries g = random_grouplike(a, N, rng, 3).series();
  TensorSeries v = conjugate(g, u);
  for (int m = 0; m <= N; ++m) CHECK(power_trace(u, m) == power_trace(v, m));

  // |exp u| = Σ |u^m| / m!
  CyclicSeries lhs = trace(exp_series(u));
  CyclicSeries rhs(a, N);
  for (int m = 0; m <= N; ++m) {
    CyclicSeries term = power_trace(u, m);
    term *= Rational(1) / factorial(m);
    rhs += term;
  }
  CHECK(lhs == rhs);
}

TEST_CASE("membership in power span") {
  auto a = Alphabet::surface(0, 2);
  int N = 8;
  TensorSeries z1 = gen(a, N, "z1"), z2 = gen(a, N, "z2");

  SpanMembership r = membership_in_power_span(z1, {z1, z2}, 3);
  REQUIRE(r.member);
  CHECK(r.coefficients[0] == 1);
  CHECK(r.coefficients[1] == 0);

  Rng rng(43);
  TensorSeries g = random_grouplike(a, N, rng, 3).series();
  TensorSeries u = conjugate(g, z1);
  for (int m = 1; 2 * m <= N; ++m) {
    SpanMembership rm = membership_in_power_span(u, {z1, z2}, m);
    CHECK(rm.member);
  }
  // and a non-member
  SpanMembership bad = membership_in_power_span(z1 + z2, {z1}, 2);
  CHECK_FALSE(bad.member);
}
