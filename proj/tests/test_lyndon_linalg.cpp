#include <doctest.h>

#include "necklace/coproduct.hpp"
#include "necklace/lyndon.hpp"

using namespace necklace;

TEST_CASE("word enumeration respects weights") {
  auto a = Alphabet::surface(1, 1);  // x, y weight 1; z weight 2
  CHECK(words_of_weight(*a, 0).size() == 1);
  CHECK(words_of_weight(*a, 1).size() == 2);
  // weight 2: xx, xy, yx, yy, z
  CHECK(words_of_weight(*a, 2).size() == 5);
  // f(n) = 2 f(n-1) + f(n-2)
  CHECK(words_of_weight(*a, 3).size() == 12);
  CHECK(words_of_weight(*a, 4).size() == 29);
}

TEST_CASE("Lyndon words and Witt dimensions in two letters") {
  auto a = Alphabet::surface(1, 0);
  // classical Witt numbers for rank 2: 2, 1, 2, 3, 6, 9, 18, 30
  int expected[] = {2, 1, 2, 3, 6, 9, 18, 30};
  for (int w = 1; w <= 8; ++w)
    CHECK(lie_dimension(*a, w) == expected[w - 1]);
}

TEST_CASE("Lyndon words of the weighted (1,1) alphabet") {
  auto a = Alphabet::surface(1, 1);
  // weight 2: xy and z
  auto lw = lyndon_words(*a, 2);
  REQUIRE(lw.size() == 2);
  CHECK(lw[0] == Word{char(0), char(1)});
  CHECK(lw[1] == Word{char(2)});
}

TEST_CASE("lyndon_bracket expands to primitive elements with unit leading term") {
  auto a = Alphabet::surface(1, 0);
  for (int w = 1; w <= 5; ++w) {
    for (const Word& lw : lyndon_words(*a, w)) {
      TensorSeries b = lyndon_bracket(a, w, lw);
      CHECK(is_primitive(b));
      CHECK(b.coeff(lw) == 1);  // triangular against the word basis
    }
  }
}

TEST_CASE("lie_basis matrix has full column rank") {
  auto a = Alphabet::surface(1, 1);
  for (int w = 1; w <= 5; ++w) {
    LieBasis lb = lie_basis(a, w);
    CHECK(rank_of(lb.matrix) == static_cast<int>(lb.lyndon.size()));
  }
}

TEST_CASE("exact kernels and solves") {
  MatQ m(2, 3);
  m << Rational(1), Rational(2), Rational(3),
       Rational(2), Rational(4), Rational(6);
  CHECK(rank_of(m) == 1);
  MatQ k = kernel_basis(m);
  CHECK(k.cols() == 2);
  CHECK((m * k).isZero(Rational(0)));

  VecQ b(2);
  b << Rational(1), Rational(2);
  auto sol = try_solve(m, b);
  REQUIRE(sol.has_value());
  CHECK((m * *sol - b).isZero(Rational(0)));

  VecQ bad(2);
  bad << Rational(1), Rational(3);
  CHECK_FALSE(try_solve(m, bad).has_value());
}

TEST_CASE("span comparisons") {
  MatQ a(3, 2), b(3, 2);
  a << Rational(1), Rational(0), Rational(0), Rational(1), Rational(0), Rational(0);
  b << Rational(1), Rational(1), Rational(1), Rational(-1), Rational(0), Rational(0);
  CHECK(spans_equal(a, b));
  MatQ c(3, 1);
  c << Rational(0), Rational(0), Rational(1);
  CHECK_FALSE(span_contains(a, c));
}

TEST_CASE("quotient space reduction") {
  MatQ sub(3, 1);
  sub << Rational(1), Rational(1), Rational(0);
  QuotientSpace q(sub, 3);
  CHECK(q.dim() == 2);
  VecQ v(3);
  v << Rational(2), Rational(2), Rational(0);
  CHECK(q.in_subspace(v));
  v << Rational(1), Rational(0), Rational(0);
  CHECK_FALSE(q.in_subspace(v));
  // reduction is linear and kills exactly the subspace
  VecQ w(3);
  w << Rational(0), Rational(-1), Rational(5);
  CHECK(q.reduce(v + w) == q.reduce(v) + q.reduce(w));
}
