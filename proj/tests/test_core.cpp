#include <doctest.h>

#include "necklace/coproduct.hpp"
#include "necklace/random_elements.hpp"
#include "necklace/tensor_series.hpp"

using namespace necklace;

namespace {
TensorSeries gen(const AlphabetPtr& a, int cutoff, const char* name) {
  return TensorSeries::generator(a, cutoff, a->require(name));
}
}  // namespace

TEST_CASE("surface alphabet weights and order") {
  auto a = Alphabet::surface(2, 1);
  CHECK(a->size() == 5);
  CHECK(a->name(0) == "x1");
  CHECK(a->name(1) == "y1");
  CHECK(a->name(2) == "x2");
  CHECK(a->name(3) == "y2");
  CHECK(a->name(4) == "z1");
  CHECK(a->weight(0) == 1);
  CHECK(a->weight(4) == 2);
  CHECK(a->min_generator_weight() == 1);
  CHECK_THROWS_AS(Alphabet({{"a", 0}}), std::invalid_argument);
}

TEST_CASE("mul: examples") {
  auto a = Alphabet::surface(1, 0);
  int N = 4;
  TensorSeries x = gen(a, N, "x1"), y = gen(a, N, "y1");
  TensorSeries one = TensorSeries::unit(a, N);

  // x * y is the word xy
  TensorSeries xy = mul(x, y);
  CHECK(xy.term_count() == 1);
  CHECK(xy.coeff(Word{char(0), char(1)}) == 1);

  // (1+x)(1+y) = 1 + x + y + xy
  CHECK(mul(one + x, one + y) == one + x + y + xy);

  // truncation: at cutoff 2, (xy) * x = 0
  TensorSeries xy2 = truncate(xy, 2);
  CHECK(mul(xy2, truncate(x, 2)).is_zero());
}

TEST_CASE("mul: alphabet mismatch") {
  auto a = Alphabet::surface(1, 0);
  auto b = Alphabet::surface(0, 2);
  CHECK_THROWS_AS(mul(TensorSeries::unit(a, 3), TensorSeries::unit(b, 3)), AlphabetMismatch);
}

TEST_CASE("coproduct: examples") {
  auto a = Alphabet::surface(1, 0);
  int N = 4;
  TensorSeries x = gen(a, N, "x1"), y = gen(a, N, "y1");
  TensorSeries one = TensorSeries::unit(a, N);

  CHECK(coproduct(x) == PairSeries::tensor(x, one) + PairSeries::tensor(one, x));

  // Δ(xy) = xy⊗1 + x⊗y + y⊗x + 1⊗xy
  TensorSeries xy = mul(x, y);
  PairSeries expected = PairSeries::tensor(xy, one) + PairSeries::tensor(x, y) +
                        PairSeries::tensor(y, x) + PairSeries::tensor(one, xy);
  CHECK(coproduct(xy) == expected);

  // Δ(exp x) = exp(x) ⊗ exp(x)
  TensorSeries ex = exp_series(x);
  CHECK(coproduct(ex) == PairSeries::tensor(ex, ex));
}

TEST_CASE("exp/log: examples and round trips") {
  auto a = Alphabet::surface(1, 1);
  int N = 5;
  TensorSeries x = gen(a, N, "x1");
  TensorSeries zero(a, N);

  CHECK(exp_series(zero) == TensorSeries::unit(a, N));
  CHECK(log_series(exp_series(x)) == x);
  CHECK(mul(exp_series(x), exp_series(-x)) == TensorSeries::unit(a, N));

  CHECK_THROWS_AS(exp_series(TensorSeries::unit(a, N)), PreconditionError);
  CHECK_THROWS_AS(log_series(x), PreconditionError);

  Rng rng(7);
  TensorSeries r = random_series(a, N, rng, 6, 1);
  CHECK(log_series(exp_series(r)) == r);
  TensorSeries g = exp_series(r);
  CHECK(exp_series(log_series(g)) == g);
}

TEST_CASE("primitivity and group-likeness") {
  auto a = Alphabet::surface(1, 0);
  int N = 4;
  TensorSeries x = gen(a, N, "x1"), y = gen(a, N, "y1");

  CHECK(is_primitive(bracket(x, y)));
  CHECK_FALSE(is_primitive(mul(x, y)));
  CHECK(is_grouplike(exp_series(bracket(x, y))));
  CHECK_FALSE(is_grouplike(mul(x, y) + TensorSeries::unit(a, N)));
}

TEST_CASE("weight_component: examples") {
  auto a = Alphabet::surface(1, 1);
  int N = 4;
  TensorSeries x = gen(a, N, "x1"), y = gen(a, N, "y1"), z = gen(a, N, "z1");
  TensorSeries s = TensorSeries::unit(a, N) + x + mul(x, y);

  CHECK(weight_component(s, 2) == mul(x, y));
  CHECK(weight_component(z, 2) == z);  // z has weight 2
  CHECK_THROWS_AS(weight_component(s, 5), std::out_of_range);

  Rng rng(3);
  TensorSeries r = random_series(a, N, rng, 8);
  TensorSeries sum(a, N);
  for (int k = 0; k <= N; ++k) sum += weight_component(r, k);
  CHECK(sum == r);
}

TEST_CASE("property: associativity and distributivity of mul") {
  auto alph = Alphabet::surface(1, 1);
  Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    TensorSeries a = random_series(alph, 5, rng, 5);
    TensorSeries b = random_series(alph, 5, rng, 5);
    TensorSeries c = random_series(alph, 5, rng, 5);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, b + c) == mul(a, b) + mul(a, c));
  }
}

TEST_CASE("property: coproduct is an algebra morphism") {
  auto alph = Alphabet::surface(1, 1);
  Rng rng(13);
  for (int trial = 0; trial < 8; ++trial) {
    TensorSeries a = random_series(alph, 4, rng, 4);
    TensorSeries b = random_series(alph, 4, rng, 4);
    CHECK(coproduct(mul(a, b)) == mul(coproduct(a), coproduct(b)));
  }
}

TEST_CASE("property: truncation commutes with operations") {
  auto alph = Alphabet::surface(1, 1);
  Rng rng(17);
  for (int trial = 0; trial < 8; ++trial) {
    TensorSeries a = random_series(alph, 6, rng, 5);
    TensorSeries b = random_series(alph, 6, rng, 5);
    CHECK(truncate(mul(a, b), 3) == mul(truncate(a, 3), truncate(b, 3)));
    CHECK(truncate(a + b, 3) == truncate(a, 3) + truncate(b, 3));
    TensorSeries ap = random_series(alph, 6, rng, 5, 1);
    CHECK(truncate(exp_series(ap), 3) == exp_series(truncate(ap, 3)));
  }
}
