#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qha/series.hpp"

using namespace qha;

TEST_CASE("univariate basics") {
  auto F = Field::rationals();
  int K = 8;
  Ser1 t = Ser1::t(F, K), one = Ser1::one(F, K);

  Ser1 g = (one - t).inv();
  for (int i = 0; i < K; ++i) CHECK(g.coeff(i) == Scalar(F, 1));
  CHECK((one - t) * g == one);
  CHECK(((one + t) * (one + t)).coeff(1) == Scalar(F, 2));

  CHECK(t.shift(2).valuation() == 3);
  CHECK(t.shift(2).unshift(3) == Ser1::one(F, K - 3));
  CHECK((t * t + t.shift(2)).divide_by(t) == t + t * t);

  Ser1 h = g.compose(t + t * t);  // 1/(1 - t - t^2): Fibonacci
  long fib[8] = {1, 1, 2, 3, 5, 8, 13, 21};
  for (int i = 0; i < K; ++i) CHECK(h.coeff(i) == Scalar(F, fib[i]));

  CHECK(g.derivative() == g * g);
}

TEST_CASE("univariate sqrt and quadratic roots") {
  auto F = Field::rationals();
  int K = 9;
  Ser1 t = Ser1::t(F, K), one = Ser1::one(F, K);

  Ser1 s = (one + t).sqrt_unit(Scalar(F, 1));
  CHECK(s * s == one + t);
  CHECK(s.coeff(1) == Scalar(F, mpq_class(1, 2)));
  Ser1 sneg = (one + t).sqrt_unit(Scalar(F, -1));
  CHECK(sneg == -s);
  CHECK_THROWS((one + t).sqrt_unit(Scalar(F, 2)));

  // Valuation-2 input: pull out t^2 first.
  Ser1 f = (t * t) * (one + t);
  Ser1 y = f.unshift(2).sqrt_unit(Scalar(F, 1)).shift(1);
  CHECK(y * y == f.trunc(y.K));
  CHECK(y.valuation() == 1);

  // x^2 - b x + c with simple roots 2 and 1/2 at t = 0.
  Ser1 b = Ser1::constant(F, K, Scalar(F, mpq_class(5, 2))) + t;
  Ser1 c = one;
  Ser1 r1 = newton_quadratic(b, c, Scalar(F, 2));
  Ser1 r2 = newton_quadratic(b, c, Scalar(F, mpq_class(1, 2)));
  CHECK((r1 * r1 - b * r1 + c).is_zero());
  CHECK(r1 + r2 == b);
  CHECK(r1 * r2 == c);
  CHECK_THROWS(newton_quadratic(Ser1::constant(F, K, Scalar(F, 2)), one, Scalar(F, 1)));
}

TEST_CASE("bivariate ring operations") {
  auto F = Field::rationals();
  int K = 7;
  Ser2 t1 = Ser2::var(F, K, 0), t2 = Ser2::var(F, K, 1), one = Ser2::one(F, K);

  Ser2 p = (t1 + t2) * (t1 - t2);
  CHECK(p == t1 * t1 - t2 * t2);
  CHECK(p.valuation() == 2);
  CHECK(p.coeff(2, 0) == Scalar(F, 1));
  CHECK(p.coeff(1, 1) == Scalar(F, 0));

  Ser2 u = one + t1 + t2.scale(Scalar(F, 3));
  CHECK(u * u.inv() == one);

  CHECK(p.swapv() == -p);
  CHECK((t1 * t1 * t2).diag() == Ser1::t(F, K).shift(2));
  CHECK((t1 * t1 * t2).diag(-1) == -Ser1::t(F, K).shift(2));

  // t1 <- -t1 + t1^2 in t1^2 t2.
  Ser1 g = -Ser1::t(F, K) + Ser1::t(F, K).shift(1);
  Ser2 cv = (t1 * t1 * t2).compose_var(0, g);
  Ser2 want = (t1 * t1 - (t1 * t1 * t1).scale(Scalar(F, 2)) + t1 * t1 * t1 * t1) * t2;
  CHECK(cv == want);
  CHECK((t1 * t2).compose_var(1, g) == -t1 * t2 + t1 * t2 * t2);
}

TEST_CASE("certified division") {
  auto F = Field::rationals();
  int K = 8;
  Ser2 t1 = Ser2::var(F, K, 0), t2 = Ser2::var(F, K, 1), one = Ser2::one(F, K);

  auto q = (t1 * t1 - t2 * t2).divide(t1 - t2);
  REQUIRE(q.has_value());
  CHECK(q->K == K - 1);
  CHECK(*q == (t1 + t2).trunc(K - 1));

  auto q3 = (t1 * t1 * t1 - t2 * t2 * t2).divide(t1 - t2);
  REQUIRE(q3.has_value());
  CHECK(*q3 == (t1 * t1 + t1 * t2 + t2 * t2).trunc(K - 1));

  Ser2 den = (t1 + t2) * (t1 + t2);
  Ser2 num = den * (one + t1);
  auto q2 = num.divide(den);
  REQUIRE(q2.has_value());
  CHECK(q2->K == K - 2);
  CHECK(*q2 == (one + t1).trunc(K - 2));

  CHECK(!t1.divide(t2).has_value());
  CHECK(!(t1 * t1).divide(t2).has_value());
  CHECK(!(one + t1).divide(t1 - t2).has_value());
  CHECK(!(t1 * t1 + t2 * t2).divide(t1 - t2).has_value());

  // Unit divisor keeps full order.
  auto qu = (one + t2).divide(one + t1);
  REQUIRE(qu.has_value());
  CHECK(qu->K == K);
  CHECK(*qu == (one + t2) * (one + t1).inv());
}

TEST_CASE("bivariate sqrt") {
  auto F = Field::rationals();
  int K = 7;
  Ser2 t1 = Ser2::var(F, K, 0), t2 = Ser2::var(F, K, 1), one = Ser2::one(F, K);

  Ser2 a = one + t1 + t2.scale(Scalar(F, 2));
  Ser2 s = (a * a).sqrt_unit(Scalar(F, 1));
  CHECK(s == a);
  Ser2 b = one + t1 * t2 + t2 * t2;
  Ser2 r = b.sqrt_unit(Scalar(F, -1));
  CHECK(r * r == b);
  CHECK(r.coeff(0, 0) == Scalar(F, -1));

  // Symmetric input gives a swap-symmetric root.
  Ser2 sym = one + (t1 + t2) + t1 * t2;
  Ser2 rs = sym.sqrt_unit(Scalar(F, 1));
  CHECK(rs.swapv() == rs);
}

TEST_CASE("series over a cyclotomic field") {
  auto F = Field::cyclotomic(8);
  int K = 6;
  Scalar z = Scalar::gen(F);
  Ser1 t = Ser1::t(F, K);
  Ser1 f = Ser1::constant(F, K, z) + t;
  CHECK(f * f.inv() == Ser1::one(F, K));
  Ser1 s = (Ser1::constant(F, K, z * z) + t.shift(1)).sqrt_unit(z);
  CHECK(s.coeff(0) == z);
  CHECK(s * s == Ser1::constant(F, K, z * z) + t.shift(1));
}
