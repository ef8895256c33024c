#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qha/affine.hpp"

using namespace qha;

TEST_CASE("fraction arithmetic") {
  FieldPtr F = Field::rationals();
  int n = 2;
  Poly x = Poly::var(F, n, 0), y = Poly::var(F, n, 1);

  Frac a(x * x - y * y, x - y);
  CHECK(a == Frac(x + y));
  CHECK(a.den == Poly::one(F, n));

  Frac ix = Frac::var(F, n, 0).inv();
  CHECK(ix * Frac(x) == Frac::one(F, n));
  CHECK((a + (-a)).is_zero());

  Frac u = Frac(x) + ix;
  Frac v = Frac(x * x + Poly::one(F, n), x);
  CHECK(u == v);

  Frac w = u.subst_vals({ix, Frac(y)});
  CHECK(w == u);

  CHECK_THROWS_AS(Frac(x, Poly::zero(F, n)), std::domain_error);
  CHECK_THROWS_AS(Frac::zero(F, n).inv(), std::domain_error);
}

TEST_CASE("quantum relation audit, eighth root parameter") {
  FieldPtr F = Field::cyclotomic(8);
  AffWorld W = AffWorld::quantum(F, 3, Scalar::gen(F));
  Report rep = affine_relation_audit(W);
  INFO(rep.str());
  CHECK(rep.ok());
}

TEST_CASE("quantum relation audit, rational parameter, four strands") {
  FieldPtr F = Field::rationals();
  AffWorld W = AffWorld::quantum(F, 4, Scalar(F, 3));
  Report rep = affine_relation_audit(W);
  INFO(rep.str());
  CHECK(rep.ok());
}

TEST_CASE("degenerate relation audit, rational field, four strands") {
  FieldPtr F = Field::rationals();
  AffWorld W = AffWorld::sergeev(F, 4);
  Report rep = affine_relation_audit(W);
  INFO(rep.str());
  CHECK(rep.ok());
}

TEST_CASE("degenerate relation audit, characteristic three") {
  FieldPtr F = Field::prime_ext(3, 2);
  AffWorld W = AffWorld::sergeev(F, 3);
  Report rep = affine_relation_audit(W);
  INFO(rep.str());
  CHECK(rep.ok());
}

TEST_CASE("intertwiner squares and braiding, both flavours") {
  {
    FieldPtr F = Field::cyclotomic(8);
    AffWorld W = AffWorld::quantum(F, 3, Scalar::gen(F));
    AffEl p0 = AffEl::intertwiner(W, 0), p1 = AffEl::intertwiner(W, 1);
    CHECK(p0 * p0 == AffEl::from_frac(W, W.fsquare(0)));
    CHECK(p1 * p1 == AffEl::from_frac(W, W.fsquare(1)));
    CHECK((p0 * p1 * p0 - p1 * p0 * p1).is_zero());
  }
  {
    FieldPtr F = Field::rationals();
    AffWorld W = AffWorld::sergeev(F, 3);
    AffEl p0 = AffEl::intertwiner(W, 0), p1 = AffEl::intertwiner(W, 1);
    CHECK(p0 * p0 == AffEl::from_frac(W, W.fsquare(0)));
    CHECK(p1 * p1 == AffEl::from_frac(W, W.fsquare(1)));
    CHECK((p0 * p1 * p0 - p1 * p0 * p1).is_zero());
  }
}

TEST_CASE("kernel and square in eigenvalue coordinates") {
  FieldPtr F = Field::cyclotomic(8);
  Scalar q = Scalar::gen(F), one(F, 1);
  AffWorld W = AffWorld::quantum(F, 2, q);

  Frac X1 = Frac::var(F, 2, 0), X2 = Frac::var(F, 2, 1);
  Frac w1 = X1 + X1.inv(), w2 = X2 + X2.inv();
  Frac Kw = frac_eval(W.kernel(), {w1, w2});
  CHECK(W.fsquare(0) == Kw * ((w1 - w2) * (w1 - w2)).inv());

  // same identities on the two-fold cover with coordinates lam1, lam2
  Frac l1 = Frac::var(F, 2, 0), l2 = Frac::var(F, 2, 1);
  Scalar qq = q + q.inv(), q2 = q * q;
  Frac v1 = (l1 + l1.inv()).scale(Scalar(F, 2) * qq.inv());
  Frac v2 = (l2 + l2.inv()).scale(Scalar(F, 2) * qq.inv());
  Frac Kl = frac_eval(W.kernel(), {v1, v2});
  auto lin = [&](const Frac& a, const Scalar& c, const Frac& b) {
    return a - b.scale(c);
  };
  Frac prod = lin(l1, q2, l2) * lin(l1, q2.inv(), l2) *
              (l1 * l2 - Frac::constant(F, 2, q2)) *
              (l1 * l2 - Frac::constant(F, 2, q2.inv()));
  Frac pref = (l1 * l1 * l2 * l2).inv().scale(Scalar(F, 4) * (qq * qq).inv());
  CHECK(Kl == pref * prod);

  Frac Fl = lin(l2, q2, l1) * lin(l2, q2.inv(), l1) *
            lin(l2, q2, l1.inv()) * lin(l2, q2.inv(), l1.inv()) *
            ((l2 - l1) * (l2 - l1) * (l2 - l1.inv()) * (l2 - l1.inv())).inv();
  CHECK(Fl == Kl * ((v1 - v2) * (v1 - v2)).inv());

  FieldPtr Q = Field::rationals();
  AffWorld D = AffWorld::sergeev(Q, 2);
  Frac m1 = Frac::var(Q, 2, 0), m2 = Frac::var(Q, 2, 1);
  Scalar quarter = Scalar(Q, 1) * Scalar(Q, 4).inv();
  Frac u = m1 * m1 - Frac::constant(Q, 2, quarter);
  Frac v = m2 * m2 - Frac::constant(Q, 2, quarter);
  Frac Kd = frac_eval(D.kernel(), {u, v});
  Frac e = Frac::one(Q, 2);
  CHECK(Kd == (m1 - m2 - e) * (m1 - m2 + e) * (m1 + m2 - e) * (m1 + m2 + e));
}

TEST_CASE("crossing a variable in normal form") {
  FieldPtr F = Field::rationals();
  AffWorld W = AffWorld::quantum(F, 2, Scalar(F, 3));
  Scalar xi = W.xi();
  AffEl lhs = AffEl::gen_t(W, 0) * AffEl::gen_x(W, 0);
  AffEl rhs = AffEl::gen_x(W, 1) * AffEl::gen_t(W, 0) -
              AffEl::gen_x(W, 1).scale(xi) -
              (AffEl::gen_c(W, 0) * AffEl::gen_c(W, 1) * AffEl::gen_x(W, 0))
                  .scale(xi);
  CHECK(lhs == rhs);
}
