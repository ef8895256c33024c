#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qha/poly.hpp"

using namespace qha;

namespace {

// Reference model: a monomial is its letter string (variable indices in
// written order).  Sorting adjacent distinct letters counts a sign flip
// when both are odd.  Slow but independent of the map-based code.
struct Letters {
  std::vector<int> ls;
  int sign = 1;
};

Letters sort_letters(Letters m, const std::vector<int>& par) {
  bool moved = true;
  while (moved) {
    moved = false;
    for (size_t i = 0; i + 1 < m.ls.size(); ++i) {
      if (m.ls[i] > m.ls[i + 1]) {
        if (par[m.ls[i]] && par[m.ls[i + 1]]) m.sign = -m.sign;
        std::swap(m.ls[i], m.ls[i + 1]);
        moved = true;
      }
    }
  }
  return m;
}

std::vector<int> exps_of(const std::vector<int>& ls, int n) {
  std::vector<int> e(n, 0);
  for (int l : ls) e[l]++;
  return e;
}

std::vector<int> letters_of(const std::vector<int>& e) {
  std::vector<int> ls;
  for (size_t i = 0; i < e.size(); ++i)
    for (int k = 0; k < e[i]; ++k) ls.push_back((int)i);
  return ls;
}

Poly rand_poly(std::mt19937_64& rng, FieldPtr F, int n, int terms, int maxdeg) {
  Poly p(F, n);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = (int)(rng() % (maxdeg + 1));
    long c = (long)(rng() % 9) - 4;
    p.add_term(e, Scalar(F, c));
  }
  return p;
}

}  // namespace

TEST_CASE("ring basics") {
  auto Q = Field::rationals();
  Poly x = Poly::var(Q, 2, 0), y = Poly::var(Q, 2, 1);
  Poly f = (x + y) * (x - y);
  Poly g = x * x - y * y;
  CHECK(f == g);
  CHECK((f - g).is_zero());
  CHECK(f.total_degree() == 2);
  CHECK((x + y).pow(3).coeff({2, 1}) == Scalar(Q, 3));
  CHECK(f.str() == "x1^2 + (-1)*x2^2");
}

TEST_CASE("skew product against letter model") {
  auto Q = Field::rationals();
  std::mt19937_64 rng(20240811);
  int n = 3;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> par(n);
    for (int i = 0; i < n; ++i) par[i] = (int)(rng() % 2);
    // single-monomial factors make the model exact
    std::vector<int> ea(n), eb(n);
    for (int i = 0; i < n; ++i) {
      ea[i] = (int)(rng() % 3);
      eb[i] = (int)(rng() % 3);
    }
    Poly a(Q, n), b(Q, n);
    a.add_term(ea, Scalar(Q, 1));
    b.add_term(eb, Scalar(Q, 1));
    Poly got = a.skew_mul(b, par);
    Letters m;
    m.ls = letters_of(ea);
    auto rl = letters_of(eb);
    m.ls.insert(m.ls.end(), rl.begin(), rl.end());
    Letters s = sort_letters(m, par);
    Poly want(Q, n);
    want.add_term(exps_of(s.ls, n), Scalar(Q, s.sign));
    CHECK(got == want);
  }
}

TEST_CASE("skew product is associative") {
  auto F = Field::prime(7);
  std::mt19937_64 rng(7);
  int n = 3;
  std::vector<int> par = {1, 0, 1};
  for (int trial = 0; trial < 20; ++trial) {
    Poly a = rand_poly(rng, F, n, 3, 2);
    Poly b = rand_poly(rng, F, n, 3, 2);
    Poly c = rand_poly(rng, F, n, 3, 2);
    CHECK(a.skew_mul(b, par).skew_mul(c, par) == a.skew_mul(b.skew_mul(c, par), par));
  }
}

TEST_CASE("signed substitution against letter model") {
  auto Q = Field::rationals();
  std::mt19937_64 rng(99);
  int n = 4;
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<int> pi = {0, 1, 2, 3};
    std::shuffle(pi.begin(), pi.end(), rng);
    std::vector<int> sgn(n), par(n);
    for (int i = 0; i < n; ++i) {
      sgn[i] = rng() % 2 ? 1 : -1;
      par[i] = (int)(rng() % 2);
    }
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) e[i] = (int)(rng() % 3);
    Poly a(Q, n);
    a.add_term(e, Scalar(Q, 1));
    Poly got = a.subst(pi, sgn, par);

    Letters m;
    int s0 = 1;
    for (int l : letters_of(e)) {
      m.ls.push_back(pi[l]);
      if (sgn[l] < 0) s0 = -s0;
    }
    // parity travels with the letter under pi
    std::vector<int> tpar(n);
    for (int i = 0; i < n; ++i) tpar[pi[i]] = par[i];
    Letters s = sort_letters(m, tpar);
    Poly want(Q, n);
    want.add_term(exps_of(s.ls, n), Scalar(Q, s0 * s.sign));
    CHECK(got == want);
  }
}

TEST_CASE("substitution composes with plain product when even") {
  auto F = Field::prime(5);
  std::mt19937_64 rng(5);
  int n = 3;
  std::vector<int> pi = {2, 0, 1}, sgn = {1, -1, 1};
  for (int trial = 0; trial < 20; ++trial) {
    Poly a = rand_poly(rng, F, n, 4, 2);
    Poly b = rand_poly(rng, F, n, 4, 2);
    CHECK((a * b).subst(pi, sgn) == a.subst(pi, sgn) * b.subst(pi, sgn));
  }
}

TEST_CASE("exact division") {
  auto Q = Field::rationals();
  std::mt19937_64 rng(424242);
  int n = 3;
  for (int trial = 0; trial < 30; ++trial) {
    Poly f = rand_poly(rng, Q, n, 4, 2);
    Poly g = rand_poly(rng, Q, n, 3, 2);
    if (g.is_zero()) continue;
    CHECK((f * g).divide_exact(g) == f);
  }
  Poly x = Poly::var(Q, 2, 0), y = Poly::var(Q, 2, 1);
  // difference quotients used by the crossing corrections
  Poly f = x.pow(3) - y.pow(3);
  Poly q = f.divide_exact(x - y);
  CHECK(q == x * x + x * y + y * y);
  CHECK_THROWS(x.divide_exact(y));
  Poly f2 = x.pow(4) - y.pow(4);
  CHECK(f2.divide_exact(x * x - y * y) == x * x + y * y);
}

TEST_CASE("evaluation is a homomorphism") {
  auto F = Field::cyclotomic(4);
  Scalar i = Scalar::gen(F);
  std::mt19937_64 rng(11);
  std::vector<Scalar> pt = {i, i + Scalar(F, 1), Scalar(F, 2)};
  for (int trial = 0; trial < 10; ++trial) {
    Poly a = rand_poly(rng, F, 3, 4, 2);
    Poly b = rand_poly(rng, F, 3, 4, 2);
    CHECK((a * b).eval(pt) == a.eval(pt) * b.eval(pt));
    CHECK((a + b).eval(pt) == a.eval(pt) + b.eval(pt));
  }
}
