#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qha/scalar.hpp"

using namespace qha;

TEST_CASE("rational arithmetic") {
  auto Q = Field::rationals();
  Scalar a(Q, mpq_class(3, 4)), b(Q, mpq_class(-2, 5));
  CHECK((a + b).str() == "7/20");
  CHECK((a * b).str() == "-3/10");
  CHECK((a / b).str() == "-15/8");
  CHECK((a - a).is_zero());
  CHECK(Scalar(Q, 1).is_one());
  CHECK(a.pow(3) == Scalar(Q, mpq_class(27, 64)));
  CHECK(a.pow(-2) == Scalar(Q, mpq_class(16, 9)));
}

TEST_CASE("cyclotomic polynomials") {
  auto phi = [](unsigned m) {
    std::string s;
    for (auto& c : cyclotomic_poly(m)) s += c.get_str() + " ";
    return s;
  };
  CHECK(phi(1) == "-1 1 ");
  CHECK(phi(2) == "1 1 ");
  CHECK(phi(3) == "1 1 1 ");
  CHECK(phi(4) == "1 0 1 ");
  CHECK(phi(6) == "1 -1 1 ");
  CHECK(phi(8) == "1 0 0 0 1 ");
  CHECK(phi(12) == "1 0 -1 0 1 ");
}

TEST_CASE("eighth roots of unity") {
  auto F = Field::cyclotomic(8);
  CHECK(F->degree() == 4);
  Scalar z = Scalar::gen(F);
  CHECK(z.pow(8).is_one());
  CHECK(z.pow(4) == -Scalar(F, 1));
  Scalar i = z.pow(2);
  CHECK(i * i == -Scalar(F, 1));
  Scalar r = z + z.pow(-1);
  CHECK(r * r == Scalar(F, 2));  // sqrt(2) lives here
  CHECK(z.inv() == z.pow(7));
  CHECK((z * z.inv()).is_one());
}

TEST_CASE("fifth and twelfth roots") {
  for (unsigned m : {3u, 5u, 10u, 12u}) {
    auto F = Field::cyclotomic(m);
    Scalar z = Scalar::gen(F);
    CHECK(z.pow((long)m).is_one());
    for (unsigned j = 1; j < m; ++j) CHECK(!z.pow((long)j).is_one());
    Scalar s = z + Scalar(F, 1);
    CHECK(s * s.inv() == Scalar(F, 1));
  }
}

TEST_CASE("prime fields") {
  auto F3 = Field::prime(3);
  Scalar two(F3, 2);
  CHECK((two + two) == Scalar(F3, 1));
  CHECK((two * two) == Scalar(F3, 1));
  CHECK(two.inv() == two);
  CHECK(Scalar(F3, mpq_class(1, 2)) == two);  // 1/2 = 2 mod 3
  auto F7 = Field::prime(7);
  for (long x = 1; x < 7; ++x) CHECK((Scalar(F7, x) * Scalar(F7, x).inv()).is_one());
}

TEST_CASE("quadratic extension of F_3") {
  auto F9 = Field::prime_ext(3, 2);
  Scalar s = Scalar::gen(F9);  // s^2 = 2
  CHECK(s * s == Scalar(F9, 2));
  CHECK((s + Scalar(F9, 1)).pow(8).is_one());  // F_9 units have order dividing 8
  int order = 0;
  Scalar u = s + Scalar(F9, 1), acc(F9, 1);
  for (int k = 1; k <= 8; ++k) {
    acc = acc * u;
    if (acc.is_one()) {
      order = k;
      break;
    }
  }
  CHECK(order == 8);  // 1+sqrt(2) generates the unit group
  for (long x = 0; x < 3; ++x)
    for (long y = 0; y < 3; ++y) {
      Scalar e(F9, x);
      e.c[1] = y;
      if (!e.is_zero()) CHECK((e * e.inv()).is_one());
    }
}

TEST_CASE("square roots") {
  auto Q = Field::rationals();
  CHECK(*try_sqrt(Scalar(Q, mpq_class(9, 16))) == Scalar(Q, mpq_class(3, 4)));
  CHECK(!try_sqrt(Scalar(Q, 2)).has_value());
  CHECK(!try_sqrt(Scalar(Q, -1)).has_value());

  auto F8 = Field::cyclotomic(8);
  Scalar z = Scalar::gen(F8);
  Scalar i = z.pow(2);
  auto si = try_sqrt(i);
  REQUIRE(si.has_value());
  CHECK(*si * *si == i);
  auto smi = try_sqrt(-i);
  REQUIRE(smi.has_value());
  CHECK(*smi * *smi == -i);
  auto s2 = try_sqrt(Scalar(F8, 2));
  REQUIRE(s2.has_value());
  CHECK(*s2 * *s2 == Scalar(F8, 2));
  auto sm2 = try_sqrt(Scalar(F8, -2));
  REQUIRE(sm2.has_value());
  CHECK(*sm2 * *sm2 == Scalar(F8, -2));

  auto F9 = Field::prime_ext(3, 2);
  auto r = try_sqrt(Scalar(F9, 2));
  REQUIRE(r.has_value());
  CHECK(*r * *r == Scalar(F9, 2));
  auto F5 = Field::prime(5);
  CHECK(try_sqrt(Scalar(F5, 4)).has_value());
  CHECK(!try_sqrt(Scalar(F5, 2)).has_value());
}

TEST_CASE("field identity") {
  CHECK(Field::cyclotomic(8)->same(*Field::cyclotomic(8)));
  CHECK(!Field::cyclotomic(8)->same(*Field::cyclotomic(4)));
  CHECK(!Field::prime(3)->same(*Field::prime(5)));
  CHECK(Field::cyclotomic(1)->same(*Field::rationals()));
  CHECK(Field::cyclotomic(8)->describe() == "Q(zeta_8)");
  CHECK(Field::prime_ext(3, 2)->describe() == "F_9=F_3(sqrt(2))");
}
