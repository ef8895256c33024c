#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qha/bridge.hpp"

using namespace qha;

TEST_CASE("standard gamma satisfies the sign conditions") {
  FieldPtr F = Field::rationals();
  for (RootDatum rd : {datum_a1_allodd(F), datum_a22_mixed(F)}) {
    GammaChoice gc = GammaChoice::standard(rd);
    Report rep = gc.validate(rd);
    INFO(rep.str());
    CHECK(rep.ok());
  }
  RootDatum rd = datum_a1_allodd(F);
  GammaChoice gc = GammaChoice::standard(rd);
  gc.g[0][0] = Scalar(F, 1);
  CHECK_FALSE(gc.validate(rd).ok());
}

TEST_CASE("height two blocks verify over the all odd datum") {
  FieldPtr F = Field::rationals();
  Bridge br(datum_a1_allodd(F), 2);
  for (const auto& B : br.blocks()) {
    Report rep = br.verify(B, 2);
    INFO(rep.str());
    CHECK(rep.ok());
  }
}

TEST_CASE("height two blocks verify over the mixed datum") {
  FieldPtr F = Field::rationals();
  Bridge br(datum_a22_mixed(F), 2);
  for (const auto& B : br.blocks()) {
    Report rep = br.verify(B, 2);
    INFO(rep.str());
    CHECK(rep.ok());
  }
}

TEST_CASE("height three blocks verify over the all odd datum") {
  FieldPtr F = Field::rationals();
  Bridge br(datum_a1_allodd(F), 3);
  for (const auto& B : br.blocks()) {
    Report rep = br.verify(B, 3);
    INFO(rep.str());
    CHECK(rep.ok());
  }
}

TEST_CASE("height three blocks verify over the mixed datum") {
  FieldPtr F = Field::rationals();
  Bridge br(datum_a22_mixed(F), 3);
  for (const auto& B : br.blocks()) {
    Report rep = br.verify(B, 3);
    INFO(rep.str());
    CHECK(rep.ok());
  }
}

TEST_CASE("every single gamma perturbation breaks a relation") {
  FieldPtr F = Field::rationals();
  for (RootDatum rd : {datum_a1_allodd(F), datum_a22_mixed(F)}) {
    for (int i = 0; i < rd.m; ++i)
      for (int j = 0; j < rd.m; ++j) {
        GammaChoice gc = GammaChoice::standard(rd);
        gc.g[i][j] = gc.g[i][j] * Scalar(F, 2);
        CHECK_FALSE(gc.validate(rd).ok());
        Bridge br(rd, 2, gc);
        Report rep = br.verify_all(1);
        INFO("entry ", i, " ", j, "\n", rep.str());
        CHECK_FALSE(rep.ok());
      }
  }
}

TEST_CASE("push is multiplicative on the vertex factor") {
  FieldPtr F = Field::rationals();
  std::mt19937_64 rng(20260822);
  for (RootDatum rd : {datum_a1_allodd(F), datum_a22_mixed(F)}) {
    for (int n : {2, 3}) {
      Bridge br(rd, n);
      REngine& R = br.left();
      auto rand_key = [&] {
        RKey k;
        k.exps.resize(n);
        for (int p = 0; p < n; ++p) k.exps[p] = int(rng() % 2);
        long nf = 1;
        for (int t = 2; t <= n; ++t) nf *= t;
        k.w = perm_unrank(n, long(rng() % nf));
        k.nu.resize(n);
        for (int p = 0; p < n; ++p) k.nu[p] = int(rng() % rd.m);
        return k;
      };
      int trials = n == 2 ? 20 : 8;
      for (int t = 0; t < trials; ++t) {
        RKey k1 = rand_key(), k2 = rand_key();
        REl z = REl::term(R, k1.exps, k1.w, k1.nu, Scalar(F, 1)) *
                REl::term(R, k2.exps, k2.w, k2.nu, Scalar(F, 1));
        RCEl lhs = br.forward(k1.exps, k1.w, k1.nu, 0) *
                   br.forward(k2.exps, k2.w, k2.nu, 0);
        CHECK(lhs == br.push(z));
      }
    }
  }
}
