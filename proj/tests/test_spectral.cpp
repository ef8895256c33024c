#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qha/spectral.hpp"

using namespace qha;

static bool has_item(const Report& rep, const std::string& name, bool pass) {
  for (const auto& it : rep.items)
    if (it.name == name) return it.pass == pass;
  return false;
}

TEST_CASE("quantum components at a sixth root") {
  FieldPtr F = Field::cyclotomic(6);
  Scalar q = Scalar::gen(F);
  SpecWorld W = SpecWorld::hecke_clifford(F, q);

  Diagram gen = spectral_component(W, Scalar(F, 3), 8);
  CHECK(gen.label == "A(1)_2");
  CHECK(gen.nodes.size() == 3);
  CHECK(gen.edges.size() == 3);
  for (const auto& v : gen.nodes) CHECK(v.norm == 2);
  CHECK(gen.check(W).ok());

  Diagram d1 = spectral_component(W, Scalar(F, 1), 8);
  CHECK(d1.label == "A(2)_2");
  REQUIRE(d1.nodes.size() == 2);
  CHECK(d1.nodes[0].w == Scalar(F, 4));
  CHECK(d1.nodes[0].norm == 4);
  CHECK(d1.nodes[1].w == Scalar(F, -2));
  CHECK(d1.nodes[1].norm == 1);
  CHECK(d1.gcm() == std::vector<std::vector<int>>{{2, -1}, {-4, 2}});
  CHECK(d1.check(W).ok());

  Diagram dq = spectral_component(W, q, 8);
  CHECK(dq.label == "A(2)_2");
  REQUIRE(dq.nodes.size() == 2);
  CHECK(dq.nodes[0].w == Scalar(F, 2));
  CHECK(dq.nodes[0].norm == 1);
  CHECK(dq.nodes[1].w == Scalar(F, -4));
  CHECK(dq.nodes[1].norm == 4);
  CHECK(dq.gcm() == std::vector<std::vector<int>>{{2, -4}, {-1, 2}});
  CHECK(dq.check(W).ok());
}

TEST_CASE("quantum components at an eighth root") {
  FieldPtr F = Field::cyclotomic(8);
  Scalar q = Scalar::gen(F);
  SpecWorld W = SpecWorld::hecke_clifford(F, q);

  Diagram gen = spectral_component(W, Scalar(F, 3), 8);
  CHECK(gen.label == "A(1)_3");
  CHECK(gen.nodes.size() == 4);
  CHECK(gen.check(W).ok());

  Diagram d1 = spectral_component(W, Scalar(F, 1), 8);
  CHECK(d1.label == "C(1)_2");
  REQUIRE(d1.nodes.size() == 3);
  Scalar g1 = Scalar(F, 4) / (q + q.inv());
  CHECK(d1.nodes[0].w == g1);
  CHECK(d1.nodes[1].w == Scalar(F, 0));
  CHECK(d1.nodes[2].w == -g1);
  CHECK(d1.nodes[0].norm == 4);
  CHECK(d1.nodes[1].norm == 2);
  CHECK(d1.nodes[2].norm == 4);
  CHECK(d1.gcm() ==
        std::vector<std::vector<int>>{{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}});
  CHECK(d1.check(W).ok());

  Diagram dq = spectral_component(W, q, 8);
  CHECK(dq.label == "D(2)_2");
  REQUIRE(dq.nodes.size() == 2);
  CHECK(dq.nodes[0].w == Scalar(F, 2));
  CHECK(dq.nodes[1].w == Scalar(F, -2));
  CHECK(dq.nodes[0].norm == 1);
  CHECK(dq.nodes[1].norm == 1);
  CHECK(dq.nodes[0].lam == q);
  CHECK(dq.nodes[1].lam == q.pow(3));
  CHECK(dq.gcm() == std::vector<std::vector<int>>{{2, -2}, {-2, 2}});
  CHECK(dq.check(W).ok());
}

TEST_CASE("quantum components at tenth and twelfth roots") {
  {
    FieldPtr F = Field::cyclotomic(10);
    Scalar q = Scalar::gen(F);
    SpecWorld W = SpecWorld::hecke_clifford(F, q);
    CHECK(spectral_component(W, Scalar(F, 3), 12).label == "A(1)_4");

    Diagram d1 = spectral_component(W, Scalar(F, 1), 12);
    CHECK(d1.label == "A(2)_4");
    REQUIRE(d1.nodes.size() == 3);
    CHECK(d1.nodes[0].norm == 4);
    CHECK(d1.nodes[1].norm == 2);
    CHECK(d1.nodes[2].norm == 1);
    CHECK(d1.nodes[2].w == Scalar(F, -2));
    CHECK(d1.check(W).ok());

    Diagram dq = spectral_component(W, q, 12);
    CHECK(dq.label == "A(2)_4");
    REQUIRE(dq.nodes.size() == 3);
    CHECK(dq.nodes[0].norm == 1);
    CHECK(dq.nodes[0].w == Scalar(F, 2));
    CHECK(dq.nodes[2].norm == 4);
    CHECK(dq.check(W).ok());
  }
  {
    FieldPtr F = Field::cyclotomic(12);
    Scalar q = Scalar::gen(F);
    SpecWorld W = SpecWorld::hecke_clifford(F, q);
    CHECK(spectral_component(W, Scalar(F, 3), 12).label == "A(1)_5");

    Diagram d1 = spectral_component(W, Scalar(F, 1), 12);
    CHECK(d1.label == "C(1)_3");
    REQUIRE(d1.nodes.size() == 4);
    CHECK(d1.nodes[0].norm == 4);
    CHECK(d1.nodes[3].norm == 4);
    CHECK(d1.check(W).ok());

    Diagram dq = spectral_component(W, q, 12);
    CHECK(dq.label == "D(2)_3");
    REQUIRE(dq.nodes.size() == 3);
    CHECK(dq.nodes[0].w == Scalar(F, 2));
    CHECK(dq.nodes[1].w == Scalar(F, 0));
    CHECK(dq.nodes[2].w == Scalar(F, -2));
    CHECK(dq.nodes[0].norm == 1);
    CHECK(dq.nodes[1].norm == 2);
    CHECK(dq.nodes[2].norm == 1);
    CHECK(dq.check(W).ok());
  }
}

TEST_CASE("degenerate components in small characteristic") {
  {
    FieldPtr F = Field::prime_ext(3, 2);
    SpecWorld W = SpecWorld::sergeev(F);
    Diagram gen = spectral_component(W, Scalar::gen(F), 8);
    CHECK(gen.label == "A(1)_2");
    CHECK(gen.nodes.size() == 3);
    CHECK(gen.check(W).ok());

    Diagram dh = spectral_component(W, Scalar(F, 2), 8);
    CHECK(dh.label == "A(2)_2");
    REQUIRE(dh.nodes.size() == 2);
    CHECK(dh.nodes[0].w == Scalar(F, 0));
    CHECK(dh.nodes[0].norm == 1);
    CHECK(dh.nodes[1].w == Scalar(F, 2));
    CHECK(dh.nodes[1].norm == 4);
    CHECK(dh.nodes[1].lam == Scalar(F, 0));
    CHECK(dh.gcm() == std::vector<std::vector<int>>{{2, -4}, {-1, 2}});
    CHECK(dh.check(W).ok());
  }
  {
    FieldPtr F = Field::prime_ext(5, 2);
    SpecWorld W = SpecWorld::sergeev(F);
    CHECK(spectral_component(W, Scalar::gen(F), 8).label == "A(1)_4");

    Diagram dh = spectral_component(W, Scalar(F, mpq_class(1, 2)), 8);
    CHECK(dh.label == "A(2)_4");
    REQUIRE(dh.nodes.size() == 3);
    CHECK(dh.nodes[0].w == Scalar(F, 0));
    CHECK(dh.nodes[1].w == Scalar(F, 2));
    CHECK(dh.nodes[2].w == Scalar(F, 1));
    CHECK(dh.nodes[0].norm == 1);
    CHECK(dh.nodes[1].norm == 2);
    CHECK(dh.nodes[2].norm == 4);
    CHECK(dh.check(W).ok());
  }
  {
    FieldPtr F = Field::prime_ext(7, 3);
    SpecWorld W = SpecWorld::sergeev(F);
    CHECK(spectral_component(W, Scalar::gen(F), 10).label == "A(1)_6");

    Diagram dh = spectral_component(W, Scalar(F, mpq_class(1, 2)), 10);
    CHECK(dh.label == "A(2)_6");
    REQUIRE(dh.nodes.size() == 4);
    CHECK(dh.nodes[0].w == Scalar(F, 0));
    CHECK(dh.nodes[1].w == Scalar(F, 2));
    CHECK(dh.nodes[2].w == Scalar(F, 6));
    CHECK(dh.nodes[3].w == Scalar(F, 5));
    CHECK(dh.nodes[0].norm == 1);
    CHECK(dh.nodes[3].norm == 4);
    CHECK(dh.check(W).ok());
  }
}

TEST_CASE("degenerate windows over the rationals") {
  FieldPtr F = Field::rationals();
  SpecWorld W = SpecWorld::sergeev(F);

  Diagram a = spectral_component(W, Scalar(F, mpq_class(1, 3)), 5);
  CHECK(a.label == "A_window");
  CHECK(a.nodes.size() == 5);
  CHECK(a.edges.size() == 4);
  CHECK(a.check(W).ok());

  Diagram b = spectral_component(W, Scalar(F, mpq_class(1, 2)), 5);
  CHECK(b.label == "B_window");
  REQUIRE(b.nodes.size() == 5);
  CHECK(b.nodes[0].w == Scalar(F, 0));
  CHECK(b.nodes[0].norm == 1);
  CHECK(!b.nodes[0].frontier);
  CHECK(b.nodes[4].frontier);
  CHECK(b.check(W).ok());

  Diagram c = spectral_component(W, Scalar(F, 0), 5);
  CHECK(c.label == "C_window");
  REQUIRE(c.nodes.size() == 5);
  CHECK(c.nodes[0].w == Scalar(F, mpq_class(-1, 4)));
  CHECK(c.nodes[0].norm == 4);
  CHECK(!c.nodes[0].frontier);
  CHECK(c.nodes[4].frontier);
  CHECK(c.check(W).ok());
}

TEST_CASE("spectral datum for the odd two node diagram") {
  SpecDatum S = datum_dsq2();
  FieldPtr F = S.W.F;
  Scalar q = S.W.q;

  CHECK(S.diag.label == "D(2)_2");
  CHECK(S.diag.nodes[0].lam == q);
  CHECK(S.diag.nodes[1].lam == q.pow(3));
  REQUIRE(S.pts.size() == 2);
  CHECK(S.pts[0].X == Scalar(F, 1));
  CHECK(S.pts[0].node == 0);
  CHECK(S.pts[0].cpartner == 0);
  CHECK(S.pts[0].kind == 1);
  CHECK(S.pts[1].X == Scalar(F, -1));
  CHECK(S.pts[1].node == 1);
  CHECK(S.pts[1].cpartner == 1);
  CHECK(S.pts[1].kind == 1);

  JDatum jd = S.jdatum();
  CHECK(jd.m == 2);
  CHECK(jd.cmap == std::vector<int>{0, 1});
  CHECK(jd.eps == std::vector<int>{0, 0});
  CHECK(jd.jplus == std::vector<int>{0, 1});
  CHECK(jd.pr == std::vector<int>{0, 1});
  Poly expect = Poly::var(F, 2, 0, 2) - Poly::var(F, 2, 1, 2);
  CHECK(jd.tQ[0][1] == expect);
  CHECK(jd.tQ[1][0] == expect.scale(Scalar(F, -1)));
  CHECK(jd.validate().ok());
  CHECK(S.validate().ok());
}

TEST_CASE("spectral datum in characteristic three") {
  SpecDatum S = datum_sg_p3();
  FieldPtr F = S.W.F;
  Scalar r = Scalar::gen(F);

  CHECK(S.diag.label == "A(2)_2");
  CHECK((r * r) == Scalar(F, 2));
  REQUIRE(S.pts.size() == 3);
  CHECK(S.pts[0].X == Scalar(F, 0));
  CHECK(S.pts[0].kind == 1);
  CHECK(S.pts[1].X == r);
  CHECK(S.pts[1].kind == 2);
  CHECK(S.pts[2].X == -r);
  CHECK(S.pts[2].kind == 2);

  JDatum jd = S.jdatum();
  CHECK(jd.m == 3);
  CHECK(jd.cmap == std::vector<int>{0, 2, 1});
  CHECK(jd.eps == std::vector<int>{0, 0, 1});
  CHECK(jd.jplus == std::vector<int>{0, 1});
  CHECK(jd.pr == std::vector<int>{0, 1, 1});
  Poly u4 = Poly::var(F, 2, 0, 4);
  Poly v = Poly::var(F, 2, 1, 1);
  CHECK(jd.tQ[0][1] == u4 - v);
  CHECK(jd.tQ[0][2] == u4 + v);
  CHECK(jd.tQ[1][2].is_zero());
  CHECK(jd.validate().ok());
  CHECK(S.validate().ok());
}

TEST_CASE("broken spectral data are rejected") {
  {
    SpecDatum S = datum_sg_p3();
    S.diag.nodes[0].lam = Scalar(S.W.F, mpq_class(-1, 2));
    Report rep = S.validate();
    CHECK(!rep.ok());
    CHECK(has_item(rep, "norm-1 sections are normalized", false));
    CHECK(has_item(rep, "sections project to their nodes", true));
  }
  {
    SpecDatum S = datum_sg_p3();
    S.pts[1].cpartner = 1;
    Report rep = S.validate();
    CHECK(!rep.ok());
    CHECK(has_item(rep, "cpartner is the point involution", false));
  }
  {
    SpecDatum S = datum_dsq2();
    S.diag.edges.clear();
    Report rep = S.validate();
    CHECK(!rep.ok());
    CHECK(has_item(rep, "K stays nonzero off the edges", false));
  }
}
