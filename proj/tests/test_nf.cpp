#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qha/nf.hpp"
#include "qha/skmodel.hpp"

using namespace qha;

static RCEl rc_word_product(RCEngine& E, const RCKey& k) {
  RCEl X = RCEl::idem(E, k.nu);
  std::vector<int> word = canonical_word(k.w);
  for (int i = int(word.size()) - 1; i >= 0; --i)
    X = RCEl::g_sigma(E, word[i]) * X;
  for (int p = E.n - 1; p >= 0; --p)
    if (k.mask >> p & 1) X = RCEl::g_c(E, p) * X;
  for (int p = 0; p < E.n; ++p)
    for (int e = 0; e < k.exps[p]; ++e) X = RCEl::g_y(E, p) * X;
  return X;
}

static REl r_word_product(REngine& E, const RKey& k) {
  REl X = REl::idem(E, k.nu);
  std::vector<int> word = canonical_word(k.w);
  for (int i = int(word.size()) - 1; i >= 0; --i)
    X = REl::g_tau(E, word[i]) * X;
  for (int p = E.n - 1; p >= 0; --p)
    for (int e = 0; e < k.exps[p]; ++e) X = REl::g_x(E, p) * X;
  return X;
}

TEST_CASE("rc relation audit over the doubled all odd datum") {
  FieldPtr F = Field::rationals();
  Doubled D = i_to_j(datum_a1_allodd(F));
  RCEngine E(D.jd, 3);
  Report rep = rc_relation_audit(E, 11);
  INFO(rep.str());
  CHECK(rep.ok());
}

TEST_CASE("rc relation audit over the doubled mixed datum") {
  FieldPtr F = Field::rationals();
  Doubled D = i_to_j(datum_a22_mixed(F));
  RCEngine E(D.jd, 3);
  Report rep = rc_relation_audit(E, 12);
  INFO(rep.str());
  CHECK(rep.ok());
}

TEST_CASE("rc relation audit with four strands") {
  FieldPtr F = Field::rationals();
  Doubled D = i_to_j(datum_a1_allodd(F));
  RCEngine E(D.jd, 4);
  Report rep = rc_relation_audit(E, 13);
  INFO(rep.str());
  CHECK(rep.ok());
}

TEST_CASE("r relation audit over the all odd datum") {
  FieldPtr F = Field::rationals();
  REngine E(datum_a1_allodd(F), 3);
  Report rep = r_relation_audit(E, 21);
  INFO(rep.str());
  CHECK(rep.ok());
}

TEST_CASE("r relation audit over the mixed datum") {
  FieldPtr F = Field::rationals();
  REngine E(datum_a22_mixed(F), 3);
  Report rep = r_relation_audit(E, 22);
  INFO(rep.str());
  CHECK(rep.ok());
}

TEST_CASE("r relation audit with four strands") {
  FieldPtr F = Field::rationals();
  REngine E(datum_a1_allodd(F), 4);
  Report rep = r_relation_audit(E, 23);
  INFO(rep.str());
  CHECK(rep.ok());
}

TEST_CASE("basis words normalize to themselves") {
  FieldPtr F = Field::rationals();
  std::mt19937_64 rng(20260822);
  Doubled D = i_to_j(datum_a22_mixed(F));
  RCEngine E(D.jd, 3);
  REngine R(datum_a22_mixed(F), 3);
  int n = 3;
  long nf = 6;
  for (int tr = 0; tr < 40; ++tr) {
    std::vector<int> e(n), nu(n);
    for (int p = 0; p < n; ++p) e[p] = int(rng() % 3);
    Perm w = perm_unrank(n, long(rng() % uint64_t(nf)));
    for (int p = 0; p < n; ++p) nu[p] = int(rng() % uint64_t(D.jd.m));
    uint32_t mask = uint32_t(rng()) & ((1u << n) - 1);
    RCKey k{e, mask, w, nu};
    CHECK(rc_word_product(E, k) ==
          RCEl::term(E, e, mask, w, nu, Scalar(F, 1)));
    std::vector<int> mu(n);
    for (int p = 0; p < n; ++p) mu[p] = int(rng() % uint64_t(R.rd.m));
    RKey rk{e, w, mu};
    CHECK(r_word_product(R, rk) == REl::term(R, e, w, mu, Scalar(F, 1)));
  }
}

TEST_CASE("products match the twisted group algebra model") {
  FieldPtr F = Field::rationals();
  std::mt19937_64 rng(73);
  for (RootDatum rd : {datum_a1_allodd(F), datum_a22_mixed(F)}) {
    Doubled D = i_to_j(rd);
    for (int n = 2; n <= 3; ++n) {
      RCEngine E(D.jd, n);
      SKAlg A(D.jd, n);
      long nf = n == 2 ? 2 : 6;
      auto rnd_key = [&]() {
        RCKey k;
        k.exps.resize(n);
        k.nu.resize(n);
        for (int p = 0; p < n; ++p) k.exps[p] = int(rng() % 2);
        k.mask = uint32_t(rng()) & ((1u << n) - 1);
        k.w = perm_unrank(n, long(rng() % uint64_t(nf)));
        for (int p = 0; p < n; ++p) k.nu[p] = int(rng() % uint64_t(D.jd.m));
        return k;
      };
      for (int tr = 0; tr < 60; ++tr) {
        RCKey k1 = rnd_key(), k2 = rnd_key();
        RCEl P = RCEl::term(E, k1.exps, k1.mask, k1.w, k1.nu, Scalar(F, 1)) *
                 RCEl::term(E, k2.exps, k2.mask, k2.w, k2.nu, Scalar(F, 1));
        SKElement lhs(A);
        for (const auto& [k, s] : P.t)
          lhs = lhs + nf_image(A, k.exps, k.mask, k.w, k.nu).scale(s);
        SKElement rhs = nf_image(A, k1.exps, k1.mask, k1.w, k1.nu) *
                        nf_image(A, k2.exps, k2.mask, k2.w, k2.nu);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("normal forms are independent exactly per distinct key") {
  FieldPtr F = Field::rationals();
  std::mt19937_64 rng(99);
  Doubled D = i_to_j(datum_a1_allodd(F));
  int n = 3;
  RCEngine E(D.jd, n);
  std::vector<RCEl> rows;
  std::set<RCKey> seen;
  for (int tr = 0; tr < 50; ++tr) {
    std::vector<int> e(n), nu(n);
    for (int p = 0; p < n; ++p) e[p] = int(rng() % 2);
    Perm w = perm_unrank(n, long(rng() % 6));
    for (int p = 0; p < n; ++p) nu[p] = int(rng() % uint64_t(D.jd.m));
    uint32_t mask = uint32_t(rng()) & ((1u << n) - 1);
    RCKey k{e, mask, w, nu};
    rows.push_back(rc_word_product(E, k));
    seen.insert(k);
  }
  // eliminate in ascending leading-key order
  std::map<RCKey, RCTerms> basis;
  for (const auto& r : rows) {
    RCTerms v = r.t;
    for (const auto& [lead, b] : basis) {
      auto it = v.find(lead);
      if (it == v.end()) continue;
      Scalar c = it->second / b.at(lead);
      for (const auto& [k, s] : b) {
        auto jt = v.find(k);
        Scalar upd = (jt == v.end() ? Scalar(F, 0) : jt->second) - c * s;
        if (upd.is_zero()) {
          if (jt != v.end()) v.erase(jt);
        } else {
          v[k] = upd;
        }
      }
    }
    if (!v.empty()) basis.emplace(v.begin()->first, v);
  }
  CHECK(basis.size() == seen.size());
}
