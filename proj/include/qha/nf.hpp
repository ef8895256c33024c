#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qha/perm.hpp"
#include "qha/rootdata.hpp"

namespace qha {

/* Rewriting engines for the two tower algebras.  Elements are scalar
 * combinations of basis monomials; products are computed by moving the
 * left factor through the right one with the defining relations, braid
 * corrections included.  Crossing words carry a fixed reduced word per
 * permutation (canonical_word); transports between reduced words follow
 * a breadth-first move path and collect the braid defects.
 */

struct RCKey {
  std::vector<int> exps;
  uint32_t mask = 0;
  Perm w;
  std::vector<int> nu;
  bool operator<(const RCKey& o) const;
  bool operator==(const RCKey& o) const {
    return exps == o.exps && mask == o.mask && w == o.w && nu == o.nu;
  }
};

using RCTerms = std::map<RCKey, Scalar>;

class RCEngine {
 public:
  JDatum jd;
  int n = 0;

  RCEngine(JDatum jd_, int n_);

  FieldPtr field() const { return jd.F; }
  std::vector<std::vector<int>> sectors() const;
  std::vector<int> cflip(uint32_t mask, std::vector<int> nu) const;
  std::vector<int> left_sector(const RCKey& k) const;

  const RCTerms& sigma_step(int b, const Perm& u, const std::vector<int>& mu);
  RCTerms letter_apply(int b, const RCTerms& E);
  RCTerms word_apply(const std::vector<int>& word, const RCTerms& E);

 private:
  RCTerms expand_reduced(const std::vector<int>& word,
                         const std::vector<int>& mu);
  std::map<std::tuple<int, Perm, std::vector<int>>, RCTerms> step_memo_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, RCTerms> word_memo_;
};

struct RCEl {
  RCEngine* E = nullptr;
  RCTerms t;

  RCEl() = default;
  explicit RCEl(RCEngine& eng) : E(&eng) {}

  static RCEl term(RCEngine& E, const std::vector<int>& exps, uint32_t mask,
                   const Perm& w, const std::vector<int>& nu,
                   const Scalar& s);
  static RCEl idem(RCEngine& E, const std::vector<int>& nu);
  static RCEl yv(RCEngine& E, int p, const std::vector<int>& nu);
  static RCEl cg(RCEngine& E, int p, const std::vector<int>& nu);
  static RCEl sigma(RCEngine& E, int a, const std::vector<int>& nu);
  static RCEl g_y(RCEngine& E, int p);
  static RCEl g_c(RCEngine& E, int p);
  static RCEl g_sigma(RCEngine& E, int a);

  bool is_zero() const { return t.empty(); }
  bool operator==(const RCEl& o) const { return t == o.t; }
  bool operator!=(const RCEl& o) const { return !(*this == o); }

  RCEl operator-() const;
  RCEl operator+(const RCEl& o) const;
  RCEl operator-(const RCEl& o) const;
  RCEl operator*(const RCEl& o) const;
  RCEl scale(const Scalar& s) const;
  void add_term(const RCKey& k, const Scalar& s);

  std::string str() const;
};

struct RKey {
  std::vector<int> exps;
  Perm w;
  std::vector<int> nu;
  bool operator<(const RKey& o) const;
  bool operator==(const RKey& o) const {
    return exps == o.exps && w == o.w && nu == o.nu;
  }
};

using RTerms = std::map<RKey, Scalar>;

class REngine {
 public:
  RootDatum rd;
  int n = 0;

  REngine(RootDatum rd_, int n_);

  FieldPtr field() const { return rd.F; }
  std::vector<std::vector<int>> sectors() const;
  std::vector<int> left_sector(const RKey& k) const;
  std::vector<int> sector_par(const std::vector<int>& rho) const;

  const RTerms& tau_step(int b, const Perm& u, const std::vector<int>& mu);
  RTerms letter_apply(int b, const RTerms& E);
  RTerms word_apply(const std::vector<int>& word, const RTerms& E);
  RTerms leftmul_mono(const std::vector<int>& mono, const RTerms& E);

 private:
  RTerms cross_mono(int b, const std::vector<int>& mono, const Perm& w,
                    const std::vector<int>& nu);
  RTerms expand_reduced(const std::vector<int>& word,
                        const std::vector<int>& mu);
  std::map<std::tuple<int, Perm, std::vector<int>>, RTerms> step_memo_;
  std::map<std::pair<std::vector<int>, std::vector<int>>, RTerms> word_memo_;
};

struct REl {
  REngine* E = nullptr;
  RTerms t;

  REl() = default;
  explicit REl(REngine& eng) : E(&eng) {}

  static REl term(REngine& E, const std::vector<int>& exps, const Perm& w,
                  const std::vector<int>& nu, const Scalar& s);
  static REl idem(REngine& E, const std::vector<int>& nu);
  static REl xv(REngine& E, int p, const std::vector<int>& nu);
  static REl tau(REngine& E, int a, const std::vector<int>& nu);
  static REl g_x(REngine& E, int p);
  static REl g_tau(REngine& E, int a);

  bool is_zero() const { return t.empty(); }
  bool operator==(const REl& o) const { return t == o.t; }
  bool operator!=(const REl& o) const { return !(*this == o); }

  REl operator-() const;
  REl operator+(const REl& o) const;
  REl operator-(const REl& o) const;
  REl operator*(const REl& o) const;
  REl scale(const Scalar& s) const;
  void add_term(const RKey& k, const Scalar& s);

  std::string str() const;
};

// Every defining relation checked as an element identity, plus seeded
// associativity probes.
Report rc_relation_audit(RCEngine& E, uint64_t seed = 1);
Report r_relation_audit(REngine& E, uint64_t seed = 1);

}  // namespace qha
