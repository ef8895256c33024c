#pragma once
#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qha/poly.hpp"

namespace qha {

struct CheckItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct Report {
  std::vector<CheckItem> items;
  void add(const std::string& name, bool pass, const std::string& detail = "");
  bool ok() const;
  std::string str() const;
};

/* Pairing data behind the gradings: diag[i] = (alpha_i, alpha_i),
 * off[i][j] = (alpha_i, alpha_j). */
struct GradingData {
  std::vector<int> diag;
  std::vector<std::vector<int>> off;
};

/* Vertex set I = {0..m-1} with parities and a polynomial matrix Q.
 * Q[i][j] lives in two variables (w, z); w-exponents are even when i is
 * odd, z-exponents are even when j is odd, Q[i][j](w,z) = Q[j][i](z,w),
 * and the diagonal vanishes. */
struct RootDatum {
  FieldPtr F;
  int m = 0;
  std::vector<int> par;
  std::vector<std::vector<Poly>> Q;
  std::optional<GradingData> grading;

  Report validate() const;
};

/* Label set J = {0..m-1} with involution cmap and matrix tQ in commuting
 * variables (u, v).  jplus lists one label per orbit (the least index);
 * eps is 0 exactly on jplus and flips across non-trivial orbits; pr tags
 * orbits (the originating vertex when derived from a RootDatum). */
struct JDatum {
  FieldPtr F;
  int m = 0;
  std::vector<int> cmap;
  std::vector<std::vector<Poly>> tQ;
  std::vector<int> jplus;
  std::vector<int> eps;
  std::vector<int> pr;
  std::optional<GradingData> grading;

  bool fixed(int j) const { return cmap[j] == j; }
  int parity(int j) const { return fixed(j) ? 1 : 0; }
  Report validate() const;
};

/* Symmetrizable Cartan matrix with vertex parities; rows at odd vertices
 * are even.  t holds the free coefficients keyed (i, j, r, s); entries not
 * present default to 1.  Symmetric pairs (i,j,r,s)/(j,i,s,r) must agree. */
struct CartanSeed {
  int m = 0;
  std::vector<std::vector<int>> A;
  std::vector<int> par;
  std::map<std::array<int, 4>, Scalar> t;

  Report validate() const;
};

// Admissible exponent pairs for the (i, j) entry of a valid seed.
std::vector<std::pair<int, int>> support_set(const CartanSeed& cs, int i, int j);

// Build the polynomial matrix (and grading) from a seed; throws
// std::invalid_argument when the seed fails validation.
RootDatum cartan_to_Q(FieldPtr F, const CartanSeed& cs);

/* Doubling: J gets one label (i,0) per odd vertex and two labels (i,0),
 * (i,1) per even vertex; the involution flips the second component. */
struct Doubled {
  JDatum jd;
  std::vector<int> ivert;   // label -> vertex
  std::vector<int> epsbit;  // label -> second component
  std::vector<std::array<int, 2>> jlab_;
  int jlab(int i, int e) const { return jlab_[i][e]; }
};

Doubled i_to_j(const RootDatum& rd);

// Inverse of i_to_j up to relabeling; records consistency checks in rep.
RootDatum j_to_i(const JDatum& jd, Report* rep = nullptr);

// Frozen data sets.
RootDatum datum_a1_allodd(FieldPtr F);
RootDatum datum_a22_mixed(FieldPtr F);
RootDatum datum_a1_even(FieldPtr F, const Scalar& a);

}  // namespace qha
