#pragma once

#include <map>
#include <string>
#include <vector>

#include "qha/perm.hpp"
#include "qha/poly.hpp"
#include "qha/rootdata.hpp"

namespace qha {

// Quotient of two polynomials.  No gcd normalization is attempted;
// equality always cross-multiplies.  reduce() strips common monomial
// content and cancels the denominator when the division happens to be
// exact, which keeps the iterated products here small enough.
struct Frac {
  Poly num, den;

  Frac() = default;
  explicit Frac(const Poly& p);
  Frac(const Poly& n, const Poly& d);

  static Frac constant(FieldPtr f, int n, const Scalar& s);
  static Frac one(FieldPtr f, int n) { return constant(f, n, Scalar(f, 1)); }
  static Frac zero(FieldPtr f, int n);
  static Frac var(FieldPtr f, int n, int i, int e = 1);

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const Frac& o) const;
  bool operator!=(const Frac& o) const { return !(*this == o); }

  Frac operator-() const;
  Frac operator+(const Frac& o) const;
  Frac operator-(const Frac& o) const;
  Frac operator*(const Frac& o) const;
  Frac inv() const;
  Frac scale(const Scalar& s) const;

  // Substitute variable i by vals[i] everywhere.
  Frac subst_vals(const std::vector<Frac>& vals) const;

  void reduce();
  std::string str() const;
};

// Evaluate p with variable i replaced by vals[i].
Frac frac_eval(const Poly& p, const std::vector<Frac>& vals);

// Shared ambient data for the two affine superalgebras.  The quantum
// flavour has invertible generators X_p and the quadratic parameter
// xi = q - 1/q; the degenerate flavour has polynomial generators x_p
// and xi = 0.
struct AffWorld {
  FieldPtr F;
  int n = 0;
  bool degenerate = false;
  Scalar q;

  static AffWorld quantum(FieldPtr F, int n, const Scalar& q);
  static AffWorld sergeev(FieldPtr F, int n);

  Scalar xi() const;

  // s_a followed by negation (degenerate) or inversion (quantum) of the
  // two affected variables.
  std::vector<Frac> sbar_vals(int a) const;
  std::vector<Frac> s_vals(int a) const;
  // Conjugation by the clifford monomial C^mask.
  std::vector<Frac> cmask_vals(uint32_t mask) const;

  // Two-variable kernel polynomial in the projected coordinates.
  Poly kernel() const;
  // The square of the intertwiner at position a, as a function.
  Frac fsquare(int a) const;
};

struct AffKey {
  uint32_t mask = 0;
  Perm w;

  bool operator<(const AffKey& o) const {
    if (mask != o.mask) return mask < o.mask;
    return w < o.w;
  }
};

// Element in the normal form sum of f(X) C^mask T_w with f a fraction.
struct AffEl {
  const AffWorld* W = nullptr;
  std::map<AffKey, Frac> t;

  AffEl() = default;
  explicit AffEl(const AffWorld& world) : W(&world) {}

  static AffEl from_frac(const AffWorld& W, const Frac& f);
  static AffEl unit(const AffWorld& W);
  static AffEl gen_x(const AffWorld& W, int p, int e = 1);
  static AffEl gen_c(const AffWorld& W, int p);
  static AffEl gen_t(const AffWorld& W, int a);
  static AffEl intertwiner(const AffWorld& W, int a);

  bool is_zero() const { return t.empty(); }
  bool operator==(const AffEl& o) const;
  bool operator!=(const AffEl& o) const { return !(*this == o); }

  AffEl operator-() const;
  AffEl operator+(const AffEl& o) const;
  AffEl operator-(const AffEl& o) const;
  AffEl operator*(const AffEl& o) const;
  AffEl scale(const Scalar& s) const;
  void add_term(uint32_t mask, const Perm& w, const Frac& f);

  std::string str() const;
};

// Check every defining relation and the intertwiner properties on the
// normal-form implementation, plus seeded associativity probes.
Report affine_relation_audit(const AffWorld& W, uint64_t seed = 1);

}  // namespace qha
