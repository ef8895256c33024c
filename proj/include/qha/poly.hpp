#pragma once
#include <map>
#include <vector>

#include "qha/scalar.hpp"

namespace qha {

/* Sparse polynomial in nvars variables over a fixed exact field.
 *
 * Keys are exponent vectors (all entries >= 0).  Variables are indexed
 * 0..nvars-1 and print as x1..xn.  Plain mul() treats all variables as
 * commuting; skew_mul() multiplies in the sign convention where two
 * distinct odd variables anticommute (odd squares are untouched).
 */
class Poly {
 public:
  FieldPtr F;
  int nvars = 0;
  std::map<std::vector<int>, Scalar> t;

  Poly() = default;
  Poly(FieldPtr f, int n) : F(std::move(f)), nvars(n) {}

  static Poly zero(FieldPtr f, int n) { return Poly(std::move(f), n); }
  static Poly constant(FieldPtr f, int n, const Scalar& s);
  static Poly one(FieldPtr f, int n) { return constant(f, n, Scalar(f, 1)); }
  static Poly var(FieldPtr f, int n, int i, int e = 1);

  bool is_zero() const { return t.empty(); }
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);

  Poly scale(const Scalar& s) const;

  // Super product: left factor *this, right factor o, with variable i odd
  // iff par[i] != 0.  Moving an odd power past a distinct odd power flips
  // the sign once per crossing pair.
  Poly skew_mul(const Poly& o, const std::vector<int>& par) const;

  // x_i -> sgn[i] * x_{pi[i]}.  par empty means all even; otherwise
  // reordering distinct odd variables contributes inversion signs.
  Poly subst(const std::vector<int>& pi, const std::vector<int>& sgn,
             const std::vector<int>& par = {}) const;

  // Exact division; throws std::domain_error when the division is inexact.
  Poly divide_exact(const Poly& d) const;

  Poly pow(int e) const;
  Scalar eval(const std::vector<Scalar>& xs) const;
  Scalar coeff(const std::vector<int>& e) const;
  int total_degree() const;  // -1 for the zero polynomial
  void add_term(const std::vector<int>& e, const Scalar& s);

  std::string str() const;
};

// Place a two-variable polynomial q(w, z) into an n-variable context:
// w -> x_va, z -> x_vb.
Poly inject2(const Poly& q, int nvars, int va, int vb);

// (f - s_a f) / (x_{a+1} - x_a) where s_a swaps x_a, x_{a+1}.
// Commutative variables only; the division is always exact.
Poly dd_plain(const Poly& f, int a);

// (f - sbar_a f) / (x_{a+1} + x_a) where sbar_a maps
// x_a -> -x_{a+1}, x_{a+1} -> -x_a.  Commutative variables only.
Poly dd_bar(const Poly& f, int a);

}  // namespace qha
