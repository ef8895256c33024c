#pragma once
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qha/perm.hpp"
#include "qha/poly.hpp"
#include "qha/rootdata.hpp"

namespace qha {

/* Rational function in y_0..y_{n-1} whose denominator is a product of
 * atoms (y_a - y_b) and (y_a + y_b) with a < b.  den maps {a, b, kind}
 * to a positive exponent; kind 0 is the difference, kind 1 the sum. */
class RatFn {
 public:
  FieldPtr F;
  int n = 0;
  Poly num;
  std::map<std::array<int, 3>, int> den;

  RatFn() = default;
  RatFn(FieldPtr f, int n_);
  static RatFn from_poly(const Poly& p);
  static RatFn atom_inv(FieldPtr f, int n, int a, int b, int kind, int e = 1);

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const RatFn& o) const;
  bool operator!=(const RatFn& o) const { return !(*this == o); }

  RatFn operator-() const;
  RatFn operator+(const RatFn& o) const;
  RatFn operator-(const RatFn& o) const;
  RatFn operator*(const RatFn& o) const;
  RatFn scale(const Scalar& s) const;

  // y_i -> sgn[i] * y_i
  RatFn subst_signs(const std::vector<int>& sgn) const;
  // y_i -> y_{w[i]}
  RatFn subst_perm(const Perm& w) const;

  Poly den_poly() const;
  void reduce();
  std::string str() const;
};

struct SKKey {
  uint32_t mask = 0;
  Perm w;
  std::vector<int> nu;
  bool operator<(const SKKey& o) const;
};

/* Localized model: elements are sums  a(y) c^mask ts_w e(nu)  with
 * rational coefficients.  The ts_w span a twisted copy of the symmetric
 * group; crossing a descent inserts the pair function R for the labels
 * to the left of the crossing. */
class SKAlg {
 public:
  JDatum jd;
  int n = 0;

  SKAlg(JDatum d, int n_) : jd(std::move(d)), n(n_) {}
  FieldPtr field() const { return jd.F; }

  std::vector<int> cflip(uint32_t mask, std::vector<int> nu) const;
  RatFn pairR(int a, int b, int ja, int jb) const;
  std::vector<std::vector<int>> sectors() const;  // all of J^n
};

class SKElement {
 public:
  const SKAlg* A = nullptr;
  std::map<SKKey, RatFn> t;

  SKElement() = default;
  explicit SKElement(const SKAlg& alg) : A(&alg) {}

  static SKElement term(const SKAlg& A, const RatFn& a, uint32_t mask,
                        const Perm& w, std::vector<int> nu);
  static SKElement idem(const SKAlg& A, std::vector<int> nu);
  static SKElement yv(const SKAlg& A, int p, std::vector<int> nu);
  static SKElement cg(const SKAlg& A, int p, std::vector<int> nu);
  static SKElement sigma(const SKAlg& A, int a, std::vector<int> nu);

  // generators summed over every sector
  static SKElement g_y(const SKAlg& A, int p);
  static SKElement g_c(const SKAlg& A, int p);
  static SKElement g_sigma(const SKAlg& A, int a);

  std::vector<int> left_sector(const SKKey& k) const;

  bool is_zero() const { return t.empty(); }
  bool operator==(const SKElement& o) const;
  bool operator!=(const SKElement& o) const { return !(*this == o); }

  SKElement operator-() const;
  SKElement operator+(const SKElement& o) const;
  SKElement operator-(const SKElement& o) const;
  SKElement operator*(const SKElement& o) const;
  SKElement scale(const Scalar& s) const;
  void add_term(uint32_t mask, const Perm& w, const std::vector<int>& nu,
                const RatFn& a);

  std::string str() const;
};

// f_{a,b} summed over every sector, a != b.
SKElement fpair(const SKAlg& A, int a, int b);

// Image of the monomial y^exps c^mask sigma_w e(nu).
SKElement nf_image(const SKAlg& A, const std::vector<int>& exps, uint32_t mask,
                   const Perm& w, const std::vector<int>& nu);

// Checks every defining relation of the superalgebra on the model's
// generator images, across all sectors.
Report sk_relation_audit(const SKAlg& A);

}  // namespace qha
