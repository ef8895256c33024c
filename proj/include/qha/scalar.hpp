#pragma once
#include <gmpxx.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qha {

class Field;
using FieldPtr = std::shared_ptr<const Field>;

enum class FieldKind { Rationals, NumberField, Prime, PrimeExt };

/* Exact coefficient fields.
 *
 * Supported: Q; Q[t]/(m(t)) for a monic irreducible m (the cyclotomic
 * factory tags the modulus so roots of unity print nicely); F_p for odd p;
 * F_p[t]/(t^2 - d) for a non-square d mod p.
 */
class Field : public std::enable_shared_from_this<Field> {
 public:
  FieldKind kind = FieldKind::Rationals;
  // NumberField modulus: t^deg + mod[deg-1] t^{deg-1} + ... + mod[0].
  std::vector<mpq_class> mod;
  unsigned cyc_m = 0;  // nonzero iff mod is the m-th cyclotomic polynomial
  long p = 0;          // Prime / PrimeExt characteristic
  long ext_d = 0;      // PrimeExt: t^2 = ext_d

  static FieldPtr rationals();
  static FieldPtr cyclotomic(unsigned m);
  static FieldPtr number_field(std::vector<mpq_class> monic);
  static FieldPtr prime(long p);
  static FieldPtr prime_ext(long p, long d);

  unsigned degree() const;
  long characteristic() const {
    return (kind == FieldKind::Prime || kind == FieldKind::PrimeExt) ? p : 0;
  }
  bool same(const Field& o) const;
  std::string describe() const;
};

// m-th cyclotomic polynomial over Q, ascending coefficients, monic.
std::vector<mpq_class> cyclotomic_poly(unsigned m);

/* One exact field element; always carries its field. */
class Scalar {
 public:
  FieldPtr F;
  std::vector<mpq_class> c;  // length F->degree(); prime kinds keep integer reps in [0,p)

  Scalar() = default;
  explicit Scalar(FieldPtr f);
  Scalar(FieldPtr f, long v);
  Scalar(FieldPtr f, const mpq_class& v);
  static Scalar gen(FieldPtr f);  // t, for extension fields

  bool is_zero() const;
  bool is_one() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);

  Scalar inv() const;
  Scalar pow(long e) const;  // negative e inverts

  // Rational content when the element lies in the prime field image.
  std::optional<mpq_class> as_rational() const;

  std::string str() const;

 private:
  void reduce();
};

// Square root inside the field, if one can be found.  Exhaustive for prime
// kinds; for Q exact; for Q[t]/(m) a candidate search adequate for the
// root-of-unity fields used here.
std::optional<Scalar> try_sqrt(const Scalar& a);

}  // namespace qha
