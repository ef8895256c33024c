#pragma once
#include <optional>
#include <vector>

#include "qha/scalar.hpp"

namespace qha {

// Truncated power series in one variable t, coefficients of t^0 .. t^(K-1).
// Binary operations truncate to the smaller of the two orders.
struct Ser1 {
  FieldPtr F;
  int K = 0;
  std::vector<Scalar> c;

  Ser1() = default;
  Ser1(FieldPtr f, int K_);
  static Ser1 constant(FieldPtr f, int K, const Scalar& s);
  static Ser1 one(FieldPtr f, int K) { return constant(f, K, Scalar(f, 1)); }
  static Ser1 t(FieldPtr f, int K);

  Scalar coeff(int i) const;
  void set(int i, const Scalar& s);
  bool is_zero() const;
  int valuation() const;  // K when zero to this order
  Ser1 trunc(int K2) const;

  Ser1 operator-() const;
  Ser1 operator+(const Ser1& o) const;
  Ser1 operator-(const Ser1& o) const;
  Ser1 operator*(const Ser1& o) const;
  Ser1 scale(const Scalar& s) const;
  bool operator==(const Ser1& o) const;
  bool operator!=(const Ser1& o) const { return !(*this == o); }

  Ser1 shift(int k) const;    // multiply by t^k, k >= 0, order kept
  Ser1 unshift(int m) const;  // divide by t^m, valuation >= m required, order drops by m
  Ser1 inv() const;           // constant term must be a unit
  Ser1 divide_by(const Ser1& d) const;  // exact in k[[t]], order drops by val(d)
  Ser1 compose(const Ser1& g) const;    // g must have valuation >= 1
  Ser1 derivative() const;
  // Solve x^2 = this, constant term root0 given, this a unit.
  Ser1 sqrt_unit(const Scalar& root0) const;

  std::string str() const;
};

// Solve x^2 - b x + c = 0 with x(0) = x0; needs 2*x0 - b(0) to be a unit.
Ser1 newton_quadratic(const Ser1& b, const Ser1& c, const Scalar& x0);

// Truncated power series in t1, t2 modulo total degree K.
struct Ser2 {
  FieldPtr F;
  int K = 0;
  std::vector<Scalar> c;  // degree block d at offset d(d+1)/2, entry i = coeff of t1^i t2^(d-i)

  Ser2() = default;
  Ser2(FieldPtr f, int K_);
  static Ser2 constant(FieldPtr f, int K, const Scalar& s);
  static Ser2 one(FieldPtr f, int K) { return constant(f, K, Scalar(f, 1)); }
  static Ser2 var(FieldPtr f, int K, int slot);
  static Ser2 from1(const Ser1& f, int slot, int K);

  Scalar coeff(int i, int j) const;
  void set(int i, int j, const Scalar& s);
  bool is_zero() const;
  int valuation() const;
  Ser2 trunc(int K2) const;

  Ser2 operator-() const;
  Ser2 operator+(const Ser2& o) const;
  Ser2 operator-(const Ser2& o) const;
  Ser2 operator*(const Ser2& o) const;
  Ser2 scale(const Scalar& s) const;
  bool operator==(const Ser2& o) const;
  bool operator!=(const Ser2& o) const { return !(*this == o); }

  Ser2 swapv() const;
  Ser1 diag(int sign2 = 1) const;              // t1 = t, t2 = sign2 * t
  Ser2 compose_var(int slot, const Ser1& g) const;  // t_slot <- g(t_slot), val(g) >= 1
  Ser2 inv() const;
  // Exact division with certificate: nullopt when the numerator is not a
  // multiple of d through the working order. Result order drops by val(d).
  std::optional<Ser2> divide(const Ser2& d) const;
  Ser2 sqrt_unit(const Scalar& root0) const;

  std::string str() const;
};

}  // namespace qha
