#include "qha/series.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

namespace qha {

Ser1::Ser1(FieldPtr f, int K_) : F(f), K(K_), c(K_, Scalar(f)) { assert(K_ >= 1); }

Ser1 Ser1::constant(FieldPtr f, int K, const Scalar& s) {
  Ser1 r(f, K);
  r.c[0] = s;
  return r;
}

Ser1 Ser1::t(FieldPtr f, int K) {
  Ser1 r(f, K);
  if (K > 1) r.c[1] = Scalar(f, 1);
  return r;
}

Scalar Ser1::coeff(int i) const { return i < K ? c[i] : Scalar(F); }

void Ser1::set(int i, const Scalar& s) {
  assert(i < K);
  c[i] = s;
}

bool Ser1::is_zero() const {
  for (auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

int Ser1::valuation() const {
  for (int i = 0; i < K; ++i)
    if (!c[i].is_zero()) return i;
  return K;
}

Ser1 Ser1::trunc(int K2) const {
  assert(K2 >= 1 && K2 <= K);
  Ser1 r(F, K2);
  for (int i = 0; i < K2; ++i) r.c[i] = c[i];
  return r;
}

Ser1 Ser1::operator-() const {
  Ser1 r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Ser1 Ser1::operator+(const Ser1& o) const {
  int Kr = std::min(K, o.K);
  Ser1 r(F, Kr);
  for (int i = 0; i < Kr; ++i) r.c[i] = c[i] + o.c[i];
  return r;
}

Ser1 Ser1::operator-(const Ser1& o) const {
  int Kr = std::min(K, o.K);
  Ser1 r(F, Kr);
  for (int i = 0; i < Kr; ++i) r.c[i] = c[i] - o.c[i];
  return r;
}

Ser1 Ser1::operator*(const Ser1& o) const {
  int Kr = std::min(K, o.K);
  Ser1 r(F, Kr);
  for (int i = 0; i < Kr && i < K; ++i) {
    if (c[i].is_zero()) continue;
    for (int j = 0; i + j < Kr && j < o.K; ++j) r.c[i + j] += c[i] * o.c[j];
  }
  return r;
}

Ser1 Ser1::scale(const Scalar& s) const {
  Ser1 r = *this;
  for (auto& x : r.c) x = x * s;
  return r;
}

bool Ser1::operator==(const Ser1& o) const {
  int Kr = std::min(K, o.K);
  for (int i = 0; i < Kr; ++i)
    if (c[i] != o.c[i]) return false;
  return true;
}

Ser1 Ser1::shift(int k) const {
  assert(k >= 0);
  Ser1 r(F, K);
  for (int i = 0; i + k < K; ++i) r.c[i + k] = c[i];
  return r;
}

Ser1 Ser1::unshift(int m) const {
  assert(m >= 0 && valuation() >= m && K - m >= 1);
  Ser1 r(F, K - m);
  for (int i = 0; i < K - m; ++i) r.c[i] = c[i + m];
  return r;
}

Ser1 Ser1::inv() const {
  if (c[0].is_zero()) throw std::invalid_argument("Ser1::inv: not a unit");
  Ser1 r(F, K);
  r.c[0] = c[0].inv();
  for (int d = 1; d < K; ++d) {
    Scalar acc(F);
    for (int e = 0; e < d; ++e) acc += r.c[e] * c[d - e];
    r.c[d] = -acc * r.c[0];
  }
  return r;
}

Ser1 Ser1::divide_by(const Ser1& d) const {
  int v = d.valuation();
  int Kc = std::min(K, d.K);
  if (valuation() < v) throw std::invalid_argument("Ser1::divide_by: valuation too small");
  return trunc(Kc).unshift(v) * d.trunc(Kc).unshift(v).inv();
}

Ser1 Ser1::compose(const Ser1& g) const {
  assert(g.coeff(0).is_zero());
  int Kr = std::min(K, g.K);
  Ser1 r = Ser1::constant(F, Kr, c[Kr - 1]);
  Ser1 gt = g.trunc(Kr);
  for (int i = Kr - 2; i >= 0; --i) r = r * gt + Ser1::constant(F, Kr, c[i]);
  return r;
}

Ser1 Ser1::derivative() const {
  assert(K >= 2);
  Ser1 r(F, K - 1);
  for (int i = 1; i < K; ++i) r.c[i - 1] = c[i] * Scalar(F, i);
  return r;
}

Ser1 Ser1::sqrt_unit(const Scalar& root0) const {
  if (root0 * root0 != c[0]) throw std::invalid_argument("sqrt_unit: bad initial root");
  if (root0.is_zero()) throw std::invalid_argument("sqrt_unit: not a unit");
  Scalar half = Scalar(F, 2).inv();
  Ser1 x = Ser1::constant(F, K, root0);
  for (int it = 0; it < K + 1; ++it) {
    Ser1 nxt = (x + *this * x.inv()).scale(half);
    if (nxt == x) break;
    x = nxt;
  }
  if (x * x != *this) throw std::runtime_error("sqrt_unit: no convergence");
  return x;
}

Ser1 newton_quadratic(const Ser1& b, const Ser1& c, const Scalar& x0) {
  FieldPtr F = b.F;
  int K = std::min(b.K, c.K);
  Scalar d0 = Scalar(F, 2) * x0 - b.coeff(0);
  if (d0.is_zero()) throw std::invalid_argument("newton_quadratic: double root");
  Ser1 x = Ser1::constant(F, K, x0);
  Ser1 bt = b.trunc(K), ct = c.trunc(K);
  for (int it = 0; it < K + 1; ++it) {
    Ser1 f = x * x - bt * x + ct;
    if (f.is_zero()) break;
    x = x - f * (x.scale(Scalar(F, 2)) - bt).inv();
  }
  if (!(x * x - bt * x + ct).is_zero()) throw std::runtime_error("newton_quadratic: no convergence");
  return x;
}

std::string Ser1::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < K; ++i) {
    if (c[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c[i].str() << ")";
    if (i > 0) os << "*t^" << i;
  }
  if (first) os << "0";
  os << " + O(t^" << K << ")";
  return os.str();
}

static int tri(int d) { return d * (d + 1) / 2; }

Ser2::Ser2(FieldPtr f, int K_) : F(f), K(K_), c(tri(K_), Scalar(f)) { assert(K_ >= 1); }

Ser2 Ser2::constant(FieldPtr f, int K, const Scalar& s) {
  Ser2 r(f, K);
  r.c[0] = s;
  return r;
}

Ser2 Ser2::var(FieldPtr f, int K, int slot) {
  Ser2 r(f, K);
  if (K > 1) r.c[tri(1) + (slot == 0 ? 1 : 0)] = Scalar(f, 1);
  return r;
}

Ser2 Ser2::from1(const Ser1& f, int slot, int K) {
  Ser2 r(f.F, K);
  for (int i = 0; i < std::min(K, f.K); ++i) {
    if (slot == 0)
      r.set(i, 0, f.c[i]);
    else
      r.set(0, i, f.c[i]);
  }
  return r;
}

Scalar Ser2::coeff(int i, int j) const {
  if (i + j >= K) return Scalar(F);
  return c[tri(i + j) + i];
}

void Ser2::set(int i, int j, const Scalar& s) {
  assert(i + j < K);
  c[tri(i + j) + i] = s;
}

bool Ser2::is_zero() const {
  for (auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

int Ser2::valuation() const {
  for (int d = 0; d < K; ++d)
    for (int i = 0; i <= d; ++i)
      if (!c[tri(d) + i].is_zero()) return d;
  return K;
}

Ser2 Ser2::trunc(int K2) const {
  assert(K2 >= 1 && K2 <= K);
  Ser2 r(F, K2);
  for (int k = 0; k < tri(K2); ++k) r.c[k] = c[k];
  return r;
}

Ser2 Ser2::operator-() const {
  Ser2 r = *this;
  for (auto& x : r.c) x = -x;
  return r;
}

Ser2 Ser2::operator+(const Ser2& o) const {
  int Kr = std::min(K, o.K);
  Ser2 r(F, Kr);
  for (int k = 0; k < tri(Kr); ++k) r.c[k] = c[k] + o.c[k];
  return r;
}

Ser2 Ser2::operator-(const Ser2& o) const {
  int Kr = std::min(K, o.K);
  Ser2 r(F, Kr);
  for (int k = 0; k < tri(Kr); ++k) r.c[k] = c[k] - o.c[k];
  return r;
}

Ser2 Ser2::operator*(const Ser2& o) const {
  int Kr = std::min(K, o.K);
  Ser2 r(F, Kr);
  for (int d1 = 0; d1 < std::min(K, Kr); ++d1)
    for (int i1 = 0; i1 <= d1; ++i1) {
      const Scalar& a = c[tri(d1) + i1];
      if (a.is_zero()) continue;
      for (int d2 = 0; d1 + d2 < Kr && d2 < o.K; ++d2)
        for (int i2 = 0; i2 <= d2; ++i2) {
          const Scalar& b = o.c[tri(d2) + i2];
          if (b.is_zero()) continue;
          r.c[tri(d1 + d2) + i1 + i2] += a * b;
        }
    }
  return r;
}

Ser2 Ser2::scale(const Scalar& s) const {
  Ser2 r = *this;
  for (auto& x : r.c) x = x * s;
  return r;
}

bool Ser2::operator==(const Ser2& o) const {
  int Kr = std::min(K, o.K);
  for (int k = 0; k < tri(Kr); ++k)
    if (c[k] != o.c[k]) return false;
  return true;
}

Ser2 Ser2::swapv() const {
  Ser2 r(F, K);
  for (int d = 0; d < K; ++d)
    for (int i = 0; i <= d; ++i) r.c[tri(d) + d - i] = c[tri(d) + i];
  return r;
}

Ser1 Ser2::diag(int sign2) const {
  Ser1 r(F, K);
  for (int d = 0; d < K; ++d)
    for (int i = 0; i <= d; ++i) {
      Scalar v = c[tri(d) + i];
      if (v.is_zero()) continue;
      if (sign2 < 0 && ((d - i) & 1)) v = -v;
      r.c[d] += v;
    }
  return r;
}

Ser2 Ser2::compose_var(int slot, const Ser1& g) const {
  assert(g.coeff(0).is_zero());
  int Kr = std::min(K, g.K);
  Ser2 G = from1(g, slot, Kr);
  // Powers of the substituted variable.
  std::vector<Ser2> pw;
  pw.push_back(Ser2::one(F, Kr));
  for (int e = 1; e < Kr; ++e) pw.push_back(pw.back() * G);
  Ser2 r(F, Kr);
  for (int d = 0; d < std::min(K, Kr); ++d)
    for (int i = 0; i <= d; ++i) {
      const Scalar& v = c[tri(d) + i];
      if (v.is_zero()) continue;
      int e = slot == 0 ? i : d - i;       // exponent of the substituted variable
      int eo = slot == 0 ? d - i : i;      // exponent of the untouched variable
      if (e >= Kr) continue;
      Ser2 term = pw[e].scale(v);
      // Multiply by the untouched variable's power by index shifting.
      Ser2 shifted(F, Kr);
      for (int dd = 0; dd + eo < Kr; ++dd)
        for (int ii = 0; ii <= dd; ++ii) {
          const Scalar& w = term.c[tri(dd) + ii];
          if (w.is_zero()) continue;
          int ni = slot == 0 ? ii : ii + eo;
          shifted.c[tri(dd + eo) + ni] += w;
        }
      r = r + shifted;
    }
  return r;
}

Ser2 Ser2::inv() const {
  if (c[0].is_zero()) throw std::invalid_argument("Ser2::inv: not a unit");
  Ser2 r(F, K);
  r.c[0] = c[0].inv();
  for (int d = 1; d < K; ++d) {
    // Degree-d block of r * this must vanish; solve against the constant term.
    for (int i = 0; i <= d; ++i) {
      Scalar acc(F);
      for (int e = 0; e < d; ++e)
        for (int i1 = std::max(0, i - (d - e)); i1 <= std::min(e, i); ++i1)
          acc += r.c[tri(e) + i1] * c[tri(d - e) + i - i1];
      r.c[tri(d) + i] = -acc * r.c[0];
    }
  }
  return r;
}

// Exact division of homogeneous bivariate forms: p (degree dp) by b (degree db).
// Returns quotient coefficients (degree dp-db) or nullopt.
static std::optional<std::vector<Scalar>> hdiv(FieldPtr F, const std::vector<Scalar>& p, int dp,
                                               const std::vector<Scalar>& b, int db) {
  int dq = dp - db;
  // Univariate views P(s) = sum p_i s^i etc., s = t1 with t2 = 1.
  int degB = -1;
  for (int i = 0; i <= db; ++i)
    if (!b[i].is_zero()) degB = i;
  assert(degB >= 0);
  std::vector<Scalar> rem = p;
  std::vector<Scalar> q(dq + 1, Scalar(F));
  Scalar lead = b[degB].inv();
  for (int i = dp; i >= degB; --i) {
    if (rem[i].is_zero()) continue;
    int e = i - degB;
    if (e > dq) return std::nullopt;
    Scalar f = rem[i] * lead;
    q[e] = f;
    for (int j = 0; j <= degB; ++j) rem[e + j] -= f * b[j];
  }
  for (auto& x : rem)
    if (!x.is_zero()) return std::nullopt;
  return q;
}

std::optional<Ser2> Ser2::divide(const Ser2& d) const {
  int Kc = std::min(K, d.K);
  int v = d.trunc(Kc).valuation();
  if (v >= Kc) throw std::invalid_argument("Ser2::divide: zero divisor");
  int Kr = Kc - v;
  assert(Kr >= 1);
  if (trunc(Kc).valuation() < v) return std::nullopt;
  std::vector<Scalar> bv(v + 1, Scalar(F));
  for (int i = 0; i <= v; ++i) bv[i] = d.coeff(i, v - i);
  Ser2 q(F, Kr);
  for (int e = 0; e < Kr; ++e) {
    // Target: degree (e+v) block of numerator minus known products.
    std::vector<Scalar> tgt(e + v + 1, Scalar(F));
    for (int i = 0; i <= e + v; ++i) tgt[i] = coeff(i, e + v - i);
    for (int f = 0; f < e; ++f)
      for (int i1 = 0; i1 <= f; ++i1) {
        const Scalar& a = q.c[tri(f) + i1];
        if (a.is_zero()) continue;
        int dd = e + v - f;  // degree of the divisor block paired with q_f
        for (int i2 = 0; i2 <= dd; ++i2) {
          Scalar bb = d.coeff(i2, dd - i2);
          if (bb.is_zero()) continue;
          tgt[i1 + i2] -= a * bb;
        }
      }
    auto qe = hdiv(F, tgt, e + v, bv, v);
    if (!qe) return std::nullopt;
    for (int i = 0; i <= e; ++i) q.c[tri(e) + i] = (*qe)[i];
  }
  // Certificate: residual vanishes through the common order.
  if (!(q * d.trunc(Kc) == trunc(Kc).trunc(Kr))) return std::nullopt;
  return q;
}

Ser2 Ser2::sqrt_unit(const Scalar& root0) const {
  if (root0 * root0 != c[0]) throw std::invalid_argument("sqrt_unit: bad initial root");
  if (root0.is_zero()) throw std::invalid_argument("sqrt_unit: not a unit");
  Scalar half = Scalar(F, 2).inv();
  Ser2 x = Ser2::constant(F, K, root0);
  for (int it = 0; it < K + 1; ++it) {
    Ser2 nxt = (x + *this * x.inv()).scale(half);
    if (nxt == x) break;
    x = nxt;
  }
  if (x * x != *this) throw std::runtime_error("sqrt_unit: no convergence");
  return x;
}

std::string Ser2::str() const {
  std::ostringstream os;
  bool first = true;
  for (int d = 0; d < K; ++d)
    for (int i = 0; i <= d; ++i) {
      const Scalar& v = c[tri(d) + i];
      if (v.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << v.str() << ")";
      if (i) os << "*t1^" << i;
      if (d - i) os << "*t2^" << d - i;
    }
  if (first) os << "0";
  os << " + O(deg " << K << ")";
  return os.str();
}

}  // namespace qha
