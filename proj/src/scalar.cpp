#include "qha/scalar.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace qha {

namespace {

using QV = std::vector<mpq_class>;

void poly_trim(QV& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

QV poly_mul(const QV& a, const QV& b) {
  if (a.empty() || b.empty()) return {};
  QV r(a.size() + b.size() - 1, mpq_class(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// num = q*den + rem, den nonzero.
void poly_divmod(QV num, const QV& den, QV& q, QV& rem) {
  QV d = den;
  poly_trim(d);
  if (d.empty()) throw std::domain_error("poly division by zero");
  poly_trim(num);
  q.assign(num.size() >= d.size() ? num.size() - d.size() + 1 : 0, mpq_class(0));
  while (num.size() >= d.size()) {
    mpq_class f = num.back() / d.back();
    size_t sh = num.size() - d.size();
    q[sh] = f;
    for (size_t i = 0; i < d.size(); ++i) num[sh + i] -= f * d[i];
    poly_trim(num);
  }
  rem = num;
}

// g = u*a + v*b with g the monic gcd (or zero).
void poly_ext_gcd(QV a, QV b, QV& g, QV& u, QV& v) {
  QV u0 = {mpq_class(1)}, v0 = {}, u1 = {}, v1 = {mpq_class(1)};
  poly_trim(a);
  poly_trim(b);
  while (!b.empty()) {
    QV q, r;
    poly_divmod(a, b, q, r);
    QV u2 = u0, v2 = v0;
    QV qu = poly_mul(q, u1), qv = poly_mul(q, v1);
    if (u2.size() < qu.size()) u2.resize(qu.size(), mpq_class(0));
    for (size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
    if (v2.size() < qv.size()) v2.resize(qv.size(), mpq_class(0));
    for (size_t i = 0; i < qv.size(); ++i) v2[i] -= qv[i];
    poly_trim(u2);
    poly_trim(v2);
    a = b;
    u0 = u1;
    v0 = v1;
    b = r;
    u1 = u2;
    v1 = v2;
  }
  g = a;
  u = u0;
  v = v0;
  if (!g.empty() && g.back() != 1) {
    mpq_class lc = g.back();
    for (auto& x : g) x /= lc;
    for (auto& x : u) x /= lc;
    for (auto& x : v) x /= lc;
  }
}

mpz_class mod_p(const mpz_class& x, long p) {
  mpz_class r = x % p;
  if (r < 0) r += p;
  return r;
}

long inv_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = ((a % p) + p) % p;
  while (nr != 0) {
    long q = r / nr;
    long tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("not invertible mod p");
  return ((t % p) + p) % p;
}

std::optional<mpq_class> rational_sqrt(const mpq_class& a) {
  if (a < 0) return std::nullopt;
  mpz_class n = a.get_num(), d = a.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
  return mpq_class(sn) / mpq_class(sd);
}

}  // namespace

std::vector<mpq_class> cyclotomic_poly(unsigned m) {
  static std::map<unsigned, QV> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  if (m == 0) throw std::domain_error("cyclotomic index must be positive");
  // x^m - 1 divided by the lower cyclotomic factors.
  QV num(m + 1, mpq_class(0));
  num[0] = -1;
  num[m] = 1;
  for (unsigned d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    QV q, r;
    poly_divmod(num, cyclotomic_poly(d), q, r);
    poly_trim(r);
    if (!r.empty()) throw std::logic_error("cyclotomic division not exact");
    num = q;
  }
  cache[m] = num;
  return num;
}

FieldPtr Field::rationals() {
  static FieldPtr f = [] {
    auto x = std::make_shared<Field>();
    x->kind = FieldKind::Rationals;
    return x;
  }();
  return f;
}

FieldPtr Field::cyclotomic(unsigned m) {
  if (m <= 1) return rationals();
  auto f = std::make_shared<Field>();
  f->kind = FieldKind::NumberField;
  QV phi = cyclotomic_poly(m);
  f->mod.assign(phi.begin(), phi.end() - 1);  // monic; store the tail
  f->cyc_m = m;
  return f;
}

FieldPtr Field::number_field(std::vector<mpq_class> monic) {
  if (monic.size() < 1) throw std::domain_error("modulus must have positive degree");
  auto f = std::make_shared<Field>();
  f->kind = FieldKind::NumberField;
  f->mod = std::move(monic);
  return f;
}

FieldPtr Field::prime(long p) {
  if (p < 2) throw std::domain_error("bad characteristic");
  auto f = std::make_shared<Field>();
  f->kind = FieldKind::Prime;
  f->p = p;
  return f;
}

FieldPtr Field::prime_ext(long p, long d) {
  if (p < 2) throw std::domain_error("bad characteristic");
  auto f = std::make_shared<Field>();
  f->kind = FieldKind::PrimeExt;
  f->p = p;
  f->ext_d = ((d % p) + p) % p;
  return f;
}

unsigned Field::degree() const {
  switch (kind) {
    case FieldKind::Rationals:
    case FieldKind::Prime:
      return 1;
    case FieldKind::NumberField:
      return (unsigned)mod.size();
    case FieldKind::PrimeExt:
      return 2;
  }
  return 1;
}

bool Field::same(const Field& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case FieldKind::Rationals:
      return true;
    case FieldKind::NumberField:
      return mod == o.mod;
    case FieldKind::Prime:
      return p == o.p;
    case FieldKind::PrimeExt:
      return p == o.p && ext_d == o.ext_d;
  }
  return false;
}

std::string Field::describe() const {
  std::ostringstream os;
  switch (kind) {
    case FieldKind::Rationals:
      os << "Q";
      break;
    case FieldKind::NumberField:
      if (cyc_m) {
        os << "Q(zeta_" << cyc_m << ")";
      } else {
        os << "Q[t]/(t^" << mod.size();
        for (size_t i = mod.size(); i-- > 0;) {
          if (mod[i] == 0) continue;
          os << (mod[i] > 0 ? "+" : "") << mod[i];
          if (i > 0) os << "*t^" << i;
        }
        os << ")";
      }
      break;
    case FieldKind::Prime:
      os << "F_" << p;
      break;
    case FieldKind::PrimeExt:
      os << "F_" << p * p << "=F_" << p << "(sqrt(" << ext_d << "))";
      break;
  }
  return os.str();
}

Scalar::Scalar(FieldPtr f) : F(std::move(f)) { c.assign(F->degree(), mpq_class(0)); }

Scalar::Scalar(FieldPtr f, long v) : Scalar(std::move(f)) {
  c[0] = v;
  reduce();
}

Scalar::Scalar(FieldPtr f, const mpq_class& v) : Scalar(std::move(f)) {
  if (F->characteristic() != 0) {
    long p = F->p;
    mpz_class den = v.get_den();
    long dinv = inv_mod(mpz_class(mod_p(den, p)).get_si(), p);
    c[0] = mod_p(v.get_num() * dinv, p);
  } else {
    c[0] = v;
  }
}

Scalar Scalar::gen(FieldPtr f) {
  Scalar s(f);
  if (f->degree() < 2) throw std::domain_error("field has no generator");
  s.c[1] = 1;
  return s;
}

void Scalar::reduce() {
  unsigned d = F->degree();
  if (F->kind == FieldKind::NumberField) {
    // fold degrees >= d down using t^d = -mod
    while (c.size() > d) {
      mpq_class lead = c.back();
      c.pop_back();
      if (lead == 0) continue;
      size_t sh = c.size() - d;
      for (unsigned i = 0; i < d; ++i) c[sh + i] -= lead * F->mod[i];
    }
  } else if (F->kind == FieldKind::PrimeExt) {
    while (c.size() > 2) {
      mpq_class lead = c.back();
      c.pop_back();
      size_t sh = c.size() - 2;
      c[sh] += lead * F->ext_d;
    }
  }
  if (c.size() < d) c.resize(d, mpq_class(0));
  if (F->characteristic() != 0)
    for (auto& x : c) {
      x.canonicalize();
      if (x.get_den() != 1) {
        long dinv = inv_mod(mpz_class(mod_p(x.get_den(), F->p)).get_si(), F->p);
        x = mod_p(x.get_num() * dinv, F->p);
      } else {
        x = mod_p(x.get_num(), F->p);
      }
    }
}

bool Scalar::is_zero() const {
  for (const auto& x : c)
    if (x != 0) return false;
  return true;
}

bool Scalar::is_one() const {
  if (c.empty() || c[0] != 1) return false;
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return false;
  return true;
}

bool Scalar::operator==(const Scalar& o) const {
  if (!F->same(*o.F)) return false;
  return c == o.c;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  for (auto& x : r.c) x = -x;
  r.reduce();
  return r;
}

Scalar Scalar::operator+(const Scalar& o) const {
  Scalar r = *this;
  r += o;
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const {
  Scalar r = *this;
  r -= o;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (!F->same(*o.F)) throw std::domain_error("field mismatch");
  for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (!F->same(*o.F)) throw std::domain_error("field mismatch");
  for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
  reduce();
  return *this;
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (!F->same(*o.F)) throw std::domain_error("field mismatch");
  Scalar r(F);
  r.c = poly_mul(c, o.c);
  if (r.c.empty()) r.c.assign(F->degree(), mpq_class(0));
  r.reduce();
  return r;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  *this = *this * o;
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw std::domain_error("division by zero");
  switch (F->kind) {
    case FieldKind::Rationals: {
      Scalar r(F);
      r.c[0] = 1 / c[0];
      return r;
    }
    case FieldKind::Prime: {
      Scalar r(F);
      r.c[0] = inv_mod(c[0].get_num().get_si(), F->p);
      return r;
    }
    case FieldKind::PrimeExt: {
      long p = F->p;
      mpz_class a = c[0].get_num(), b = c[1].get_num();
      mpz_class den = mod_p(a * a - F->ext_d * b * b, p);
      if (den == 0) throw std::domain_error("division by zero");
      long di = inv_mod(den.get_si(), p);
      Scalar r(F);
      r.c[0] = mod_p(a * di, p);
      r.c[1] = mod_p(-b * di, p);
      return r;
    }
    case FieldKind::NumberField: {
      QV m = F->mod;
      m.push_back(mpq_class(1));
      QV g, u, v, a = c;
      poly_trim(a);
      poly_ext_gcd(a, m, g, u, v);
      if (g.size() != 1) throw std::domain_error("element not invertible (reducible modulus)");
      Scalar r(F);
      r.c = u;
      mpq_class lc = g[0];
      for (auto& x : r.c) x /= lc;
      r.reduce();
      return r;
    }
  }
  throw std::logic_error("unreachable");
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  Scalar r(F, 1), b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

std::optional<mpq_class> Scalar::as_rational() const {
  for (size_t i = 1; i < c.size(); ++i)
    if (c[i] != 0) return std::nullopt;
  return c.empty() ? mpq_class(0) : c[0];
}

std::string Scalar::str() const {
  if (is_zero()) return "0";
  const char* var = (F->kind == FieldKind::NumberField && F->cyc_m) ? "z" : "t";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    mpq_class v = c[i];
    if (!first) {
      os << (v > 0 ? "+" : "-");
      if (v < 0) v = -v;
    }
    first = false;
    if (i == 0) {
      os << v;
    } else {
      if (v == 1) {
      } else if (v == -1) {
        os << "-";
      } else {
        os << v << "*";
      }
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::optional<Scalar> try_sqrt(const Scalar& a) {
  const FieldPtr& F = a.F;
  if (a.is_zero()) return Scalar(F);
  switch (F->kind) {
    case FieldKind::Rationals: {
      auto r = rational_sqrt(a.c[0]);
      if (!r) return std::nullopt;
      return Scalar(F, *r);
    }
    case FieldKind::Prime: {
      for (long x = 0; x < F->p; ++x) {
        Scalar s(F, x);
        if (s * s == a) return s;
      }
      return std::nullopt;
    }
    case FieldKind::PrimeExt: {
      for (long x = 0; x < F->p; ++x)
        for (long y = 0; y < F->p; ++y) {
          Scalar s(F, x);
          s.c[1] = y;
          if (s * s == a) return s;
        }
      return std::nullopt;
    }
    case FieldKind::NumberField: {
      // Try a * u^{-2} rational-square for a stock of simple units u.
      std::vector<Scalar> cands;
      Scalar t = Scalar::gen(F);
      unsigned top = F->cyc_m ? F->cyc_m : 2 * F->degree();
      for (unsigned j = 1; j < top; ++j) {
        Scalar tj = t.pow((long)j);
        cands.push_back(tj);
        cands.push_back(Scalar(F, 1) + tj);
        cands.push_back(Scalar(F, 1) - tj);
        if (F->cyc_m) {
          Scalar tmj = t.pow((long)(F->cyc_m - j));
          cands.push_back(tj + tmj);
          cands.push_back(tj - tmj);
        }
      }
      auto direct = a.as_rational();
      if (direct) {
        auto r = rational_sqrt(*direct);
        if (r) return Scalar(F, *r);
      }
      for (const auto& u : cands) {
        if (u.is_zero()) continue;
        Scalar q = a / (u * u);
        auto qr = q.as_rational();
        if (!qr) continue;
        auto r = rational_sqrt(*qr);
        if (!r) continue;
        return Scalar(F, *r) * u;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace qha
