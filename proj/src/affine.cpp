#include "qha/affine.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "qha/clifford.hpp"

namespace qha {

Frac::Frac(const Poly& p) : num(p), den(Poly::one(p.F, p.nvars)) {}

Frac::Frac(const Poly& n, const Poly& d) : num(n), den(d) {
  if (den.is_zero()) throw std::domain_error("Frac: zero denominator");
  reduce();
}

Frac Frac::constant(FieldPtr f, int n, const Scalar& s) {
  return Frac(Poly::constant(f, n, s));
}

Frac Frac::zero(FieldPtr f, int n) { return Frac(Poly::zero(f, n)); }

Frac Frac::var(FieldPtr f, int n, int i, int e) {
  return Frac(Poly::var(f, n, i, e));
}

bool Frac::operator==(const Frac& o) const {
  return num * o.den == o.num * den;
}

Frac Frac::operator-() const {
  Frac r;
  r.num = -num;
  r.den = den;
  return r;
}

Frac Frac::operator+(const Frac& o) const {
  return Frac(num * o.den + o.num * den, den * o.den);
}

Frac Frac::operator-(const Frac& o) const {
  return Frac(num * o.den - o.num * den, den * o.den);
}

Frac Frac::operator*(const Frac& o) const {
  return Frac(num * o.num, den * o.den);
}

Frac Frac::inv() const {
  if (num.is_zero()) throw std::domain_error("Frac: inverting zero");
  return Frac(den, num);
}

Frac Frac::scale(const Scalar& s) const {
  Frac r;
  r.num = num.scale(s);
  r.den = den;
  return r;
}

Frac Frac::subst_vals(const std::vector<Frac>& vals) const {
  return frac_eval(num, vals) * frac_eval(den, vals).inv();
}

namespace {

std::vector<int> monomial_content(const Poly& p) {
  std::vector<int> m(p.nvars, 0);
  bool first = true;
  for (const auto& [e, s] : p.t) {
    for (int i = 0; i < p.nvars; ++i)
      m[i] = first ? e[i] : std::min(m[i], e[i]);
    first = false;
  }
  return m;
}

Poly shift_down(const Poly& p, const std::vector<int>& m) {
  Poly r(p.F, p.nvars);
  for (const auto& [e, s] : p.t) {
    std::vector<int> e2 = e;
    for (int i = 0; i < p.nvars; ++i) e2[i] -= m[i];
    r.t[e2] = s;
  }
  return r;
}

// Binomial factors that every denominator around here is built from.
const std::vector<Poly>& atom_list(const FieldPtr& F, int n) {
  static std::map<std::pair<const Field*, int>, std::vector<Poly>> cache;
  auto key = std::make_pair(F.get(), n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<Poly> v;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      Poly xa = Poly::var(F, n, a), xb = Poly::var(F, n, b);
      v.push_back(xa - xb);
      v.push_back(xa + xb);
      v.push_back(xa * xb - Poly::one(F, n));
    }
  return cache.emplace(key, std::move(v)).first->second;
}

}  // namespace

void Frac::reduce() {
  if (num.is_zero()) {
    den = Poly::one(den.F, den.nvars);
    return;
  }
  std::vector<int> mn = monomial_content(num), md = monomial_content(den);
  std::vector<int> common(num.nvars);
  bool any = false;
  for (int i = 0; i < num.nvars; ++i) {
    common[i] = std::min(mn[i], md[i]);
    any = any || common[i] > 0;
  }
  if (any) {
    num = shift_down(num, common);
    den = shift_down(den, common);
  }
  if (den.t.size() > 1) {
    for (const Poly& g : atom_list(den.F, den.nvars)) {
      while (den.t.size() > 1) {
        Poly dq(den.F, den.nvars), nq(den.F, den.nvars);
        try {
          dq = den.divide_exact(g);
          nq = num.divide_exact(g);
        } catch (const std::domain_error&) {
          break;
        }
        den = dq;
        num = nq;
      }
    }
  }
  try {
    num = num.divide_exact(den);
    den = Poly::one(den.F, den.nvars);
    return;
  } catch (const std::domain_error&) {
  }
  try {
    Poly g = den.divide_exact(num);
    num = Poly::one(num.F, num.nvars);
    den = g;
  } catch (const std::domain_error&) {
  }
}

std::string Frac::str() const {
  return "(" + num.str() + ") / (" + den.str() + ")";
}

Frac frac_eval(const Poly& p, const std::vector<Frac>& vals) {
  FieldPtr F = vals.empty() ? p.F : vals[0].num.F;
  int n = vals.empty() ? p.nvars : vals[0].num.nvars;
  Frac acc = Frac::zero(F, n);
  for (const auto& [e, s] : p.t) {
    Frac term = Frac::constant(F, n, s);
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term = term * vals[i];
    acc = acc + term;
  }
  return acc;
}

AffWorld AffWorld::quantum(FieldPtr F, int n, const Scalar& q) {
  Scalar q4 = q.pow(4);
  if (q4 == Scalar(F, 1))
    throw std::domain_error("quantum parameter must have (q^2)^2 != 1");
  AffWorld W;
  W.F = std::move(F);
  W.n = n;
  W.degenerate = false;
  W.q = q;
  return W;
}

AffWorld AffWorld::sergeev(FieldPtr F, int n) {
  AffWorld W;
  W.q = Scalar(F, 1);
  W.F = std::move(F);
  W.n = n;
  W.degenerate = true;
  return W;
}

Scalar AffWorld::xi() const {
  if (degenerate) return Scalar(F, 0);
  return q - q.inv();
}

std::vector<Frac> AffWorld::s_vals(int a) const {
  std::vector<Frac> v;
  for (int i = 0; i < n; ++i) v.push_back(Frac::var(F, n, i));
  std::swap(v[a], v[a + 1]);
  return v;
}

std::vector<Frac> AffWorld::sbar_vals(int a) const {
  std::vector<Frac> v;
  for (int i = 0; i < n; ++i) v.push_back(Frac::var(F, n, i));
  if (degenerate) {
    v[a] = -Frac::var(F, n, a + 1);
    v[a + 1] = -Frac::var(F, n, a);
  } else {
    v[a] = Frac::var(F, n, a + 1).inv();
    v[a + 1] = Frac::var(F, n, a).inv();
  }
  return v;
}

std::vector<Frac> AffWorld::cmask_vals(uint32_t mask) const {
  std::vector<Frac> v;
  for (int i = 0; i < n; ++i) {
    Frac x = Frac::var(F, n, i);
    if (mask >> i & 1u) x = degenerate ? -x : x.inv();
    v.push_back(x);
  }
  return v;
}

Poly AffWorld::kernel() const {
  Poly K(F, 2);
  K.add_term({2, 0}, Scalar(F, 1));
  K.add_term({0, 2}, Scalar(F, 1));
  if (degenerate) {
    K.add_term({1, 1}, Scalar(F, -2));
    K.add_term({1, 0}, Scalar(F, -2));
    K.add_term({0, 1}, Scalar(F, -2));
  } else {
    Scalar q2 = q.pow(2);
    K.add_term({1, 1}, -(q2 + q2.inv()));
    Scalar x = xi();
    K.add_term({0, 0}, Scalar(F, 4) * x * x);
  }
  return K;
}

Frac AffWorld::fsquare(int a) const {
  if (degenerate) {
    Poly u = Poly::var(F, n, a, 2), v = Poly::var(F, n, a + 1, 2);
    Frac K = frac_eval(kernel(), {Frac(u), Frac(v)});
    Poly d = u - v;
    return K * Frac(Poly::one(F, n), d * d);
  }
  Frac Xa = Frac::var(F, n, a), Xb = Frac::var(F, n, a + 1);
  Frac K = frac_eval(kernel(), {Xa + Xa.inv(), Xb + Xb.inv()});
  Poly xa = Poly::var(F, n, a), xb = Poly::var(F, n, a + 1);
  Poly d = (xa - xb) * (xa * xb - Poly::one(F, n));
  return K * Frac(xa * xa * xb * xb, d * d);
}

AffEl AffEl::from_frac(const AffWorld& W, const Frac& f) {
  AffEl e(W);
  e.add_term(0, perm_id(W.n), f);
  return e;
}

AffEl AffEl::unit(const AffWorld& W) {
  return from_frac(W, Frac::one(W.F, W.n));
}

AffEl AffEl::gen_x(const AffWorld& W, int p, int e) {
  if (e < 0 && W.degenerate)
    throw std::domain_error("polynomial generators are not invertible here");
  Frac f = e >= 0 ? Frac::var(W.F, W.n, p, e)
                  : Frac::var(W.F, W.n, p, -e).inv();
  return from_frac(W, f);
}

AffEl AffEl::gen_c(const AffWorld& W, int p) {
  AffEl e(W);
  e.add_term(1u << p, perm_id(W.n), Frac::one(W.F, W.n));
  return e;
}

AffEl AffEl::gen_t(const AffWorld& W, int a) {
  AffEl e(W);
  e.add_term(0, perm_s(W.n, a), Frac::one(W.F, W.n));
  return e;
}

AffEl AffEl::intertwiner(const AffWorld& W, int a) {
  FieldPtr F = W.F;
  int n = W.n;
  Poly xa = Poly::var(F, n, a), xb = Poly::var(F, n, a + 1);
  AffEl e = gen_t(W, a);
  uint32_t pair = (1u << a) | (1u << (a + 1));
  if (W.degenerate) {
    e.add_term(0, perm_id(n), Frac(Poly::one(F, n), xa - xb));
    e.add_term(pair, perm_id(n), -Frac(Poly::one(F, n), xa + xb));
  } else {
    Scalar x = W.xi();
    e.add_term(0, perm_id(n), Frac(xb.scale(x), xa - xb));
    // conjugated past the clifford pair it multiplies
    e.add_term(pair, perm_id(n),
               Frac(Poly::constant(F, n, -x), xa * xb - Poly::one(F, n)));
  }
  return e;
}

bool AffEl::operator==(const AffEl& o) const {
  auto it = t.begin();
  auto jt = o.t.begin();
  while (it != t.end() || jt != o.t.end()) {
    if (jt == o.t.end() || (it != t.end() && it->first < jt->first)) {
      if (!it->second.is_zero()) return false;
      ++it;
    } else if (it == t.end() || jt->first < it->first) {
      if (!jt->second.is_zero()) return false;
      ++jt;
    } else {
      if (!(it->second == jt->second)) return false;
      ++it;
      ++jt;
    }
  }
  return true;
}

AffEl AffEl::operator-() const {
  AffEl r(*W);
  for (const auto& [k, f] : t) r.t[k] = -f;
  return r;
}

AffEl AffEl::operator+(const AffEl& o) const {
  AffEl r = *this;
  for (const auto& [k, f] : o.t) r.add_term(k.mask, k.w, f);
  return r;
}

AffEl AffEl::operator-(const AffEl& o) const { return *this + (-o); }

AffEl AffEl::scale(const Scalar& s) const {
  AffEl r(*W);
  if (s == Scalar(W->F, 0)) return r;
  for (const auto& [k, f] : t) r.t[k] = f.scale(s);
  return r;
}

void AffEl::add_term(uint32_t mask, const Perm& w, const Frac& f) {
  if (f.is_zero()) return;
  AffKey k{mask, w};
  auto it = t.find(k);
  if (it == t.end()) {
    t.emplace(k, f);
    return;
  }
  it->second = it->second + f;
  if (it->second.is_zero()) t.erase(it);
}

namespace {

struct TCPiece {
  uint32_t mask;
  bool hasT;
  Scalar c;
};

// T_i moved right through the sorted clifford monomial C^theta.
std::vector<TCPiece> expand_tc(const AffWorld& W, int i, uint32_t theta) {
  uint32_t lo = 1u << i, hi = 1u << (i + 1);
  Scalar one(W.F, 1), x = W.xi();
  bool has_lo = theta & lo, has_hi = theta & hi;
  if (!has_lo && !has_hi) return {{theta, true, one}};
  if (has_lo && !has_hi) return {{(theta ^ lo) | hi, true, one}};
  if (!has_lo && has_hi) {
    uint32_t sw = (theta ^ hi) | lo;
    std::vector<TCPiece> r = {{sw, true, one}};
    if (!(x == Scalar(W.F, 0))) {
      r.push_back({theta, false, x});
      r.push_back({sw, false, -x});
    }
    return r;
  }
  std::vector<TCPiece> r = {{theta, true, -one}};
  if (!(x == Scalar(W.F, 0))) {
    r.push_back({theta ^ lo ^ hi, false, x});
    r.push_back({theta, false, x});
  }
  return r;
}

// T_i * T_u in the coxeter part.
std::vector<std::pair<Perm, Scalar>> tmul(const AffWorld& W, int i,
                                          const Perm& u) {
  Perm su = perm_mul(perm_s(W.n, i), u);
  if (left_descent(u, i)) return {{u, W.xi()}, {su, Scalar(W.F, 1)}};
  return {{su, Scalar(W.F, 1)}};
}

using TermMap = std::map<AffKey, Frac>;

void accum(TermMap& m, uint32_t mask, const Perm& w, const Frac& f) {
  if (f.is_zero()) return;
  AffKey k{mask, w};
  auto it = m.find(k);
  if (it == m.end())
    m.emplace(k, f);
  else {
    it->second = it->second + f;
    if (it->second.is_zero()) m.erase(it);
  }
}

TermMap apply_t(const AffWorld& W, int i, const TermMap& E) {
  TermMap out;
  uint32_t pair = (1u << i) | (1u << (i + 1));
  FieldPtr F = W.F;
  int n = W.n;
  Poly xa = Poly::var(F, n, i), xb = Poly::var(F, n, i + 1);
  for (const auto& [k, g] : E) {
    Frac sg = g.subst_vals(W.s_vals(i));
    Frac bg = g.subst_vals(W.sbar_vals(i));
    Frac c2 = Frac::zero(F, n), c3 = c2;
    if (W.degenerate) {
      c2 = (g - sg) * Frac(Poly::one(F, n), xb - xa);
      c3 = -((g - bg) * Frac(Poly::one(F, n), xb + xa));
    } else {
      Scalar x = W.xi();
      c2 = (g - sg).scale(-x) * Frac(xb, xa - xb);
      c3 = (g - bg).scale(x) * Frac(xa * xb, Poly::one(F, n) - xa * xb);
    }
    // the pair term was built with its coefficient to the right of the
    // clifford factors; normal form wants it on the left
    c3 = c3.subst_vals(W.cmask_vals(pair));
    for (const TCPiece& p : expand_tc(W, i, k.mask)) {
      Frac coef = sg.scale(p.c);
      if (p.hasT) {
        for (const auto& [v, h] : tmul(W, i, k.w))
          accum(out, p.mask, v, coef.scale(h));
      } else {
        accum(out, p.mask, k.w, coef);
      }
    }
    accum(out, k.mask, k.w, c2);
    int sgn = clifford_sign(pair, k.mask);
    Frac c3s = sgn == 1 ? c3 : -c3;
    accum(out, pair ^ k.mask, k.w, c3s);
  }
  return out;
}

// T_w * (f C^mask) expanded back into normal form.
TermMap move_through(const AffWorld& W, const Perm& w, const Frac& f,
                     uint32_t mask) {
  TermMap E;
  E.emplace(AffKey{mask, perm_id(W.n)}, f);
  std::vector<int> word = canonical_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    E = apply_t(W, *it, E);
  return E;
}

// T_u * T_w2 in the coxeter part.
std::map<Perm, Scalar> hecke_mul(const AffWorld& W, const Perm& u,
                                 const Perm& w2) {
  std::map<Perm, Scalar> cur;
  cur.emplace(w2, Scalar(W.F, 1));
  std::vector<int> word = canonical_word(u);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    std::map<Perm, Scalar> nxt;
    for (const auto& [v, h] : cur)
      for (const auto& [v2, h2] : tmul(W, *it, v)) {
        auto jt = nxt.find(v2);
        Scalar add = h * h2;
        if (jt == nxt.end())
          nxt.emplace(v2, add);
        else
          jt->second = jt->second + add;
      }
    cur = std::move(nxt);
  }
  return cur;
}

}  // namespace

AffEl AffEl::operator*(const AffEl& o) const {
  AffEl r(*W);
  for (const auto& [k1, f1] : t)
    for (const auto& [k2, f2] : o.t) {
      TermMap M = move_through(*W, k1.w, f2, k2.mask);
      for (const auto& [km, g] : M) {
        Frac g1 = g.subst_vals(W->cmask_vals(k1.mask));
        Frac coef = f1 * g1;
        int sgn = clifford_sign(k1.mask, km.mask);
        if (sgn != 1) coef = -coef;
        uint32_t mask = k1.mask ^ km.mask;
        for (const auto& [v, h] : hecke_mul(*W, km.w, k2.w))
          r.add_term(mask, v, coef.scale(h));
      }
    }
  return r;
}

std::string AffEl::str() const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, f] : t) {
    if (!first) os << " + ";
    first = false;
    os << f.str();
    for (int p = 0; p < W->n; ++p)
      if (k.mask >> p & 1u) os << " C" << p + 1;
    std::vector<int> word = canonical_word(k.w);
    for (int a : word) os << " T" << a + 1;
  }
  return os.str();
}

Report affine_relation_audit(const AffWorld& W, uint64_t seed) {
  Report rep;
  int n = W.n;
  auto C = [&](int p) { return AffEl::gen_c(W, p); };
  auto X = [&](int p, int e = 1) { return AffEl::gen_x(W, p, e); };
  auto T = [&](int a) { return AffEl::gen_t(W, a); };
  AffEl one = AffEl::unit(W);
  Scalar xi = W.xi();

  {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        AffEl anti = C(i) * C(j) + C(j) * C(i);
        ok = anti == (i == j ? one.scale(Scalar(W.F, 2)) : AffEl(W));
      }
    rep.add("clifford generators square to one and anticommute", ok);
  }
  {
    bool ok = true;
    for (int a = 0; a + 1 < n && ok; ++a)
      ok = T(a) * T(a) == T(a).scale(xi) + one;
    rep.add("coxeter generators satisfy the quadratic relation", ok);
  }
  if (n >= 3) {
    bool ok = true;
    for (int a = 0; a + 2 < n && ok; ++a)
      ok = T(a) * T(a + 1) * T(a) == T(a + 1) * T(a) * T(a + 1);
    rep.add("coxeter generators braid", ok);
  }
  if (n >= 4) {
    bool ok = true;
    for (int a = 0; a + 1 < n && ok; ++a)
      for (int b = a + 2; b + 1 < n && ok; ++b)
        ok = T(a) * T(b) == T(b) * T(a);
    rep.add("far coxeter generators commute", ok);
  }
  {
    bool ok = true;
    for (int a = 0; a + 1 < n && ok; ++a)
      for (int j = 0; j < n && ok; ++j) {
        if (j == a)
          ok = T(a) * C(a) == C(a + 1) * T(a);
        else if (j == a + 1)
          ok = T(a) * C(a + 1) ==
               C(a) * T(a) + (C(a + 1) - C(a)).scale(xi);
        else
          ok = T(a) * C(j) == C(j) * T(a);
      }
    rep.add("coxeter and clifford generators cross", ok);
  }
  {
    bool ok = true;
    for (int p = 0; p < n && ok; ++p)
      for (int j = 0; j < n && ok; ++j) {
        if (p == j)
          ok = W.degenerate ? C(p) * X(p) == -(X(p) * C(p))
                            : C(p) * X(p) == X(p, -1) * C(p);
        else
          ok = C(p) * X(j) == X(j) * C(p);
      }
    rep.add("clifford conjugates its own variable only", ok);
  }
  {
    bool ok = true;
    for (int a = 0; a + 1 < n && ok; ++a)
      for (int j = 0; j < n && ok; ++j)
        if (j != a && j != a + 1) ok = T(a) * X(j) == X(j) * T(a);
    rep.add("coxeter generators move far variables freely", ok);
  }
  {
    bool ok = true;
    for (int a = 0; a + 1 < n && ok; ++a) {
      if (W.degenerate) {
        AffEl cc = C(a) * C(a + 1);
        ok = T(a) * X(a) == X(a + 1) * T(a) - one - cc &&
             T(a) * X(a + 1) == X(a) * T(a) + one - cc;
      } else {
        AffEl lhs = (T(a) + (C(a) * C(a + 1)).scale(xi)) * X(a) * T(a);
        ok = lhs == X(a + 1);
      }
    }
    rep.add("the mixed relation holds", ok);
  }
  {
    bool ok = true;
    for (int a = 0; a + 1 < n && ok; ++a) {
      AffEl phi = AffEl::intertwiner(W, a);
      for (int p = 0; p < n && ok; ++p) {
        int sp = p == a ? a + 1 : (p == a + 1 ? a : p);
        ok = phi * X(p) == X(sp) * phi && phi * C(p) == C(sp) * phi;
      }
    }
    rep.add("intertwiners permute the variables and clifford generators", ok);
  }
  {
    bool ok = true;
    for (int a = 0; a + 1 < n && ok; ++a) {
      AffEl phi = AffEl::intertwiner(W, a);
      ok = phi * phi == AffEl::from_frac(W, W.fsquare(a));
    }
    rep.add("intertwiner squares equal the kernel function", ok);
  }
  if (n >= 3) {
    bool ok = true;
    for (int a = 0; a + 2 < n && ok; ++a) {
      AffEl p1 = AffEl::intertwiner(W, a), p2 = AffEl::intertwiner(W, a + 1);
      ok = p1 * p2 * p1 == p2 * p1 * p2;
    }
    rep.add("intertwiners braid", ok);
  }
  if (n >= 4) {
    AffEl p1 = AffEl::intertwiner(W, 0), p3 = AffEl::intertwiner(W, 2);
    rep.add("far intertwiners commute", p1 * p3 == p3 * p1);
  }
  {
    std::mt19937_64 rng(seed);
    auto rand_el = [&]() {
      AffEl e(W);
      Poly m = Poly::one(W.F, n);
      for (int i = 0; i < n; ++i)
        if (rng() % 2) m = m * Poly::var(W.F, n, i);
      Frac f(m);
      if (!W.degenerate && rng() % 2) f = f * Frac::var(W.F, n, 0).inv();
      std::vector<int> word;
      int len = int(rng() % 4);
      for (int k = 0; k < len; ++k) word.push_back(int(rng() % (n - 1)));
      e.add_term(uint32_t(rng() % (1u << n)), word_to_perm(n, word), f);
      return e;
    };
    bool ok = true;
    int trials = n <= 3 ? 6 : 4;
    for (int trial = 0; trial < trials && ok; ++trial) {
      AffEl A = rand_el(), B = rand_el(), Cc = rand_el();
      ok = (A * B) * Cc == A * (B * Cc);
    }
    rep.add("products associate", ok);
  }
  return rep;
}

}  // namespace qha
