#include "qha/skmodel.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qha/clifford.hpp"

namespace qha {

RatFn::RatFn(FieldPtr f, int n_) {
  F = std::move(f);
  n = n_;
  num = Poly::zero(F, n);
}

RatFn RatFn::from_poly(const Poly& p) {
  RatFn r(p.F, p.nvars);
  r.num = p;
  return r;
}

static Poly atom_poly(const FieldPtr& F, int n, const std::array<int, 3>& k) {
  Poly a = Poly::var(F, n, k[0]);
  Poly b = Poly::var(F, n, k[1]);
  return k[2] == 0 ? a - b : a + b;
}

RatFn RatFn::atom_inv(FieldPtr f, int n, int a, int b, int kind, int e) {
  if (a >= b) throw std::domain_error("atom wants a < b");
  RatFn r(f, n);
  r.num = Poly::one(r.F, n);
  r.den[{a, b, kind}] = e;
  return r;
}

Poly RatFn::den_poly() const {
  Poly d = Poly::one(F, n);
  for (const auto& [k, e] : den)
    for (int i = 0; i < e; ++i) d = d * atom_poly(F, n, k);
  return d;
}

void RatFn::reduce() {
  if (num.is_zero()) {
    den.clear();
    return;
  }
  for (auto it = den.begin(); it != den.end();) {
    Poly at = atom_poly(F, n, it->first);
    while (it->second > 0) {
      try {
        num = num.divide_exact(at);
        it->second--;
      } catch (const std::domain_error&) {
        break;
      }
    }
    it = it->second == 0 ? den.erase(it) : std::next(it);
  }
}

bool RatFn::operator==(const RatFn& o) const {
  return (num * o.den_poly()) == (o.num * den_poly());
}

RatFn RatFn::operator-() const {
  RatFn r = *this;
  r.num = -r.num;
  return r;
}

RatFn RatFn::operator+(const RatFn& o) const {
  RatFn r(F, n);
  std::map<std::array<int, 3>, int> u = den;
  for (const auto& [k, e] : o.den) u[k] = std::max(u[k], e);
  auto lift = [&](const RatFn& x) {
    Poly p = x.num;
    for (const auto& [k, e] : u) {
      int have = 0;
      auto it = x.den.find(k);
      if (it != x.den.end()) have = it->second;
      for (int i = have; i < e; ++i) p = p * atom_poly(F, n, k);
    }
    return p;
  };
  r.num = lift(*this) + lift(o);
  r.den = u;
  r.reduce();
  return r;
}

RatFn RatFn::operator-(const RatFn& o) const { return *this + (-o); }

RatFn RatFn::operator*(const RatFn& o) const {
  RatFn r(F, n);
  r.num = num * o.num;
  r.den = den;
  for (const auto& [k, e] : o.den) r.den[k] += e;
  r.reduce();
  return r;
}

RatFn RatFn::scale(const Scalar& s) const {
  RatFn r = *this;
  r.num = r.num.scale(s);
  if (r.num.is_zero()) r.den.clear();
  return r;
}

RatFn RatFn::subst_signs(const std::vector<int>& sgn) const {
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  RatFn r(F, n);
  r.num = num.subst(id, sgn);
  bool neg = false;
  for (const auto& [k, e] : den) {
    int sa = sgn[k[0]], sb = sgn[k[1]];
    int kind = sa == sb ? k[2] : 1 - k[2];
    r.den[{k[0], k[1], kind}] += e;
    if (sa < 0 && (e & 1)) neg = !neg;
  }
  if (neg) r.num = -r.num;
  return r;
}

RatFn RatFn::subst_perm(const Perm& w) const {
  std::vector<int> ones(n, 1);
  RatFn r(F, n);
  r.num = num.subst(w, ones);
  bool neg = false;
  for (const auto& [k, e] : den) {
    int a = w[k[0]], b = w[k[1]];
    if (a > b) {
      std::swap(a, b);
      if (k[2] == 0 && (e & 1)) neg = !neg;
    }
    r.den[{a, b, k[2]}] += e;
  }
  if (neg) r.num = -r.num;
  return r;
}

std::string RatFn::str() const {
  std::ostringstream os;
  os << "(" << num.str() << ")";
  for (const auto& [k, e] : den)
    os << "/(y" << k[0] + 1 << (k[2] == 0 ? "-" : "+") << "y" << k[1] + 1
       << ")^" << e;
  return os.str();
}

bool SKKey::operator<(const SKKey& o) const {
  if (mask != o.mask) return mask < o.mask;
  if (w != o.w) return w < o.w;
  return nu < o.nu;
}

std::vector<int> SKAlg::cflip(uint32_t mask, std::vector<int> nu) const {
  for (int p = 0; p < n; ++p)
    if (mask >> p & 1) nu[p] = jd.cmap[nu[p]];
  return nu;
}

RatFn SKAlg::pairR(int a, int b, int ja, int jb) const {
  FieldPtr F = jd.F;
  if (jd.pr[ja] != jd.pr[jb])
    return RatFn::from_poly(inject2(jd.tQ[ja][jb], n, a, b));
  if (ja == jb && jd.fixed(ja)) {
    Poly ya = Poly::var(F, n, a), yb = Poly::var(F, n, b);
    Poly p = (ya * ya + yb * yb).scale(Scalar(F, -2));
    return RatFn::from_poly(p) * RatFn::atom_inv(F, n, a, b, 0, 2) *
           RatFn::atom_inv(F, n, a, b, 1, 2);
  }
  if (ja == jb) return -RatFn::atom_inv(F, n, a, b, 0, 2);
  if (ja != jd.cmap[jb]) throw std::domain_error("labels not in one orbit");
  return -RatFn::atom_inv(F, n, a, b, 1, 2);
}

std::vector<std::vector<int>> SKAlg::sectors() const {
  std::vector<std::vector<int>> out = {{}};
  for (int p = 0; p < n; ++p) {
    std::vector<std::vector<int>> next;
    for (const auto& s : out)
      for (int j = 0; j < jd.m; ++j) {
        auto t = s;
        t.push_back(j);
        next.push_back(t);
      }
    out = next;
  }
  return out;
}

void SKElement::add_term(uint32_t mask, const Perm& w,
                         const std::vector<int>& nu, const RatFn& a) {
  SKKey k{mask, w, nu};
  auto it = t.find(k);
  if (it == t.end()) {
    RatFn r = a;
    r.reduce();
    if (!r.is_zero()) t.emplace(k, r);
    return;
  }
  it->second = it->second + a;
  if (it->second.is_zero()) t.erase(it);
}

SKElement SKElement::term(const SKAlg& A, const RatFn& a, uint32_t mask,
                          const Perm& w, std::vector<int> nu) {
  SKElement r(A);
  r.add_term(mask, w, nu, a);
  return r;
}

SKElement SKElement::idem(const SKAlg& A, std::vector<int> nu) {
  RatFn one = RatFn::from_poly(Poly::one(A.field(), A.n));
  return term(A, one, 0, perm_id(A.n), std::move(nu));
}

SKElement SKElement::yv(const SKAlg& A, int p, std::vector<int> nu) {
  RatFn y = RatFn::from_poly(Poly::var(A.field(), A.n, p));
  return term(A, y, 0, perm_id(A.n), std::move(nu));
}

SKElement SKElement::cg(const SKAlg& A, int p, std::vector<int> nu) {
  RatFn one = RatFn::from_poly(Poly::one(A.field(), A.n));
  return term(A, one, 1u << p, perm_id(A.n), std::move(nu));
}

SKElement SKElement::sigma(const SKAlg& A, int a, std::vector<int> nu) {
  FieldPtr F = A.field();
  int n = A.n;
  SKElement r(A);
  RatFn one = RatFn::from_poly(Poly::one(F, n));
  r.add_term(0, perm_s(n, a), nu, one);
  if (nu[a] == nu[a + 1])
    r.add_term(0, perm_id(n), nu, -RatFn::atom_inv(F, n, a, a + 1, 0));
  if (nu[a] == A.jd.cmap[nu[a + 1]])
    r.add_term(3u << a, perm_id(n), nu, RatFn::atom_inv(F, n, a, a + 1, 1));
  return r;
}

SKElement SKElement::g_y(const SKAlg& A, int p) {
  SKElement r(A);
  for (const auto& nu : A.sectors()) r = r + yv(A, p, nu);
  return r;
}

SKElement SKElement::g_c(const SKAlg& A, int p) {
  SKElement r(A);
  for (const auto& nu : A.sectors()) r = r + cg(A, p, nu);
  return r;
}

SKElement SKElement::g_sigma(const SKAlg& A, int a) {
  SKElement r(A);
  for (const auto& nu : A.sectors()) r = r + sigma(A, a, nu);
  return r;
}

std::vector<int> SKElement::left_sector(const SKKey& k) const {
  return A->cflip(k.mask, perm_act(k.w, k.nu));
}

bool SKElement::operator==(const SKElement& o) const {
  return (*this - o).is_zero();
}

SKElement SKElement::operator-() const {
  SKElement r(*A);
  for (const auto& [k, a] : t) r.t.emplace(k, -a);
  return r;
}

SKElement SKElement::operator+(const SKElement& o) const {
  SKElement r = *this;
  for (const auto& [k, a] : o.t) r.add_term(k.mask, k.w, k.nu, a);
  return r;
}

SKElement SKElement::operator-(const SKElement& o) const {
  return *this + (-o);
}

SKElement SKElement::scale(const Scalar& s) const {
  SKElement r(*A);
  for (const auto& [k, a] : t) {
    RatFn b = a.scale(s);
    if (!b.is_zero()) r.t.emplace(k, b);
  }
  return r;
}

SKElement SKElement::operator*(const SKElement& o) const {
  SKElement r(*A);
  int n = A->n;
  for (const auto& [k1, a1] : t)
    for (const auto& [k2, a2] : o.t) {
      if (k1.nu != o.left_sector(k2)) continue;
      RatFn b = a2;
      uint32_t th = k2.mask;
      Perm v = k2.w;
      std::vector<int> word = canonical_word(k1.w);
      for (int wi = int(word.size()) - 1; wi >= 0; --wi) {
        int i = word[wi];
        b = b.subst_perm(perm_s(n, i));
        bool bi = th >> i & 1, bj = th >> (i + 1) & 1;
        if (bi && bj)
          b = -b;
        else if (bi != bj)
          th ^= 3u << i;
        bool desc = left_descent(v, i);
        Perm nv = perm_mul(perm_s(n, i), v);
        if (desc) {
          std::vector<int> rho = perm_act(nv, k2.nu);
          RatFn R = A->pairR(i, i + 1, rho[i], rho[i + 1]);
          std::vector<int> sgn(n, 1);
          if (th >> i & 1) sgn[i] = -1;
          if (th >> (i + 1) & 1) sgn[i + 1] = -1;
          b = R.subst_signs(sgn) * b;
        }
        v = nv;
      }
      std::vector<int> sgn(n, 1);
      for (int p = 0; p < n; ++p)
        if (k1.mask >> p & 1) sgn[p] = -1;
      RatFn coeff = a1 * b.subst_signs(sgn);
      if (clifford_sign(k1.mask, th) < 0) coeff = -coeff;
      r.add_term(k1.mask ^ th, v, k2.nu, coeff);
    }
  return r;
}

std::string SKElement::str() const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, a] : t) {
    if (!first) os << " + ";
    first = false;
    os << a.str();
    for (int p = 0; p < A->n; ++p)
      if (k.mask >> p & 1) os << " c" << p + 1;
    os << " ts[";
    for (size_t i = 0; i < k.w.size(); ++i) os << (i ? "," : "") << k.w[i];
    os << "] e(";
    for (size_t i = 0; i < k.nu.size(); ++i) os << (i ? "," : "") << k.nu[i];
    os << ")";
  }
  return os.str();
}

SKElement fpair(const SKAlg& A, int a, int b) {
  FieldPtr F = A.field();
  int n = A.n;
  int lo = std::min(a, b), hi = std::max(a, b);
  SKElement r(A);
  for (const auto& nu : A.sectors()) {
    if (nu[a] == nu[b]) {
      RatFn d = RatFn::atom_inv(F, n, lo, hi, 0);
      r.add_term(0, perm_id(n), nu, a < b ? -d : d);
    }
    if (nu[a] == A.jd.cmap[nu[b]]) {
      RatFn s = RatFn::atom_inv(F, n, lo, hi, 1);
      r.add_term((1u << lo) | (1u << hi), perm_id(n), nu, a < b ? s : -s);
    }
  }
  return r;
}

SKElement nf_image(const SKAlg& A, const std::vector<int>& exps, uint32_t mask,
                   const Perm& w, const std::vector<int>& nu) {
  SKElement X = SKElement::idem(A, nu);
  std::vector<int> word = canonical_word(w);
  for (int i = int(word.size()) - 1; i >= 0; --i)
    X = SKElement::g_sigma(A, word[i]) * X;
  for (int p = A.n - 1; p >= 0; --p)
    if (mask >> p & 1) X = SKElement::g_c(A, p) * X;
  for (int p = 0; p < A.n; ++p)
    for (int e = 0; e < exps[p]; ++e) X = SKElement::g_y(A, p) * X;
  return X;
}

// Defect of the braid relation at positions a, a+1, a+2 in sector nu.
static SKElement braid_defect(const SKAlg& A, int a, const std::vector<int>& nu) {
  FieldPtr F = A.field();
  int n = A.n;
  SKElement r(A);
  int j0 = nu[a], j1 = nu[a + 1], j2 = nu[a + 2];
  Poly P = A.jd.tQ[j0][j1];
  if (j0 == j2) {
    Poly numr = inject2(P, n, a + 2, a + 1) - inject2(P, n, a, a + 1);
    RatFn d = RatFn::from_poly(-numr) * RatFn::atom_inv(F, n, a, a + 2, 0);
    r.add_term(0, perm_id(n), nu, d);
  }
  if (j0 == A.jd.cmap[j2]) {
    std::vector<int> id(n), sgn(n, 1);
    std::iota(id.begin(), id.end(), 0);
    sgn[a] = -1;
    Poly numr = inject2(P, n, a + 2, a + 1) - inject2(P, n, a, a + 1).subst(id, sgn);
    RatFn d = RatFn::from_poly(numr) * RatFn::atom_inv(F, n, a, a + 2, 1);
    r.add_term((1u << a) | (1u << (a + 2)), perm_id(n), nu, d);
  }
  return r;
}

Report sk_relation_audit(const SKAlg& A) {
  Report rep;
  int n = A.n, m = A.jd.m;
  auto secs = A.sectors();
  SKElement one(A);
  for (const auto& nu : secs) one = one + SKElement::idem(A, nu);

  bool idem_ok = true;
  for (const auto& nu : secs)
    for (const auto& mu : secs) {
      SKElement p = SKElement::idem(A, nu) * SKElement::idem(A, mu);
      idem_ok = idem_ok && (nu == mu ? p == SKElement::idem(A, nu) : p.is_zero());
    }
  rep.add("orthogonal idempotents", idem_ok);

  bool sort_ok = true;
  for (const auto& nu : secs) {
    for (int p = 0; p < n; ++p) {
      sort_ok = sort_ok && SKElement::g_y(A, p) * SKElement::idem(A, nu) ==
                               SKElement::yv(A, p, nu);
      sort_ok = sort_ok &&
                SKElement::g_c(A, p) * SKElement::idem(A, nu) ==
                    SKElement::idem(A, A.cflip(1u << p, nu)) * SKElement::g_c(A, p);
    }
    for (int a = 0; a + 1 < n; ++a) {
      std::vector<int> snu = perm_act(perm_s(n, a), nu);
      sort_ok = sort_ok && SKElement::g_sigma(A, a) * SKElement::idem(A, nu) ==
                               SKElement::idem(A, snu) * SKElement::g_sigma(A, a);
    }
  }
  rep.add("generators move idempotents by their action", sort_ok);

  bool comm_ok = true;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      SKElement yp = SKElement::g_y(A, p), yq = SKElement::g_y(A, q);
      comm_ok = comm_ok && yp * yq == yq * yp;
    }
  rep.add("polynomial generators commute", comm_ok);

  bool cliff_ok = true;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      SKElement cp = SKElement::g_c(A, p), cq = SKElement::g_c(A, q);
      SKElement anti = cp * cq + cq * cp;
      cliff_ok = cliff_ok && (p == q ? anti == one.scale(Scalar(A.field(), 2))
                                     : anti.is_zero());
    }
  rep.add("clifford generators anticommute and square to one", cliff_ok);

  bool cy_ok = true;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      SKElement cp = SKElement::g_c(A, p), yq = SKElement::g_y(A, q);
      SKElement lhs = cp * yq;
      SKElement rhs = yq * cp;
      cy_ok = cy_ok && (p == q ? lhs == -rhs : lhs == rhs);
    }
  rep.add("clifford and polynomial generators cross correctly", cy_ok);

  bool sc_ok = true;
  for (int a = 0; a + 1 < n; ++a)
    for (int p = 0; p < n; ++p) {
      int sp = p == a ? a + 1 : (p == a + 1 ? a : p);
      sc_ok = sc_ok && SKElement::g_sigma(A, a) * SKElement::g_c(A, p) ==
                           SKElement::g_c(A, sp) * SKElement::g_sigma(A, a);
    }
  rep.add("crossings conjugate the clifford generators", sc_ok);

  bool far_y = true;
  for (int a = 0; a + 1 < n; ++a)
    for (int p = 0; p < n; ++p) {
      if (p == a || p == a + 1) continue;
      far_y = far_y && SKElement::g_sigma(A, a) * SKElement::g_y(A, p) ==
                           SKElement::g_y(A, p) * SKElement::g_sigma(A, a);
    }
  rep.add("crossings commute with far polynomial generators", far_y);

  bool mix_ok = true;
  for (int a = 0; a + 1 < n; ++a) {
    SKElement sg = SKElement::g_sigma(A, a);
    SKElement lhs1 = sg * SKElement::g_y(A, a + 1) - SKElement::g_y(A, a) * sg;
    SKElement lhs2 = SKElement::g_y(A, a + 1) * sg - sg * SKElement::g_y(A, a);
    SKElement rhs1(A), rhs2(A);
    for (const auto& nu : secs) {
      RatFn onef = RatFn::from_poly(Poly::one(A.field(), n));
      if (nu[a] == nu[a + 1]) {
        rhs1.add_term(0, perm_id(n), nu, onef);
        rhs2.add_term(0, perm_id(n), nu, onef);
      }
      if (nu[a] == A.jd.cmap[nu[a + 1]]) {
        rhs1.add_term(3u << a, perm_id(n), nu, -onef);
        rhs2.add_term(3u << a, perm_id(n), nu, onef);
      }
    }
    mix_ok = mix_ok && lhs1 == rhs1 && lhs2 == rhs2;
  }
  rep.add("mixed crossing relations hold", mix_ok);

  bool sq_ok = true;
  for (int a = 0; a + 1 < n; ++a) {
    SKElement sg = SKElement::g_sigma(A, a);
    SKElement rhs(A);
    for (const auto& nu : secs)
      rhs.add_term(0, perm_id(n), nu,
                   RatFn::from_poly(
                       inject2(A.jd.tQ[nu[a]][nu[a + 1]], n, a, a + 1)));
    sq_ok = sq_ok && sg * sg == rhs;
  }
  rep.add("crossing squares give the tQ matrix", sq_ok);

  if (n >= 4) {
    bool far_ok = true;
    for (int a = 0; a + 1 < n; ++a)
      for (int b = a + 2; b + 1 < n; ++b) {
        SKElement sa = SKElement::g_sigma(A, a), sb = SKElement::g_sigma(A, b);
        far_ok = far_ok && sa * sb == sb * sa;
      }
    rep.add("far crossings commute", far_ok);
  }

  if (n >= 3) {
    bool braid_ok = true;
    for (int a = 0; a + 2 < n; ++a) {
      SKElement sa = SKElement::g_sigma(A, a), sb = SKElement::g_sigma(A, a + 1);
      SKElement lhs = sb * sa * sb - sa * sb * sa;
      SKElement rhs(A);
      for (const auto& nu : secs) rhs = rhs + braid_defect(A, a, nu);
      braid_ok = braid_ok && lhs == rhs;
    }
    rep.add("braid defects match", braid_ok);
  }

  (void)m;
  return rep;
}

}  // namespace qha
