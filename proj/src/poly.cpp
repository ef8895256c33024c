#include "qha/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace qha {

Poly Poly::constant(FieldPtr f, int n, const Scalar& s) {
  Poly p(f, n);
  if (!s.is_zero()) p.t[std::vector<int>(n, 0)] = s;
  return p;
}

Poly Poly::var(FieldPtr f, int n, int i, int e) {
  if (i < 0 || i >= n) throw std::domain_error("variable index out of range");
  Poly p(f, n);
  std::vector<int> k(n, 0);
  k[i] = e;
  p.t[k] = Scalar(f, 1);
  return p;
}

bool Poly::operator==(const Poly& o) const { return nvars == o.nvars && t == o.t; }

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [k, v] : r.t) v = -v;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (nvars != o.nvars) throw std::domain_error("variable count mismatch");
  for (const auto& [k, v] : o.t) {
    auto it = t.find(k);
    if (it == t.end()) {
      t[k] = v;
    } else {
      it->second += v;
      if (it->second.is_zero()) t.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  *this += -o;
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  if (nvars != o.nvars) throw std::domain_error("variable count mismatch");
  Poly r(F, nvars);
  for (const auto& [ka, va] : t)
    for (const auto& [kb, vb] : o.t) {
      std::vector<int> k(nvars);
      for (int i = 0; i < nvars; ++i) k[i] = ka[i] + kb[i];
      Scalar prod = va * vb;
      auto it = r.t.find(k);
      if (it == r.t.end()) {
        if (!prod.is_zero()) r.t[k] = prod;
      } else {
        it->second += prod;
        if (it->second.is_zero()) r.t.erase(it);
      }
    }
  return r;
}

Poly Poly::scale(const Scalar& s) const {
  Poly r(F, nvars);
  if (s.is_zero()) return r;
  for (const auto& [k, v] : t) {
    Scalar p = v * s;
    if (!p.is_zero()) r.t[k] = p;
  }
  return r;
}

Poly Poly::skew_mul(const Poly& o, const std::vector<int>& par) const {
  if (nvars != o.nvars) throw std::domain_error("variable count mismatch");
  Poly r(F, nvars);
  for (const auto& [ka, va] : t)
    for (const auto& [kb, vb] : o.t) {
      long cross = 0;
      for (int p = 0; p < nvars; ++p) {
        if (!par[p] || !ka[p]) continue;
        for (int q = 0; q < p; ++q)
          if (par[q]) cross += (long)ka[p] * kb[q];
      }
      std::vector<int> k(nvars);
      for (int i = 0; i < nvars; ++i) k[i] = ka[i] + kb[i];
      Scalar prod = va * vb;
      if (cross & 1) prod = -prod;
      auto it = r.t.find(k);
      if (it == r.t.end()) {
        if (!prod.is_zero()) r.t[k] = prod;
      } else {
        it->second += prod;
        if (it->second.is_zero()) r.t.erase(it);
      }
    }
  return r;
}

Poly Poly::subst(const std::vector<int>& pi, const std::vector<int>& sgn,
                 const std::vector<int>& par) const {
  Poly r(F, nvars);
  for (const auto& [k, v] : t) {
    std::vector<int> nk(nvars, 0);
    long flips = 0;
    for (int i = 0; i < nvars; ++i) {
      if (!k[i]) continue;
      nk[pi[i]] += k[i];
      if (sgn[i] < 0 && (k[i] & 1)) ++flips;
    }
    if (!par.empty()) {
      for (int i = 0; i < nvars; ++i) {
        if (!k[i] || !par[i]) continue;
        for (int j = i + 1; j < nvars; ++j)
          if (k[j] && par[j] && pi[i] > pi[j]) flips += (long)k[i] * k[j];
      }
    }
    Scalar nv = v;
    if (flips & 1) nv = -nv;
    auto it = r.t.find(nk);
    if (it == r.t.end()) {
      r.t[nk] = nv;
    } else {
      it->second += nv;
      if (it->second.is_zero()) r.t.erase(it);
    }
  }
  return r;
}

Poly Poly::divide_exact(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  Poly rem = *this, q(F, nvars);
  auto lead = d.t.rbegin();
  while (!rem.is_zero()) {
    auto lt = rem.t.rbegin();
    std::vector<int> k(nvars);
    for (int i = 0; i < nvars; ++i) {
      k[i] = lt->first[i] - lead->first[i];
      if (k[i] < 0) throw std::domain_error("polynomial division not exact");
    }
    Scalar f = lt->second / lead->second;
    Poly term(F, nvars);
    term.t[k] = f;
    q += term;
    rem -= term * d;
  }
  return q;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw std::domain_error("negative polynomial power");
  Poly r = one(F, nvars), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Scalar Poly::eval(const std::vector<Scalar>& xs) const {
  Scalar acc(F);
  for (const auto& [k, v] : t) {
    Scalar term = v;
    for (int i = 0; i < nvars; ++i)
      if (k[i]) term *= xs[i].pow(k[i]);
    acc += term;
  }
  return acc;
}

Scalar Poly::coeff(const std::vector<int>& e) const {
  auto it = t.find(e);
  return it == t.end() ? Scalar(F) : it->second;
}

int Poly::total_degree() const {
  int d = -1;
  for (const auto& [k, v] : t) {
    int s = 0;
    for (int e : k) s += e;
    if (s > d) d = s;
  }
  return d;
}

void Poly::add_term(const std::vector<int>& e, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = t.find(e);
  if (it == t.end()) {
    t[e] = s;
  } else {
    it->second += s;
    if (it->second.is_zero()) t.erase(it);
  }
}

std::string Poly::str() const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t.rbegin(); it != t.rend(); ++it) {
    std::string cs = it->second.str();
    if (!first) os << " + ";
    first = false;
    bool unit = it->second.is_one();
    bool mono = false;
    for (int e : it->first) mono |= e != 0;
    if (unit && mono) {
    } else if (cs.find('+') != std::string::npos ||
               cs.find('-') != std::string::npos) {
      os << "(" << cs << ")";
      if (mono) os << "*";
    } else {
      os << cs;
      if (mono) os << "*";
    }
    bool firstv = true;
    for (int i = 0; i < nvars; ++i) {
      if (!it->first[i]) continue;
      if (!firstv) os << "*";
      firstv = false;
      os << "x" << i + 1;
      if (it->first[i] > 1) os << "^" << it->first[i];
    }
  }
  return os.str();
}

Poly inject2(const Poly& q, int nvars, int va, int vb) {
  Poly r(q.F, nvars);
  for (const auto& [e, v] : q.t) {
    std::vector<int> e2(nvars, 0);
    e2[va] += e[0];
    e2[vb] += e[1];
    r.add_term(e2, v);
  }
  return r;
}

static Poly swap_pair(const Poly& f, int a, int b, bool negate) {
  std::vector<int> pi(f.nvars), sgn(f.nvars, 1);
  for (int i = 0; i < f.nvars; ++i) pi[i] = i;
  pi[a] = b;
  pi[b] = a;
  if (negate) sgn[a] = sgn[b] = -1;
  return f.subst(pi, sgn);
}

Poly dd_plain(const Poly& f, int a) {
  Poly num = f - swap_pair(f, a, a + 1, false);
  if (num.is_zero()) return Poly::zero(f.F, f.nvars);
  Poly den = Poly::var(f.F, f.nvars, a + 1) - Poly::var(f.F, f.nvars, a);
  return num.divide_exact(den);
}

Poly dd_bar(const Poly& f, int a) {
  Poly num = f - swap_pair(f, a, a + 1, true);
  if (num.is_zero()) return Poly::zero(f.F, f.nvars);
  Poly den = Poly::var(f.F, f.nvars, a + 1) + Poly::var(f.F, f.nvars, a);
  return num.divide_exact(den);
}

}  // namespace qha
