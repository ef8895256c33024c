#include "qha/rootdata.hpp"

#include <gmpxx.h>

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qha {

void Report::add(const std::string& name, bool pass, const std::string& detail) {
  items.push_back({name, pass, detail});
}

bool Report::ok() const {
  for (const auto& it : items)
    if (!it.pass) return false;
  return true;
}

std::string Report::str() const {
  std::ostringstream os;
  for (const auto& it : items) {
    os << (it.pass ? "PASS " : "FAIL ") << it.name;
    if (!it.detail.empty()) os << " (" << it.detail << ")";
    os << "\n";
  }
  return os.str();
}

static Poly swap_uv(const Poly& p) { return p.subst({1, 0}, {1, 1}); }

static Poly flip_var(const Poly& p, int which) {
  std::vector<int> sgn = {1, 1};
  sgn[which] = -1;
  return p.subst({0, 1}, sgn);
}

static bool even_exponents(const Poly& p, int which) {
  for (const auto& [e, v] : p.t)
    if (e[which] % 2 != 0) return false;
  return true;
}

Report RootDatum::validate() const {
  Report rep;
  bool sz = int(par.size()) == m && int(Q.size()) == m;
  for (const auto& row : Q) sz = sz && int(row.size()) == m;
  rep.add("sizes", sz);
  if (!sz) return rep;

  bool diag = true, sym = true, even = true, twovar = true;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (Q[i][j].nvars != 2) twovar = false;
      if (i == j && !Q[i][j].is_zero()) diag = false;
      if (Q[i][j] != swap_uv(Q[j][i])) sym = false;
      if (par[i] && !even_exponents(Q[i][j], 0)) even = false;
      if (par[j] && !even_exponents(Q[i][j], 1)) even = false;
    }
  rep.add("two-variable entries", twovar);
  rep.add("diagonal vanishes", diag);
  rep.add("Q[i][j](w,z) = Q[j][i](z,w)", sym);
  rep.add("even exponents at odd vertices", even);

  if (grading) {
    bool g = int(grading->diag.size()) == m && int(grading->off.size()) == m;
    if (g)
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
          g = g && int(grading->off[i].size()) == m &&
              grading->off[i][j] == grading->off[j][i] &&
              grading->off[i][i] == grading->diag[i];
    rep.add("grading symmetric", g);
  }
  return rep;
}

Report JDatum::validate() const {
  Report rep;
  bool sz = int(cmap.size()) == m && int(tQ.size()) == m &&
            int(eps.size()) == m && int(pr.size()) == m;
  for (const auto& row : tQ) sz = sz && int(row.size()) == m;
  rep.add("sizes", sz);
  if (!sz) return rep;

  bool inv = true;
  for (int j = 0; j < m; ++j)
    inv = inv && cmap[j] >= 0 && cmap[j] < m && cmap[cmap[j]] == j;
  rep.add("cmap is an involution", inv);
  if (!inv) return rep;

  bool sym = true, cflip = true, orbz = true, prok = true;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (tQ[i][j] != swap_uv(tQ[j][i])) sym = false;
      if (tQ[cmap[i]][j] != flip_var(tQ[i][j], 0)) cflip = false;
      if (tQ[i][cmap[j]] != flip_var(tQ[i][j], 1)) cflip = false;
      bool same_orbit = (j == i || j == cmap[i]);
      if (same_orbit != tQ[i][j].is_zero()) orbz = false;
      if (same_orbit != (pr[i] == pr[j])) prok = false;
    }
  rep.add("tQ[i][j](u,v) = tQ[j][i](v,u)", sym);
  rep.add("tQ constant under sign flip across cmap", cflip);
  rep.add("tQ vanishes exactly on orbit pairs", orbz);
  rep.add("pr separates orbits", prok);

  std::vector<int> seen(m, 0);
  bool sec = true;
  for (int j : jplus) {
    if (j < 0 || j >= m || j != std::min(j, cmap[j])) sec = false;
    else seen[j]++;
  }
  for (int j = 0; j < m; ++j)
    if (j == std::min(j, cmap[j]) && (j >= int(seen.size()) || seen[j] != 1))
      sec = false;
  rep.add("jplus lists least orbit reps once", sec);

  bool ep = true;
  for (int j = 0; j < m; ++j) {
    if (eps[j] != 0 && eps[j] != 1) ep = false;
    if (fixed(j) && eps[j] != 0) ep = false;
    if (!fixed(j) && eps[j] + eps[cmap[j]] != 1) ep = false;
    bool in_sec = (j == std::min(j, cmap[j]));
    if ((eps[j] == 0) != in_sec) ep = false;
  }
  rep.add("eps is 0 exactly on the section", ep);
  return rep;
}

Report CartanSeed::validate() const {
  Report rep;
  bool sz = int(A.size()) == m && int(par.size()) == m;
  for (const auto& row : A) sz = sz && int(row.size()) == m;
  rep.add("sizes", sz);
  if (!sz) return rep;

  bool gcm = true;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j && A[i][j] != 2) gcm = false;
      if (i != j && A[i][j] > 0) gcm = false;
      if ((A[i][j] == 0) != (A[j][i] == 0)) gcm = false;
    }
  rep.add("generalized Cartan matrix", gcm);

  bool evenrows = true;
  for (int i = 0; i < m; ++i)
    if (par[i])
      for (int j = 0; j < m; ++j)
        if (A[i][j] % 2 != 0) evenrows = false;
  rep.add("even rows at odd vertices", evenrows);

  // Symmetrizability: propagate d along edges, check cycles.
  bool symz = gcm;
  if (gcm) {
    std::vector<mpq_class> d(m, 0);
    for (int s = 0; s < m; ++s) {
      if (d[s] != 0) continue;
      d[s] = 1;
      std::vector<int> stack = {s};
      while (!stack.empty() && symz) {
        int i = stack.back();
        stack.pop_back();
        for (int j = 0; j < m; ++j) {
          if (i == j || A[i][j] == 0) continue;
          mpq_class dj = d[i] * A[i][j] / A[j][i];
          if (d[j] == 0) {
            d[j] = dj;
            stack.push_back(j);
          } else if (d[j] != dj) {
            symz = false;
          }
        }
      }
    }
  }
  rep.add("symmetrizable", symz);

  bool tsym = true, tsupp = true, tlead = true;
  for (const auto& [key, val] : t) {
    auto [i, j, r, s] = key;
    if (i < 0 || j < 0 || i >= m || j >= m || i == j) {
      tsupp = false;
      continue;
    }
    auto supp = support_set(*this, i, j);
    bool found = false;
    for (auto& p : supp) found = found || (p.first == r && p.second == s);
    if (!found) tsupp = false;
    auto it = t.find({j, i, s, r});
    if (it != t.end() && !(it->second == val)) tsym = false;
    if (r == -A[i][j] && s == 0 && val.is_zero()) tlead = false;
  }
  rep.add("t supported on the admissible set", tsupp);
  rep.add("t symmetric", tsym);
  rep.add("leading t invertible", tlead);
  return rep;
}

std::vector<std::pair<int, int>> support_set(const CartanSeed& cs, int i, int j) {
  std::vector<std::pair<int, int>> out;
  int aij = cs.A[i][j], aji = cs.A[j][i];
  for (int r = 0; r <= -aij; ++r)
    for (int s = 0; s <= -aji; ++s) {
      if (aji * r + aij * s != -aij * aji) continue;
      if (cs.par[i] && r % 2) continue;
      if (cs.par[j] && s % 2) continue;
      out.push_back({r, s});
    }
  return out;
}

RootDatum cartan_to_Q(FieldPtr F, const CartanSeed& cs) {
  Report rep = cs.validate();
  if (!rep.ok()) throw std::invalid_argument("bad Cartan seed:\n" + rep.str());

  RootDatum rd;
  rd.F = F;
  rd.m = cs.m;
  rd.par = cs.par;
  rd.Q.assign(cs.m, std::vector<Poly>(cs.m, Poly::zero(F, 2)));
  for (int i = 0; i < cs.m; ++i)
    for (int j = 0; j < cs.m; ++j) {
      if (i == j) continue;
      for (auto [r, s] : support_set(cs, i, j)) {
        Scalar c(F, 1);
        auto it = cs.t.find({i, j, r, s});
        if (it == cs.t.end()) it = cs.t.find({j, i, s, r});
        if (it != cs.t.end()) c = it->second;
        rd.Q[i][j].add_term({r, s}, c);
      }
    }

  // Minimal positive integer symmetrizer.
  std::vector<mpq_class> d(cs.m, 0);
  for (int s = 0; s < cs.m; ++s) {
    if (d[s] != 0) continue;
    d[s] = 1;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int i = stack.back();
      stack.pop_back();
      for (int j = 0; j < cs.m; ++j) {
        if (i == j || cs.A[i][j] == 0) continue;
        if (d[j] == 0) {
          d[j] = d[i] * cs.A[i][j] / cs.A[j][i];
          stack.push_back(j);
        }
      }
    }
  }
  mpz_class den = 1;
  for (auto& q : d) den = lcm(den, q.get_den());
  std::vector<mpz_class> di(cs.m);
  mpz_class g = 0;
  for (int i = 0; i < cs.m; ++i) {
    di[i] = d[i].get_num() * (den / d[i].get_den());
    g = gcd(g, di[i]);
  }
  GradingData gd;
  gd.diag.resize(cs.m);
  gd.off.assign(cs.m, std::vector<int>(cs.m, 0));
  for (int i = 0; i < cs.m; ++i) {
    mpz_class v = 2 * di[i] / g;
    gd.diag[i] = int(v.get_si());
    for (int j = 0; j < cs.m; ++j) {
      mpz_class o = di[i] * cs.A[i][j] / g;
      gd.off[i][j] = int(o.get_si());
    }
  }
  rd.grading = gd;
  return rd;
}

Doubled i_to_j(const RootDatum& rd) {
  Report rep = rd.validate();
  if (!rep.ok()) throw std::invalid_argument("bad root datum:\n" + rep.str());

  Doubled D;
  D.jlab_.assign(rd.m, {-1, -1});
  for (int i = 0; i < rd.m; ++i)
    for (int e = 0; e < (rd.par[i] ? 1 : 2); ++e) {
      D.jlab_[i][e] = int(D.ivert.size());
      D.ivert.push_back(i);
      D.epsbit.push_back(e);
    }

  JDatum& jd = D.jd;
  jd.F = rd.F;
  jd.m = int(D.ivert.size());
  jd.cmap.resize(jd.m);
  jd.eps = D.epsbit;
  jd.pr = D.ivert;
  for (int a = 0; a < jd.m; ++a) {
    int i = D.ivert[a], e = D.epsbit[a];
    jd.cmap[a] = rd.par[i] ? a : D.jlab(i, 1 - e);
  }
  for (int a = 0; a < jd.m; ++a)
    if (jd.eps[a] == 0) jd.jplus.push_back(a);

  jd.tQ.assign(jd.m, std::vector<Poly>(jd.m, Poly::zero(rd.F, 2)));
  for (int a = 0; a < jd.m; ++a)
    for (int b = 0; b < jd.m; ++b) {
      int i = D.ivert[a], ip = D.ivert[b];
      int e = D.epsbit[a], ep = D.epsbit[b];
      for (const auto& [ex, c] : rd.Q[i][ip].t) {
        int r = ex[0], s = ex[1];
        int sg = (rd.par[i] ? r / 2 : 0) + (rd.par[ip] ? s / 2 : 0) + e * r + ep * s;
        jd.tQ[a][b].add_term({r, s}, (sg % 2) ? -c : c);
      }
    }

  if (rd.grading) {
    GradingData gd;
    gd.diag.resize(jd.m);
    gd.off.assign(jd.m, std::vector<int>(jd.m, 0));
    for (int a = 0; a < jd.m; ++a) {
      gd.diag[a] = rd.grading->diag[D.ivert[a]];
      for (int b = 0; b < jd.m; ++b)
        gd.off[a][b] = rd.grading->off[D.ivert[a]][D.ivert[b]];
    }
    jd.grading = gd;
  }
  return D;
}

RootDatum j_to_i(const JDatum& jd, Report* rep) {
  Report local;
  Report& R = rep ? *rep : local;
  Report v = jd.validate();
  for (auto& it : v.items) R.items.push_back(it);

  std::vector<int> reps;
  for (int j = 0; j < jd.m; ++j)
    if (j == std::min(j, jd.cmap[j])) reps.push_back(j);

  RootDatum rd;
  rd.F = jd.F;
  rd.m = int(reps.size());
  rd.par.resize(rd.m);
  for (int k = 0; k < rd.m; ++k) rd.par[k] = jd.parity(reps[k]);

  rd.Q.assign(rd.m, std::vector<Poly>(rd.m, Poly::zero(jd.F, 2)));
  bool even_ok = true;
  for (int k = 0; k < rd.m; ++k)
    for (int l = 0; l < rd.m; ++l) {
      for (const auto& [ex, c] : jd.tQ[reps[k]][reps[l]].t) {
        int r = ex[0], s = ex[1];
        if ((rd.par[k] && r % 2) || (rd.par[l] && s % 2)) even_ok = false;
        int sg = (rd.par[k] ? r / 2 : 0) + (rd.par[l] ? s / 2 : 0);
        rd.Q[k][l].add_term({r, s}, (sg % 2) ? -c : c);
      }
    }
  R.add("orbit representatives carry even exponents at fixed labels", even_ok);

  if (jd.grading) {
    GradingData gd;
    gd.diag.resize(rd.m);
    gd.off.assign(rd.m, std::vector<int>(rd.m, 0));
    for (int k = 0; k < rd.m; ++k) {
      gd.diag[k] = jd.grading->diag[reps[k]];
      for (int l = 0; l < rd.m; ++l)
        gd.off[k][l] = jd.grading->off[reps[k]][reps[l]];
    }
    rd.grading = gd;
  }
  Report back = rd.validate();
  R.add("reconstructed datum valid", back.ok());
  return rd;
}

RootDatum datum_a1_allodd(FieldPtr F) {
  CartanSeed cs;
  cs.m = 2;
  cs.A = {{2, -2}, {-2, 2}};
  cs.par = {1, 1};
  return cartan_to_Q(F, cs);
}

RootDatum datum_a22_mixed(FieldPtr F) {
  CartanSeed cs;
  cs.m = 2;
  cs.A = {{2, -4}, {-1, 2}};
  cs.par = {1, 0};
  return cartan_to_Q(F, cs);
}

RootDatum datum_a1_even(FieldPtr F, const Scalar& a) {
  CartanSeed cs;
  cs.m = 2;
  cs.A = {{2, -2}, {-2, 2}};
  cs.par = {0, 0};
  cs.t[{0, 1, 1, 1}] = -a;
  cs.t[{1, 0, 1, 1}] = -a;
  return cartan_to_Q(F, cs);
}

}  // namespace qha
