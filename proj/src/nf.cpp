#include "qha/nf.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "qha/clifford.hpp"

namespace qha {

namespace {

// Elementary rewrites of reduced words: swapping a far pair, or replacing
// a block [x, y, x] with [y, x, y] when |x - y| = 1.
struct WordStep {
  std::vector<int> next;
  int pos = 0;
  int kind = 0;  // 0 far swap, 1 braid block
};

std::vector<WordStep> word_steps(const std::vector<int>& w) {
  std::vector<WordStep> out;
  int sz = int(w.size());
  for (int p = 0; p + 1 < sz; ++p)
    if (std::abs(w[p] - w[p + 1]) >= 2) {
      WordStep st{w, p, 0};
      std::swap(st.next[p], st.next[p + 1]);
      out.push_back(std::move(st));
    }
  for (int p = 0; p + 2 < sz; ++p)
    if (w[p] == w[p + 2] && std::abs(w[p] - w[p + 1]) == 1) {
      WordStep st{w, p, 1};
      std::swap(st.next[p], st.next[p + 1]);
      st.next[p + 2] = st.next[p];
      out.push_back(std::move(st));
    }
  return out;
}

// Breadth-first path between two reduced words of the same permutation.
// Each step's pos/kind refer to the word it was applied to.
std::vector<WordStep> move_path(const std::vector<int>& from,
                                const std::vector<int>& to) {
  if (from == to) return {};
  struct Rec {
    std::vector<int> prev;
    int pos, kind;
  };
  std::map<std::vector<int>, Rec> parent;
  std::deque<std::vector<int>> queue{from};
  parent[from] = Rec{{}, -1, -1};
  while (!queue.empty() && !parent.count(to)) {
    std::vector<int> cur = queue.front();
    queue.pop_front();
    for (auto& st : word_steps(cur)) {
      if (parent.count(st.next)) continue;
      parent[st.next] = Rec{cur, st.pos, st.kind};
      queue.push_back(st.next);
    }
  }
  if (!parent.count(to)) throw std::logic_error("disconnected word graph");
  std::vector<WordStep> path;
  std::vector<int> cur = to;
  while (cur != from) {
    const Rec& rec = parent[cur];
    path.push_back(WordStep{cur, rec.pos, rec.kind});
    cur = rec.prev;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> subword(const std::vector<int>& w, int lo, int hi) {
  return std::vector<int>(w.begin() + lo, w.begin() + hi);
}

template <class K>
void add_into(std::map<K, Scalar>& m, const K& k, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = m.find(k);
  if (it == m.end()) {
    m.emplace(k, s);
    return;
  }
  it->second += s;
  if (it->second.is_zero()) m.erase(it);
}

template <class K>
void add_all(std::map<K, Scalar>& m, const std::map<K, Scalar>& o,
             const Scalar& s) {
  for (const auto& [k, c] : o) add_into(m, k, c * s);
}

std::vector<std::vector<int>> all_sectors(int m, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  while (true) {
    out.push_back(cur);
    int p = 0;
    while (p < n && cur[p] == m - 1) cur[p++] = 0;
    if (p == n) break;
    ++cur[p];
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- RC side

bool RCKey::operator<(const RCKey& o) const {
  if (exps != o.exps) return exps < o.exps;
  if (mask != o.mask) return mask < o.mask;
  if (w != o.w) return w < o.w;
  return nu < o.nu;
}

RCEngine::RCEngine(JDatum jd_, int n_) : jd(std::move(jd_)), n(n_) {
  if (!jd.validate().ok())
    throw std::invalid_argument("label datum fails validation");
}

std::vector<std::vector<int>> RCEngine::sectors() const {
  return all_sectors(jd.m, n);
}

std::vector<int> RCEngine::cflip(uint32_t mask, std::vector<int> nu) const {
  for (int p = 0; p < n; ++p)
    if (mask >> p & 1) nu[p] = jd.cmap[nu[p]];
  return nu;
}

std::vector<int> RCEngine::left_sector(const RCKey& k) const {
  return cflip(k.mask, perm_act(k.w, k.nu));
}

namespace {

RCTerms rc_leftmul_c(int p, const RCTerms& T) {
  RCTerms out;
  for (const auto& [k, s] : T) {
    int sgn = (k.exps[p] & 1) ? -1 : 1;
    sgn *= clifford_sign(1u << p, k.mask);
    RCKey k2 = k;
    k2.mask ^= 1u << p;
    add_into(out, k2, sgn < 0 ? -s : s);
  }
  return out;
}

// All variables are even here, so a polynomial factor lands in the
// exponents directly.
RCTerms rc_polymul(const Poly& q, const RCTerms& T) {
  RCTerms out;
  for (const auto& [e, c] : q.t)
    for (const auto& [k, s] : T) {
      RCKey k2 = k;
      for (int p = 0; p < int(e.size()); ++p) k2.exps[p] += e[p];
      add_into(out, k2, c * s);
    }
  return out;
}

RCTerms rc_mask_prepend(uint32_t eta, const RCTerms& T) {
  if (!eta) return T;
  RCTerms out;
  for (const auto& [k, s] : T) {
    int sgn = clifford_sign(eta, k.mask);
    for (int p = 0; p < int(k.exps.size()); ++p)
      if ((eta >> p & 1) && (k.exps[p] & 1)) sgn = -sgn;
    RCKey k2 = k;
    k2.mask ^= eta;
    add_into(out, k2, sgn < 0 ? -s : s);
  }
  return out;
}

RCTerms rc_mono_prepend(const std::vector<int>& mono, const RCTerms& T) {
  RCTerms out;
  for (const auto& [k, s] : T) {
    RCKey k2 = k;
    for (int p = 0; p < int(mono.size()); ++p) k2.exps[p] += mono[p];
    add_into(out, k2, s);
  }
  return out;
}

// Defect of the braid relation applied termwise: for each basis term the
// case split reads the three labels at a, a+1, a+2 of its left sector.
RCTerms rc_defect_apply(RCEngine& E, int a, const RCTerms& T) {
  FieldPtr F = E.field();
  int n = E.n;
  RCTerms out;
  for (const auto& [k, s] : T) {
    std::vector<int> rho = E.left_sector(k);
    int j0 = rho[a], j1 = rho[a + 1], j2 = rho[a + 2];
    const Poly& P = E.jd.tQ[j0][j1];
    RCTerms one{{k, s}};
    if (j0 == j2) {
      Poly numr = inject2(P, n, a + 2, a + 1) - inject2(P, n, a, a + 1);
      if (!numr.is_zero()) {
        Poly q = numr.divide_exact(Poly::var(F, n, a + 2) - Poly::var(F, n, a));
        add_all(out, rc_polymul(q, one), Scalar(F, 1));
      }
    }
    if (j0 == E.jd.cmap[j2]) {
      std::vector<int> id(n), sgn(n, 1);
      std::iota(id.begin(), id.end(), 0);
      sgn[a] = -1;
      Poly numr =
          inject2(P, n, a + 2, a + 1) - inject2(P, n, a, a + 1).subst(id, sgn);
      if (!numr.is_zero()) {
        Poly q = numr.divide_exact(Poly::var(F, n, a + 2) + Poly::var(F, n, a));
        RCTerms piece = rc_leftmul_c(a, rc_leftmul_c(a + 2, one));
        add_all(out, rc_polymul(q, piece), Scalar(F, 1));
      }
    }
  }
  return out;
}

}  // namespace

RCTerms RCEngine::expand_reduced(const std::vector<int>& word,
                                 const std::vector<int>& mu) {
  auto mk = std::make_pair(word, mu);
  auto hit = word_memo_.find(mk);
  if (hit != word_memo_.end()) return hit->second;

  Perm w = word_to_perm(n, word);
  std::vector<int> cw = canonical_word(w);
  RCKey base{std::vector<int>(n, 0), 0, w, mu};
  RCTerms out;
  if (word == cw) {
    out[base] = Scalar(field(), 1);
  } else {
    out[base] = Scalar(field(), 1);
    std::vector<int> cur = word;
    for (const auto& st : move_path(word, cw)) {
      if (st.kind == 1) {
        int x = cur[st.pos];
        int a = std::min(x, cur[st.pos + 1]);
        RCTerms suf = expand_reduced(subword(cur, st.pos + 3, int(cur.size())), mu);
        RCTerms C = word_apply(subword(cur, 0, st.pos),
                               rc_defect_apply(*this, a, suf));
        int dir = (x == a + 1) ? 1 : -1;
        add_all(out, C, Scalar(field(), dir));
      }
      cur = st.next;
    }
  }
  word_memo_[mk] = out;
  return out;
}

const RCTerms& RCEngine::sigma_step(int b, const Perm& u,
                                    const std::vector<int>& mu) {
  auto mk = std::make_tuple(b, u, mu);
  auto hit = step_memo_.find(mk);
  if (hit != step_memo_.end()) return hit->second;

  RCTerms out;
  if (!left_descent(u, b)) {
    std::vector<int> word{b};
    for (int a : canonical_word(u)) word.push_back(a);
    out = expand_reduced(word, mu);
  } else {
    Perm su = perm_mul(perm_s(n, b), u);
    std::vector<int> target{b};
    for (int a : canonical_word(su)) target.push_back(a);
    // sigma_u along its canonical word, rewritten to start with letter b
    RCTerms rest;
    std::vector<int> cur = canonical_word(u);
    for (const auto& st : move_path(canonical_word(u), target)) {
      if (st.kind == 1) {
        int x = cur[st.pos];
        int a = std::min(x, cur[st.pos + 1]);
        RCTerms suf = expand_reduced(subword(cur, st.pos + 3, int(cur.size())), mu);
        RCTerms C = word_apply(subword(cur, 0, st.pos),
                               rc_defect_apply(*this, a, suf));
        int dir = (x == a + 1) ? 1 : -1;
        add_all(rest, C, Scalar(field(), dir));
      }
      cur = st.next;
    }
    std::vector<int> rho = perm_act(su, mu);
    Poly q = inject2(jd.tQ[rho[b]][rho[b + 1]], n, b, b + 1);
    RCKey base{std::vector<int>(n, 0), 0, su, mu};
    if (!q.is_zero())
      out = rc_polymul(q, RCTerms{{base, Scalar(field(), 1)}});
    add_all(out, letter_apply(b, rest), Scalar(field(), 1));
  }
  return step_memo_[mk] = out;
}

RCTerms RCEngine::letter_apply(int b, const RCTerms& E) {
  FieldPtr F = field();
  RCTerms out;
  for (const auto& [k, s] : E) {
    RCKey k0 = k;
    k0.exps.assign(n, 0);
    std::vector<int> rho = left_sector(k0);
    Poly f(F, n);
    f.add_term(k.exps, Scalar(F, 1));

    bool hb = k.mask >> b & 1, hb1 = k.mask >> (b + 1) & 1;
    uint32_t eta = k.mask & ~((1u << b) | (1u << (b + 1)));
    if (hb) eta |= 1u << (b + 1);
    if (hb1) eta |= 1u << b;
    Scalar c1 = (hb && hb1) ? -s : s;
    std::vector<int> sexp = k.exps;
    std::swap(sexp[b], sexp[b + 1]);
    RCTerms T1 = rc_mono_prepend(sexp, rc_mask_prepend(eta, sigma_step(b, k.w, k.nu)));
    add_all(out, T1, c1);

    if (rho[b] == rho[b + 1]) {
      Poly f2 = dd_plain(f, b);
      if (!f2.is_zero())
        add_all(out, rc_polymul(f2, RCTerms{{k0, s}}), Scalar(F, 1));
    }
    if (rho[b] == jd.cmap[rho[b + 1]]) {
      Poly f3 = dd_bar(f, b);
      if (!f3.is_zero()) {
        RCTerms X = rc_polymul(f3, RCTerms{{k0, s}});
        X = rc_leftmul_c(b, rc_leftmul_c(b + 1, X));
        add_all(out, X, Scalar(F, -1));
      }
    }
  }
  return out;
}

RCTerms RCEngine::word_apply(const std::vector<int>& word, const RCTerms& E) {
  RCTerms cur = E;
  for (int i = int(word.size()) - 1; i >= 0; --i)
    cur = letter_apply(word[i], cur);
  return cur;
}

RCEl RCEl::term(RCEngine& E, const std::vector<int>& exps, uint32_t mask,
                const Perm& w, const std::vector<int>& nu, const Scalar& s) {
  RCEl r(E);
  if (!s.is_zero()) r.t[RCKey{exps, mask, w, nu}] = s;
  return r;
}

RCEl RCEl::idem(RCEngine& E, const std::vector<int>& nu) {
  return term(E, std::vector<int>(E.n, 0), 0, perm_id(E.n), nu,
              Scalar(E.field(), 1));
}

RCEl RCEl::yv(RCEngine& E, int p, const std::vector<int>& nu) {
  std::vector<int> e(E.n, 0);
  e[p] = 1;
  return term(E, e, 0, perm_id(E.n), nu, Scalar(E.field(), 1));
}

RCEl RCEl::cg(RCEngine& E, int p, const std::vector<int>& nu) {
  return term(E, std::vector<int>(E.n, 0), 1u << p, perm_id(E.n), nu,
              Scalar(E.field(), 1));
}

RCEl RCEl::sigma(RCEngine& E, int a, const std::vector<int>& nu) {
  return term(E, std::vector<int>(E.n, 0), 0, perm_s(E.n, a), nu,
              Scalar(E.field(), 1));
}

RCEl RCEl::g_y(RCEngine& E, int p) {
  RCEl r(E);
  for (const auto& nu : E.sectors()) r = r + yv(E, p, nu);
  return r;
}

RCEl RCEl::g_c(RCEngine& E, int p) {
  RCEl r(E);
  for (const auto& nu : E.sectors()) r = r + cg(E, p, nu);
  return r;
}

RCEl RCEl::g_sigma(RCEngine& E, int a) {
  RCEl r(E);
  for (const auto& nu : E.sectors()) r = r + sigma(E, a, nu);
  return r;
}

RCEl RCEl::operator-() const {
  RCEl r(*this);
  for (auto& [k, s] : r.t) s = -s;
  return r;
}

RCEl RCEl::operator+(const RCEl& o) const {
  RCEl r(*this);
  if (!r.E) r.E = o.E;
  for (const auto& [k, s] : o.t) add_into(r.t, k, s);
  return r;
}

RCEl RCEl::operator-(const RCEl& o) const { return *this + (-o); }

RCEl RCEl::scale(const Scalar& s) const {
  RCEl r(*E);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : t) r.t[k] = c * s;
  return r;
}

void RCEl::add_term(const RCKey& k, const Scalar& s) { add_into(t, k, s); }

RCEl RCEl::operator*(const RCEl& o) const {
  RCEngine& eng = *E;
  RCEl r(eng);
  for (const auto& [k1, s1] : t) {
    RCTerms sel;
    for (const auto& [k2, s2] : o.t)
      if (eng.left_sector(k2) == k1.nu) sel.emplace(k2, s2);
    if (sel.empty()) continue;
    RCTerms M = eng.word_apply(canonical_word(k1.w), sel);
    for (int p = eng.n - 1; p >= 0; --p)
      if (k1.mask >> p & 1) M = rc_leftmul_c(p, M);
    M = rc_mono_prepend(k1.exps, M);
    add_all(r.t, M, s1);
  }
  return r;
}

std::string RCEl::str() const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, s] : t) {
    if (!first) os << " + ";
    first = false;
    os << "(" << s.str() << ")";
    for (int p = 0; p < int(k.exps.size()); ++p)
      if (k.exps[p]) os << " y" << p + 1 << "^" << k.exps[p];
    for (int p = 0; p < int(k.exps.size()); ++p)
      if (k.mask >> p & 1) os << " c" << p + 1;
    os << " s[";
    for (int a : canonical_word(k.w)) os << a + 1;
    os << "] e(";
    for (int j : k.nu) os << j;
    os << ")";
  }
  return os.str();
}

// ----------------------------------------------------------------- R side

bool RKey::operator<(const RKey& o) const {
  if (exps != o.exps) return exps < o.exps;
  if (w != o.w) return w < o.w;
  return nu < o.nu;
}

REngine::REngine(RootDatum rd_, int n_) : rd(std::move(rd_)), n(n_) {
  if (!rd.validate().ok())
    throw std::invalid_argument("vertex datum fails validation");
}

std::vector<std::vector<int>> REngine::sectors() const {
  return all_sectors(rd.m, n);
}

std::vector<int> REngine::left_sector(const RKey& k) const {
  return perm_act(k.w, k.nu);
}

std::vector<int> REngine::sector_par(const std::vector<int>& rho) const {
  std::vector<int> pv(rho.size());
  for (size_t i = 0; i < rho.size(); ++i) pv[i] = rd.par[rho[i]];
  return pv;
}

RTerms REngine::leftmul_mono(const std::vector<int>& mono, const RTerms& E) {
  bool triv = std::all_of(mono.begin(), mono.end(), [](int e) { return !e; });
  if (triv) return E;
  FieldPtr F = field();
  RTerms out;
  Poly a(F, n);
  a.add_term(mono, Scalar(F, 1));
  for (const auto& [k, s] : E) {
    std::vector<int> pv = sector_par(left_sector(k));
    Poly bq(F, n);
    bq.add_term(k.exps, Scalar(F, 1));
    Poly pr = a.skew_mul(bq, pv);
    RKey k2 = k;
    k2.exps = pr.t.begin()->first;
    add_into(out, k2, pr.t.begin()->second * s);
  }
  return out;
}

namespace {

// Polynomial factors whose odd variables only carry even exponents land in
// the exponents directly.
RTerms r_polymul_plain(const Poly& q, const RTerms& T) {
  RTerms out;
  for (const auto& [e, c] : q.t)
    for (const auto& [k, s] : T) {
      RKey k2 = k;
      for (int p = 0; p < int(e.size()); ++p) k2.exps[p] += e[p];
      add_into(out, k2, c * s);
    }
  return out;
}

RTerms r_polymul_skew(REngine& E, const Poly& q, const RTerms& T) {
  RTerms out;
  for (const auto& [e, c] : q.t)
    add_all(out, E.leftmul_mono(e, T), c);
  return out;
}

RTerms r_defect_apply(REngine& E, int a, const RTerms& T) {
  FieldPtr F = E.field();
  int n = E.n;
  RTerms out;
  for (const auto& [k, s] : T) {
    std::vector<int> rho = E.left_sector(k);
    int i0 = rho[a], i1 = rho[a + 1], i2 = rho[a + 2];
    if (i0 != i2) continue;
    const Poly& P = E.rd.Q[i0][i1];
    Poly numr = inject2(P, n, a + 2, a + 1) - inject2(P, n, a, a + 1);
    if (numr.is_zero()) continue;
    RTerms one{{k, s}};
    Poly xa = Poly::var(F, n, a), xc = Poly::var(F, n, a + 2);
    if (E.rd.par[i0] == 0) {
      Poly q = numr.divide_exact(xc - xa);
      add_all(out, r_polymul_plain(q, one), Scalar(F, 1));
    } else {
      Poly m = numr.divide_exact(xc * xc - xa * xa);
      Poly q = (xc - xa) * m;
      Scalar sg(F, E.rd.par[i1] ? -1 : 1);
      add_all(out, r_polymul_skew(E, q, one), sg);
    }
  }
  return out;
}

// Sector seen by the relation site inside a word: the letters to its right
// applied to the right sector.
std::vector<int> site_sector(int n, const std::vector<int>& word, int from,
                             const std::vector<int>& mu) {
  Perm w = word_to_perm(n, subword(word, from, int(word.size())));
  return perm_act(w, mu);
}

}  // namespace

RTerms REngine::expand_reduced(const std::vector<int>& word,
                               const std::vector<int>& mu) {
  auto mk = std::make_pair(word, mu);
  auto hit = word_memo_.find(mk);
  if (hit != word_memo_.end()) return hit->second;

  Perm w = word_to_perm(n, word);
  std::vector<int> cw = canonical_word(w);
  RKey base{std::vector<int>(n, 0), w, mu};
  RTerms out;
  int acc = 1;
  RTerms corr;
  std::vector<int> cur = word;
  for (const auto& st : move_path(word, cw)) {
    if (st.kind == 0) {
      std::vector<int> loc = site_sector(n, cur, st.pos + 2, mu);
      int al = cur[st.pos], be = cur[st.pos + 1];
      int pa = rd.par[loc[al]] & rd.par[loc[al + 1]];
      int pb = rd.par[loc[be]] & rd.par[loc[be + 1]];
      if (pa && pb) acc = -acc;
    } else {
      int x = cur[st.pos];
      int a = std::min(x, cur[st.pos + 1]);
      RTerms suf = expand_reduced(subword(cur, st.pos + 3, int(cur.size())), mu);
      RTerms C = word_apply(subword(cur, 0, st.pos), r_defect_apply(*this, a, suf));
      int dir = (x == a + 1) ? 1 : -1;
      add_all(corr, C, Scalar(field(), dir * acc));
    }
    cur = st.next;
  }
  out[base] = Scalar(field(), acc);
  add_all(out, corr, Scalar(field(), 1));
  word_memo_[mk] = out;
  return out;
}

const RTerms& REngine::tau_step(int b, const Perm& u,
                                const std::vector<int>& mu) {
  auto mk = std::make_tuple(b, u, mu);
  auto hit = step_memo_.find(mk);
  if (hit != step_memo_.end()) return hit->second;

  RTerms out;
  if (!left_descent(u, b)) {
    std::vector<int> word{b};
    for (int a : canonical_word(u)) word.push_back(a);
    out = expand_reduced(word, mu);
  } else {
    Perm su = perm_mul(perm_s(n, b), u);
    std::vector<int> target{b};
    for (int a : canonical_word(su)) target.push_back(a);
    int acc = 1;
    RTerms corr;
    std::vector<int> cur = canonical_word(u);
    for (const auto& st : move_path(canonical_word(u), target)) {
      if (st.kind == 0) {
        std::vector<int> loc = site_sector(n, cur, st.pos + 2, mu);
        int al = cur[st.pos], be = cur[st.pos + 1];
        int pa = rd.par[loc[al]] & rd.par[loc[al + 1]];
        int pb = rd.par[loc[be]] & rd.par[loc[be + 1]];
        if (pa && pb) acc = -acc;
      } else {
        int x = cur[st.pos];
        int a = std::min(x, cur[st.pos + 1]);
        RTerms suf = expand_reduced(subword(cur, st.pos + 3, int(cur.size())), mu);
        RTerms C = word_apply(subword(cur, 0, st.pos),
                              r_defect_apply(*this, a, suf));
        int dir = (x == a + 1) ? 1 : -1;
        add_all(corr, C, Scalar(field(), dir * acc));
      }
      cur = st.next;
    }
    std::vector<int> rho = perm_act(su, mu);
    Poly q = inject2(rd.Q[rho[b]][rho[b + 1]], n, b, b + 1);
    RKey base{std::vector<int>(n, 0), su, mu};
    if (!q.is_zero())
      out = r_polymul_plain(q, RTerms{{base, Scalar(field(), acc)}});
    add_all(out, letter_apply(b, corr), Scalar(field(), 1));
  }
  return step_memo_[mk] = out;
}

RTerms REngine::cross_mono(int b, const std::vector<int>& mono, const Perm& w,
                           const std::vector<int>& nu) {
  bool triv = std::all_of(mono.begin(), mono.end(), [](int e) { return !e; });
  if (triv) return tau_step(b, w, nu);

  FieldPtr F = field();
  std::vector<int> rho = perm_act(w, nu);
  int q = 0;
  while (!mono[q]) ++q;
  std::vector<int> rest = mono;
  --rest[q];
  RTerms tail = cross_mono(b, rest, w, nu);
  std::vector<int> unit(n, 0);

  if (q != b && q != b + 1) {
    int sg = (rd.par[rho[q]] && rd.par[rho[b]] && rd.par[rho[b + 1]]) ? -1 : 1;
    unit[q] = 1;
    RTerms out = leftmul_mono(unit, tail);
    if (sg < 0)
      for (auto& [k, s] : out) s = -s;
    return out;
  }

  int sp = (rd.par[rho[b]] && rd.par[rho[b + 1]]) ? -1 : 1;
  bool delta = (rho[b] == rho[b + 1]);
  RTerms out;
  if (q == b + 1) {
    unit[b] = 1;
    add_all(out, leftmul_mono(unit, tail), Scalar(F, sp));
    if (delta) {
      RKey base{std::vector<int>(n, 0), w, nu};
      add_all(out, leftmul_mono(rest, RTerms{{base, Scalar(F, 1)}}),
              Scalar(F, 1));
    }
  } else {
    unit[b + 1] = 1;
    add_all(out, leftmul_mono(unit, tail), Scalar(F, sp));
    if (delta) {
      RKey base{std::vector<int>(n, 0), w, nu};
      add_all(out, leftmul_mono(rest, RTerms{{base, Scalar(F, 1)}}),
              Scalar(F, -sp));
    }
  }
  return out;
}

RTerms REngine::letter_apply(int b, const RTerms& E) {
  RTerms out;
  for (const auto& [k, s] : E)
    add_all(out, cross_mono(b, k.exps, k.w, k.nu), s);
  return out;
}

RTerms REngine::word_apply(const std::vector<int>& word, const RTerms& E) {
  RTerms cur = E;
  for (int i = int(word.size()) - 1; i >= 0; --i)
    cur = letter_apply(word[i], cur);
  return cur;
}

REl REl::term(REngine& E, const std::vector<int>& exps, const Perm& w,
              const std::vector<int>& nu, const Scalar& s) {
  REl r(E);
  if (!s.is_zero()) r.t[RKey{exps, w, nu}] = s;
  return r;
}

REl REl::idem(REngine& E, const std::vector<int>& nu) {
  return term(E, std::vector<int>(E.n, 0), perm_id(E.n), nu,
              Scalar(E.field(), 1));
}

REl REl::xv(REngine& E, int p, const std::vector<int>& nu) {
  std::vector<int> e(E.n, 0);
  e[p] = 1;
  return term(E, e, perm_id(E.n), nu, Scalar(E.field(), 1));
}

REl REl::tau(REngine& E, int a, const std::vector<int>& nu) {
  return term(E, std::vector<int>(E.n, 0), perm_s(E.n, a), nu,
              Scalar(E.field(), 1));
}

REl REl::g_x(REngine& E, int p) {
  REl r(E);
  for (const auto& nu : E.sectors()) r = r + xv(E, p, nu);
  return r;
}

REl REl::g_tau(REngine& E, int a) {
  REl r(E);
  for (const auto& nu : E.sectors()) r = r + tau(E, a, nu);
  return r;
}

REl REl::operator-() const {
  REl r(*this);
  for (auto& [k, s] : r.t) s = -s;
  return r;
}

REl REl::operator+(const REl& o) const {
  REl r(*this);
  if (!r.E) r.E = o.E;
  for (const auto& [k, s] : o.t) add_into(r.t, k, s);
  return r;
}

REl REl::operator-(const REl& o) const { return *this + (-o); }

REl REl::scale(const Scalar& s) const {
  REl r(*E);
  if (s.is_zero()) return r;
  for (const auto& [k, c] : t) r.t[k] = c * s;
  return r;
}

void REl::add_term(const RKey& k, const Scalar& s) { add_into(t, k, s); }

REl REl::operator*(const REl& o) const {
  REngine& eng = *E;
  REl r(eng);
  for (const auto& [k1, s1] : t) {
    RTerms sel;
    for (const auto& [k2, s2] : o.t)
      if (eng.left_sector(k2) == k1.nu) sel.emplace(k2, s2);
    if (sel.empty()) continue;
    RTerms M = eng.word_apply(canonical_word(k1.w), sel);
    M = eng.leftmul_mono(k1.exps, M);
    add_all(r.t, M, s1);
  }
  return r;
}

std::string REl::str() const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, s] : t) {
    if (!first) os << " + ";
    first = false;
    os << "(" << s.str() << ")";
    for (int p = 0; p < int(k.exps.size()); ++p)
      if (k.exps[p]) os << " x" << p + 1 << "^" << k.exps[p];
    os << " t[";
    for (int a : canonical_word(k.w)) os << a + 1;
    os << "] e(";
    for (int j : k.nu) os << j;
    os << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------- audits

Report rc_relation_audit(RCEngine& E, uint64_t seed) {
  Report rep;
  FieldPtr F = E.field();
  int n = E.n;
  auto secs = E.sectors();

  bool idem_ok = true;
  for (const auto& nu : secs)
    for (const auto& mu : secs) {
      RCEl p = RCEl::idem(E, nu) * RCEl::idem(E, mu);
      idem_ok = idem_ok && (nu == mu ? p == RCEl::idem(E, nu) : p.is_zero());
    }
  rep.add("orthogonal idempotents", idem_ok);

  bool move_ok = true;
  for (const auto& nu : secs) {
    for (int p = 0; p < n; ++p) {
      move_ok = move_ok &&
                RCEl::g_y(E, p) * RCEl::idem(E, nu) == RCEl::yv(E, p, nu);
      move_ok = move_ok &&
                RCEl::g_c(E, p) * RCEl::idem(E, nu) ==
                    RCEl::idem(E, E.cflip(1u << p, nu)) * RCEl::g_c(E, p);
    }
    for (int a = 0; a + 1 < n; ++a) {
      std::vector<int> snu = perm_act(perm_s(n, a), nu);
      move_ok = move_ok &&
                RCEl::g_sigma(E, a) * RCEl::idem(E, nu) ==
                    RCEl::idem(E, snu) * RCEl::g_sigma(E, a);
    }
  }
  rep.add("generators move idempotents by their action", move_ok);

  bool poly_ok = true;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      poly_ok = poly_ok &&
                RCEl::g_y(E, p) * RCEl::g_y(E, q) ==
                    RCEl::g_y(E, q) * RCEl::g_y(E, p);
  rep.add("polynomial generators commute", poly_ok);

  bool cl_ok = true;
  for (int p = 0; p < n; ++p) {
    RCEl one(E);
    for (const auto& nu : secs) one = one + RCEl::idem(E, nu);
    cl_ok = cl_ok && RCEl::g_c(E, p) * RCEl::g_c(E, p) == one;
    for (int q = p + 1; q < n; ++q)
      cl_ok = cl_ok && RCEl::g_c(E, p) * RCEl::g_c(E, q) ==
                           -(RCEl::g_c(E, q) * RCEl::g_c(E, p));
  }
  rep.add("clifford generators square to one and anticommute", cl_ok);

  bool cy_ok = true;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      RCEl lhs = RCEl::g_c(E, p) * RCEl::g_y(E, q);
      RCEl rhs = RCEl::g_y(E, q) * RCEl::g_c(E, p);
      cy_ok = cy_ok && (p == q ? lhs == -rhs : lhs == rhs);
    }
  rep.add("clifford and polynomial generators cross", cy_ok);

  bool rel_ok = true;
  for (int a = 0; a + 1 < n; ++a)
    for (int p = 0; p < n; ++p) {
      int sp = p == a ? a + 1 : (p == a + 1 ? a : p);
      rel_ok = rel_ok && RCEl::g_sigma(E, a) * RCEl::g_c(E, p) ==
                             RCEl::g_c(E, sp) * RCEl::g_sigma(E, a);
    }
  rep.add("crossings relabel clifford generators", rel_ok);

  bool farp_ok = true;
  for (int a = 0; a + 1 < n; ++a)
    for (int p = 0; p < n; ++p) {
      if (p == a || p == a + 1) continue;
      farp_ok = farp_ok && RCEl::g_sigma(E, a) * RCEl::g_y(E, p) ==
                               RCEl::g_y(E, p) * RCEl::g_sigma(E, a);
    }
  rep.add("crossings move far polynomial generators", farp_ok);

  bool mix_ok = true;
  for (int a = 0; a + 1 < n; ++a) {
    RCEl eprime(E), epair(E);
    for (const auto& nu : secs) {
      if (nu[a] == nu[a + 1]) eprime = eprime + RCEl::idem(E, nu);
      if (nu[a] == E.jd.cmap[nu[a + 1]])
        epair = epair + RCEl::term(E, std::vector<int>(n, 0),
                                   (1u << a) | (1u << (a + 1)), perm_id(n), nu,
                                   Scalar(F, 1));
    }
    RCEl sg = RCEl::g_sigma(E, a);
    RCEl l1 = sg * RCEl::g_y(E, a + 1) - RCEl::g_y(E, a) * sg;
    RCEl l2 = RCEl::g_y(E, a + 1) * sg - sg * RCEl::g_y(E, a);
    mix_ok = mix_ok && l1 == eprime - epair && l2 == eprime + epair;
  }
  rep.add("mixed crossing relations hold", mix_ok);

  bool sq_ok = true;
  for (int a = 0; a + 1 < n; ++a) {
    RCEl rhs(E);
    for (const auto& nu : secs) {
      Poly q = inject2(E.jd.tQ[nu[a]][nu[a + 1]], n, a, a + 1);
      for (const auto& [e, c] : q.t)
        rhs.add_term(RCKey{e, 0, perm_id(n), nu}, c);
    }
    RCEl sg = RCEl::g_sigma(E, a);
    sq_ok = sq_ok && sg * sg == rhs;
  }
  rep.add("crossing squares give the tQ matrix", sq_ok);

  if (n >= 4) {
    bool far_ok = true;
    for (int a = 0; a + 1 < n; ++a)
      for (int b = a + 2; b + 1 < n; ++b)
        far_ok = far_ok && RCEl::g_sigma(E, a) * RCEl::g_sigma(E, b) ==
                               RCEl::g_sigma(E, b) * RCEl::g_sigma(E, a);
    rep.add("far crossings commute", far_ok);
  }

  if (n >= 3) {
    bool braid_ok = true;
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    for (int a = 0; a + 2 < n; ++a) {
      RCEl sa = RCEl::g_sigma(E, a), sb = RCEl::g_sigma(E, a + 1);
      RCEl lhs = sb * sa * sb - sa * sb * sa;
      RCEl rhs(E);
      for (const auto& nu : secs) {
        int j0 = nu[a], j1 = nu[a + 1], j2 = nu[a + 2];
        const Poly& P = E.jd.tQ[j0][j1];
        if (j0 == j2) {
          Poly numr = inject2(P, n, a + 2, a + 1) - inject2(P, n, a, a + 1);
          if (!numr.is_zero()) {
            Poly q = numr.divide_exact(Poly::var(F, n, a + 2) -
                                       Poly::var(F, n, a));
            for (const auto& [e, c] : q.t)
              rhs.add_term(RCKey{e, 0, perm_id(n), nu}, c);
          }
        }
        if (j0 == E.jd.cmap[j2]) {
          std::vector<int> sgn(n, 1);
          sgn[a] = -1;
          Poly numr = inject2(P, n, a + 2, a + 1) -
                      inject2(P, n, a, a + 1).subst(id, sgn);
          if (!numr.is_zero()) {
            Poly q = numr.divide_exact(Poly::var(F, n, a + 2) +
                                       Poly::var(F, n, a));
            for (const auto& [e, c] : q.t)
              rhs.add_term(RCKey{e, (1u << a) | (1u << (a + 2)), perm_id(n), nu},
                           c);
          }
        }
      }
      braid_ok = braid_ok && lhs == rhs;
    }
    rep.add("braid defects match", braid_ok);
  }

  std::mt19937_64 rng(seed);
  auto rnd_term = [&]() {
    std::vector<int> e(n);
    for (int p = 0; p < n; ++p) e[p] = int(rng() % 2);
    uint32_t mask = uint32_t(rng()) & ((1u << n) - 1);
    long nf = 1;
    for (int i = 2; i <= n; ++i) nf *= i;
    Perm w = perm_unrank(n, long(rng() % uint64_t(nf)));
    std::vector<int> nu(n);
    for (int p = 0; p < n; ++p) nu[p] = int(rng() % uint64_t(E.jd.m));
    return RCEl::term(E, e, mask, w, nu, Scalar(F, 1));
  };
  bool asc_ok = true;
  int trials = n <= 3 ? 8 : 4;
  for (int tr = 0; tr < trials; ++tr) {
    RCEl X = rnd_term(), Y = rnd_term(), Z = rnd_term();
    asc_ok = asc_ok && (X * Y) * Z == X * (Y * Z);
  }
  rep.add("products associate", asc_ok);

  return rep;
}

Report r_relation_audit(REngine& E, uint64_t seed) {
  Report rep;
  FieldPtr F = E.field();
  int n = E.n;
  auto secs = E.sectors();

  bool idem_ok = true;
  for (const auto& nu : secs)
    for (const auto& mu : secs) {
      REl p = REl::idem(E, nu) * REl::idem(E, mu);
      idem_ok = idem_ok && (nu == mu ? p == REl::idem(E, nu) : p.is_zero());
    }
  rep.add("orthogonal idempotents", idem_ok);

  bool move_ok = true;
  for (const auto& nu : secs) {
    for (int p = 0; p < n; ++p)
      move_ok = move_ok && REl::g_x(E, p) * REl::idem(E, nu) == REl::xv(E, p, nu);
    for (int a = 0; a + 1 < n; ++a) {
      std::vector<int> snu = perm_act(perm_s(n, a), nu);
      move_ok = move_ok && REl::g_tau(E, a) * REl::idem(E, nu) ==
                               REl::idem(E, snu) * REl::g_tau(E, a);
    }
  }
  rep.add("generators move idempotents by their action", move_ok);

  bool poly_ok = true;
  for (const auto& nu : secs)
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        if (p == q) continue;
        REl lhs = REl::g_x(E, p) * REl::xv(E, q, nu);
        REl rhs = REl::g_x(E, q) * REl::xv(E, p, nu);
        int sg = (E.rd.par[nu[p]] && E.rd.par[nu[q]]) ? -1 : 1;
        poly_ok = poly_ok && lhs == rhs.scale(Scalar(F, sg));
      }
  rep.add("polynomial generators skew commute", poly_ok);

  bool farp_ok = true;
  for (const auto& nu : secs)
    for (int a = 0; a + 1 < n; ++a)
      for (int p = 0; p < n; ++p) {
        if (p == a || p == a + 1) continue;
        REl lhs = REl::g_tau(E, a) * REl::xv(E, p, nu);
        REl rhs = REl::g_x(E, p) * REl::tau(E, a, nu);
        int sg =
            (E.rd.par[nu[p]] && E.rd.par[nu[a]] && E.rd.par[nu[a + 1]]) ? -1 : 1;
        farp_ok = farp_ok && lhs == rhs.scale(Scalar(F, sg));
      }
  rep.add("crossings move far polynomial generators with parity signs", farp_ok);

  bool mix_ok = true;
  for (const auto& nu : secs)
    for (int a = 0; a + 1 < n; ++a) {
      int sp = (E.rd.par[nu[a]] && E.rd.par[nu[a + 1]]) ? -1 : 1;
      bool delta = nu[a] == nu[a + 1];
      REl l1 = REl::g_tau(E, a) * REl::xv(E, a + 1, nu);
      REl r1 = (REl::g_x(E, a) * REl::tau(E, a, nu)).scale(Scalar(F, sp));
      if (delta) r1 = r1 + REl::idem(E, nu);
      REl l2 = REl::g_tau(E, a) * REl::xv(E, a, nu);
      REl r2 = (REl::g_x(E, a + 1) * REl::tau(E, a, nu)).scale(Scalar(F, sp));
      if (delta) r2 = r2 - REl::idem(E, nu).scale(Scalar(F, sp));
      mix_ok = mix_ok && l1 == r1 && l2 == r2;
    }
  rep.add("mixed crossing relations hold", mix_ok);

  bool sq_ok = true;
  for (int a = 0; a + 1 < n; ++a) {
    REl rhs(E);
    for (const auto& nu : secs) {
      Poly q = inject2(E.rd.Q[nu[a]][nu[a + 1]], n, a, a + 1);
      for (const auto& [e, c] : q.t)
        rhs.add_term(RKey{e, perm_id(n), nu}, c);
    }
    REl tg = REl::g_tau(E, a);
    sq_ok = sq_ok && tg * tg == rhs;
  }
  rep.add("crossing squares give the Q matrix", sq_ok);

  if (n >= 4) {
    bool far_ok = true;
    for (const auto& nu : secs)
      for (int a = 0; a + 1 < n; ++a)
        for (int b = a + 2; b + 1 < n; ++b) {
          REl lhs = REl::g_tau(E, a) * REl::tau(E, b, nu);
          REl rhs = REl::g_tau(E, b) * REl::tau(E, a, nu);
          int pa = E.rd.par[nu[a]] & E.rd.par[nu[a + 1]];
          int pb = E.rd.par[nu[b]] & E.rd.par[nu[b + 1]];
          far_ok = far_ok &&
                   lhs == rhs.scale(Scalar(F, (pa && pb) ? -1 : 1));
        }
    rep.add("far crossings commute with parity signs", far_ok);
  }

  if (n >= 3) {
    bool braid_ok = true;
    for (int a = 0; a + 2 < n; ++a) {
      REl sa = REl::g_tau(E, a), sb = REl::g_tau(E, a + 1);
      REl lhs = sb * sa * sb - sa * sb * sa;
      REl rhs(E);
      for (const auto& nu : secs) {
        int i0 = nu[a], i1 = nu[a + 1], i2 = nu[a + 2];
        if (i0 != i2) continue;
        const Poly& P = E.rd.Q[i0][i1];
        Poly numr = inject2(P, n, a + 2, a + 1) - inject2(P, n, a, a + 1);
        if (numr.is_zero()) continue;
        Poly xa = Poly::var(F, n, a), xc = Poly::var(F, n, a + 2);
        Poly q;
        Scalar sg(F, 1);
        if (E.rd.par[i0] == 0) {
          q = numr.divide_exact(xc - xa);
        } else {
          q = (xc - xa) * numr.divide_exact(xc * xc - xa * xa);
          if (E.rd.par[i1]) sg = Scalar(F, -1);
        }
        for (const auto& [e, c] : q.t)
          rhs.add_term(RKey{e, perm_id(n), nu}, c * sg);
      }
      braid_ok = braid_ok && lhs == rhs;
    }
    rep.add("braid defects match", braid_ok);
  }

  std::mt19937_64 rng(seed);
  auto rnd_term = [&]() {
    std::vector<int> e(n);
    for (int p = 0; p < n; ++p) e[p] = int(rng() % 2);
    long nf = 1;
    for (int i = 2; i <= n; ++i) nf *= i;
    Perm w = perm_unrank(n, long(rng() % uint64_t(nf)));
    std::vector<int> nu(n);
    for (int p = 0; p < n; ++p) nu[p] = int(rng() % uint64_t(E.rd.m));
    return REl::term(E, e, w, nu, Scalar(F, 1));
  };
  bool asc_ok = true;
  int trials = n <= 3 ? 8 : 4;
  for (int tr = 0; tr < trials; ++tr) {
    REl X = rnd_term(), Y = rnd_term(), Z = rnd_term();
    asc_ok = asc_ok && (X * Y) * Z == X * (Y * Z);
  }
  rep.add("products associate", asc_ok);

  return rep;
}

}  // namespace qha
