#include "qha/bridge.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qha {

namespace {

void enum_exps(int n, int rem, int pos, std::vector<int>& cur,
               std::vector<std::vector<int>>& out) {
  if (pos == n) {
    out.push_back(cur);
    return;
  }
  for (int e = 0; e <= rem; ++e) {
    cur[pos] = e;
    enum_exps(n, rem - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

std::vector<std::vector<int>> exps_upto(int n, int deg) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  enum_exps(n, deg, 0, cur, out);
  return out;
}

void row_axpy(RCTerms& r, const Scalar& f, const RCTerms& p) {
  for (const auto& [k, s] : p) {
    auto it = r.find(k);
    if (it == r.end()) {
      r.emplace(k, f * s);
    } else {
      it->second = it->second + f * s;
      if (it->second.is_zero()) r.erase(it);
    }
  }
}

long rank_rows(std::vector<RCTerms> rows) {
  std::map<RCKey, RCTerms> piv;
  long rank = 0;
  for (auto& r : rows) {
    while (!r.empty()) {
      auto it = piv.find(r.begin()->first);
      if (it == piv.end()) break;
      Scalar f = -(r.begin()->second / it->second.at(it->first));
      row_axpy(r, f, it->second);
    }
    if (r.empty()) continue;
    RCKey lead = r.begin()->first;
    piv.emplace(lead, std::move(r));
    ++rank;
  }
  return rank;
}

void enum_mults(int m, int rem, int pos, std::vector<int>& cur,
                std::vector<std::vector<int>>& out) {
  if (pos == m) {
    if (rem == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e <= rem; ++e) {
    cur[pos] = e;
    enum_mults(m, rem - e, pos + 1, cur, out);
  }
  cur[pos] = 0;
}

}  // namespace

GammaChoice GammaChoice::standard(const RootDatum& rd) {
  GammaChoice gc;
  Scalar one(rd.F, 1), half = Scalar(rd.F, 1) / Scalar(rd.F, 2);
  gc.g.assign(rd.m, std::vector<Scalar>(rd.m, one));
  for (int i = 0; i < rd.m; ++i)
    for (int j = 0; j < rd.m; ++j) {
      if (!rd.par[i] || !rd.par[j]) continue;
      if (i == j)
        gc.g[i][j] = half;
      else if (i < j)
        gc.g[i][j] = half;
      else
        gc.g[i][j] = Scalar(rd.F, -1);
    }
  return gc;
}

Report GammaChoice::validate(const RootDatum& rd) const {
  Report rep;
  bool shape = int(g.size()) == rd.m;
  for (const auto& row : g) shape = shape && int(row.size()) == rd.m;
  rep.add("gamma matrix has one entry per vertex pair", shape);
  if (!shape) return rep;

  Scalar one(rd.F, 1);
  Scalar mhalf = Scalar(rd.F, -1) / Scalar(rd.F, 2);
  Scalar half = Scalar(rd.F, 1) / Scalar(rd.F, 2);
  bool even_ok = true, prod_ok = true, diag_ok = true;
  for (int i = 0; i < rd.m; ++i)
    for (int j = 0; j < rd.m; ++j) {
      if (!rd.par[i] || !rd.par[j]) {
        even_ok = even_ok && g[i][j] == one;
      } else if (i == j) {
        diag_ok = diag_ok && g[i][i] == half;
      } else {
        prod_ok = prod_ok && g[i][j] * g[j][i] == mhalf;
      }
    }
  rep.add("pairs with an even vertex are normalized to one", even_ok);
  rep.add("opposite products on distinct odd pairs are minus one half",
          prod_ok);
  rep.add("odd diagonal entries are one half", diag_ok);
  return rep;
}

Bridge::Bridge(const RootDatum& rd, int n)
    : Bridge(rd, n, GammaChoice::standard(rd)) {}

Bridge::Bridge(const RootDatum& rd, int n, GammaChoice gamma)
    : rd_(rd),
      dbl_(i_to_j(rd)),
      gamma_(std::move(gamma)),
      n_(n),
      reng_(rd, n),
      ceng_(dbl_.jd, n) {
  if (int(gamma_.g.size()) != rd_.m)
    throw std::invalid_argument("gamma matrix size does not match the datum");
  build_global_images();
}

BridgeBlock Bridge::block(const std::vector<int>& mult) const {
  if (int(mult.size()) != rd_.m)
    throw std::invalid_argument("multiplicity vector has the wrong length");
  int total = std::accumulate(mult.begin(), mult.end(), 0);
  if (total != n_)
    throw std::invalid_argument("multiplicities do not sum to the strand count");
  BridgeBlock B;
  B.mult = mult;
  for (int i = 0; i < rd_.m; ++i)
    if (rd_.par[i]) B.ell += mult[i];
  std::vector<int> word;
  for (int i = 0; i < rd_.m; ++i) word.insert(word.end(), mult[i], i);
  std::sort(word.begin(), word.end());
  do {
    B.secs.push_back(word);
  } while (std::next_permutation(word.begin(), word.end()));
  return B;
}

std::vector<BridgeBlock> Bridge::blocks() const {
  std::vector<std::vector<int>> mults;
  std::vector<int> cur(rd_.m, 0);
  enum_mults(rd_.m, n_, 0, cur, mults);
  std::vector<BridgeBlock> out;
  for (const auto& mu : mults) out.push_back(block(mu));
  return out;
}

std::vector<int> Bridge::up(const std::vector<int>& nu) const {
  std::vector<int> mu(nu.size());
  for (size_t p = 0; p < nu.size(); ++p) mu[p] = dbl_.jlab(nu[p], 0);
  return mu;
}

std::vector<int> Bridge::down(const std::vector<int>& mu) const {
  std::vector<int> nu(mu.size());
  for (size_t p = 0; p < mu.size(); ++p) nu[p] = dbl_.ivert[mu[p]];
  return nu;
}

std::vector<int> Bridge::odd_positions(const std::vector<int>& nu) const {
  std::vector<int> pos;
  for (size_t p = 0; p < nu.size(); ++p)
    if (rd_.par[nu[p]]) pos.push_back(int(p));
  return pos;
}

RCEl Bridge::img_e(const std::vector<int>& nu) {
  return RCEl::idem(ceng_, up(nu));
}

RCEl Bridge::img_x(int p, const std::vector<int>& nu) {
  RCEl y = RCEl::yv(ceng_, p, up(nu));
  if (!rd_.par[nu[p]]) return y;
  return RCEl::g_c(ceng_, p) * y;
}

RCEl Bridge::img_tau(int a, const std::vector<int>& nu) {
  RCEl s = RCEl::sigma(ceng_, a, up(nu)).scale(gamma_.g[nu[a]][nu[a + 1]]);
  if (!(rd_.par[nu[a]] && rd_.par[nu[a + 1]])) return s;
  return (RCEl::g_c(ceng_, a) - RCEl::g_c(ceng_, a + 1)) * s;
}

RCEl Bridge::img_c(int k, const std::vector<int>& nu) {
  std::vector<int> pos = odd_positions(nu);
  if (k < 0 || k >= int(pos.size()))
    throw std::invalid_argument("clifford index out of range for the sector");
  return RCEl::cg(ceng_, pos[k], up(nu));
}

RCEl Bridge::sum_e(const BridgeBlock& B) {
  RCEl out(ceng_);
  for (const auto& nu : B.secs) out = out + img_e(nu);
  return out;
}

RCEl Bridge::sum_c(int k, const BridgeBlock& B) {
  RCEl out(ceng_);
  for (const auto& nu : B.secs) out = out + img_c(k, nu);
  return out;
}

void Bridge::build_global_images() {
  std::vector<std::vector<int>> secs;
  std::vector<int> cur(n_, 0);
  while (true) {
    secs.push_back(cur);
    int p = 0;
    while (p < n_ && cur[p] == rd_.m - 1) cur[p++] = 0;
    if (p == n_) break;
    ++cur[p];
  }
  gx_.assign(n_, RCEl(ceng_));
  gtau_.assign(std::max(0, n_ - 1), RCEl(ceng_));
  for (const auto& nu : secs) {
    for (int p = 0; p < n_; ++p) gx_[p] = gx_[p] + img_x(p, nu);
    for (int a = 0; a + 1 < n_; ++a) gtau_[a] = gtau_[a] + img_tau(a, nu);
  }
}

RCEl Bridge::forward(const std::vector<int>& exps, const Perm& w,
                     const std::vector<int>& nu, uint32_t eta) {
  if (int(exps.size()) != n_ || int(w.size()) != n_ || int(nu.size()) != n_)
    throw std::invalid_argument("basis data has the wrong length");
  std::vector<int> pos = odd_positions(nu);
  RCEl acc = img_e(nu);
  for (int k = 0; k < 32; ++k)
    if (eta & (1u << k)) {
      if (k >= int(pos.size()))
        throw std::invalid_argument("clifford index out of range for the sector");
      acc = acc * img_c(k, nu);
    }
  std::vector<int> word = canonical_word(w);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    acc = gtau_[*it] * acc;
  for (int p = n_ - 1; p >= 0; --p)
    for (int t = 0; t < exps[p]; ++t) acc = gx_[p] * acc;
  return acc;
}

RCEl Bridge::push(const REl& z) {
  RCEl out(ceng_);
  for (const auto& [k, s] : z.t)
    out = out + forward(k.exps, k.w, k.nu, 0).scale(s);
  return out;
}

Report Bridge::verify(const BridgeBlock& B, int deg) {
  Report rep;
  FieldPtr F = rd_.F;
  Scalar one(F, 1);
  int n = n_;

  {
    bool sec_ok = true;
    for (int i = 0; i < rd_.m; ++i) {
      int lab = dbl_.jlab(i, 0);
      sec_ok = sec_ok && dbl_.ivert[lab] == i && dbl_.jd.eps[lab] == 0;
      sec_ok = sec_ok && std::count(dbl_.jd.jplus.begin(),
                                    dbl_.jd.jplus.end(), lab) == 1;
    }
    for (const auto& nu : B.secs) sec_ok = sec_ok && down(up(nu)) == nu;
    rep.add("plus sector labels form a section", sec_ok);
  }

  {
    bool idem_ok = true;
    for (const auto& nu : B.secs)
      for (const auto& mu : B.secs) {
        RCEl prod = img_e(nu) * img_e(mu);
        if (nu == mu)
          idem_ok = idem_ok && prod == img_e(nu);
        else
          idem_ok = idem_ok && prod.is_zero();
      }
    rep.add("images are orthogonal idempotents", idem_ok);
  }

  RCEl eplus = sum_e(B);
  {
    bool corner_ok = true;
    std::vector<RCEl> gens;
    for (const auto& nu : B.secs) {
      for (int p = 0; p < n; ++p) gens.push_back(img_x(p, nu));
      for (int a = 0; a + 1 < n; ++a) gens.push_back(img_tau(a, nu));
    }
    for (int k = 0; k < B.ell; ++k) gens.push_back(sum_c(k, B));
    for (const auto& g : gens)
      corner_ok = corner_ok && eplus * g == g && g * eplus == g;
    rep.add("images stay in the corner", corner_ok);
  }

  {
    bool shape_ok = true;
    for (const auto& nu : B.secs) {
      for (int p = 0; p < n; ++p)
        for (const auto& [k, s] : img_x(p, nu).t) {
          int d = std::accumulate(k.exps.begin(), k.exps.end(), 0);
          shape_ok = shape_ok && d == 1 && k.w == perm_id(n);
        }
      for (int a = 0; a + 1 < n; ++a)
        for (const auto& [k, s] : img_tau(a, nu).t) {
          int d = std::accumulate(k.exps.begin(), k.exps.end(), 0);
          shape_ok = shape_ok && d == 0 && k.w == perm_s(n, a);
        }
    }
    rep.add("generator images preserve the filtration", shape_ok);
  }

  {
    bool skew_ok = true;
    for (const auto& nu : B.secs)
      for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
          int sg = (rd_.par[nu[p]] && rd_.par[nu[q]]) ? -1 : 1;
          skew_ok = skew_ok && gx_[p] * img_x(q, nu) ==
                                   (gx_[q] * img_x(p, nu)).scale(Scalar(F, sg));
        }
    rep.add("variable images skew commute", skew_ok);
  }

  {
    bool far_ok = true;
    for (const auto& nu : B.secs)
      for (int a = 0; a + 1 < n; ++a)
        for (int p = 0; p < n; ++p) {
          if (p == a || p == a + 1) continue;
          int sg = (rd_.par[nu[p]] && rd_.par[nu[a]] && rd_.par[nu[a + 1]])
                       ? -1
                       : 1;
          far_ok = far_ok && gtau_[a] * img_x(p, nu) ==
                                 (gx_[p] * img_tau(a, nu)).scale(Scalar(F, sg));
        }
    rep.add("crossing images move far variables with parity signs", far_ok);
  }

  {
    bool mix_ok = true;
    for (const auto& nu : B.secs)
      for (int a = 0; a + 1 < n; ++a) {
        Scalar s(F, (rd_.par[nu[a]] && rd_.par[nu[a + 1]]) ? -1 : 1);
        bool diag = nu[a] == nu[a + 1];
        RCEl lhs1 = gtau_[a] * img_x(a + 1, nu);
        RCEl rhs1 = (gx_[a] * img_tau(a, nu)).scale(s);
        if (diag) rhs1 = rhs1 + img_e(nu);
        RCEl lhs2 = gtau_[a] * img_x(a, nu);
        RCEl rhs2 = (gx_[a + 1] * img_tau(a, nu)).scale(s);
        if (diag) rhs2 = rhs2 - img_e(nu).scale(s);
        mix_ok = mix_ok && lhs1 == rhs1 && lhs2 == rhs2;
      }
    rep.add("mixed crossing relations hold for the images", mix_ok);
  }

  auto poly_img = [&](const Poly& f, const std::vector<int>& nu) {
    RCEl total(ceng_);
    for (const auto& [ex, c] : f.t) {
      RCEl img = img_e(nu);
      for (int p = n - 1; p >= 0; --p)
        for (int t = 0; t < ex[p]; ++t) img = gx_[p] * img;
      total = total + img.scale(c);
    }
    return total;
  };

  {
    bool sq_ok = true;
    for (const auto& nu : B.secs)
      for (int a = 0; a + 1 < n; ++a) {
        RCEl lhs = gtau_[a] * img_tau(a, nu);
        Poly q = inject2(rd_.Q[nu[a]][nu[a + 1]], n, a, a + 1);
        sq_ok = sq_ok && lhs == poly_img(q, nu);
      }
    rep.add("crossing image squares give the Q matrix", sq_ok);
  }

  if (n >= 4) {
    bool farc_ok = true;
    for (const auto& nu : B.secs)
      for (int a = 0; a + 1 < n; ++a)
        for (int b = a + 2; b + 1 < n; ++b) {
          int pa = rd_.par[nu[a]] && rd_.par[nu[a + 1]];
          int pb = rd_.par[nu[b]] && rd_.par[nu[b + 1]];
          RCEl lhs = gtau_[a] * img_tau(b, nu);
          RCEl rhs = (gtau_[b] * img_tau(a, nu))
                         .scale(Scalar(F, (pa && pb) ? -1 : 1));
          farc_ok = farc_ok && lhs == rhs;
        }
    rep.add("far crossing images commute with parity signs", farc_ok);
  }

  if (n >= 3) {
    bool braid_ok = true;
    for (const auto& nu : B.secs)
      for (int a = 0; a + 2 < n; ++a) {
        RCEl lhs = gtau_[a + 1] * (gtau_[a] * img_tau(a + 1, nu)) -
                   gtau_[a] * (gtau_[a + 1] * img_tau(a, nu));
        RCEl rhs(ceng_);
        int i0 = nu[a], i1 = nu[a + 1], i2 = nu[a + 2];
        if (i0 == i2) {
          Poly P = rd_.Q[i0][i1];
          Poly N = inject2(P, n, a + 2, a + 1) - inject2(P, n, a, a + 1);
          std::vector<int> ea(n, 0), ec(n, 0);
          ea[a] = 1;
          ec[a + 2] = 1;
          if (!rd_.par[i0]) {
            Poly den = Poly::zero(F, n);
            den.add_term(ec, one);
            den.add_term(ea, -one);
            rhs = poly_img(N.divide_exact(den), nu);
          } else {
            std::vector<int> ea2(n, 0), ec2(n, 0);
            ea2[a] = 2;
            ec2[a + 2] = 2;
            Poly den = Poly::zero(F, n);
            den.add_term(ec2, one);
            den.add_term(ea2, -one);
            RCEl q = poly_img(N.divide_exact(den), nu);
            rhs = ((gx_[a + 2] - gx_[a]) * q)
                      .scale(Scalar(F, rd_.par[i1] ? -1 : 1));
          }
        }
        braid_ok = braid_ok && lhs == rhs;
      }
    rep.add("braid defect images match", braid_ok);
  }

  {
    bool cl_ok = true;
    for (int k = 0; k < B.ell; ++k)
      for (int j = 0; j < B.ell; ++j) {
        RCEl anti = sum_c(k, B) * sum_c(j, B) + sum_c(j, B) * sum_c(k, B);
        if (k == j)
          cl_ok = cl_ok && anti == eplus.scale(Scalar(F, 2));
        else
          cl_ok = cl_ok && anti.is_zero();
      }
    rep.add("clifford images square to one and anticommute", cl_ok);
  }

  {
    bool sc_ok = true;
    for (const auto& nu : B.secs)
      for (int k = 0; k < B.ell; ++k) {
        RCEl ck = sum_c(k, B);
        for (int p = 0; p < n; ++p) {
          Scalar s(F, rd_.par[nu[p]] ? -1 : 1);
          sc_ok = sc_ok && ck * img_x(p, nu) ==
                               (img_x(p, nu) * img_c(k, nu)).scale(s);
        }
        for (int a = 0; a + 1 < n; ++a) {
          Scalar s(F, (rd_.par[nu[a]] && rd_.par[nu[a + 1]]) ? -1 : 1);
          sc_ok = sc_ok && ck * img_tau(a, nu) ==
                               (img_tau(a, nu) * img_c(k, nu)).scale(s);
        }
      }
    rep.add("clifford images supercommute with the generators", sc_ok);
  }

  {
    std::vector<RCTerms> rows;
    auto exps = exps_upto(n, deg);
    auto perms = all_perms(n);
    for (const auto& nu : B.secs)
      for (const auto& w : perms)
        for (uint32_t eta = 0; eta < (1u << B.ell); ++eta)
          for (const auto& a : exps)
            rows.push_back(forward(a, w, nu, eta).t);
    long count = long(exps.size()) * long(perms.size()) *
                 long(B.secs.size()) * (1L << B.ell);
    long rank = rank_rows(rows);
    std::ostringstream os;
    os << "rows " << rows.size() << " rank " << rank << " codomain " << count;
    rep.add("transition matrix is square and invertible",
            long(rows.size()) == count && rank == count, os.str());
  }

  return rep;
}

Report Bridge::verify_all(int deg) {
  Report rep;
  for (const auto& B : blocks()) {
    Report sub = verify(B, deg);
    std::string bad;
    for (const auto& it : sub.items)
      if (!it.pass) bad += (bad.empty() ? "" : ", ") + it.name;
    std::ostringstream os;
    os << "mult";
    for (int mi : B.mult) os << " " << mi;
    rep.add(os.str(), sub.ok(), bad);
  }
  return rep;
}

}  // namespace qha
