#include "qha/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace qha {

SpecWorld SpecWorld::hecke_clifford(FieldPtr f, const Scalar& qq) {
  SpecWorld W;
  W.F = std::move(f);
  W.degenerate = false;
  W.q = qq;
  if (qq.is_zero() || (qq * qq).is_one())
    throw std::domain_error("parameter must satisfy q^2 != 1");
  return W;
}

SpecWorld SpecWorld::sergeev(FieldPtr f) {
  SpecWorld W;
  W.F = std::move(f);
  W.degenerate = true;
  if (W.F->characteristic() == 2)
    throw std::domain_error("characteristic 2 is not supported");
  return W;
}

Scalar SpecWorld::xi() const {
  if (degenerate) throw std::domain_error("degenerate family has no xi");
  return q - q.inv();
}

Scalar SpecWorld::g(const Scalar& lam) const {
  if (degenerate) return lam * lam - Scalar(F, mpq_class(1, 4));
  Scalar two(F, 2);
  return two * (lam + lam.inv()) / (q + q.inv());
}

Scalar SpecWorld::pr(const Scalar& X) const {
  if (degenerate) return X * X;
  return X + X.inv();
}

Scalar SpecWorld::cpoint(const Scalar& X) const {
  return degenerate ? -X : X.inv();
}

Scalar SpecWorld::invert(const Scalar& lam) const {
  return degenerate ? -lam : lam.inv();
}

std::vector<Scalar> SpecWorld::neighbors(const Scalar& lam) const {
  if (degenerate) {
    Scalar one(F, 1);
    return {lam + one, lam - one};
  }
  Scalar q2 = q * q;
  return {q2 * lam, lam / q2};
}

Scalar SpecWorld::K(const Scalar& w1, const Scalar& w2) const {
  if (degenerate) {
    Scalar d = w1 - w2;
    return d * d - Scalar(F, 2) * (w1 + w2);
  }
  Scalar x = xi();
  Scalar q2 = q * q;
  return w1 * w1 - (q2 + q2.inv()) * w1 * w2 + w2 * w2 +
         Scalar(F, 4) * x * x;
}

bool SpecWorld::odd_node(const Scalar& w) const { return K(w, w).is_zero(); }

bool SpecWorld::four_node(const Scalar& w) const {
  if (degenerate) return w == g(Scalar(F, 0));
  Scalar one(F, 1);
  return w == g(one) || w == g(-one);
}

bool Diagram::adjacent(int i, int j) const {
  for (const auto& e : edges)
    if ((e[0] == i && e[1] == j) || (e[0] == j && e[1] == i)) return true;
  return false;
}

std::vector<int> Diagram::degrees() const {
  std::vector<int> d(nodes.size(), 0);
  for (const auto& e : edges) {
    d[e[0]]++;
    d[e[1]]++;
  }
  return d;
}

std::vector<std::vector<int>> Diagram::gcm() const {
  int n = int(nodes.size());
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  for (const auto& e : edges) {
    int i = e[0], j = e[1];
    int inner = (nodes[i].norm == 4 || nodes[j].norm == 4) ? -2 : -1;
    a[i][j] = 2 * inner / nodes[i].norm;
    a[j][i] = 2 * inner / nodes[j].norm;
  }
  return a;
}

std::string classify(const Diagram& D) {
  int n = int(D.nodes.size());
  if (n == 0) return "empty";
  auto deg = D.degrees();
  bool cut = false;
  for (const auto& v : D.nodes) cut = cut || v.frontier;

  if (n == 1) {
    if (!cut) return "A_1";
    if (D.nodes[0].norm == 1) return "B_window";
    if (D.nodes[0].norm == 4) return "C_window";
    return "A_window";
  }

  bool all2 = true;
  for (int d : deg) all2 = all2 && d == 2;
  if (all2 && !cut) return "A(1)_" + std::to_string(n - 1);

  std::vector<int> ends;
  for (int i = 0; i < n; ++i)
    if (deg[i] <= 1) ends.push_back(i);
  bool path = int(ends.size()) == 2;
  for (int d : deg) path = path && d <= 2;
  if (!path) return "graph_" + std::to_string(n);

  auto tag = [&](int i) -> char {
    if (D.nodes[i].frontier) return 'F';
    if (D.nodes[i].norm == 1) return 'O';
    if (D.nodes[i].norm == 4) return 'Q';
    return 'P';
  };
  char a = tag(ends[0]), b = tag(ends[1]);
  if (a > b) std::swap(a, b);
  if (a == 'O' && b == 'Q') return "A(2)_" + std::to_string(2 * (n - 1));
  if (a == 'O' && b == 'O') return "D(2)_" + std::to_string(n);
  if (a == 'Q' && b == 'Q') return "C(1)_" + std::to_string(n - 1);
  if (a == 'F' && b == 'O') return "B_window";
  if (a == 'F' && b == 'Q') return "C_window";
  if (a == 'F' && b == 'F') return "A_window";
  return "chain_" + std::to_string(n);
}

Diagram spectral_component(const SpecWorld& W, const Scalar& seed,
                           int max_nodes) {
  if (max_nodes < 1) throw std::domain_error("need a positive node cap");
  Diagram D;
  D.F = W.F;

  auto norm_of = [&](const Scalar& w) {
    if (W.odd_node(w)) return 1;
    if (W.four_node(w)) return 4;
    return 2;
  };
  auto find_node = [&](const Scalar& w) {
    for (size_t i = 0; i < D.nodes.size(); ++i)
      if (D.nodes[i].w == w) return int(i);
    return -1;
  };
  auto add_edge = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    for (const auto& e : D.edges)
      if (e[0] == i && e[1] == j) return;
    D.edges.push_back({i, j});
  };

  Scalar w0 = W.g(seed);
  D.nodes.push_back({w0, seed, norm_of(w0), false});
  std::vector<int> queue = {0};
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int at = queue[qi];
    Scalar lam = D.nodes[at].lam;
    for (const Scalar& nb : W.neighbors(lam)) {
      Scalar w = W.g(nb);
      if (w == D.nodes[at].w) continue;
      int to = find_node(w);
      if (to >= 0) {
        add_edge(at, to);
        continue;
      }
      if (int(D.nodes.size()) >= max_nodes) {
        D.nodes[at].frontier = true;
        continue;
      }
      D.nodes.push_back({w, nb, norm_of(w), false});
      to = int(D.nodes.size()) - 1;
      add_edge(at, to);
      queue.push_back(to);
    }
  }
  D.label = classify(D);
  return D;
}

Report Diagram::check(const SpecWorld& W) const {
  Report rep;
  int n = int(nodes.size());

  bool sect = true, norms = true, dist = true;
  for (int i = 0; i < n; ++i) {
    sect = sect && W.g(nodes[i].lam) == nodes[i].w;
    int expect = W.odd_node(nodes[i].w) ? 1 : (W.four_node(nodes[i].w) ? 4 : 2);
    norms = norms && nodes[i].norm == expect;
    for (int j = i + 1; j < n; ++j) dist = dist && nodes[i].w != nodes[j].w;
  }
  rep.add("sections project to their nodes", sect);
  rep.add("norms match the special node sets", norms);
  rep.add("node coordinates are distinct", dist);

  bool evan = true, step = true;
  for (const auto& e : edges) {
    evan = evan && W.K(nodes[e[0]].w, nodes[e[1]].w).is_zero();
    bool hit = false;
    for (const Scalar& nb : W.neighbors(nodes[e[0]].lam))
      hit = hit || nb == nodes[e[1]].lam || W.invert(nb) == nodes[e[1]].lam;
    step = step && hit;
  }
  rep.add("K vanishes on every edge", evan);
  rep.add("edges are single section steps", step);

  bool nonv = true;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!adjacent(i, j)) nonv = nonv && !W.K(nodes[i].w, nodes[j].w).is_zero();
  rep.add("K stays nonzero off the edges", nonv);

  rep.add("label matches the shape", label == classify(*this));
  return rep;
}

JDatum SpecDatum::jdatum() const {
  int m = int(pts.size());
  JDatum jd;
  jd.F = W.F;
  jd.m = m;
  jd.cmap.resize(m);
  jd.eps.resize(m);
  jd.pr.resize(m);
  for (int j = 0; j < m; ++j) {
    jd.cmap[j] = pts[j].cpartner;
    jd.eps[j] = pts[j].eps;
    jd.pr[j] = pts[j].node;
    if (pts[j].eps == 0) jd.jplus.push_back(j);
  }

  auto a = diag.gcm();
  auto base_pair = [&](int b1, int b2) {
    int i1 = pts[b1].node, i2 = pts[b2].node;
    if (!diag.adjacent(i1, i2)) return Poly::one(W.F, 2);
    Scalar s(W.F, b1 < b2 ? 1 : -1);
    Poly p = Poly::var(W.F, 2, 0, -a[i1][i2]) - Poly::var(W.F, 2, 1, -a[i2][i1]);
    return p.scale(s);
  };

  jd.tQ.assign(m, std::vector<Poly>(m, Poly::zero(W.F, 2)));
  for (int j1 = 0; j1 < m; ++j1)
    for (int j2 = 0; j2 < m; ++j2) {
      if (pts[j1].node == pts[j2].node) continue;
      int b1 = pts[j1].eps ? pts[j1].cpartner : j1;
      int b2 = pts[j2].eps ? pts[j2].cpartner : j2;
      std::vector<int> sgn = {pts[j1].eps ? -1 : 1, pts[j2].eps ? -1 : 1};
      jd.tQ[j1][j2] = base_pair(b1, b2).subst({0, 1}, sgn);
    }
  return jd;
}

Report SpecDatum::validate() const {
  Report rep = diag.check(W);
  int m = int(pts.size());

  bool dist = true, over = true, part = true, sec = true, kind = true;
  bool pin = true;
  for (int j = 0; j < m; ++j) {
    const JPoint& P = pts[j];
    for (int j2 = j + 1; j2 < m; ++j2) dist = dist && P.X != pts[j2].X;
    over = over && P.node >= 0 && P.node < int(diag.nodes.size()) &&
           W.pr(P.X) == diag.nodes[P.node].w;
    int c = P.cpartner;
    part = part && c >= 0 && c < m && pts[c].X == W.cpoint(P.X) &&
           pts[c].cpartner == j;
    sec = sec && P.eps == (j == std::min(j, P.cpartner) ? 0 : 1);
    int nk = diag.nodes[P.node].norm == 1
                 ? 1
                 : (diag.nodes[P.node].norm == 4 ? 2 : 0);
    kind = kind && P.kind == nk;
    if (P.kind == 1) part = part && c == j;
  }
  if (W.degenerate)
    for (const auto& v : diag.nodes)
      if (v.norm == 1) pin = pin && v.lam == Scalar(W.F, mpq_class(1, 2));
  rep.add("point coordinates are distinct", dist);
  rep.add("points sit over their nodes", over);
  rep.add("cpartner is the point involution", part);
  rep.add("eps marks the least orbit member", sec);
  rep.add("chart kinds follow the node norms", kind);
  rep.add("norm-1 sections are normalized", pin);

  for (const auto& item : jdatum().validate().items)
    rep.add("label data: " + item.name, item.pass, item.detail);
  return rep;
}

SpecDatum spec_datum(const SpecWorld& W, const Scalar& seed, int max_nodes,
                     const std::vector<Scalar>& points) {
  SpecDatum S;
  S.W = W;
  S.diag = spectral_component(W, seed, max_nodes);
  int m = int(points.size());
  S.pts.resize(m);
  for (int j = 0; j < m; ++j) {
    JPoint& P = S.pts[j];
    P.X = points[j];
    Scalar w = W.pr(P.X);
    P.node = -1;
    for (size_t i = 0; i < S.diag.nodes.size(); ++i)
      if (S.diag.nodes[i].w == w) P.node = int(i);
    if (P.node < 0) throw std::domain_error("point lies outside the diagram");
    Scalar cX = W.cpoint(P.X);
    P.cpartner = -1;
    for (int j2 = 0; j2 < m; ++j2)
      if (points[j2] == cX) P.cpartner = j2;
    if (P.cpartner < 0) throw std::domain_error("point set is not c-stable");
    int norm = S.diag.nodes[P.node].norm;
    P.kind = norm == 1 ? 1 : (norm == 4 ? 2 : 0);
  }
  for (int j = 0; j < m; ++j)
    S.pts[j].eps = (j == std::min(j, S.pts[j].cpartner)) ? 0 : 1;
  return S;
}

SpecDatum datum_dsq2() {
  FieldPtr F = Field::cyclotomic(8);
  Scalar q = Scalar::gen(F);
  SpecWorld W = SpecWorld::hecke_clifford(F, q);
  return spec_datum(W, q, 4, {Scalar(F, 1), Scalar(F, -1)});
}

SpecDatum datum_sg_p3() {
  FieldPtr F = Field::prime_ext(3, 2);
  SpecWorld W = SpecWorld::sergeev(F);
  Scalar r = Scalar::gen(F);
  return spec_datum(W, Scalar(F, 2), 4, {Scalar(F, 0), r, -r});
}

}  // namespace qha
