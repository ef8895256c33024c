#pragma once
#include <array>
#include <string>
#include <vector>

#include "qha/rootdata.hpp"
#include "qha/scalar.hpp"

namespace qha {

/* One-parameter spectral families.  Points carry a torus coordinate X
 * (x in the degenerate family), diagram nodes a coordinate w, sections
 * a coordinate lam with g(lam) = w.  Sections related by invert() lie
 * over the same node, and K vanishes exactly on linked node pairs;
 * K(w, w) = 0 picks out the norm-1 nodes. */
struct SpecWorld {
  FieldPtr F;
  bool degenerate = false;
  Scalar q;  // quantum family only

  static SpecWorld hecke_clifford(FieldPtr f, const Scalar& qq);
  static SpecWorld sergeev(FieldPtr f);

  Scalar xi() const;  // q - 1/q
  Scalar g(const Scalar& lam) const;
  Scalar pr(const Scalar& X) const;
  Scalar cpoint(const Scalar& X) const;
  Scalar invert(const Scalar& lam) const;
  std::vector<Scalar> neighbors(const Scalar& lam) const;
  Scalar K(const Scalar& w1, const Scalar& w2) const;
  bool odd_node(const Scalar& w) const;   // norm 1
  bool four_node(const Scalar& w) const;  // norm 4
};

/* frontier marks nodes whose neighbor scan was cut by the size cap, so
 * the component continues beyond them. */
struct SpecNode {
  Scalar w;
  Scalar lam;
  int norm = 2;
  bool frontier = false;
};

/* Connected diagram grown from a seed section.  Labels:
 *   A(1)_n    cycle on n+1 nodes
 *   A(2)_2s   chain on s+1 nodes, one norm-1 end, one norm-4 end
 *   D(2)_s    chain on s nodes, both ends norm 1
 *   C(1)_s    chain on s+1 nodes, both ends norm 4
 *   A_window / B_window / C_window
 *             chain cut by the cap: B keeps a real norm-1 end, C a real
 *             norm-4 end, A is cut at both ends
 *   A_1, chain_n, graph_n   plain fallbacks */
struct Diagram {
  FieldPtr F;
  std::vector<SpecNode> nodes;
  std::vector<std::array<int, 2>> edges;
  std::string label;

  bool adjacent(int i, int j) const;
  std::vector<int> degrees() const;
  std::vector<std::vector<int>> gcm() const;
  Report check(const SpecWorld& W) const;
};

std::string classify(const Diagram& D);

Diagram spectral_component(const SpecWorld& W, const Scalar& seed,
                           int max_nodes);

/* Point of a finite c-stable set J over a diagram.  kind is the local
 * chart type at the node: 0 etale, 1 ramified (c-fixed point, norm-1
 * node), 2 the norm-4 case where the section coordinate ramifies. */
struct JPoint {
  Scalar X;
  int node = -1;
  int cpartner = -1;
  int eps = 0;
  int kind = 0;
};

struct SpecDatum {
  SpecWorld W;
  Diagram diag;
  std::vector<JPoint> pts;

  JDatum jdatum() const;
  Report validate() const;
};

SpecDatum spec_datum(const SpecWorld& W, const Scalar& seed, int max_nodes,
                     const std::vector<Scalar>& points);

// Frozen instances shared by several suites.
SpecDatum datum_dsq2();   // q = zeta_8, points {1, -1}, two linked norm-1 nodes
SpecDatum datum_sg_p3();  // F_9, points {0, gen, -gen}, norm-1 and norm-4 nodes

}  // namespace qha
