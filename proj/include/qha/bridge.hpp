#pragma once
#include <cstdint>
#include <vector>

#include "nf.hpp"
#include "rootdata.hpp"

namespace qha {

/* Normalizing scalars gamma[i][j] for the crossing images.  A valid choice
 * has gamma[i][j] = 1 whenever i or j is even, gamma[i][j] * gamma[j][i]
 * = -1/2 for distinct odd i, j, and gamma[i][i] = 1/2 for odd i. */
struct GammaChoice {
  std::vector<std::vector<Scalar>> g;

  static GammaChoice standard(const RootDatum& rd);
  Report validate(const RootDatum& rd) const;
};

/* Content block: all sectors of I^n with the given vertex multiplicities.
 * Every sector in one block has the same number ell of odd positions. */
struct BridgeBlock {
  std::vector<int> mult;
  std::vector<std::vector<int>> secs;
  int ell = 0;
};

/* Corner embedding of the vertex algebra, tensored with a rank ell Clifford
 * factor, into the doubled-label algebra cut to its plus sectors.  Variables
 * map to y_p or c_p y_p depending on the vertex parity, crossings pick up a
 * gamma scalar and, on doubly odd sectors, a factor c_a - c_{a+1}, and the
 * Clifford generators act through the odd positions of each sector. */
class Bridge {
 public:
  Bridge(const RootDatum& rd, int n);
  Bridge(const RootDatum& rd, int n, GammaChoice gamma);

  const RootDatum& datum() const { return rd_; }
  const Doubled& doubling() const { return dbl_; }
  const GammaChoice& gamma() const { return gamma_; }
  REngine& left() { return reng_; }
  RCEngine& right() { return ceng_; }
  int strands() const { return n_; }

  BridgeBlock block(const std::vector<int>& mult) const;
  std::vector<BridgeBlock> blocks() const;

  std::vector<int> up(const std::vector<int>& nu) const;
  std::vector<int> down(const std::vector<int>& mu) const;
  std::vector<int> odd_positions(const std::vector<int>& nu) const;

  // images of the sector cut generators
  RCEl img_e(const std::vector<int>& nu);
  RCEl img_x(int p, const std::vector<int>& nu);
  RCEl img_tau(int a, const std::vector<int>& nu);
  RCEl img_c(int k, const std::vector<int>& nu);

  // block sums
  RCEl sum_e(const BridgeBlock& B);
  RCEl sum_c(int k, const BridgeBlock& B);

  // image of the basis element x^exps tau_w e(nu) times the Clifford word
  // with the bits of eta, lowest generator leftmost
  RCEl forward(const std::vector<int>& exps, const Perm& w,
               const std::vector<int>& nu, uint32_t eta);

  // push a whole element of the vertex algebra through
  RCEl push(const REl& z);

  // relation audit on the images plus rank of the transition matrix
  // between the basis monomial sets of polynomial degree at most deg
  Report verify(const BridgeBlock& B, int deg);
  Report verify_all(int deg);

 private:
  RootDatum rd_;
  Doubled dbl_;
  GammaChoice gamma_;
  int n_ = 0;
  REngine reng_;
  RCEngine ceng_;
  std::vector<RCEl> gx_, gtau_;  // generator images summed over all sectors

  void build_global_images();
};

}  // namespace qha
