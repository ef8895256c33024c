#pragma once
#include <cstdint>
#include <map>

#include "qha/scalar.hpp"

namespace qha {

/* Clifford algebra on n anticommuting generators c_0..c_{n-1} with
 * c_i^2 = sq (sq = +1 or -1), c_i c_j = -c_j c_i for i != j.  Basis
 * monomials are products in increasing index order, encoded as bit masks.
 */

// Sign (+1/-1) of c^S * c^T relative to c^{S xor T}.
int clifford_sign(uint64_t S, uint64_t T);

inline int mask_parity(uint64_t S) { return __builtin_popcountll(S) & 1; }

class Cliff {
 public:
  FieldPtr F;
  int n = 0;
  int sq = 1;
  std::map<uint64_t, Scalar> t;

  Cliff() = default;
  Cliff(FieldPtr f, int n_, int sq_ = 1) : F(std::move(f)), n(n_), sq(sq_) {}
  static Cliff one(FieldPtr f, int n, int sq = 1);
  static Cliff gen(FieldPtr f, int n, int i, int sq = 1);

  bool is_zero() const { return t.empty(); }
  bool operator==(const Cliff& o) const {
    return n == o.n && sq == o.sq && t == o.t;
  }

  Cliff operator+(const Cliff& o) const;
  Cliff operator-(const Cliff& o) const;
  Cliff operator*(const Cliff& o) const;
  Cliff scale(const Scalar& s) const;
  void add_term(uint64_t mask, const Scalar& s);

  std::string str() const;
};

}  // namespace qha
