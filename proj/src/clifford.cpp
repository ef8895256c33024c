#include "qha/clifford.hpp"

#include <sstream>

namespace qha {

int clifford_sign(uint64_t S, uint64_t T) {
  // each i in T walks left past the members of S above i
  int flips = 0;
  for (uint64_t t = T; t; t &= t - 1) {
    int i = __builtin_ctzll(t);
    uint64_t above = S >> (i + 1);
    flips += __builtin_popcountll(above);
  }
  return (flips & 1) ? -1 : 1;
}

Cliff Cliff::one(FieldPtr f, int n, int sq) {
  Cliff c(f, n, sq);
  c.t[0] = Scalar(f, 1);
  return c;
}

Cliff Cliff::gen(FieldPtr f, int n, int i, int sq) {
  Cliff c(f, n, sq);
  c.t[uint64_t(1) << i] = Scalar(f, 1);
  return c;
}

void Cliff::add_term(uint64_t mask, const Scalar& s) {
  if (s.is_zero()) return;
  auto it = t.find(mask);
  if (it == t.end()) {
    t[mask] = s;
  } else {
    it->second += s;
    if (it->second.is_zero()) t.erase(it);
  }
}

Cliff Cliff::operator+(const Cliff& o) const {
  Cliff r = *this;
  for (const auto& [m, v] : o.t) r.add_term(m, v);
  return r;
}

Cliff Cliff::operator-(const Cliff& o) const {
  Cliff r = *this;
  for (const auto& [m, v] : o.t) r.add_term(m, -v);
  return r;
}

Cliff Cliff::operator*(const Cliff& o) const {
  Cliff r(F, n, sq);
  for (const auto& [ma, va] : t)
    for (const auto& [mb, vb] : o.t) {
      Scalar p = va * vb;
      int s = clifford_sign(ma, mb);
      if (sq < 0 && (__builtin_popcountll(ma & mb) & 1)) s = -s;
      if (s < 0) p = -p;
      r.add_term(ma ^ mb, p);
    }
  return r;
}

Cliff Cliff::scale(const Scalar& s) const {
  Cliff r(F, n, sq);
  for (const auto& [m, v] : t) r.add_term(m, v * s);
  return r;
}

std::string Cliff::str() const {
  if (t.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, v] : t) {
    if (!first) os << " + ";
    first = false;
    std::string cs = v.str();
    if (m == 0) {
      os << cs;
      continue;
    }
    if (!v.is_one()) {
      if (cs.find('+') != std::string::npos || cs.find('-') != std::string::npos)
        os << "(" << cs << ")*";
      else
        os << cs << "*";
    }
    bool fv = true;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) {
        if (!fv) os << "*";
        fv = false;
        os << "c" << i + 1;
      }
  }
  return os.str();
}

}  // namespace qha
