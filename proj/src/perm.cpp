#include "qha/perm.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qha {

Perm perm_id(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_s(int n, int a) {
  if (a < 0 || a + 1 >= n) throw std::domain_error("transposition index out of range");
  Perm p = perm_id(n);
  std::swap(p[a], p[a + 1]);
  return p;
}

Perm perm_mul(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm perm_inv(const Perm& w) {
  Perm r(w.size());
  for (size_t i = 0; i < w.size(); ++i) r[w[i]] = (int)i;
  return r;
}

int perm_len(const Perm& w) {
  int c = 0;
  for (size_t i = 0; i < w.size(); ++i)
    for (size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

bool right_descent(const Perm& w, int i) { return w[i] > w[i + 1]; }

bool left_descent(const Perm& w, int i) {
  Perm wi = perm_inv(w);
  return wi[i] > wi[i + 1];
}

std::vector<int> canonical_word(const Perm& w) {
  Perm cur = w;
  std::vector<int> rev;
  int n = (int)w.size();
  while (true) {
    int k = -1;
    for (int i = n - 2; i >= 0; --i)
      if (cur[i] > cur[i + 1]) {
        k = i;
        break;
      }
    if (k < 0) break;
    std::swap(cur[k], cur[k + 1]);  // cur <- cur o s_k
    rev.push_back(k);
  }
  std::reverse(rev.begin(), rev.end());
  return rev;
}

Perm word_to_perm(int n, const std::vector<int>& word) {
  Perm w = perm_id(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) w = perm_mul(perm_s(n, *it), w);
  return w;
}

std::vector<Perm> all_perms(int n) {
  Perm p = perm_id(n);
  std::vector<Perm> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

long perm_rank(const Perm& w) {
  int n = (int)w.size();
  long r = 0;
  for (int i = 0; i < n; ++i) {
    int c = 0;
    for (int j = i + 1; j < n; ++j)
      if (w[j] < w[i]) ++c;
    r = r * (n - i) + c;
  }
  return r;
}

Perm perm_unrank(int n, long r) {
  std::vector<long> digits(n);
  for (int i = n - 1; i >= 0; --i) {
    digits[i] = r % (n - i);
    r /= (n - i);
  }
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  Perm w(n);
  for (int i = 0; i < n; ++i) {
    w[i] = pool[digits[i]];
    pool.erase(pool.begin() + digits[i]);
  }
  return w;
}

}  // namespace qha
