#pragma once
#include <vector>

namespace qha {

/* Permutations of {0..n-1} stored as image vectors: w[i] is where i goes.
 * Products compose as functions, perm_mul(a,b)[i] = a[b[i]].  A word
 * [i1,...,ik] denotes s_{i1} o ... o s_{ik} applied right to left, where
 * s_a swaps a and a+1.
 */
using Perm = std::vector<int>;

Perm perm_id(int n);
Perm perm_s(int n, int a);
Perm perm_mul(const Perm& a, const Perm& b);
Perm perm_inv(const Perm& w);
int perm_len(const Perm& w);  // inversion count

// w(i) > w(i+1), i.e. len(w o s_i) < len(w)
bool right_descent(const Perm& w, int i);
// w^{-1}(i) > w^{-1}(i+1), i.e. len(s_i o w) < len(w)
bool left_descent(const Perm& w, int i);

// Reduced word produced by stripping the largest right descent until the
// identity remains.  Canonical form: equal permutations share the word,
// and the word for w o s_k (k the largest right descent of w) is a prefix.
std::vector<int> canonical_word(const Perm& w);

Perm word_to_perm(int n, const std::vector<int>& word);

// Entry i of v lands at position w[i].
template <class T>
std::vector<T> perm_act(const Perm& w, const std::vector<T>& v) {
  std::vector<T> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[w[i]] = v[i];
  return r;
}

std::vector<Perm> all_perms(int n);

long perm_rank(const Perm& w);  // Lehmer index in [0, n!)
Perm perm_unrank(int n, long r);

}  // namespace qha
