#pragma once

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "coxeter/group.hpp"

namespace coxeter {

// Helpers for the symmetric-group realization of A_{n-1}: generator r is the
// adjacent transposition (r, r+1), words evaluate with the rightmost letter
// applied first, and permutations compose as functions.

inline bool is_type_a(const CoxeterMatrix& cm) {
  for (int r = 0; r < cm.rank; ++r)
    for (int s = r + 1; s < cm.rank; ++s)
      if (cm.m[r][s] != (s == r + 1 ? 3 : 2))
        return false;
  return true;
}

// One-line notation, 1-based: perm[i-1] = pi(i).
using Permutation = std::vector<int>;

inline Permutation identity_permutation(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i)
    p[i] = i + 1;
  return p;
}

inline Permutation compose(const Permutation& a, const Permutation& b) {
  Permutation out(a.size());
  for (size_t i = 0; i < a.size(); ++i)
    out[i] = a[b[i] - 1];
  return out;
}

namespace detail {

inline void require_type_a(const Group& g) {
  if (!is_type_a(g.matrix))
    throw TypeMismatch("operation requires a group of type A");
}

// For A_{n-1}, positive root index i corresponds to a pair (a, b), a < b,
// via the coefficient pattern alpha_a + ... + alpha_{b-1}.
inline std::vector<std::pair<int, int>> root_pairs(const Group& g) {
  std::vector<std::pair<int, int>> pairs(g.num_positive_roots());
  for (int i = 0; i < g.num_positive_roots(); ++i) {
    int first = -1, last = -1;
    for (int s = 0; s < g.rank(); ++s) {
      if (g.positive_roots[i][s] > 0.5) {
        if (first < 0)
          first = s;
        last = s;
      }
    }
    pairs[i] = {first + 1, last + 2};
  }
  return pairs;
}

}  // namespace detail

inline Permutation permutation_of(const Group& g, const Element& e) {
  detail::require_type_a(g);
  int n = g.rank() + 1;
  Permutation p = identity_permutation(n);
  for (int letter : reduced_word(g, e)) {
    Permutation s = identity_permutation(n);
    std::swap(s[letter - 1], s[letter]);
    p = compose(p, s);
  }
  return p;
}

inline Element element_from_permutation(const Group& g, const Permutation& p) {
  detail::require_type_a(g);
  int n = g.rank() + 1;
  if (static_cast<int>(p.size()) != n)
    throw BadIndex("permutation has wrong degree");
  auto pairs = detail::root_pairs(g);
  std::vector<int> index_of(n * n, -1);
  for (int i = 0; i < g.num_positive_roots(); ++i)
    index_of[(pairs[i].first - 1) * n + (pairs[i].second - 1)] = i;
  Element e;
  e.images.resize(g.num_positive_roots());
  for (int i = 0; i < g.num_positive_roots(); ++i) {
    int a = p[pairs[i].first - 1];
    int b = p[pairs[i].second - 1];
    bool negative = a > b;
    if (negative)
      std::swap(a, b);
    int j = index_of[(a - 1) * n + (b - 1)];
    e.images[i] = negative ? -(j + 1) : (j + 1);
  }
  return e;
}

inline std::string cycle_notation(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> done(p.size(), false);
  bool any = false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (done[i] || p[i] == static_cast<int>(i + 1))
      continue;
    any = true;
    os << '(';
    size_t j = i;
    bool first = true;
    while (!done[j]) {
      done[j] = true;
      if (!first)
        os << ' ';
      os << (j + 1);
      first = false;
      j = p[j] - 1;
    }
    os << ')';
  }
  if (!any)
    return "()";
  return os.str();
}

// y_k = s_k * t_k where s_k reverses {1..k} and t_k reverses {k+1..n};
// a reverser of the n-cycle (1 2 ... n) for every 0 <= k <= n-1.
inline Element yk_involution(const Group& g, int k) {
  detail::require_type_a(g);
  int n = g.rank() + 1;
  if (k < 0 || k > n - 1)
    throw BadIndex("k must lie in 0..n-1");
  Permutation p = identity_permutation(n);
  for (int i = 1; i <= k; ++i)
    p[i - 1] = k + 1 - i;
  for (int i = k + 1; i <= n; ++i)
    p[i - 1] = n + k + 1 - i;
  return element_from_permutation(g, p);
}

// Excess of the n-cycle in A_{n-1}: floor((n-2)^2 / 2).
inline long cycle_excess_closed_form(long n) {
  if (n < 2)
    throw BadIndex("closed form requires n >= 2");
  return (n - 2) * (n - 2) / 2;
}

}  // namespace coxeter
