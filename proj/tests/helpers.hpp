#pragma once

// Test-only oracles, independent of the library's length/excess machinery.

#include <deque>
#include <limits>
#include <map>
#include <unordered_map>
#include <vector>

#include "coxeter/coxeter.hpp"

namespace oracle {

// Word-length oracle: breadth-first distances over the Cayley graph,
// independent of inversion counting.
inline std::unordered_map<coxeter::Element, int, coxeter::ElementHash>
cayley_distances(const coxeter::Group& g) {
  std::unordered_map<coxeter::Element, int, coxeter::ElementHash> dist;
  std::deque<coxeter::Element> queue;
  dist[g.identity_element()] = 0;
  queue.push_back(g.identity_element());
  while (!queue.empty()) {
    coxeter::Element cur = std::move(queue.front());
    queue.pop_front();
    int d = dist[cur];
    for (int r = 1; r <= g.rank(); ++r) {
      coxeter::Element next = multiply(g, cur, g.generator(r));
      if (dist.emplace(next, d + 1).second)
        queue.push_back(next);
    }
  }
  return dist;
}

// Excess oracle: exhaustive scan over all ordered pairs of elements of order
// dividing 2, never touching the reverser machinery.
inline int brute_force_excess(const coxeter::Group& g, const coxeter::Element& w) {
  std::vector<coxeter::Element> order2;
  order2.push_back(g.identity_element());
  for (const coxeter::Element& e : all_elements(g))
    if (coxeter::is_involution(g, e))
      order2.push_back(e);
  int best = std::numeric_limits<int>::max();
  for (const coxeter::Element& x : order2)
    for (const coxeter::Element& y : order2)
      if (multiply(g, x, y) == w)
        best = std::min(best, length(g, x) + length(g, y) - length(g, w));
  return best;
}

// Inversion-count length oracle for type A, straight from one-line notation.
inline int permutation_inversions(const coxeter::Permutation& p) {
  int count = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j])
        ++count;
  return count;
}

inline coxeter::Permutation transposition(int n, int a, int b) {
  coxeter::Permutation p = coxeter::identity_permutation(n);
  std::swap(p[a - 1], p[b - 1]);
  return p;
}

inline coxeter::Permutation n_cycle(int n) {
  coxeter::Permutation p(n);
  for (int i = 0; i < n - 1; ++i)
    p[i] = i + 2;
  p[n - 1] = 1;
  return p;
}

}  // namespace oracle
