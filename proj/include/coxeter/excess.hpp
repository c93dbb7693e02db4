#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <thread>
#include <vector>

#include "coxeter/group.hpp"
#include "coxeter/involution.hpp"

namespace coxeter {

// An involution factorization w = x * y with defect ell(x) + ell(y) - ell(w).
struct SpartanPair {
  Element x;
  Element y;
  int defect = 0;
};

// Histogram of excess values over the whole group.
struct ExcessDistribution {
  std::map<int, uint64_t> counts;
};

// All y with y^2 = 1 (identity permitted) and (w y)^2 = 1; equivalently the
// factorizations w = (w y) * y into elements of order dividing 2.
// Order: identity first when it qualifies, then the involution order.
inline std::vector<Element> reversers(const Group& g, const Element& w,
                                      const std::vector<Element>& involutions) {
  std::vector<Element> out;
  Element id = g.identity_element();
  if (is_identity(multiply(g, w, w)))
    out.push_back(id);
  for (const Element& y : involutions) {
    Element x = multiply(g, w, y);
    if (is_identity(multiply(g, x, x)))
      out.push_back(y);
  }
  return out;
}

inline std::vector<Element> reversers(const Group& g, const Element& w) {
  return reversers(g, w, enumerate_involutions(g));
}

// True iff w is a product of two elements of order dividing 2; always true in
// a finite group, so doubles as a self-check. The witness is the y of minimal
// defect encountered first.
inline std::optional<Element> is_strongly_real(const Group& g, const Element& w) {
  std::vector<Element> rev = reversers(g, w);
  if (rev.empty())
    return std::nullopt;
  return rev.front();
}

// ell(w y) + ell(y) - ell(w) for y a reverser of w.
inline int epsilon(const Group& g, const Element& w, const Element& y) {
  if (!is_identity(multiply(g, y, y)))
    throw NotReverser("y is not an involution or the identity");
  Element x = multiply(g, w, y);
  if (!is_identity(multiply(g, x, x)))
    throw NotReverser("w*y is not an involution or the identity");
  return length(g, x) + length(g, y) - length(g, w);
}

namespace detail {

inline int excess_over(const Group& g, const Element& w,
                       const std::vector<Element>& involutions) {
  int lw = length(g, w);
  int best = std::numeric_limits<int>::max();
  if (is_identity(multiply(g, w, w)))
    best = 0;  // y = identity
  for (const Element& y : involutions) {
    Element x = multiply(g, w, y);
    if (!is_identity(multiply(g, x, x)))
      continue;
    int eps = length(g, x) + length(g, y) - lw;
    best = std::min(best, eps);
  }
  if (best == std::numeric_limits<int>::max())
    throw NotStronglyReal("element has no involution factorization");
  return best;
}

}  // namespace detail

inline int excess(const Group& g, const Element& w,
                  const std::vector<Element>& involutions) {
  return detail::excess_over(g, w, involutions);
}

inline int excess(const Group& g, const Element& w) {
  return detail::excess_over(g, w, enumerate_involutions(g));
}

// All factorizations achieving the excess, in reverser order.
inline std::vector<SpartanPair> spartan_pairs(const Group& g, const Element& w,
                                              const std::vector<Element>& involutions) {
  std::vector<Element> rev = reversers(g, w, involutions);
  if (rev.empty())
    throw NotStronglyReal("element has no involution factorization");
  int lw = length(g, w);
  int best = std::numeric_limits<int>::max();
  std::vector<SpartanPair> pairs;
  for (const Element& y : rev) {
    SpartanPair p;
    p.x = multiply(g, w, y);
    p.y = y;
    p.defect = length(g, p.x) + length(g, p.y) - lw;
    best = std::min(best, p.defect);
    pairs.push_back(std::move(p));
  }
  std::vector<SpartanPair> out;
  for (SpartanPair& p : pairs)
    if (p.defect == best)
      out.push_back(std::move(p));
  return out;
}

inline std::vector<SpartanPair> spartan_pairs(const Group& g, const Element& w) {
  return spartan_pairs(g, w, enumerate_involutions(g));
}

// Excess of every element of the group. threads > 1 partitions the element
// list; the result is identical to the single-threaded run.
inline ExcessDistribution excess_distribution(const Group& g, int threads = 1) {
  std::vector<Element> elements = all_elements(g);
  std::vector<Element> involutions = enumerate_involutions(g);
  std::vector<int> values(elements.size());
  auto run = [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i)
      values[i] = detail::excess_over(g, elements[i], involutions);
  };
  if (threads <= 1) {
    run(0, elements.size());
  } else {
    std::vector<std::thread> pool;
    size_t chunk = (elements.size() + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      size_t begin = std::min(elements.size(), t * chunk);
      size_t end = std::min(elements.size(), begin + chunk);
      pool.emplace_back(run, begin, end);
    }
    for (std::thread& th : pool)
      th.join();
  }
  ExcessDistribution dist;
  for (int v : values)
    ++dist.counts[v];
  return dist;
}

}  // namespace coxeter
