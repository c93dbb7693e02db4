#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <deque>
#include <numbers>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "coxeter/errors.hpp"
#include "coxeter/matrix.hpp"

namespace coxeter {

// A group element, stored as a signed permutation of positive-root indices:
// images[i] = +(j+1) if w.beta_i = beta_j, -(j+1) if w.beta_i = -beta_j.
struct Element {
  std::vector<int32_t> images;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

struct ElementHash {
  size_t operator()(const Element& e) const {
    size_t h = 0xcbf29ce484222325ULL;
    for (int32_t v : e.images) {
      h ^= static_cast<size_t>(static_cast<uint32_t>(v));
      h *= 0x100000001b3ULL;
    }
    return h;
  }
};

// Word in the generators, 1-based letters.
using Word = std::vector<int>;

// Set of positive-root indices, kept sorted.
using InversionSet = std::vector<int>;

constexpr double kRootTolerance = 1e-9;
constexpr uint64_t kDefaultRootCap = 10000;
constexpr uint64_t kOrderCap = 10000000;

// Immutable container for a finite Coxeter group: root table, generator
// action tables, order and cached longest element. Build with build_group().
struct Group {
  CoxeterMatrix matrix;
  // Coefficient vectors of the positive roots over the simple-root basis.
  // Simple roots occupy indices 0..rank-1.
  std::vector<std::vector<double>> positive_roots;
  // simple_action[r][i]: signed index of r.beta_i, same encoding as Element.
  std::vector<std::vector<int32_t>> simple_action;
  // Entries -cos(pi/m_rs).
  std::vector<std::vector<double>> bilinear_form;
  uint64_t order = 0;
  Element longest;

  int rank() const { return matrix.rank; }
  int num_positive_roots() const { return static_cast<int>(positive_roots.size()); }

  Element identity_element() const {
    Element e;
    e.images.resize(positive_roots.size());
    for (size_t i = 0; i < e.images.size(); ++i)
      e.images[i] = static_cast<int32_t>(i + 1);
    return e;
  }

  // The simple reflection with 1-based index r.
  Element generator(int r) const {
    if (r < 1 || r > rank())
      throw BadLetter("generator index out of range: " + std::to_string(r));
    Element e;
    e.images = simple_action[r - 1];
    return e;
  }
};

inline Element multiply(const Group&, const Element& a, const Element& b) {
  Element out;
  out.images.resize(b.images.size());
  for (size_t i = 0; i < b.images.size(); ++i) {
    int32_t v = b.images[i];
    int32_t w = a.images[std::abs(v) - 1];
    out.images[i] = v < 0 ? -w : w;
  }
  return out;
}

inline Element inverse(const Group&, const Element& a) {
  Element out;
  out.images.resize(a.images.size());
  for (size_t i = 0; i < a.images.size(); ++i) {
    int32_t v = a.images[i];
    int32_t j = std::abs(v) - 1;
    out.images[j] = v < 0 ? -static_cast<int32_t>(i + 1) : static_cast<int32_t>(i + 1);
  }
  return out;
}

inline int length(const Group&, const Element& a) {
  int n = 0;
  for (int32_t v : a.images)
    if (v < 0)
      ++n;
  return n;
}

inline bool is_identity(const Element& a) {
  for (size_t i = 0; i < a.images.size(); ++i)
    if (a.images[i] != static_cast<int32_t>(i + 1))
      return false;
  return true;
}

inline bool is_involution(const Group& g, const Element& a) {
  return !is_identity(a) && is_identity(multiply(g, a, a));
}

inline InversionSet inversion_set(const Group&, const Element& a) {
  InversionSet n;
  for (size_t i = 0; i < a.images.size(); ++i)
    if (a.images[i] < 0)
      n.push_back(static_cast<int>(i));
  return n;
}

// True iff alpha_r is in N(a), i.e. ell(a r) < ell(a). Simple roots sit at
// indices 0..rank-1 of the root table.
inline bool has_right_descent(const Group&, const Element& a, int r) {
  return a.images[r - 1] < 0;
}

inline Element element_from_word(const Group& g, const Word& word) {
  Element e = g.identity_element();
  for (int letter : word) {
    if (letter < 1 || letter > g.rank())
      throw BadLetter("word letter out of range: " + std::to_string(letter));
    e = multiply(g, e, g.generator(letter));
  }
  return e;
}

// Deterministic reduced word: repeatedly strip the smallest right descent.
inline Word reduced_word(const Group& g, Element a) {
  Word word;
  for (;;) {
    int r = 0;
    for (int s = 1; s <= g.rank(); ++s) {
      if (has_right_descent(g, a, s)) {
        r = s;
        break;
      }
    }
    if (r == 0)
      break;
    a = multiply(g, a, g.generator(r));
    word.push_back(r);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

inline Element longest_element(const Group& g) { return g.longest; }

inline std::string format_word(const Word& word) {
  std::ostringstream os;
  for (size_t i = 0; i < word.size(); ++i) {
    if (i)
      os << ' ';
    os << word[i];
  }
  return os.str();
}

inline Word parse_word(const std::string& text) {
  Word word;
  std::istringstream is(text);
  int letter;
  while (is >> letter)
    word.push_back(letter);
  if (!is.eof())
    throw BadLetter("word must be space-separated integers: " + text);
  return word;
}

namespace detail {

inline double simple_inner(const Group& g, int r, const std::vector<double>& beta) {
  double acc = 0.0;
  for (int s = 0; s < g.rank(); ++s)
    acc += g.bilinear_form[r][s] * beta[s];
  return acc;
}

inline std::vector<double> reflect_simple(const Group& g, int r, const std::vector<double>& beta) {
  std::vector<double> out = beta;
  out[r] -= 2.0 * simple_inner(g, r, beta);
  return out;
}

// +1 positive, -1 negative. Mixed signs cannot occur for genuine roots.
inline int root_sign(const std::vector<double>& beta) {
  bool pos = true, neg = true;
  for (double c : beta) {
    if (c < -kRootTolerance)
      pos = false;
    if (c > kRootTolerance)
      neg = false;
  }
  if (pos)
    return 1;
  if (neg)
    return -1;
  throw InternalProofViolation("root with mixed-sign coefficients");
}

inline int find_root(const std::vector<std::vector<double>>& roots, const std::vector<double>& beta) {
  for (size_t i = 0; i < roots.size(); ++i) {
    bool same = true;
    for (size_t c = 0; c < beta.size(); ++c) {
      if (std::abs(roots[i][c] - beta[c]) > kRootTolerance) {
        same = false;
        break;
      }
    }
    if (same)
      return static_cast<int>(i);
  }
  return -1;
}

inline double form_value(const Group& g, const std::vector<double>& a, const std::vector<double>& b) {
  double acc = 0.0;
  for (int r = 0; r < g.rank(); ++r)
    for (int s = 0; s < g.rank(); ++s)
      acc += a[r] * g.bilinear_form[r][s] * b[s];
  return acc;
}

}  // namespace detail

// Enumerates all group elements by Cayley closure from the identity.
// Deterministic breadth-first order.
inline std::vector<Element> all_elements(const Group& g, uint64_t cap = kOrderCap) {
  std::vector<Element> out;
  std::unordered_set<Element, ElementHash> seen;
  std::deque<Element> queue;
  Element id = g.identity_element();
  seen.insert(id);
  queue.push_back(id);
  out.push_back(id);
  while (!queue.empty()) {
    Element cur = std::move(queue.front());
    queue.pop_front();
    for (int r = 1; r <= g.rank(); ++r) {
      Element next = multiply(g, cur, g.generator(r));
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw NonFiniteGroup("element closure exceeded cap");
        out.push_back(next);
        queue.push_back(next);
      }
    }
  }
  return out;
}

inline Group build_group(const CoxeterMatrix& matrix, uint64_t root_cap = kDefaultRootCap) {
  validate(matrix);
  Group g;
  g.matrix = matrix;
  int n = matrix.rank;

  g.bilinear_form.assign(n, std::vector<double>(n, 0.0));
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s)
      g.bilinear_form[r][s] = -std::cos(std::numbers::pi / matrix.m[r][s]);

  // Close the simple roots under the generator reflections, keeping the
  // positive representative of each root pair.
  for (int r = 0; r < n; ++r) {
    std::vector<double> alpha(n, 0.0);
    alpha[r] = 1.0;
    g.positive_roots.push_back(std::move(alpha));
  }
  for (size_t i = 0; i < g.positive_roots.size(); ++i) {
    for (int r = 0; r < n; ++r) {
      std::vector<double> beta = detail::reflect_simple(g, r, g.positive_roots[i]);
      if (detail::root_sign(beta) < 0)
        for (double& c : beta)
          c = -c;
      if (detail::find_root(g.positive_roots, beta) < 0) {
        if (g.positive_roots.size() >= root_cap)
          throw NonFiniteGroup("positive-root closure exceeded cap of " +
                               std::to_string(root_cap));
        g.positive_roots.push_back(std::move(beta));
      }
    }
  }

  int num_roots = static_cast<int>(g.positive_roots.size());
  g.simple_action.assign(n, std::vector<int32_t>(num_roots, 0));
  for (int r = 0; r < n; ++r) {
    for (int i = 0; i < num_roots; ++i) {
      std::vector<double> beta = detail::reflect_simple(g, r, g.positive_roots[i]);
      int sign = detail::root_sign(beta);
      if (sign < 0)
        for (double& c : beta)
          c = -c;
      int j = detail::find_root(g.positive_roots, beta);
      if (j < 0)
        throw InternalProofViolation("root table not closed under generators");
      g.simple_action[r][i] = sign * static_cast<int32_t>(j + 1);
    }
  }

  // Numerical sanity: the generator action preserves the bilinear form.
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      for (int t = s; t < n; ++t) {
        double before = g.bilinear_form[s][t];
        double after = detail::form_value(g, detail::reflect_simple(g, r, g.positive_roots[s]),
                                          detail::reflect_simple(g, r, g.positive_roots[t]));
        if (std::abs(before - after) > kRootTolerance)
          throw InternalProofViolation("generator action does not preserve the form");
      }
    }
  }

  // Longest element by greedy ascent: multiply by the smallest generator that
  // still increases length.
  Element w0 = g.identity_element();
  for (;;) {
    int r = 0;
    for (int s = 1; s <= n; ++s) {
      if (w0.images[s - 1] > 0) {
        r = s;
        break;
      }
    }
    if (r == 0)
      break;
    w0 = multiply(g, w0, g.generator(r));
  }
  for (int32_t v : w0.images)
    if (v > 0)
      throw InternalProofViolation("longest element does not negate every positive root");
  g.longest = std::move(w0);

  g.order = all_elements(g).size();
  return g;
}

}  // namespace coxeter
