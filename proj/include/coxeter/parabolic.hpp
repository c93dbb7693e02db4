#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <unordered_set>
#include <vector>

#include "coxeter/group.hpp"

namespace coxeter {

// Standard parabolic subgroup W_J, J given as sorted 1-based generator indices.
struct ParabolicDescriptor {
  std::vector<int> subset;
  std::vector<int> root_indices;  // Phi_J^+ as positive-root indices
  Element longest;                // w_J
  uint64_t order = 0;
};

// Indices of positive roots supported on J (zero coefficients outside J).
inline std::vector<int> phi_J(const Group& g, const std::vector<int>& J) {
  std::vector<bool> in_J(g.rank() + 1, false);
  for (int r : J) {
    if (r < 1 || r > g.rank())
      throw BadLetter("generator index out of range: " + std::to_string(r));
    in_J[r] = true;
  }
  std::vector<int> out;
  for (int i = 0; i < g.num_positive_roots(); ++i) {
    bool supported = true;
    for (int s = 0; s < g.rank(); ++s) {
      if (!in_J[s + 1] && g.positive_roots[i][s] > kRootTolerance) {
        supported = false;
        break;
      }
    }
    if (supported)
      out.push_back(i);
  }
  return out;
}

// All elements of W_J by Cayley closure over the generators in J.
inline std::vector<Element> enumerate_parabolic(const Group& g, const std::vector<int>& J) {
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
    for (int r : J) {
      Element next = multiply(g, cur, g.generator(r));
      if (seen.insert(next).second) {
        out.push_back(next);
        queue.push_back(next);
      }
    }
  }
  return out;
}

// w_J, the longest element of W_J; identity for J empty.
inline Element longest_element_J(const Group& g, const std::vector<int>& J) {
  Element w = g.identity_element();
  for (;;) {
    int pick = 0;
    for (int r : J) {
      if (w.images[r - 1] > 0) {
        pick = r;
        break;
      }
    }
    if (pick == 0)
      break;
    w = multiply(g, w, g.generator(pick));
  }
  return w;
}

// True iff w.beta = -beta for every beta in Phi_J^+.
inline bool acts_as_minus_one(const Group& g, const Element& w, const std::vector<int>& J) {
  for (int i : phi_J(g, J))
    if (w.images[i] != -(i + 1))
      return false;
  return true;
}

inline ParabolicDescriptor parabolic(const Group& g, std::vector<int> J) {
  std::sort(J.begin(), J.end());
  J.erase(std::unique(J.begin(), J.end()), J.end());
  ParabolicDescriptor p;
  p.subset = J;
  p.root_indices = phi_J(g, J);
  p.longest = longest_element_J(g, J);
  p.order = enumerate_parabolic(g, J).size();
  return p;
}

// Membership in W_J via the inversion-set criterion N(w) subset of Phi_J^+.
inline bool in_parabolic(const Group& g, const Element& w, const std::vector<int>& J) {
  std::vector<bool> allowed(g.num_positive_roots(), false);
  for (int i : phi_J(g, J))
    allowed[i] = true;
  for (size_t i = 0; i < w.images.size(); ++i)
    if (w.images[i] < 0 && !allowed[i])
      return false;
  return true;
}

// A class is cuspidal iff no member lies in any maximal proper W_J.
// Checking the rank maximal subsets suffices.
inline bool is_cuspidal_class(const Group& g, const std::vector<Element>& class_members) {
  for (int drop = 1; drop <= g.rank(); ++drop) {
    std::vector<int> J;
    for (int r = 1; r <= g.rank(); ++r)
      if (r != drop)
        J.push_back(r);
    std::vector<bool> allowed(g.num_positive_roots(), false);
    for (int i : phi_J(g, J))
      allowed[i] = true;
    for (const Element& w : class_members) {
      bool inside = true;
      for (size_t i = 0; i < w.images.size(); ++i) {
        if (w.images[i] < 0 && !allowed[i]) {
          inside = false;
          break;
        }
      }
      if (inside)
        return false;
    }
  }
  return true;
}

}  // namespace coxeter
