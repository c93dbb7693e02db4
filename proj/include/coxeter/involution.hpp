#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "coxeter/group.hpp"
#include "coxeter/parabolic.hpp"

namespace coxeter {

// Result of conjugating an involution down to a longest parabolic element
// acting as -1 on its root subsystem: conjugator . source . conjugator^-1 = w_J.
struct RichardsonForm {
  std::vector<int> J;
  Element conjugator;
  Element source;
  Element w_J;
};

// All non-identity involutions, ordered by (length, lexicographic reduced word).
inline std::vector<Element> enumerate_involutions(const Group& g) {
  std::vector<std::pair<Word, Element>> keyed;
  for (const Element& e : all_elements(g))
    if (is_involution(g, e))
      keyed.emplace_back(reduced_word(g, e), e);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size())
      return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<Element> out;
  out.reserve(keyed.size());
  for (auto& [word, e] : keyed)
    out.push_back(std::move(e));
  return out;
}

inline RichardsonForm richardson_normal_form(const Group& g, const Element& x) {
  if (!is_involution(g, x))
    throw NotInvolution("richardson_normal_form requires a non-identity involution");
  RichardsonForm form;
  form.source = x;
  Element cur = x;
  Element conj = g.identity_element();
  int len = length(g, cur);
  for (;;) {
    int pick = 0;
    Element next;
    for (int r = 1; r <= g.rank(); ++r) {
      Element cand = multiply(g, g.generator(r), multiply(g, cur, g.generator(r)));
      if (length(g, cand) < len) {
        pick = r;
        next = std::move(cand);
        break;
      }
    }
    if (pick == 0)
      break;
    cur = std::move(next);
    len = length(g, cur);
    conj = multiply(g, g.generator(pick), conj);
  }
  // At the fixed point, J is read off from the root action.
  for (int r = 1; r <= g.rank(); ++r)
    if (cur.images[r - 1] == -r)
      form.J.push_back(r);
  form.conjugator = conj;
  form.w_J = cur;
  if (cur != longest_element_J(g, form.J) || !acts_as_minus_one(g, cur, form.J))
    throw InternalProofViolation("descent endpoint is not w_J acting as -1");
  Element check = multiply(g, conj, multiply(g, x, inverse(g, conj)));
  if (check != cur)
    throw InternalProofViolation("conjugator does not carry x to w_J");
  return form;
}

}  // namespace coxeter
