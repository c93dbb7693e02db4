#pragma once

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <vector>

#include "coxeter/group.hpp"
#include "coxeter/parabolic.hpp"

namespace coxeter {

struct ConjugacyClass {
  Element representative;  // minimal length, lexicographic reduced word tie-break
  std::vector<Element> members;  // breadth-first discovery order
  bool cuspidal = false;
};

// Orbit of w under conjugation by the generators (which suffices, since the
// generators generate the group).
inline ConjugacyClass conjugacy_class(const Group& g, const Element& w) {
  ConjugacyClass cls;
  std::unordered_set<Element, ElementHash> seen;
  std::deque<Element> queue;
  seen.insert(w);
  queue.push_back(w);
  cls.members.push_back(w);
  while (!queue.empty()) {
    Element cur = std::move(queue.front());
    queue.pop_front();
    for (int r = 1; r <= g.rank(); ++r) {
      Element next = multiply(g, g.generator(r), multiply(g, cur, g.generator(r)));
      if (seen.insert(next).second) {
        cls.members.push_back(next);
        queue.push_back(next);
      }
    }
  }
  cls.representative = cls.members.front();
  Word best = reduced_word(g, cls.representative);
  for (const Element& e : cls.members) {
    Word word = reduced_word(g, e);
    if (word.size() < best.size() || (word.size() == best.size() && word < best)) {
      best = std::move(word);
      cls.representative = e;
    }
  }
  cls.cuspidal = is_cuspidal_class(g, cls.members);
  return cls;
}

// Partition of the whole group into conjugacy classes, ordered by
// (representative length, lexicographic representative word).
inline std::vector<ConjugacyClass> class_representatives(const Group& g) {
  std::vector<ConjugacyClass> classes;
  std::unordered_set<Element, ElementHash> assigned;
  for (const Element& e : all_elements(g)) {
    if (assigned.count(e))
      continue;
    ConjugacyClass cls = conjugacy_class(g, e);
    for (const Element& m : cls.members)
      assigned.insert(m);
    classes.push_back(std::move(cls));
  }
  std::vector<Word> words;
  words.reserve(classes.size());
  for (const ConjugacyClass& c : classes)
    words.push_back(reduced_word(g, c.representative));
  std::vector<size_t> idx(classes.size());
  for (size_t i = 0; i < idx.size(); ++i)
    idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (words[a].size() != words[b].size())
      return words[a].size() < words[b].size();
    return words[a] < words[b];
  });
  std::vector<ConjugacyClass> out;
  out.reserve(classes.size());
  for (size_t i : idx)
    out.push_back(std::move(classes[i]));
  return out;
}

}  // namespace coxeter
