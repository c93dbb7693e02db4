#pragma once

#include <algorithm>
#include <ostream>
#include <random>
#include <vector>

#include "coxeter/conjugacy.hpp"
#include "coxeter/excess.hpp"
#include "coxeter/group.hpp"
#include "coxeter/involution.hpp"
#include "coxeter/witness.hpp"

namespace coxeter {

// Deterministic invariant battery for one group. Prints one PASS/FAIL line
// per check; returns true iff everything passed. Used by the CLI `verify`
// verb and by the acceptance suite.
inline bool verify_group(const Group& g, std::ostream& os, int random_pairs = 10000) {
  bool all_ok = true;
  auto report = [&](const char* name, bool ok) {
    os << (ok ? "PASS " : "FAIL ") << name << "\n";
    all_ok = all_ok && ok;
    return ok;
  };

  std::vector<Element> elements = all_elements(g);
  std::vector<Element> involutions = enumerate_involutions(g);

  // Length/inversion identities on random pairs, fixed seed.
  {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<size_t> pick(0, elements.size() - 1);
    bool len_ok = true, set_ok = true;
    for (int t = 0; t < random_pairs; ++t) {
      const Element& a = elements[pick(rng)];
      const Element& b = elements[pick(rng)];
      Element ab = multiply(g, a, b);
      Element b_inv = inverse(g, b);
      InversionSet na = inversion_set(g, a);
      InversionSet nb_inv = inversion_set(g, b_inv);
      std::vector<int> meet;
      std::set_intersection(na.begin(), na.end(), nb_inv.begin(), nb_inv.end(),
                            std::back_inserter(meet));
      if (length(g, ab) != length(g, a) + length(g, b) - 2 * static_cast<int>(meet.size()))
        len_ok = false;
      // N(ab) = (N(b) \ [-b^-1 N(a)]) u b^-1[N(a) \ N(b^-1)], as index sets.
      std::vector<bool> in_na(g.num_positive_roots(), false);
      for (int i : na)
        in_na[i] = true;
      std::vector<bool> in_nb_inv(g.num_positive_roots(), false);
      for (int i : nb_inv)
        in_nb_inv[i] = true;
      std::vector<bool> expect(g.num_positive_roots(), false);
      for (int i : inversion_set(g, b)) {
        // beta_i in -b^-1 N(a) iff -b.beta_i in N(a); here b.beta_i is negative.
        int32_t v = b.images[i];
        if (!in_na[-v - 1])
          expect[i] = true;
      }
      for (int i = 0; i < g.num_positive_roots(); ++i) {
        // beta_i in b^-1[N(a) \ N(b^-1)] iff b.beta_i positive and in N(a).
        int32_t v = b.images[i];
        if (v > 0 && in_na[v - 1] && !in_nb_inv[v - 1]) {
          // The member contributed is b^-1 of a root of N(a); as an index set
          // over positive roots it is i itself.
          expect[i] = true;
        }
      }
      for (int i = 0; i < g.num_positive_roots(); ++i) {
        bool got = ab.images[i] < 0;
        if (got != expect[i])
          set_ok = false;
      }
    }
    report("length-product-identity", len_ok);
    report("inversion-set-product-identity", set_ok);
  }

  // Word round-trips and inverse lengths over all elements.
  {
    bool ok = true;
    for (const Element& e : elements) {
      Word word = reduced_word(g, e);
      if (static_cast<int>(word.size()) != length(g, e) ||
          element_from_word(g, word) != e || length(g, inverse(g, e)) != length(g, e))
        ok = false;
    }
    report("reduced-word-round-trip", ok);
  }

  // ell(w w0) = ell(w0) - ell(w).
  {
    bool ok = true;
    for (const Element& e : elements)
      if (length(g, multiply(g, e, g.longest)) != length(g, g.longest) - length(g, e))
        ok = false;
    report("longest-element-complement", ok);
  }

  // Excess is even, non-negative, and zero on involutions and the identity.
  {
    bool ok = true;
    for (const Element& e : elements) {
      int ex = excess(g, e, involutions);
      if (ex < 0 || ex % 2 != 0)
        ok = false;
      if ((is_identity(e) || is_involution(g, e)) && ex != 0)
        ok = false;
    }
    report("excess-even-nonnegative", ok);
  }

  // Richardson normal form for every involution.
  {
    bool ok = true;
    for (const Element& x : involutions) {
      try {
        richardson_normal_form(g, x);
      } catch (const Error&) {
        ok = false;
      }
    }
    report("richardson-normal-form", ok);
  }

  // Zero-excess witness for every conjugacy class, independently re-checked.
  {
    bool ok = true;
    for (const ConjugacyClass& cls : class_representatives(g)) {
      try {
        WitnessCertificate cert = zero_excess_witness(g, cls.representative, involutions);
        if (excess(g, cert.w_star, involutions) != 0)
          ok = false;
      } catch (const Error&) {
        ok = false;
      }
    }
    report("zero-excess-witness-per-class", ok);
  }

  return all_ok;
}

}  // namespace coxeter
