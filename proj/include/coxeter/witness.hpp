#pragma once

#include <algorithm>
#include <deque>
#include <unordered_set>
#include <utility>
#include <vector>

#include "coxeter/conjugacy.hpp"
#include "coxeter/excess.hpp"
#include "coxeter/group.hpp"
#include "coxeter/involution.hpp"
#include "coxeter/parabolic.hpp"

namespace coxeter {

// A checkable proof that the conjugacy class of `input` contains a
// zero-excess element: w_star = sigma * tau with additive lengths, and
// conjugator * input * conjugator^-1 = w_star.
struct WitnessCertificate {
  Element input;
  Element conjugator;
  Element w_star;
  Element sigma;
  Element tau;
  std::vector<int> J;
  std::vector<int> K;
};

namespace detail {

// Minimal-length element of {u^-1 x u | u in W_J} together with the
// conjugating u, by breadth-first closure under the generators in J.
// Deterministic: first minimal element in discovery order wins.
inline std::pair<Element, Element> minimize_in_parabolic_orbit(const Group& g, const Element& x,
                                                               const std::vector<int>& J) {
  std::unordered_set<Element, ElementHash> seen;
  std::deque<std::pair<Element, Element>> queue;  // (current, u)
  seen.insert(x);
  queue.emplace_back(x, g.identity_element());
  Element best = x;
  Element best_u = g.identity_element();
  int best_len = length(g, x);
  while (!queue.empty()) {
    auto [cur, u] = std::move(queue.front());
    queue.pop_front();
    for (int r : J) {
      Element next = multiply(g, g.generator(r), multiply(g, cur, g.generator(r)));
      if (!seen.insert(next).second)
        continue;
      Element next_u = multiply(g, u, g.generator(r));
      int len = length(g, next);
      if (len < best_len) {
        best = next;
        best_u = next_u;
        best_len = len;
      }
      queue.emplace_back(std::move(next), std::move(next_u));
    }
  }
  return {best, best_u};
}

inline void check_certificate(const Group& g, const WitnessCertificate& cert) {
  auto fail = [](const char* what) { throw InternalProofViolation(what); };
  if (!is_identity(multiply(g, cert.sigma, cert.sigma)))
    fail("sigma is not of order dividing 2");
  if (!is_identity(multiply(g, cert.tau, cert.tau)))
    fail("tau is not of order dividing 2");
  if (multiply(g, cert.sigma, cert.tau) != cert.w_star)
    fail("w_star != sigma * tau");
  if (length(g, cert.w_star) != length(g, cert.sigma) + length(g, cert.tau))
    fail("lengths are not additive");
  Element conjugated =
      multiply(g, cert.conjugator, multiply(g, cert.input, inverse(g, cert.conjugator)));
  if (conjugated != cert.w_star)
    fail("conjugator does not carry input to w_star");
  if (!std::includes(cert.J.begin(), cert.J.end(), cert.K.begin(), cert.K.end()))
    fail("K is not a subset of J");
  InversionSet ns = inversion_set(g, cert.sigma);
  InversionSet nt = inversion_set(g, cert.tau);
  std::vector<int> meet;
  std::set_intersection(ns.begin(), ns.end(), nt.begin(), nt.end(), std::back_inserter(meet));
  if (!meet.empty())
    fail("N(sigma) and N(tau) intersect");
}

}  // namespace detail

// Produces a zero-excess element in the conjugacy class of w:
//   1. involutions and the identity are their own witness;
//   2. pick a non-identity reverser y (minimal length, then lexicographic),
//      so w = x * y with x, y of order dividing 2;
//   3. conjugate so that y becomes w_J acting as -1 on Phi_J;
//   4. minimize x over W_J-conjugacy, giving z;
//   5. K = {r in J : ell(z r) < ell(z)}, sigma = z * w_K, tau = w_K * y;
//   6. w_star = sigma * tau, re-verified before returning.
inline WitnessCertificate zero_excess_witness(const Group& g, const Element& w,
                                              const std::vector<Element>& involutions) {
  WitnessCertificate cert;
  cert.input = w;
  if (is_identity(multiply(g, w, w))) {
    cert.conjugator = g.identity_element();
    cert.w_star = w;
    cert.sigma = w;
    cert.tau = g.identity_element();
    detail::check_certificate(g, cert);
    return cert;
  }

  std::vector<Element> rev = reversers(g, w, involutions);
  Element y;
  bool found = false;
  for (const Element& cand : rev) {
    if (!is_identity(cand)) {
      y = cand;
      found = true;
      break;
    }
  }
  if (!found)
    throw NotStronglyReal("element has no involution factorization");
  Element x = multiply(g, w, y);

  RichardsonForm form = richardson_normal_form(g, y);
  const Element& h = form.conjugator;
  Element h_inv = inverse(g, h);
  x = multiply(g, h, multiply(g, x, h_inv));
  y = form.w_J;
  const std::vector<int>& J = form.J;

  auto [z, u] = detail::minimize_in_parabolic_orbit(g, x, J);

  std::vector<int> K;
  for (int r : J)
    if (has_right_descent(g, z, r))
      K.push_back(r);
  Element w_K = longest_element_J(g, K);
  cert.sigma = multiply(g, z, w_K);
  cert.tau = multiply(g, w_K, y);
  cert.w_star = multiply(g, cert.sigma, cert.tau);
  cert.conjugator = multiply(g, inverse(g, u), h);
  cert.J = J;
  cert.K = std::move(K);
  detail::check_certificate(g, cert);
  return cert;
}

inline WitnessCertificate zero_excess_witness(const Group& g, const Element& w) {
  return zero_excess_witness(g, w, enumerate_involutions(g));
}

}  // namespace coxeter
