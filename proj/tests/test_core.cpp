#include <random>

#include "catch2/catch_amalgamated.hpp"

#include "coxeter/coxeter.hpp"
#include "helpers.hpp"

using namespace coxeter;

TEST_CASE("build_group enumerates the A3 root system", "[core]") {
  Group g = build_group(type_a_matrix(3));
  CHECK(g.num_positive_roots() == 6);
  CHECK(g.order == 24);
  CHECK(length(g, g.longest) == 6);
}

TEST_CASE("rank-1 group is the two-element group", "[core]") {
  Group g = build_group(type_a_matrix(1));
  CHECK(g.num_positive_roots() == 1);
  CHECK(g.order == 2);
  CHECK(g.generator(1) == g.longest);
}

TEST_CASE("affine matrix is rejected", "[core]") {
  CoxeterMatrix affine = detail::blank_matrix(3);
  detail::set_bond(affine, 0, 1, 3);
  detail::set_bond(affine, 1, 2, 3);
  detail::set_bond(affine, 0, 2, 3);
  CHECK_THROWS_AS(build_group(affine), NonFiniteGroup);
}

TEST_CASE("invalid matrices are rejected", "[core]") {
  CoxeterMatrix bad = type_a_matrix(2);
  bad.m[0][0] = 2;
  CHECK_THROWS_AS(build_group(bad), InvalidMatrix);
  bad = type_a_matrix(2);
  bad.m[0][1] = 1;
  CHECK_THROWS_AS(build_group(bad), InvalidMatrix);
  bad = type_a_matrix(3);
  bad.m[0][1] = 4;  // asymmetric
  CHECK_THROWS_AS(build_group(bad), InvalidMatrix);
}

TEST_CASE("B2 has four positive roots", "[core]") {
  Group g = build_group(type_i2_matrix(4));
  CHECK(g.num_positive_roots() == 4);
  CHECK(g.order == 8);
  CHECK(length(g, g.longest) == 4);
}

TEST_CASE("word evaluation", "[core]") {
  Group g = build_group(type_a_matrix(3));
  CHECK(is_identity(element_from_word(g, {})));
  CHECK_THROWS_AS(element_from_word(g, {4}), BadLetter);

  // [1,2,3] realizes the 4-cycle; oracle: compose the transpositions by hand.
  Permutation expected = compose(oracle::transposition(4, 1, 2),
                                 compose(oracle::transposition(4, 2, 3),
                                         oracle::transposition(4, 3, 4)));
  CHECK(expected == oracle::n_cycle(4));
  CHECK(element_from_word(g, {1, 2, 3}) == element_from_permutation(g, expected));
}

TEST_CASE("braid relation in A2", "[core]") {
  Group g = build_group(type_a_matrix(2));
  CHECK(element_from_word(g, {1, 2, 1}) == element_from_word(g, {2, 1, 2}));
}

TEST_CASE("generators are involutions and multiply round-trips", "[core]") {
  Group g = build_group(type_a_matrix(3));
  for (int r = 1; r <= 3; ++r)
    CHECK(is_identity(multiply(g, g.generator(r), g.generator(r))));
  Element a = element_from_word(g, {1, 3});
  Element b = element_from_word(g, {1, 2, 1});
  Element x = multiply(g, a, b);
  CHECK(multiply(g, x, inverse(g, b)) == a);
}

TEST_CASE("inverse", "[core]") {
  Group g = build_group(type_a_matrix(3));
  CHECK(is_identity(inverse(g, g.identity_element())));
  CHECK(inverse(g, g.generator(2)) == g.generator(2));
  Element w = element_from_word(g, {1, 2, 3});  // (1234)
  Element w_inv = inverse(g, w);
  CHECK(w_inv == element_from_permutation(g, {4, 1, 2, 3}));  // (1432)
  CHECK(length(g, w_inv) == length(g, w));
  CHECK(length(g, w) == 3);
}

TEST_CASE("inversion sets", "[core]") {
  Group g = build_group(type_a_matrix(3));
  CHECK(inversion_set(g, g.identity_element()).empty());
  CHECK(inversion_set(g, g.generator(2)) == InversionSet{1});

  // N((1234)) = {e_i - e_4}: the three roots whose support reaches alpha_3.
  Element w = element_from_word(g, {1, 2, 3});
  InversionSet n = inversion_set(g, w);
  REQUIRE(n.size() == 3);
  for (int i : n)
    CHECK(g.positive_roots[i][2] > 0.5);
}

TEST_CASE("length matches the Cayley-graph oracle", "[core]") {
  for (const CoxeterMatrix& cm :
       {type_a_matrix(3), type_i2_matrix(4), type_b_matrix(3)}) {
    Group g = build_group(cm);
    auto dist = oracle::cayley_distances(g);
    for (const auto& [e, d] : dist) {
      CHECK(length(g, e) == d);
      Word word = reduced_word(g, e);
      CHECK(static_cast<int>(word.size()) == d);
      CHECK(element_from_word(g, word) == e);
    }
  }
}

TEST_CASE("table lengths in A3", "[core]") {
  Group g = build_group(type_a_matrix(3));
  CHECK(length(g, element_from_permutation(g, {3, 2, 1, 4})) == 3);   // (13)
  CHECK(length(g, element_from_permutation(g, {4, 3, 2, 1})) == 6);   // (14)(23)
  CHECK(length(g, element_from_permutation(g, {2, 1, 4, 3})) == 2);   // (12)(34)
}

TEST_CASE("reduced word is deterministic and minimal", "[core]") {
  Group g = build_group(type_a_matrix(3));
  CHECK(reduced_word(g, g.identity_element()).empty());
  Element w13 = element_from_permutation(g, {3, 2, 1, 4});
  Word word = reduced_word(g, w13);
  CHECK(word.size() == 3);
  CHECK(element_from_word(g, word) == w13);
}

TEST_CASE("longest element", "[core]") {
  Group a3 = build_group(type_a_matrix(3));
  CHECK(a3.longest == element_from_permutation(a3, {4, 3, 2, 1}));
  for (int32_t v : a3.longest.images)
    CHECK(v < 0);
  Group b2 = build_group(type_i2_matrix(4));
  CHECK(length(b2, b2.longest) == 4);
}

TEST_CASE("length and inversion-set product identities", "[core][property]") {
  for (const CoxeterMatrix& cm : {type_a_matrix(3), type_b_matrix(3), type_i2_matrix(5)}) {
    Group g = build_group(cm);
    std::vector<Element> elements = all_elements(g);
    std::mt19937 rng(7);
    std::uniform_int_distribution<size_t> pick(0, elements.size() - 1);
    for (int t = 0; t < 2000; ++t) {
      const Element& a = elements[pick(rng)];
      const Element& b = elements[pick(rng)];
      Element ab = multiply(g, a, b);
      InversionSet na = inversion_set(g, a);
      InversionSet nb_inv = inversion_set(g, inverse(g, b));
      std::vector<int> meet;
      std::set_intersection(na.begin(), na.end(), nb_inv.begin(), nb_inv.end(),
                            std::back_inserter(meet));
      REQUIRE(length(g, ab) ==
              length(g, a) + length(g, b) - 2 * static_cast<int>(meet.size()));
    }
  }
}

TEST_CASE("double descent steps by two or fixes", "[core][property]") {
  Group g = build_group(type_b_matrix(3));
  for (const Element& w : all_elements(g)) {
    for (int r = 1; r <= g.rank(); ++r) {
      Element rw = multiply(g, g.generator(r), w);
      Element wr = multiply(g, w, g.generator(r));
      if (length(g, rw) < length(g, w) && length(g, wr) < length(g, w)) {
        Element rwr = multiply(g, rw, g.generator(r));
        bool fixed = rwr == w;
        bool dropped = length(g, rwr) == length(g, w) - 2;
        CHECK((fixed || dropped));
      }
    }
  }
}

TEST_CASE("longest element complements lengths", "[core][property]") {
  Group g = build_group(type_a_matrix(3));
  int l0 = length(g, g.longest);
  for (const Element& w : all_elements(g))
    CHECK(length(g, multiply(g, w, g.longest)) == l0 - length(g, w));
}
