#include "catch2/catch_amalgamated.hpp"

#include "coxeter/coxeter.hpp"
#include "helpers.hpp"

using namespace coxeter;

TEST_CASE("involution counts", "[involution]") {
  CHECK(enumerate_involutions(build_group(type_a_matrix(1))).size() == 1);
  CHECK(enumerate_involutions(build_group(type_a_matrix(2))).size() == 3);
  CHECK(enumerate_involutions(build_group(type_a_matrix(3))).size() == 9);
}

TEST_CASE("involution order is by length then word", "[involution]") {
  Group g = build_group(type_a_matrix(3));
  auto inv = enumerate_involutions(g);
  Word prev;
  bool first = true;
  for (const Element& x : inv) {
    CHECK(is_involution(g, x));
    Word word = reduced_word(g, x);
    if (!first) {
      bool ordered = prev.size() < word.size() ||
                     (prev.size() == word.size() && prev <= word);
      CHECK(ordered);
    }
    prev = word;
    first = false;
  }
}

TEST_CASE("richardson normal form of a generator", "[involution]") {
  Group g = build_group(type_a_matrix(3));
  RichardsonForm form = richardson_normal_form(g, g.generator(2));
  CHECK(form.J == std::vector<int>{2});
  CHECK(is_identity(form.conjugator));
  CHECK(form.w_J == g.generator(2));
}

TEST_CASE("richardson normal form of (13)", "[involution]") {
  Group g = build_group(type_a_matrix(3));
  RichardsonForm form = richardson_normal_form(g, element_from_permutation(g, {3, 2, 1, 4}));
  CHECK(form.J.size() == 1);
  CHECK(length(g, form.w_J) == 1);
}

TEST_CASE("richardson normal form of (14)(23)", "[involution]") {
  Group g = build_group(type_a_matrix(3));
  RichardsonForm form = richardson_normal_form(g, g.longest);
  CHECK(form.J == std::vector<int>{1, 3});
  CHECK(form.w_J == element_from_permutation(g, {2, 1, 4, 3}));
}

TEST_CASE("richardson rejects non-involutions", "[involution]") {
  Group g = build_group(type_a_matrix(3));
  CHECK_THROWS_AS(richardson_normal_form(g, g.identity_element()), NotInvolution);
  CHECK_THROWS_AS(richardson_normal_form(g, element_from_word(g, {1, 2})), NotInvolution);
}

TEST_CASE("richardson endpoint is minimal in its class", "[involution][property]") {
  for (const CoxeterMatrix& cm : {type_a_matrix(3), type_b_matrix(3), type_i2_matrix(6)}) {
    Group g = build_group(cm);
    for (const Element& x : enumerate_involutions(g)) {
      RichardsonForm form = richardson_normal_form(g, x);
      CHECK(multiply(g, form.conjugator, multiply(g, x, inverse(g, form.conjugator))) ==
            form.w_J);
      CHECK(acts_as_minus_one(g, form.w_J, form.J));
      int min_len = length(g, x);
      for (const Element& m : conjugacy_class(g, x).members)
        min_len = std::min(min_len, length(g, m));
      CHECK(length(g, form.w_J) == min_len);
    }
  }
}
