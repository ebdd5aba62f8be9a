#include "doctest.h"
#include "oracles.hpp"
#include "thompson/errors.hpp"
#include "thompson/generators.hpp"
#include "thompson/plmap.hpp"

using namespace thompson;

TEST_CASE("base generators at n = 2") {
  CHECK(from_element(x(0, 2)) == invert(PLMap::parse("0/1:0/1; 1/2:1/4; 3/4:1/2", 2)));
  CHECK(from_element(x(1, 2)) == invert(PLMap::parse("0/1:0/1; 1/2:1/2; 3/4:5/8; 7/8:3/4", 2)));
  CHECK(x(3, 2) == multiply(multiply(inverse(x(0, 2)), x(2, 2)), x(0, 2)));
  // Pointwise on the dyadic grid of depth 8.
  const PLMap a_inv = invert(PLMap::parse("0/1:0/1; 1/2:1/4; 3/4:1/2", 2));
  const PLMap b_inv = invert(PLMap::parse("0/1:0/1; 1/2:1/2; 3/4:5/8; 7/8:3/4", 2));
  for (const auto& pt : oracle::grid(2, 8)) {
    REQUIRE(oracle::apply(x(0, 2), pt) == evaluate(a_inv, pt));
    REQUIRE(oracle::apply(x(1, 2), pt) == evaluate(b_inv, pt));
  }
}

TEST_CASE("generator families") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 0; i < n; ++i) {
      const Element g = x(i, n);
      CHECK(g.caret_count() <= 3);
      CHECK(g.rotation() == 0);
      CHECK(reduce(g) == g);
    }
    for (int j = 0; j <= 4; ++j) {
      const Element cj = c(j, n);
      CHECK(cj.source() == all_right(static_cast<std::size_t>(j + 1), n));
      CHECK(cj.target() == cj.source());
      CHECK(torsion_balanced_form(cj) == cj);
    }
  }
  CHECK(c(0, 2).to_string() == "(. .) (. .) @1");
  CHECK(order(c(1, 2)) == 3u);
  CHECK(order(c(1, 3)) == 5u);
}

TEST_CASE("conjugation shifts indices by n - 1") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 0; i < 8; ++i) {
      for (int j = i + 1; j <= 8; ++j) {
        CHECK(multiply(multiply(inverse(x(i, n)), x(j, n)), x(i, n)) == x(j + n - 1, n));
      }
    }
    CHECK(evaluate_word(parse_word("X0 x1 x0"), n) == x(n, n));
  }
}

TEST_CASE("word text form") {
  CHECK(word_to_string(parse_word("X0 x1 x0")) == "X0 x1 x0");
  CHECK(word_to_string({}) == "");
  CHECK(parse_word("  x12   C3 ") == Word{x_letter(12), c_letter(3, -1)});
  CHECK(inverse_word(parse_word("x0 c1")) == parse_word("C1 X0"));
  CHECK(free_reduce(parse_word("x0 x1 X1 c0 C0 X0 x2")) == parse_word("x2"));
  try {
    parse_word("x0 y1");
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 3);
  }
  CHECK_THROWS_AS(parse_word("x"), ParseError);
  CHECK_THROWS_AS(parse_word("x0x1"), ParseError);
}

TEST_CASE("word evaluation") {
  CHECK(evaluate_word({}, 3).is_identity());
  CHECK(evaluate_word(parse_word("x0 X0"), 3).is_identity());
  Rng rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 3;
    Word w;
    const int len = std::uniform_int_distribution<int>(0, 6)(rng);
    for (int s = 0; s < len; ++s) {
      const bool is_c = std::uniform_int_distribution<int>(0, 3)(rng) == 0;
      const int idx = std::uniform_int_distribution<int>(0, is_c ? 2 : 5)(rng);
      const int sign = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
      w.push_back(is_c ? c_letter(idx, sign) : x_letter(idx, sign));
    }
    const Element e = evaluate_word(w, n);
    CHECK(from_element(e) == oracle::word_map(w, n));
    CHECK(multiply(e, evaluate_word(inverse_word(w), n)).is_identity());
    CHECK(evaluate_word(free_reduce(w), n) == e);
  }
}

TEST_CASE("relation suite") {
  const RelationReport r2 = relation_suite(2, 6);
  CHECK(r2.all_passed());
  CHECK_FALSE(r2.t_presentation_assignment.has_value());
  REQUIRE(r2.t_corrected_assignment.has_value());
  CHECK(*r2.t_corrected_assignment == "c1");
  std::size_t listed = 0;
  for (const auto& rel : f_relators(inverse(x(0, 2)), inverse(x(1, 2)))) {
    for (const auto& chk : r2.checks) {
      if (chk.name == rel.name) {
        ++listed;
        CHECK(chk.passed);
      }
    }
  }
  CHECK(listed == 2);
  const RelationReport r4 = relation_suite(4, 8);
  CHECK(r4.all_passed());
  for (const auto& a : r4.shapes) {
    if (a.shape == GeneratorShape::RightSpine) CHECK(a.infinite_relations);
    if (a.shape == GeneratorShape::TwoCaret) CHECK_FALSE(a.infinite_relations);
  }
  CHECK_THROWS_AS(relation_suite(3, 2), std::domain_error);
}

TEST_CASE("two-letter relators of F_2") {
  const Element A = inverse(x(0, 2)), B = inverse(x(1, 2));
  for (const auto& chk : f_relators(A, B)) CHECK(chk.passed);
  for (const auto& chk : t_relators(A, B, c(1, 2), TRelatorForm::Corrected)) CHECK(chk.passed);
  bool printed_all = true;
  for (const auto& chk : t_relators(A, B, c(1, 2), TRelatorForm::AsPrinted)) printed_all &= chk.passed;
  CHECK_FALSE(printed_all);
}
