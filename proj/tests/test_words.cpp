#include "doctest.h"
#include "thompson/errors.hpp"
#include "thompson/generators.hpp"
#include "thompson/metrics.hpp"
#include "thompson/random.hpp"
#include "thompson/words.hpp"

using namespace thompson;

TEST_CASE("generating set letters") {
  const auto s2 = GeneratingSet::sigma(2).letters();
  // x0, X0, x1, X1 and the self-inverse c0.
  CHECK(s2.size() == 5);
  CHECK(GeneratingSet::sigma(3).letters().size() == 8);
  CHECK(GeneratingSet::sigma_n(3).letters().size() == 6);
}

TEST_CASE("positive words of trees") {
  for (int n = 2; n <= 4; ++n) {
    for (std::size_t k = 0; k <= 4; ++k) CHECK(positive_word_from_tree(all_right(k, n)).empty());
  }
  CHECK(positive_word_from_tree(x(0, 2).source()) == parse_word("x0"));
  CHECK(positive_word_from_tree(x(1, 3).source()) == parse_word("x1"));
  Rng rng(29);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t k = std::uniform_int_distribution<std::size_t>(0, 5)(rng);
      const NTree t = random_tree(k, n, rng);
      const Word w = positive_word_from_tree(t);
      CHECK(evaluate_word(w, n) == reduce(Element(t, all_right(k, n), 0)));
      for (std::size_t u = 1; u < w.size(); ++u) CHECK(w[u - 1].index <= w[u].index);
    }
  }
}

TEST_CASE("pcq factorization") {
  const PcqFactorization id = pcq_factorize(identity(3));
  CHECK(id.p.empty());
  CHECK(id.q.empty());
  CHECK(id.ell == 0);
  CHECK(id.to_string() == " |  |  | k=0, l=0");
  for (int n = 2; n <= 4; ++n) {
    for (int k = 0; k <= 3; ++k) {
      const int ord = (k + 1) * (n - 1) + 1;
      for (int m = 1; m < ord; ++m) {
        const PcqFactorization f = pcq_factorize(power(c(k, n), m));
        CHECK(f.p.empty());
        CHECK(f.q.empty());
        CHECK(f.k == k);
        CHECK(f.ell == m);
      }
    }
  }
  const PcqFactorization f = pcq_factorize(evaluate_word(parse_word("x0 x0 c1 X1"), 2));
  CHECK(f.satisfies_invariants());
  CHECK(evaluate_word(f.word(), 2) == evaluate_word(parse_word("x0 x0 c1 X1"), 2));
}

TEST_CASE("pcq round trip and text form") {
  Rng rng(31);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 120; ++trial) {
      const Element e = random_element(n, 6, rng);
      const PcqFactorization f = pcq_factorize(e);
      CHECK(f.satisfies_invariants());
      CHECK(f.k == (e.caret_count() == 0 ? 0 : static_cast<int>(e.caret_count()) - 1));
      CHECK(evaluate_word(f.word(), n) == e);
      if (is_in_F(e)) CHECK(f.ell == 0);
      const PcqFactorization g = PcqFactorization::parse(f.to_string(), n);
      CHECK(g.p == f.p);
      CHECK(g.q == f.q);
      CHECK(g.k == f.k);
      CHECK(g.ell == f.ell);
      // Telescoping keeps the Σ-form of p short.
      const auto blocks = f.p_blocks();
      if (!blocks.empty()) {
        int total = 0;
        for (const auto& [i, r] : blocks) total += r;
        CHECK(static_cast<int>(to_sigma(f.p, n).size()) <= total + 2 * blocks.back().first);
      }
    }
  }
  CHECK_THROWS_AS(PcqFactorization::parse("x0 | c0 | X1", 2), ParseError);
  CHECK_THROWS_AS(PcqFactorization::parse("x0 | c1 | X1 | k=0, l=1", 2), ParseError);
}

TEST_CASE("pumping identities") {
  const PumpIdentity a = pump_step(1, 1, 2);
  CHECK(word_to_string(a.rhs) == "c0 x0");
  CHECK(word_to_string(pump_step(2, 1, 2).rhs) == "c1 x1");
  CHECK(word_to_string(pump_step(2, 2, 3).rhs) == "c1 c1 x2");
  CHECK(word_to_string(pump_step(2, 2, 3).inverse_rhs) == "X2 C1 C1");
  CHECK_THROWS_AS(pump_step(0, 1, 2), std::domain_error);
  CHECK_THROWS_AS(pump_step(2, 0, 2), std::domain_error);
  CHECK_THROWS_AS(pump_step(2, 3, 2), std::domain_error);
  for (int n = 2; n <= 5; ++n) {
    const PumpBoundReport rep = pump_bound_report(8, n);
    CHECK(rep.instances == 36 * (n - 1));
    CHECK(rep.matches_order_of_previous());
    CHECK(rep.beyond_short_bound == 8 * (n - 1));
  }
}

TEST_CASE("conjugate normal form") {
  for (int n = 2; n <= 5; ++n) {
    for (int alpha = 0; alpha < n - 1; ++alpha) {
      const ConjugateForm f = conjugate_normalize(alpha, n);
      CHECK(f.gamma == 0);
      CHECK(f.delta == alpha);
      CHECK(f.word == Word{x_letter(alpha)});
    }
    for (int alpha = 0; alpha <= 12; ++alpha) {
      const ConjugateForm f = conjugate_normalize(alpha, n);
      CHECK(evaluate_word(f.word, n) == x(alpha, n));
      CHECK(f.word.size() == static_cast<std::size_t>(2 * f.gamma + 1));
      CHECK(f.gamma * (n - 1) + f.delta == alpha);
      CHECK(f.delta <= n - 1);
    }
  }
  const ConjugateForm f54 = conjugate_normalize(5, 4);
  CHECK(f54.gamma == 1);
  CHECK(f54.delta == 2);
  CHECK(word_to_string(f54.word) == "X0 x2 x0");
  // With n = 2 the residue x_0 would give x_0 back; x_1 is the base letter.
  const ConjugateForm f32 = conjugate_normalize(3, 2);
  CHECK(word_to_string(f32.word) == "X0 X0 x1 x0 x0");
  CHECK(evaluate_word(parse_word("X0 X0 X0 x0 x0 x0 x0"), 2) != x(3, 2));
  CHECK_THROWS_AS(conjugate_normalize(-1, 2), std::domain_error);
}

TEST_CASE("torsion words over the finite set") {
  CHECK(pump_reduce(1, 1, 2).size() <= 2);
  CHECK(pump_reduce(4, 3, 2).size() < 14);
  CHECK(pump_reduce(3, 5, 3).size() < 12);
  for (int n = 2; n <= 5; ++n) {
    for (int k = 0; k <= 8; ++k) {
      for (int ell = 1; ell < (k + 1) * (n - 1) + 1; ++ell) {
        const Word w = pump_reduce(k, ell, n);
        CHECK(static_cast<int>(w.size()) < 3 * k + n);
        CHECK(evaluate_word(w, n) == power(c(k, n), ell));
        for (const auto& g : w) CHECK(g.index <= (g.kind == GenLetter::Kind::C ? 0 : n - 1));
      }
    }
  }
  CHECK_THROWS_AS(pump_reduce(2, 0, 2), std::domain_error);
  CHECK_THROWS_AS(pump_reduce(2, 4, 2), std::domain_error);
  CHECK_THROWS_AS(to_sigma(parse_word("c1"), 2), std::domain_error);
}

TEST_CASE("constructive upper bound") {
  CHECK(word_length_upper(identity(2)).length == 0);
  for (int k = 0; k <= 5; ++k) {
    for (int ell = 1; ell < k + 2; ++ell) {
      CHECK(static_cast<int>(word_length_upper(power(c(k, 2), ell)).length) < 3 * k + 2);
    }
  }
  Rng rng(37);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 80; ++trial) {
      const Element e = random_element(n, 5, rng);
      const UpperBound u = word_length_upper(e);
      CHECK(u.length == u.word.size());
      CHECK(evaluate_word(u.word, n) == e);
      CHECK(static_cast<long long>(u.length) <= 3 * d_n(pcq_factorize(e)));
    }
  }
}

TEST_CASE("element literals") {
  CHECK(parse_element_literal("identity", 2).is_identity());
  CHECK(parse_element_literal("", 2).is_identity());
  CHECK(parse_element_literal("(. .) (. .) @1", 2) == c(0, 2));
  CHECK(parse_element_literal("x0 C1 X2", 3) == evaluate_word(parse_word("x0 C1 X2"), 3));
  CHECK(format_element(identity(2)) == "identity");
  CHECK(format_element(c(0, 2)) == "(. .) (. .) @1");
  try {
    parse_element_literal("  x0 z", 2);
    FAIL("no error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Element e = random_element(3, 5, rng);
    CHECK(parse_element_literal(format_element(e), 3) == e);
  }
}
