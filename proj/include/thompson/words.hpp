#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thompson/element.hpp"
#include "thompson/generators.hpp"

namespace thompson {

/// Finite generating set Σ = {x_0, ..., x_{n-1}, c_0} of T_n (or Σ_n without c_0).
struct GeneratingSet {
  int n = 2;
  bool with_torsion = true;
  /// Number of x-letters; n for Σ, n - 1 for the smaller candidate set.
  int x_count = 2;

  static GeneratingSet sigma(int n) { return {n, true, n}; }
  static GeneratingSet sigma_n(int n) { return {n, false, n}; }

  /// Letters and their inverses, duplicates (by group element) removed.
  std::vector<GenLetter> letters() const;
};

/// p · c_k^ell · q with p positive and q negative in the infinite x-family.
struct PcqFactorization {
  int n = 2;
  Word p;
  int k = 0;
  int ell = 0;
  Word q;

  /// (index, exponent) blocks of p in order: i_1 < i_2 < ..., exponents r_u > 0.
  std::vector<std::pair<int, int>> p_blocks() const;
  /// (index, exponent) blocks of q read from the right: j_1 < j_2 < ..., s_v > 0.
  std::vector<std::pair<int, int>> q_blocks() const;

  /// The full word p c_k^ell q.
  Word word() const;

  /// Sign patterns, index monotonicity and 0 <= ell < ord c_k.
  bool satisfies_invariants() const;

  /// "<p> | <c-part> | <q> | k=<k>, l=<ell>".
  std::string to_string() const;
  static PcqFactorization parse(std::string_view text, int n);
};

/// Positive word p with evaluate_word(p) = (t, all_right(carets(t)), 0).
/// Each caret off the right spine contributes x_i, i its leftmost leaf.
Word positive_word_from_tree(const NTree& t);

PcqFactorization pcq_factorize(const Element& e);

/// The two sides of each pumping identity, checked by evaluation:
///   c_k^ell = c_{k-1}^ell x_{k(n-1)-ell}
///   (c_k^{-1})^ell = x_{k(n-1)-ell}^{-1} (c_{k-1}^{-1})^ell
struct PumpIdentity {
  Word lhs, rhs;
  Word inverse_lhs, inverse_rhs;
};

/// Throws std::domain_error for k < 1, ell < 1 or k(n-1) < ell, and
/// IdentityMismatch if either identity fails to evaluate equal.
PumpIdentity pump_step(int k, int ell, int n);

/// Which range of ell the pumping identities actually hold on, for k <= k_max.
struct PumpBoundReport {
  int n = 2;
  int k_max = 0;
  int instances = 0;          // pairs (k, ell) with 1 <= ell <= k(n-1)
  int verified = 0;           // of those, both identities held
  int beyond_short_bound = 0; // verified instances with ell >= (k-1)(n-1)+1
  /// True when every ell < k(n-1)+1 = ord c_{k-1} works.
  bool matches_order_of_previous() const { return verified == instances; }
};

PumpBoundReport pump_bound_report(int k_max, int n);

/// x_alpha = x_0^{-gamma} x_delta x_0^{gamma} with delta in the base range.
struct ConjugateForm {
  int gamma = 0;
  int delta = 0;
  Word word;
};

ConjugateForm conjugate_normalize(int alpha, int n);

/// Rewrites every x-letter into Σ via conjugate_normalize and freely reduces.
/// c-letters other than c_0 are rejected.
Word to_sigma(const Word& w, int n);

/// Word over Σ equal to c_k^ell, built from the pumping identities.
/// Requires 0 < ell < (k+1)(n-1)+1.
Word pump_reduce(int k, int ell, int n);

/// Constructive word over Σ for e: p, c-part and q rewritten into Σ.
struct UpperBound {
  std::size_t length = 0;
  Word word;
};

UpperBound word_length_upper(const Element& e);

/// Element literal in word form ("x0 C1 X2"), tree-pair form ("(. .) (. .) @1")
/// or "identity".
Element parse_element_literal(std::string_view text, int n);
/// Canonical key of reduce(e), or "identity".
std::string format_element(const Element& e);

}  // namespace thompson
