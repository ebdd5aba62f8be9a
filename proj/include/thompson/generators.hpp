#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "thompson/element.hpp"

namespace thompson {

struct GenLetter {
  enum class Kind { X, C };
  Kind kind = Kind::X;
  int index = 0;
  int sign = 1;

  GenLetter inverse() const { return {kind, index, -sign}; }
  friend bool operator==(const GenLetter&, const GenLetter&) = default;
};

using Word = std::vector<GenLetter>;

inline GenLetter x_letter(int i, int sign = 1) { return {GenLetter::Kind::X, i, sign}; }
inline GenLetter c_letter(int j, int sign = 1) { return {GenLetter::Kind::C, j, sign}; }

/// Letters `x<i>`, `X<i>` (inverse), `c<j>`, `C<j>` separated by whitespace.
std::string word_to_string(const Word& w);
Word parse_word(std::string_view text);

Word inverse_word(const Word& w);

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(const Word& w);

/// Tree-pair shape family for the base generators x_0 .. x_{n-1}.
///
/// RightSpine: x_i (i = γ(n-1)+δ, 0 <= δ < n-1) has source all_right(γ+1)
/// with a caret at leaf i and target all_right(γ+2). The two-caret families
/// put the extra caret at leaves i / i+1 of a single root caret; they only
/// cover i <= n-2 and borrow the RightSpine x_{n-1}.
enum class GeneratorShape { RightSpine, RightSpineSwapped, TwoCaret, TwoCaretSwapped };

Element base_generator(int i, int n, GeneratorShape shape);

/// x_i of F_n ⊂ T_n. Base cases i < n use the RightSpine shape; larger
/// indices follow x_i = x_0^{-1} x_{i-(n-1)} x_0.
Element x(int i, int n);

/// c_j: both trees all_right(j+1, n), source leaf 0 sent to the last target leaf.
Element c(int j, int n);

Element letter_element(const GenLetter& g, int n);

/// Left-to-right product, reduced.
Element evaluate_word(const Word& w, int n);

struct RelatorCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ShapeAudit {
  GeneratorShape shape;
  bool matches_A_B = false;       // only meaningful for n = 2
  bool infinite_relations = false;
};

struct RelationReport {
  int n = 2;
  int bound = 0;
  std::vector<RelatorCheck> checks;
  std::vector<ShapeAudit> shapes;
  /// Assignment for C satisfying the T relators as printed, if any.
  std::optional<std::string> t_presentation_assignment;
  /// Assignment satisfying the T relators with A^{-2}CB^{2} as the last
  /// factor of the fourth relator; searched only when the printed form fails.
  std::optional<std::string> t_corrected_assignment;
  /// Informational results that do not count toward all_passed().
  std::vector<RelatorCheck> diagnostics;

  bool all_passed() const;
};

/// Checks x_i^{-1} x_j x_i = x_{j+n-1} for 0 <= i < j <= bound; for n = 2 also
/// the finite presentations of F and T (A = x_0^{-1}, B = x_1^{-1}).
RelationReport relation_suite(int n, int bound);

enum class TRelatorForm { AsPrinted, Corrected };

/// Relators of the finite presentation of T over A, B, C with the given
/// assigned elements; name and result per relator. Words act right to left.
std::vector<RelatorCheck> t_relators(const Element& A, const Element& B, const Element& C,
                                     TRelatorForm form = TRelatorForm::AsPrinted);
std::vector<RelatorCheck> f_relators(const Element& A, const Element& B);
std::string shape_name(GeneratorShape shape);

/// [x, y] = x y x^{-1} y^{-1}.
Element commutator(const Element& x, const Element& y);

}  // namespace thompson
