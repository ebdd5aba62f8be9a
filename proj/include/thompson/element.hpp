#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "thompson/ntree.hpp"

namespace thompson {

/// Element of T_n as a labelled tree pair.
///
/// Source leaf p is sent to target leaf (p + rotation) mod L, where L is the
/// common leaf count; rotation 0 after reduction means the element lies in F_n.
/// Constructors do not reduce; use reduce() or the group operations, which
/// always return reduced pairs.
class Element {
 public:
  Element(NTree source, NTree target, std::size_t rotation = 0);

  int arity() const noexcept { return source_.arity(); }
  const NTree& source() const noexcept { return source_; }
  const NTree& target() const noexcept { return target_; }
  std::size_t rotation() const noexcept { return rotation_; }
  std::size_t leaf_count() const noexcept { return source_.leaf_count(); }
  std::size_t caret_count() const noexcept { return source_.caret_count(); }

  /// Literal identity of the representative (not of the group element).
  bool is_identity() const noexcept {
    return rotation_ == 0 && source_.is_leaf() && target_.is_leaf();
  }

  /// "<source> <target> @<rotation>".
  std::string to_string() const;
  static Element parse(std::string_view text, int arity);

  /// Packed byte string of the representative; a hashing key for ball tables.
  std::string compact_key() const;

  friend bool operator==(const Element&, const Element&) = default;

 private:
  NTree source_;
  NTree target_;
  std::size_t rotation_;
};

using CanonicalKey = std::string;

Element identity(int arity);

/// The unique reduced representative.
Element reduce(const Element& e);

/// Product "apply a, then b"; as PL maps this is plmap(b) ∘ plmap(a).
Element multiply(const Element& a, const Element& b);

Element inverse(const Element& e);

Element power(const Element& e, long long m);

/// Re-expresses e with source tree `expanded` (an expansion of e's source).
/// The result is equal to e as a group element and is not reduced.
Element expand_source_to(const Element& e, const NTree& expanded);

/// Least m >= 1 with e^m = 1, or nullopt if none exists up to `cap`.
std::optional<std::size_t> order(const Element& e, std::size_t cap = 512);

/// Same-tree representative of a torsion element, built by iterated minimal
/// joint expansions. Throws std::domain_error when e is not torsion within `cap`.
Element torsion_balanced_form(const Element& e, std::size_t cap = 512);

bool is_in_F(const Element& e);

/// Text form of reduce(e).
CanonicalKey canonical_key(const Element& e);

}  // namespace thompson
