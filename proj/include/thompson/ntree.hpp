#pragma once

#include <cstddef>
#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace thompson {

using Rational = boost::multiprecision::cpp_rational;

/// Branching degree of the trees; always at least 2.
class Arity {
 public:
  explicit Arity(int n);
  int value() const noexcept { return n_; }
  operator int() const noexcept { return n_; }

 private:
  int n_;
};

/// Immutable rooted n-ary tree.
///
/// Stored as its preorder code: '1' for a caret, '0' for a leaf. Every caret
/// is followed by the codes of its n children, so a caret whose children are
/// all leaves reads "1" followed by n zeros. Equality is literal equality of
/// the code, which is what the canonical keys of group elements hash.
class NTree {
 public:
  /// The single-leaf tree.
  explicit NTree(int arity);

  /// Wraps a preorder code; throws StructuralError if it is not a well-formed tree.
  static NTree from_code(int arity, std::string code);

  /// Caret whose children are the given trees (exactly `arity` of them).
  static NTree caret(const std::vector<NTree>& children);

  int arity() const noexcept { return arity_; }
  const std::string& code() const noexcept { return code_; }

  bool is_leaf() const noexcept { return code_.size() == 1; }
  std::size_t caret_count() const noexcept { return (code_.size() - 1) / arity_; }
  std::size_t leaf_count() const noexcept { return caret_count() * (arity_ - 1) + 1; }

  /// Children of the root; empty for a leaf.
  std::vector<NTree> children() const;

  /// Text form: "." for a leaf, "(c1 c2 ... cn)" for a caret.
  std::string to_string() const;
  static NTree parse(std::string_view text, int arity);

  friend bool operator==(const NTree&, const NTree&) = default;
  friend auto operator<=>(const NTree&, const NTree&) = default;

 private:
  NTree(int arity, std::string code) : arity_(arity), code_(std::move(code)) {}

  int arity_;
  std::string code_;
};

/// Number of carets; provided as a free function to mirror leaf_count.
inline std::size_t caret_count(const NTree& t) { return t.caret_count(); }
inline std::size_t leaf_count(const NTree& t) { return t.leaf_count(); }

/// k carets, each after the first hanging from the last leaf of the previous one.
NTree all_right(std::size_t k, int arity);

/// Replaces leaf `leaf` by a caret of n leaves. Throws std::out_of_range.
NTree expand_at(const NTree& t, std::size_t leaf);

/// Replaces the caret whose children are leaves leaf..leaf+n-1 by one leaf.
/// Throws std::out_of_range or StructuralError.
NTree contract_at(const NTree& t, std::size_t leaf);

/// True if leaves leaf..leaf+n-1 are exactly the children of one caret.
bool is_contractible_at(const NTree& t, std::size_t leaf);

/// True if `small` is a rooted prefix of `big`.
bool is_expansion_of(const NTree& big, const NTree& small);

/// Node-wise union: the smallest common expansion of two trees.
NTree minimal_joint_expansion(const NTree& a, const NTree& b);

/// For `big` an expansion of `small`, the subtree of `big` hanging at each
/// leaf of `small`, in leaf order. Throws StructuralError otherwise.
std::vector<NTree> leaf_subtrees(const NTree& big, const NTree& small);

/// Replaces leaf i of `t` by `subtrees[i]`.
NTree graft(const NTree& t, const std::vector<NTree>& subtrees);

/// The n-adic subintervals [a, b] of [0, 1] that the leaves of `t` stand for.
std::vector<std::pair<Rational, Rational>> leaf_intervals(const NTree& t);

/// Each caret of `t` replaced by `block` (a tree whose leaf count equals
/// t.arity()); the result has the arity of `block`.
NTree replace_carets(const NTree& t, const NTree& block);

}  // namespace thompson
