#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace thompson {

/// A tree operation was applied at a place where the tree has the wrong shape.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Malformed tree, element or word text. `position` is the 0-based offset
/// of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        reason_(what),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }
  const std::string& reason() const noexcept { return reason_; }
  /// The same error reported inside a larger text starting at `offset`.
  ParseError shifted(std::size_t offset) const { return {reason_, position_ + offset}; }

 private:
  std::string reason_;
  std::size_t position_;
};

/// A bounded enumeration ran past its configured state budget.
class CapError : public std::runtime_error {
 public:
  CapError(const std::string& what, std::size_t reached)
      : std::runtime_error(what + " (states reached: " + std::to_string(reached) + ")"),
        reached_(reached) {}

  std::size_t reached() const noexcept { return reached_; }

 private:
  std::size_t reached_;
};

/// A rewriting identity failed its evaluation check.
class IdentityMismatch : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace thompson
