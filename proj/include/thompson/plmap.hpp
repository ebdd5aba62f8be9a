#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "thompson/element.hpp"
#include "thompson/ntree.hpp"

namespace thompson {

/// Orientation-preserving PL homeomorphism of the circle [0,1)/~, exact.
///
/// Canonical form: breakpoints sorted by x, always containing x = 0 and the
/// preimage of 0, plus every point where the slope changes. Between consecutive
/// breakpoints the map is affine and does not wrap, so equality of maps is
/// equality of breakpoint lists.
class PLMap {
 public:
  struct Point {
    Rational x, y;
    friend bool operator==(const Point&, const Point&) = default;
  };

  /// Canonicalises and validates. Throws std::domain_error if the points do
  /// not describe a circle homeomorphism.
  PLMap(int arity, std::vector<Point> points);

  static PLMap identity(int arity);
  static PLMap parse(std::string_view text, int arity);

  int arity() const noexcept { return arity_; }
  const std::vector<Point>& points() const noexcept { return points_; }

  /// Slope of each affine piece, piece i starting at points()[i].x.
  std::vector<Rational> slopes() const;

  /// Breakpoints are n-adic and every slope is an integer power of n.
  bool is_n_adic() const;

  /// "x:y; x:y; ..." with fractions in lowest terms, e.g. "0/1:1/2; 1/2:0/1".
  std::string to_string() const;

  friend bool operator==(const PLMap&, const PLMap&) = default;

 private:
  int arity_;
  std::vector<Point> points_;
};

PLMap from_element(const Element& e);

/// Image of x in [0, 1).
Rational evaluate(const PLMap& f, const Rational& x);

/// f ∘ g (apply g first).
PLMap compose(const PLMap& f, const PLMap& g);

PLMap invert(const PLMap& f);

inline bool equals(const PLMap& f, const PLMap& g) { return f == g; }

bool is_n_adic_rational(const Rational& r, int n);
bool is_power_of(const Rational& r, int n);
std::string rational_to_string(const Rational& r);
Rational parse_rational(std::string_view text);

}  // namespace thompson
