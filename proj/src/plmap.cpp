#include "thompson/plmap.hpp"

#include <algorithm>
#include <stdexcept>

#include "thompson/errors.hpp"

namespace thompson {

namespace {

using Point = PLMap::Point;
using boost::multiprecision::cpp_int;

// End value of piece i, lifted so the piece increases.
Rational piece_end(const std::vector<Point>& pts, std::size_t i) {
  Rational end = i + 1 < pts.size() ? pts[i + 1].y : pts.front().y;
  if (end <= pts[i].y) end += 1;
  return end;
}

Rational piece_length(const std::vector<Point>& pts, std::size_t i) {
  return (i + 1 < pts.size() ? pts[i + 1].x : Rational(1)) - pts[i].x;
}

std::vector<Point> canonical(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) { return a.x < b.x; });
  if (pts.empty() || pts.front().x != 0) throw std::domain_error("PL map needs a point at x = 0");
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (pts[i].x >= 1 || pts[i].y < 0 || pts[i].y >= 1) {
      throw std::domain_error("PL map coordinates must lie in [0, 1)");
    }
    if (i && pts[i].x == pts[i - 1].x) throw std::domain_error("repeated PL breakpoint");
  }
  Rational total = 0;
  std::vector<Rational> slope(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Rational rise = piece_end(pts, i) - pts[i].y;
    total += rise;
    slope[i] = rise / piece_length(pts, i);
  }
  if (total != 1) throw std::domain_error("PL map is not a circle homeomorphism");
  std::vector<Point> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i == 0 || pts[i].y == 0 || slope[i] != slope[i - 1]) out.push_back(pts[i]);
  }
  return out;
}

}  // namespace

PLMap::PLMap(int arity, std::vector<Point> points)
    : arity_(Arity(arity)), points_(canonical(std::move(points))) {}

PLMap PLMap::identity(int arity) { return PLMap(arity, {{0, 0}}); }

std::vector<Rational> PLMap::slopes() const {
  std::vector<Rational> out;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    out.push_back((piece_end(points_, i) - points_[i].y) / piece_length(points_, i));
  }
  return out;
}

bool PLMap::is_n_adic() const {
  for (const auto& p : points_) {
    if (!is_n_adic_rational(p.x, arity_) || !is_n_adic_rational(p.y, arity_)) return false;
  }
  for (const auto& s : slopes()) {
    if (!is_power_of(s, arity_)) return false;
  }
  return true;
}

std::string PLMap::to_string() const {
  std::string out;
  for (const auto& p : points_) {
    if (!out.empty()) out += "; ";
    out += rational_to_string(p.x) + ":" + rational_to_string(p.y);
  }
  return out;
}

PLMap PLMap::parse(std::string_view text, int arity) {
  std::vector<Point> pts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find(';', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view item = text.substr(pos, end - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1), ++pos;
    std::size_t colon = item.find(':');
    if (colon == std::string_view::npos) throw ParseError("expected 'x:y'", pos);
    pts.push_back({parse_rational(item.substr(0, colon)), parse_rational(item.substr(colon + 1))});
    pos = end + 1;
  }
  return PLMap(arity, std::move(pts));
}

PLMap from_element(const Element& e) {
  auto src = leaf_intervals(e.source());
  auto tgt = leaf_intervals(e.target());
  const std::size_t L = src.size();
  std::vector<Point> pts;
  pts.reserve(L);
  for (std::size_t p = 0; p < L; ++p) pts.push_back({src[p].first, tgt[(p + e.rotation()) % L].first});
  return PLMap(e.arity(), std::move(pts));
}

Rational evaluate(const PLMap& f, const Rational& x) {
  if (x < 0 || x >= 1) throw std::domain_error("evaluate: point outside [0, 1)");
  const auto& pts = f.points();
  auto it = std::upper_bound(pts.begin(), pts.end(), x,
                             [](const Rational& v, const Point& p) { return v < p.x; });
  std::size_t i = static_cast<std::size_t>(it - pts.begin()) - 1;
  Rational slope = (piece_end(pts, i) - pts[i].y) / piece_length(pts, i);
  Rational y = pts[i].y + slope * (x - pts[i].x);
  if (y >= 1) y -= 1;
  return y;
}

PLMap compose(const PLMap& f, const PLMap& g) {
  if (f.arity() != g.arity()) throw std::domain_error("compose: arity mismatch");
  const PLMap g_inv = invert(g);
  std::vector<Rational> xs;
  for (const auto& p : g.points()) xs.push_back(p.x);
  for (const auto& p : f.points()) xs.push_back(evaluate(g_inv, p.x));
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  std::vector<Point> pts;
  pts.reserve(xs.size());
  for (const auto& x : xs) pts.push_back({x, evaluate(f, evaluate(g, x))});
  return PLMap(f.arity(), std::move(pts));
}

PLMap invert(const PLMap& f) {
  std::vector<Point> pts;
  pts.reserve(f.points().size());
  for (const auto& p : f.points()) pts.push_back({p.y, p.x});
  return PLMap(f.arity(), std::move(pts));
}

bool is_n_adic_rational(const Rational& r, int n) {
  cpp_int den = boost::multiprecision::denominator(r);
  const cpp_int base = n;
  for (;;) {
    if (den == 1) return true;
    cpp_int g = boost::multiprecision::gcd(den, base);
    if (g == 1) return false;
    den /= g;
  }
}

bool is_power_of(const Rational& r, int n) {
  if (r <= 0) return false;
  cpp_int num = boost::multiprecision::numerator(r);
  cpp_int den = boost::multiprecision::denominator(r);
  if (num != 1 && den != 1) return false;
  cpp_int v = num == 1 ? den : num;
  while (v % n == 0) v /= n;
  return v == 1;
}

std::string rational_to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  std::size_t slash = text.find('/');
  auto digits = [](std::string_view s, std::size_t at) {
    if (s.empty() || (s.find_first_not_of("0123456789-") != std::string_view::npos)) {
      throw ParseError("bad rational '" + std::string(s) + "'", at);
    }
    return cpp_int(std::string(s));
  };
  if (slash == std::string_view::npos) return Rational(digits(text, 0));
  cpp_int num = digits(text.substr(0, slash), 0);
  cpp_int den = digits(text.substr(slash + 1), slash + 1);
  if (den <= 0) throw ParseError("denominator must be positive", slash + 1);
  return Rational(num, den);
}

}  // namespace thompson
