#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "thompson/element.hpp"
#include "thompson/random.hpp"

namespace thompson {

/// Caret replacement T_{n_src} -> T_{n_tgt}: every n_src-caret becomes `block`.
struct EmbeddingSpec {
  int n_src = 3;
  int n_tgt = 2;
  NTree block;

  /// block = all_right((n_src - 1) / (n_tgt - 1), n_tgt); throws std::domain_error
  /// unless n_tgt - 1 divides n_src - 1.
  static EmbeddingSpec make(int n_src, int n_tgt);
  /// leaf_count(block) = n_src, block all-right, arity divisibility.
  bool valid() const;
};

/// Image before the final reduction; its caret count is (n_src-1)/(n_tgt-1) times the input's.
Element phi_unreduced(const Element& e, const EmbeddingSpec& spec);
Element phi(const Element& e, const EmbeddingSpec& spec);
/// phi restricted to F_n; throws std::domain_error on elements with rotation.
Element psi(const Element& e, const EmbeddingSpec& spec);

struct InjectivityReport {
  std::size_t samples = 0;
  std::size_t identity_images = 0;
  std::size_t collisions = 0;
  std::size_t homomorphism_failures = 0;
  std::size_t caret_discrepancies = 0;
  std::size_t order_checks = 0;
  std::size_t order_mismatches = 0;
  std::vector<std::string> examples;

  bool passed() const {
    return identity_images == 0 && collisions == 0 && homomorphism_failures == 0 &&
           order_mismatches == 0;
  }
};

/// Draws `count` nonidentity elements with at most `max_carets` carets, checks
/// phi(e) != 1, pairwise distinct images, phi(ab) = phi(a)phi(b) on consecutive
/// pairs, the caret relation, and order preservation on c_0 .. c_{torsion_max}.
InjectivityReport injectivity_scan(const EmbeddingSpec& spec, Rng& rng, std::size_t count,
                                   std::size_t max_carets = 6, int torsion_max = 5);

struct TorsionCensus {
  int n = 2;
  int radius = 0;
  std::size_t ball_size = 0;
  std::size_t torsion_count = 0;
  std::map<std::size_t, std::size_t> orders;  // order -> number of elements
  std::vector<std::size_t> non_divisor_orders;
  std::size_t order_n_minus_1 = 0;            // only counted for n >= 3
  std::map<std::size_t, std::string> witness;  // order -> one element key

  bool has_order(std::size_t m) const { return orders.count(m) != 0; }
  bool passed() const { return non_divisor_orders.empty() && order_n_minus_1 == 0; }
};

/// Smallest l >= 0 with m | l(n-1)+1, if any.
std::optional<std::size_t> divisor_witness(std::size_t m, int n);

TorsionCensus torsion_census(int n, int radius, std::size_t cap = 5'000'000);

}  // namespace thompson
