#include "thompson/embed.hpp"

#include <set>
#include <stdexcept>

#include "thompson/generators.hpp"
#include "thompson/metrics.hpp"

namespace thompson {

EmbeddingSpec EmbeddingSpec::make(int n_src, int n_tgt) {
  Arity{n_src};
  Arity{n_tgt};
  if ((n_src - 1) % (n_tgt - 1) != 0) {
    throw std::domain_error("no caret replacement from arity " + std::to_string(n_src) +
                            " to arity " + std::to_string(n_tgt) + ": " +
                            std::to_string(n_tgt - 1) + " does not divide " +
                            std::to_string(n_src - 1));
  }
  const auto l = static_cast<std::size_t>((n_src - 1) / (n_tgt - 1));
  return {n_src, n_tgt, all_right(l, n_tgt)};
}

bool EmbeddingSpec::valid() const {
  if (n_src < 2 || n_tgt < 2 || (n_src - 1) % (n_tgt - 1) != 0) return false;
  if (block.arity() != n_tgt || block.leaf_count() != static_cast<std::size_t>(n_src)) return false;
  return block == all_right(block.caret_count(), n_tgt);
}

Element phi_unreduced(const Element& e, const EmbeddingSpec& spec) {
  if (e.arity() != spec.n_src) {
    throw std::domain_error("phi: element has arity " + std::to_string(e.arity()) +
                            ", embedding expects " + std::to_string(spec.n_src));
  }
  const Element r = reduce(e);
  return Element(replace_carets(r.source(), spec.block), replace_carets(r.target(), spec.block),
                 r.rotation());
}

Element phi(const Element& e, const EmbeddingSpec& spec) { return reduce(phi_unreduced(e, spec)); }

Element psi(const Element& e, const EmbeddingSpec& spec) {
  if (!is_in_F(e)) throw std::domain_error("psi: " + canonical_key(e) + " is not in F_n");
  return phi(e, spec);
}

InjectivityReport injectivity_scan(const EmbeddingSpec& spec, Rng& rng, std::size_t count,
                                   std::size_t max_carets, int torsion_max) {
  InjectivityReport rep;
  const std::size_t ratio = static_cast<std::size_t>((spec.n_src - 1) / (spec.n_tgt - 1));
  std::map<std::string, std::string> seen;  // image key -> input key
  std::optional<Element> previous;
  for (std::size_t s = 0; s < count; ++s) {
    const Element e = random_nonidentity(spec.n_src, max_carets, rng);
    const Element img = phi(e, spec);
    ++rep.samples;
    const std::string key = e.to_string();
    if (img.is_identity()) {
      ++rep.identity_images;
      rep.examples.push_back("identity image: " + key);
    }
    auto [it, fresh] = seen.emplace(img.to_string(), key);
    if (!fresh && it->second != key) {
      ++rep.collisions;
      rep.examples.push_back("collision: " + key + " and " + it->second);
    }
    if (ratio * e.caret_count() != img.caret_count()) {
      ++rep.caret_discrepancies;
      if (rep.caret_discrepancies <= 5) {
        rep.examples.push_back("caret relation differs: " + key + " has " +
                               std::to_string(e.caret_count()) + " carets, image " +
                               img.to_string() + " has " + std::to_string(img.caret_count()));
      }
    }
    if (previous) {
      if (phi(multiply(*previous, e), spec) != multiply(phi(*previous, spec), img)) {
        ++rep.homomorphism_failures;
        rep.examples.push_back("not multiplicative: " + previous->to_string() + " * " + key);
      }
    }
    previous = e;
  }
  for (int j = 0; j <= torsion_max; ++j) {
    const Element cj = c(j, spec.n_src);
    ++rep.order_checks;
    if (order(cj) != order(phi(cj, spec))) {
      ++rep.order_mismatches;
      rep.examples.push_back("order changes on c_" + std::to_string(j));
    }
  }
  return rep;
}

std::optional<std::size_t> divisor_witness(std::size_t m, int n) {
  if (m == 0) return std::nullopt;
  for (std::size_t l = 0; l < m; ++l) {
    if ((l * static_cast<std::size_t>(n - 1) + 1) % m == 0) return l;
  }
  return std::nullopt;
}

TorsionCensus torsion_census(int n, int radius, std::size_t cap) {
  TorsionCensus census;
  census.n = n;
  census.radius = radius;
  const BallTable ball = bfs_ball(n, GeneratingSet::sigma(n), radius, cap);
  census.ball_size = ball.size();
  std::set<std::size_t> bad;
  for (const auto& sphere : ball.spheres) {
    for (const auto& e : sphere) {
      const auto m = order(e);
      if (!m) continue;
      ++census.torsion_count;
      ++census.orders[*m];
      census.witness.emplace(*m, e.to_string());
      if (!divisor_witness(*m, n)) bad.insert(*m);
      if (n >= 3 && *m == static_cast<std::size_t>(n - 1)) ++census.order_n_minus_1;
    }
  }
  census.non_divisor_orders.assign(bad.begin(), bad.end());
  return census;
}

}  // namespace thompson
