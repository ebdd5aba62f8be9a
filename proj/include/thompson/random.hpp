#pragma once

#include <cstdint>
#include <random>

#include "thompson/element.hpp"

namespace thompson {

using Rng = std::mt19937_64;

/// Tree with exactly `carets` carets, grown by expanding a uniformly chosen leaf.
NTree random_tree(std::size_t carets, int n, Rng& rng);

/// Reduced element from two random trees with a caret count drawn uniformly
/// from [0, max_carets] and, unless `in_F`, a uniform rotation.
Element random_element(int n, std::size_t max_carets, Rng& rng, bool in_F = false);

/// Like random_element but never the identity.
Element random_nonidentity(int n, std::size_t max_carets, Rng& rng, bool in_F = false);

}  // namespace thompson
