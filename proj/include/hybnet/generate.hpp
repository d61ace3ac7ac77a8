#pragma once

#include <cstdint>
#include <random>

#include "hybnet/forest.hpp"

namespace hybnet {

using Rng = std::mt19937_64;

// Leaves "1".."n" inserted one at a time on a uniformly chosen edge.
PhyloTree random_tree(int n, Rng& rng);

// random_tree with k-1 distinct random edges cut (k clamped to the edge count + 1).
Forest random_forest(int n, int k, Rng& rng);

}  // namespace hybnet
