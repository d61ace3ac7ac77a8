#pragma once

#include "hybnet/cps.hpp"
#include "hybnet/network.hpp"
#include "hybnet/oracles.hpp"

namespace hybnet {

struct BuildResult {
  PhyloNetwork network;
  // Images of the input forests (vertex ids of f1.graph() / f2.graph()).
  EmbeddingImage image1;
  EmbeddingImage image2;
};

// Replays the trace backwards from the one-leaf network, inserting a pendant
// leaf for every C1/C3 step and one edge for every C2 step, so r(N) equals
// the trace's weight. Throws Error(InvalidTrace) when the trace does not
// replay and Error(ImageTrackingError) on internal inconsistencies.
BuildResult build_network(const Forest& f1, const Forest& f2, const ReductionTrace& trace);

}  // namespace hybnet
