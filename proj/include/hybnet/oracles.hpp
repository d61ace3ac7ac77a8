#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hybnet/forest.hpp"
#include "hybnet/network.hpp"

namespace hybnet {

// A subdivision of a forest inside a network. Keys are vertex ids of the
// forest's graph; each edge (min,max) maps to the network path from the
// image of min to the image of max.
struct EmbeddingImage {
  std::map<VertexId, VertexId> vertex_map;
  std::map<std::pair<VertexId, VertexId>, std::vector<VertexId>> edge_paths;
};

// Checks the image independently: leaves onto equally labeled leaves,
// injective, paths along network edges, all images vertex-disjoint.
// Returns the reason for the first violation.
std::optional<std::string> verify_embedding(const PseudoNetwork& net, const Forest& forest, const EmbeddingImage& img);

// Backtracking search for an image of the forest. Throws Error(ScaleGuard)
// above 40 network vertices and Error(LabelMismatch) when a forest label is
// missing from the network.
std::optional<EmbeddingImage> displays(const PseudoNetwork& net, const Forest& forest);

// Canonical forms of the trees one TBR move away from t (t excluded).
// Throws Error(TooSmall) below four leaves.
std::set<std::string> tbr_neighbors(const PhyloTree& t);

// BFS distance in the TBR graph. Throws Error(LabelMismatch) or
// Error(CapExceeded) when t2 is not within `cap` moves.
int tbr_distance_bfs(const PhyloTree& t1, const PhyloTree& t2, int cap);

// Canonical forms of every tree reachable from t within `cap` moves.
std::set<std::string> tbr_ball(const PhyloTree& t, int cap);

}  // namespace hybnet
