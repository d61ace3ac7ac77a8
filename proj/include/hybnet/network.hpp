#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hybnet/multigraph.hpp"

namespace hybnet {

// Connected multigraph, no loops, edge multiplicity <= 2, unlabeled vertices
// of degree 3 and labeled vertices (leaves) of degree <= 1. Without parallel
// edges it is a phylogenetic network.
class PseudoNetwork {
 public:
  PseudoNetwork() = default;
  // Validates; throws Error(Disconnected/DegreeViolation/TripleEdge/DuplicateLabel).
  explicit PseudoNetwork(Multigraph g);

  const Multigraph& graph() const { return g_; }
  bool is_simple() const;
  std::vector<Label> labels() const { return g_.labels(); }
  // Throws Error(UnknownLabel).
  VertexId leaf(const Label& x) const;
  int reticulation() const { return reticulation_number(g_); }
  // Multi-edges as (min,max) endpoint pairs.
  std::vector<std::pair<VertexId, VertexId>> multi_edges() const;

 private:
  Multigraph g_;
};

using PhyloNetwork = PseudoNetwork;

// Throws unless g satisfies the pseudo-network invariants.
void validate_pseudo_network(const Multigraph& g);

struct Blob {
  std::vector<VertexId> vertices;                       // sorted
  std::vector<std::pair<VertexId, VertexId>> edges;     // (min,max), parallel edges repeated
  std::vector<std::pair<VertexId, VertexId>> incident;  // (inside, outside)
  std::vector<Label> leaves;                            // L(B), sorted
  int nontrivial_cut_edges = 0;
  bool pendant = false;

  int reticulation() const {
    return static_cast<int>(edges.size()) - static_cast<int>(vertices.size()) + 1;
  }
  bool contains(VertexId v) const;
  bool contains_edge(VertexId u, VertexId v) const;
};

// Maximal 2-connected subgraphs that are not a single edge, in order of
// their least vertex id. A double edge forms a blob of its own.
std::vector<Blob> blobs(const PseudoNetwork& net);
std::vector<Blob> blobs(const Multigraph& g);

// Every blob has reticulation number at least two.
bool blobs_have_reticulation_at_least_two(const PseudoNetwork& net);

// N - x. The attachment vertex is suppressed even when this creates a
// parallel edge; the result is simple iff x's two neighbours were non-adjacent.
PseudoNetwork remove_network_leaf(const PseudoNetwork& net, const Label& x);

struct SimplificationResult {
  PseudoNetwork result;
  int suppressed_count = 0;
};

// Suppresses the (at most one) multi-edge and the resulting degree-2
// vertices until the network is simple. Throws
// Error(UnsupportedConfiguration) when the multi-edge's blob is incident
// with fewer than two cut-edges, or when more than one multi-edge exists.
SimplificationResult simplify(const PseudoNetwork& net);

// Deletes the edge {u,v} of a pendant blob with at least two leaves,
// suppresses both endpoints and simplifies. Throws Error(NotABlobEdge).
PseudoNetwork remove_blob_edge(const PseudoNetwork& net, VertexId u, VertexId v);

// N - B for a pendant blob with at most one incident leaf. Throws
// Error(NotPendantBlob/TooManyLeaves).
PseudoNetwork remove_pendant_blob(const PseudoNetwork& net, const Blob& blob);

}  // namespace hybnet
