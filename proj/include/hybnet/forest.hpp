#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hybnet/multigraph.hpp"
#include "hybnet/tree.hpp"

namespace hybnet {

// A forest on X: phylogenetic trees with pairwise disjoint leaf sets whose
// union is X. All components live in one multigraph; removal operations keep
// the ids of surviving vertices, which lets callers correlate a forest with
// the forests derived from it.
class Forest {
 public:
  Forest() = default;
  // Validates every component; throws Error(InvalidTree/NonBinary/DuplicateLabel).
  explicit Forest(Multigraph g);
  static Forest from_trees(const std::vector<PhyloTree>& trees);

  const Multigraph& graph() const { return g_; }
  std::vector<Label> ground_set() const { return g_.labels(); }
  std::size_t size() const;
  std::size_t component_count() const { return g_.components().size(); }
  // Components ordered by canonical form.
  std::vector<PhyloTree> components() const;

  bool contains(const Label& x) const { return g_.find_label(x).has_value(); }
  // Throws Error(UnknownLabel).
  VertexId vertex(const Label& x) const;
  bool is_isolated(const Label& x) const;
  bool same_component(VertexId a, VertexId b) const;
  std::vector<VertexId> component_of(VertexId v) const;

 private:
  Multigraph g_;
};

std::string canonical_form(const Forest& forest);

// Bookkeeping for F - x: the removed leaf, its former neighbour, and the
// edge created by suppressing that neighbour (if it was suppressed).
struct LeafRemoval {
  VertexId leaf = -1;
  std::optional<VertexId> neighbor;
  std::optional<std::pair<VertexId, VertexId>> merged;
};

// Bookkeeping for F - e with e = {u,v}: the edges created by suppressing u
// and v respectively.
struct EdgeRemoval {
  VertexId u = -1;
  VertexId v = -1;
  std::optional<std::pair<VertexId, VertexId>> merged_u;
  std::optional<std::pair<VertexId, VertexId>> merged_v;
};

// Edge selectors that survive re-parsing. PendantSubtreeCut names the
// cut-edge of ((x,y),p) or, with q set, of ((x,y),(p,q)). CherryCut names
// the cut-edge of the cherry (p,q).
struct PendantOf {
  Label leaf;
};
struct PendantSubtreeCut {
  Label x, y, p;
  std::optional<Label> q;
};
struct CherryCut {
  Label p, q;
};
struct ExplicitEdge {
  VertexId u, v;
};
using EdgeRef = std::variant<PendantOf, PendantSubtreeCut, CherryCut, ExplicitEdge>;

// Resolves to (min,max) endpoint ids; throws Error(InvalidEdgeRef).
std::pair<VertexId, VertexId> resolve(const Forest& forest, const EdgeRef& ref);

Forest remove_leaf(const Forest& forest, const Label& x, LeafRemoval* effect = nullptr);
Forest remove_edge(const Forest& forest, const EdgeRef& ref, EdgeRemoval* effect = nullptr);

std::vector<Cherry> cherries(const Forest& forest);
bool is_cherry(const Forest& forest, const Label& x, const Label& y);

// The four mutually exclusive situations for a cherry (x,y) of one forest
// relative to another forest.
struct CherryCase {
  enum class Tag { SameCherry, OtherCherry, SameTreeNoCherry, DifferentTreesNoCherry };
  Tag tag = Tag::SameCherry;
  // OtherCherry: `via` is x or y, `partner` the z with (via,z) a cherry.
  std::optional<Label> via;
  std::optional<Label> partner;
};

CherryCase classify(const Forest& forest, const Forest& other, const Label& x, const Label& y);

}  // namespace hybnet
