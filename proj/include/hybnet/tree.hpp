#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hybnet/multigraph.hpp"

namespace hybnet {

// Unrooted binary phylogenetic tree: connected, acyclic, unlabeled vertices
// of degree 3, labeled vertices of degree <= 1, labels distinct. A two-leaf
// tree is the single edge {x,y}; a one-leaf tree is the lone vertex x.
class PhyloTree {
 public:
  static PhyloTree single(Label leaf);
  // Validates and compacts; throws Error(InvalidTree/NonBinary/DuplicateLabel).
  static PhyloTree from_graph(const Multigraph& g);

  const Multigraph& graph() const { return g_; }
  std::vector<Label> labels() const { return g_.labels(); }
  std::size_t leaf_count() const;
  std::size_t edge_count() const { return g_.edge_count(); }
  std::string canonical() const;

 private:
  Multigraph g_;
};

// Throws unless the component containing `comp` is a valid phylogenetic tree.
void validate_tree_component(const Multigraph& g, const std::vector<VertexId>& comp);

// T|Y: minimal subtree spanning Y with degree-2 vertices suppressed.
PhyloTree restriction(const PhyloTree& tree, const std::vector<Label>& keep);

using Cherry = std::pair<Label, Label>;

// Cherries of the component(s) of g, each as (a,b) with a < b, sorted.
std::vector<Cherry> graph_cherries(const Multigraph& g);
std::vector<Cherry> cherries(const PhyloTree& tree);
// True when x and y are distinct leaves forming a cherry.
bool is_cherry(const Multigraph& g, VertexId x, VertexId y);
// Leaves forming a cherry with x.
std::vector<VertexId> cherry_partners(const Multigraph& g, VertexId x);

// A pendant subtree ((x,y),p) or ((x,y),(p,q)) around the cherry (x,y).
struct PendantShape {
  enum class Kind { Triple, Quad };
  Kind kind = Kind::Triple;
  Label p;
  std::optional<Label> q;  // Quad only; p < q
  bool proper = false;
  // Cut-edge giving rise to the shape (proper shapes only).
  std::optional<std::pair<VertexId, VertexId>> cut;
  // e_{(p,q)} for Quad shapes (proper shapes only).
  std::optional<std::pair<VertexId, VertexId>> pq_edge;
};

// All shapes around the cherry formed by leaves x and y; requires is_cherry.
std::vector<PendantShape> pendant_shapes(const Multigraph& g, VertexId x, VertexId y);
// Throws Error(NotACherry) when (x,y) is not a cherry of the tree.
std::vector<PendantShape> find_pendant_shape(const PhyloTree& tree, const Label& x, const Label& y);

std::string canonical_form(const PhyloTree& tree);

}  // namespace hybnet
