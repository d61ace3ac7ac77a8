#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hybnet {

using Label = std::string;
using VertexId = int;

// Undirected multigraph with optional leaf labels. Vertex ids are stable:
// removing a vertex leaves a tombstone, so ids handed out earlier keep
// pointing at the same vertex for the lifetime of the value. Parallel edges
// appear as repeated entries in the adjacency lists.
class Multigraph {
 public:
  VertexId add_vertex(Label label = {});
  void add_edge(VertexId u, VertexId v);
  // Removes one copy of {u,v}; throws std::logic_error when absent.
  void remove_edge(VertexId u, VertexId v);
  // Removes v and all incident edges.
  void remove_vertex(VertexId v);
  // Suppresses an unlabeled degree-2 vertex whose two neighbours are
  // distinct. Returns the neighbour pair, or nullopt when v does not qualify.
  std::optional<std::pair<VertexId, VertexId>> suppress(VertexId v);
  // Replaces {u,v} by a path u-s-v and returns s.
  VertexId subdivide(VertexId u, VertexId v);

  bool alive(VertexId v) const;
  const Label& label(VertexId v) const { return verts_[v].label; }
  bool labeled(VertexId v) const { return !verts_[v].label.empty(); }
  const std::vector<VertexId>& neighbors(VertexId v) const { return verts_[v].nbrs; }
  int degree(VertexId v) const { return static_cast<int>(verts_[v].nbrs.size()); }
  int multiplicity(VertexId u, VertexId v) const;
  bool adjacent(VertexId u, VertexId v) const { return multiplicity(u, v) > 0; }

  // Upper bound (exclusive) on vertex ids, including tombstones.
  std::size_t id_bound() const { return verts_.size(); }
  std::vector<VertexId> vertices() const;
  std::size_t vertex_count() const { return live_; }
  std::size_t edge_count() const;
  // Edges as (min,max) pairs, parallel edges repeated, sorted.
  std::vector<std::pair<VertexId, VertexId>> edges() const;

  std::optional<VertexId> find_label(const Label& label) const;
  std::vector<Label> labels() const;  // sorted

  std::vector<std::vector<VertexId>> components() const;
  bool connected() const;

  // Copy of the subgraph induced by `keep`, renumbered 0..k-1 in the order given.
  Multigraph induced(const std::vector<VertexId>& keep) const;
  // Renumbers live vertices densely, preserving relative order.
  Multigraph compacted() const;

 private:
  struct Vertex {
    Label label;
    std::vector<VertexId> nbrs;
    bool alive = true;
  };
  std::vector<Vertex> verts_;
  std::size_t live_ = 0;
};

// Reticulation number |E| - |V| + 1 of a connected multigraph.
int reticulation_number(const Multigraph& g);

// Canonical rendering of the tree component containing `start`: rooted at
// its least leaf label, children sorted, terminated by ';'. Assumes the
// component is acyclic.
std::string canonical_tree_string(const Multigraph& g, VertexId start);

}  // namespace hybnet
