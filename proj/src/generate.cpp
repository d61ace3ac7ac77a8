#include "hybnet/generate.hpp"

#include <algorithm>

#include "hybnet/errors.hpp"

namespace hybnet {

PhyloTree random_tree(int n, Rng& rng) {
  if (n < 1) throw Error(Errc::TooSmall, "need at least one leaf");
  Multigraph g;
  VertexId first = g.add_vertex("1");
  if (n >= 2) g.add_edge(first, g.add_vertex("2"));
  for (int i = 3; i <= n; ++i) {
    auto edges = g.edges();
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    auto [a, b] = edges[pick(rng)];
    VertexId s = g.subdivide(a, b);
    g.add_edge(s, g.add_vertex(std::to_string(i)));
  }
  return PhyloTree::from_graph(g);
}

Forest random_forest(int n, int k, Rng& rng) {
  Forest f = Forest::from_trees({random_tree(n, rng)});
  for (int c = 1; c < k; ++c) {
    auto edges = f.graph().edges();
    if (edges.empty()) break;
    std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
    auto [a, b] = edges[pick(rng)];
    f = remove_edge(f, ExplicitEdge{a, b});
  }
  return Forest(f.graph().compacted());
}

}  // namespace hybnet
