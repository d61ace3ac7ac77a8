#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "hybnet/generate.hpp"
#include "hybnet/network.hpp"
#include "hybnet/newick.hpp"
#include "hybnet/oracles.hpp"

namespace hybnet::testing {

inline Forest F(const std::string& text) { return parse_forest(text); }

// Every topology on leaves 1..n, via TBR closure.
inline std::vector<PhyloTree> all_trees(int n) {
  Rng rng(1);
  std::vector<PhyloTree> out;
  for (const auto& s : tbr_ball(random_tree(n, rng), 1000)) out.push_back(parse_tree(s));
  return out;
}

// Label-respecting isomorphism of two small multigraphs.
inline bool isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() || a.labels() != b.labels())
    return false;
  std::vector<VertexId> order, seen(a.id_bound(), 0);
  for (VertexId v : a.vertices())
    if (a.labeled(v)) {
      order.push_back(v);
      seen[v] = 1;
    }
  for (std::size_t i = 0; i < order.size(); ++i)
    for (VertexId w : a.neighbors(order[i]))
      if (!seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
  if (order.size() != a.vertex_count()) return false;
  std::vector<VertexId> m(a.id_bound(), -1), used(b.id_bound(), 0);

  std::function<bool(std::size_t)> go = [&](std::size_t i) -> bool {
    if (i == order.size()) return true;
    VertexId v = order[i];
    std::vector<VertexId> cand;
    if (a.labeled(v)) {
      cand.push_back(*b.find_label(a.label(v)));
    } else {
      VertexId anchor = -1;
      for (VertexId w : a.neighbors(v))
        if (m[w] >= 0) anchor = m[w];
      cand = b.neighbors(anchor);
      std::sort(cand.begin(), cand.end());
      cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
    }
    for (VertexId c : cand) {
      if (used[c] || b.labeled(c) != a.labeled(v) || b.degree(c) != a.degree(v)) continue;
      bool ok = true;
      for (VertexId w : a.neighbors(v))
        if (m[w] >= 0 && a.multiplicity(v, w) != b.multiplicity(c, m[w])) ok = false;
      if (!ok) continue;
      m[v] = c;
      used[c] = 1;
      if (go(i + 1)) return true;
      m[v] = -1;
      used[c] = 0;
    }
    return false;
  };
  return go(0);
}

// Hang a leafless K4-with-one-subdivided-edge off the edge (a,b).
inline Multigraph hang_empty_blob(Multigraph g, VertexId a, VertexId b) {
  VertexId u = g.subdivide(a, b);
  VertexId k[4];
  for (auto& v : k) v = g.add_vertex();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g.add_edge(k[i], k[j]);
  g.add_edge(g.subdivide(k[0], k[1]), u);
  return g;
}

// Same, but the attachment vertex sits on a triangle so that removing the
// blob needs the re-subdivision fix-up.
inline Multigraph hang_empty_blob_on_triangle(Multigraph g, VertexId a, VertexId b) {
  VertexId w = g.subdivide(a, b);
  VertexId w2 = g.subdivide(w, b);
  VertexId u = g.add_vertex();
  g.add_edge(u, w);
  g.add_edge(u, w2);
  // u now has degree 2; the blob supplies the third edge
  VertexId k[4];
  for (auto& v : k) v = g.add_vertex();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g.add_edge(k[i], k[j]);
  g.add_edge(g.subdivide(k[0], k[1]), u);
  return g;
}

// Replace leaf x's pendant edge by a blob carrying x.
inline Multigraph hang_leaf_blob(Multigraph g, VertexId x) {
  VertexId p = g.neighbors(x).front();
  g.remove_edge(x, p);
  VertexId k[4];
  for (auto& v : k) v = g.add_vertex();
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) g.add_edge(k[i], k[j]);
  g.add_edge(g.subdivide(k[0], k[1]), p);
  g.add_edge(g.subdivide(k[2], k[3]), x);
  return g;
}

// Leaf y on a triangle a-b-p spliced into the edge u-v; removing y leaves
// the double edge a=b.
inline Multigraph hang_triangle_leaf(Multigraph g, VertexId u, VertexId v, const Label& y) {
  VertexId a = g.subdivide(u, v);
  VertexId b = g.subdivide(a, v);
  VertexId p = g.add_vertex();
  g.add_edge(a, p);
  g.add_edge(b, p);
  g.add_edge(p, g.add_vertex(y));
  return g;
}

}  // namespace hybnet::testing
