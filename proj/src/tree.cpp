#include "hybnet/tree.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "hybnet/errors.hpp"

namespace hybnet {

PhyloTree PhyloTree::single(Label leaf) {
  Multigraph g;
  g.add_vertex(std::move(leaf));
  return from_graph(g);
}

void validate_tree_component(const Multigraph& g, const std::vector<VertexId>& comp) {
  if (comp.empty()) throw Error(Errc::InvalidTree, "empty component");
  std::size_t twice_edges = 0;
  for (VertexId v : comp) {
    const int d = g.degree(v);
    twice_edges += static_cast<std::size_t>(d);
    if (g.labeled(v)) {
      if (d > 1) throw Error(Errc::InvalidTree, "leaf '" + g.label(v) + "' has degree " + std::to_string(d));
    } else if (d != 3) {
      throw Error(d > 3 ? Errc::NonBinary : Errc::InvalidTree,
                  "unlabeled vertex of degree " + std::to_string(d));
    }
  }
  if (twice_edges / 2 + 1 != comp.size()) throw Error(Errc::InvalidTree, "component is not a tree");
}

PhyloTree PhyloTree::from_graph(const Multigraph& g) {
  auto comps = g.components();
  if (comps.size() != 1) throw Error(Errc::InvalidTree, "tree must be connected and nonempty");
  validate_tree_component(g, comps.front());
  auto labels = g.labels();
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw Error(Errc::DuplicateLabel, "duplicate leaf label");
  PhyloTree t;
  t.g_ = g.compacted();
  return t;
}

std::size_t PhyloTree::leaf_count() const { return g_.labels().size(); }

std::string PhyloTree::canonical() const { return canonical_tree_string(g_, 0); }

std::string canonical_form(const PhyloTree& tree) { return tree.canonical(); }

PhyloTree restriction(const PhyloTree& tree, const std::vector<Label>& keep) {
  if (keep.empty()) throw Error(Errc::EmptyRestriction, "restriction to the empty set");
  std::set<Label> wanted(keep.begin(), keep.end());
  for (const auto& l : wanted)
    if (!tree.graph().find_label(l)) throw Error(Errc::UnknownLabel, "label '" + l + "' not in tree");
  Multigraph g = tree.graph();
  for (VertexId v : g.vertices()) {
    if (!g.alive(v) || !g.labeled(v) || wanted.count(g.label(v))) continue;
    std::optional<VertexId> nb;
    if (g.degree(v) == 1) nb = g.neighbors(v).front();
    g.remove_vertex(v);
    if (nb) g.suppress(*nb);
  }
  return PhyloTree::from_graph(g);
}

bool is_cherry(const Multigraph& g, VertexId x, VertexId y) {
  if (x == y || !g.labeled(x) || !g.labeled(y)) return false;
  if (g.degree(x) != 1 || g.degree(y) != 1) return false;
  VertexId a = g.neighbors(x).front();
  VertexId b = g.neighbors(y).front();
  if (a == y && b == x) return true;
  return a == b;
}

std::vector<VertexId> cherry_partners(const Multigraph& g, VertexId x) {
  std::vector<VertexId> out;
  if (!g.labeled(x) || g.degree(x) != 1) return out;
  VertexId a = g.neighbors(x).front();
  if (g.labeled(a)) {
    out.push_back(a);
    return out;
  }
  for (VertexId w : g.neighbors(a))
    if (w != x && g.labeled(w)) out.push_back(w);
  return out;
}

std::vector<Cherry> graph_cherries(const Multigraph& g) {
  std::vector<Cherry> out;
  for (VertexId v : g.vertices()) {
    if (g.labeled(v)) {
      if (g.degree(v) == 1) {
        VertexId w = g.neighbors(v).front();
        if (g.labeled(w) && g.label(v) < g.label(w)) out.emplace_back(g.label(v), g.label(w));
      }
      continue;
    }
    std::vector<Label> leaves;
    for (VertexId w : g.neighbors(v))
      if (g.labeled(w)) leaves.push_back(g.label(w));
    std::sort(leaves.begin(), leaves.end());
    for (std::size_t i = 0; i < leaves.size(); ++i)
      for (std::size_t j = i + 1; j < leaves.size(); ++j) out.emplace_back(leaves[i], leaves[j]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cherry> cherries(const PhyloTree& tree) { return graph_cherries(tree.graph()); }

namespace {

std::pair<VertexId, VertexId> ordered(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

// Two leaves hanging off v other than `from`, if v is an internal vertex whose
// remaining neighbours are both leaves.
std::optional<std::pair<VertexId, VertexId>> leaf_pair_below(const Multigraph& g, VertexId v, VertexId from) {
  if (g.labeled(v)) return std::nullopt;
  std::vector<VertexId> rest;
  for (VertexId w : g.neighbors(v))
    if (w != from) rest.push_back(w);
  if (rest.size() == 2 && g.labeled(rest[0]) && g.labeled(rest[1])) return std::make_pair(rest[0], rest[1]);
  return std::nullopt;
}

}  // namespace

std::vector<PendantShape> pendant_shapes(const Multigraph& g, VertexId x, VertexId y) {
  std::vector<PendantShape> out;
  VertexId u = g.neighbors(x).front();
  if (g.labeled(u)) return out;  // the cherry is a whole two-leaf component
  VertexId w = -1;
  for (VertexId n : g.neighbors(u))
    if (n != x && n != y) w = n;
  if (g.labeled(w)) {
    // the whole tree is ((x,y),p)
    out.push_back(PendantShape{PendantShape::Kind::Triple, g.label(w), std::nullopt, false, std::nullopt, std::nullopt});
    return out;
  }
  std::vector<VertexId> rest;
  for (VertexId n : g.neighbors(w))
    if (n != u) rest.push_back(n);
  for (int k = 0; k < 2; ++k) {
    VertexId a = rest[k];
    VertexId b = rest[1 - k];
    if (g.labeled(a)) {
      out.push_back(PendantShape{PendantShape::Kind::Triple, g.label(a), std::nullopt, true, ordered(w, b),
                                 std::nullopt});
    } else if (auto pq = leaf_pair_below(g, a, w)) {
      Label p = g.label(pq->first);
      Label q = g.label(pq->second);
      if (q < p) std::swap(p, q);
      out.push_back(PendantShape{PendantShape::Kind::Quad, p, q, true, ordered(w, b), ordered(w, a)});
    }
  }
  if (g.labeled(rest[0]) && g.labeled(rest[1])) {
    // the whole tree is the quartet ((x,y),(p,q))
    Label p = g.label(rest[0]);
    Label q = g.label(rest[1]);
    if (q < p) std::swap(p, q);
    out.push_back(PendantShape{PendantShape::Kind::Quad, p, q, false, std::nullopt, std::nullopt});
  }
  std::sort(out.begin(), out.end(), [](const PendantShape& a, const PendantShape& b) {
    return std::tie(a.kind, a.p, a.q) < std::tie(b.kind, b.p, b.q);
  });
  return out;
}

std::vector<PendantShape> find_pendant_shape(const PhyloTree& tree, const Label& x, const Label& y) {
  const auto& g = tree.graph();
  auto vx = g.find_label(x);
  auto vy = g.find_label(y);
  if (!vx || !vy || !is_cherry(g, *vx, *vy)) throw Error(Errc::NotACherry, "(" + x + "," + y + ") is not a cherry");
  return pendant_shapes(g, *vx, *vy);
}

}  // namespace hybnet
