#include "hybnet/forest.hpp"

#include <algorithm>

#include "hybnet/errors.hpp"

namespace hybnet {

Forest::Forest(Multigraph g) : g_(std::move(g)) {
  for (const auto& comp : g_.components()) validate_tree_component(g_, comp);
  auto labels = g_.labels();
  auto dup = std::adjacent_find(labels.begin(), labels.end());
  if (dup != labels.end()) throw Error(Errc::DuplicateLabel, "label '" + *dup + "' occurs twice");
}

Forest Forest::from_trees(const std::vector<PhyloTree>& trees) {
  Multigraph g;
  for (const auto& t : trees) {
    const auto& tg = t.graph();
    const VertexId base = static_cast<VertexId>(g.id_bound());
    for (VertexId v : tg.vertices()) g.add_vertex(tg.label(v));
    for (auto [a, b] : tg.edges()) g.add_edge(base + a, base + b);
  }
  return Forest(std::move(g));
}

std::size_t Forest::size() const { return g_.labels().size(); }

std::vector<PhyloTree> Forest::components() const {
  std::vector<PhyloTree> out;
  for (const auto& comp : g_.components()) out.push_back(PhyloTree::from_graph(g_.induced(comp)));
  std::sort(out.begin(), out.end(),
            [](const PhyloTree& a, const PhyloTree& b) { return a.canonical() < b.canonical(); });
  return out;
}

VertexId Forest::vertex(const Label& x) const {
  auto v = g_.find_label(x);
  if (!v) throw Error(Errc::UnknownLabel, "label '" + x + "' not in forest");
  return *v;
}

bool Forest::is_isolated(const Label& x) const { return g_.degree(vertex(x)) == 0; }

std::vector<VertexId> Forest::component_of(VertexId v) const {
  std::vector<VertexId> comp{v};
  std::vector<char> seen(g_.id_bound(), 0);
  seen[v] = 1;
  for (std::size_t k = 0; k < comp.size(); ++k)
    for (VertexId w : g_.neighbors(comp[k]))
      if (!seen[w]) {
        seen[w] = 1;
        comp.push_back(w);
      }
  return comp;
}

bool Forest::same_component(VertexId a, VertexId b) const {
  auto comp = component_of(a);
  return std::find(comp.begin(), comp.end(), b) != comp.end();
}

std::string canonical_form(const Forest& forest) {
  const auto& g = forest.graph();
  std::vector<std::string> parts;
  for (const auto& comp : g.components()) parts.push_back(canonical_tree_string(g, comp.front()));
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (const auto& p : parts) {
    out += p;
    out += '\n';
  }
  return out;
}

namespace {

std::pair<VertexId, VertexId> ordered(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

[[noreturn]] void bad_ref(const std::string& why) { throw Error(Errc::InvalidEdgeRef, why); }

struct Resolver {
  const Forest& forest;

  std::pair<VertexId, VertexId> operator()(const PendantOf& r) const {
    const auto& g = forest.graph();
    auto v = g.find_label(r.leaf);
    if (!v) bad_ref("no leaf '" + r.leaf + "'");
    if (g.degree(*v) != 1) bad_ref("leaf '" + r.leaf + "' is an isolated vertex");
    return ordered(*v, g.neighbors(*v).front());
  }

  std::pair<VertexId, VertexId> operator()(const CherryCut& r) const {
    const auto& g = forest.graph();
    auto p = g.find_label(r.p);
    auto q = g.find_label(r.q);
    if (!p || !q || !is_cherry(g, *p, *q)) bad_ref("(" + r.p + "," + r.q + ") is not a cherry");
    VertexId w = g.neighbors(*p).front();
    if (g.labeled(w)) bad_ref("cherry (" + r.p + "," + r.q + ") is a whole component");
    for (VertexId n : g.neighbors(w))
      if (n != *p && n != *q) return ordered(w, n);
    bad_ref("cherry without cut-edge");
  }

  std::pair<VertexId, VertexId> operator()(const PendantSubtreeCut& r) const {
    const auto& g = forest.graph();
    auto x = g.find_label(r.x);
    auto y = g.find_label(r.y);
    if (!x || !y || !is_cherry(g, *x, *y)) bad_ref("(" + r.x + "," + r.y + ") is not a cherry");
    Label p = r.p;
    std::optional<Label> q = r.q;
    if (q && *q < p) std::swap(p, *q);
    for (const auto& s : pendant_shapes(g, *x, *y)) {
      if (!s.proper || s.p != p || s.q != q) continue;
      return *s.cut;
    }
    bad_ref("no proper pendant subtree with the requested shape");
  }

  std::pair<VertexId, VertexId> operator()(const ExplicitEdge& r) const {
    const auto& g = forest.graph();
    if (!g.alive(r.u) || !g.alive(r.v) || !g.adjacent(r.u, r.v)) bad_ref("no such edge");
    return ordered(r.u, r.v);
  }
};

}  // namespace

std::pair<VertexId, VertexId> resolve(const Forest& forest, const EdgeRef& ref) {
  return std::visit(Resolver{forest}, ref);
}

Forest remove_leaf(const Forest& forest, const Label& x, LeafRemoval* effect) {
  Multigraph g = forest.graph();
  VertexId v = forest.vertex(x);
  LeafRemoval rec;
  rec.leaf = v;
  if (g.degree(v) == 1) rec.neighbor = g.neighbors(v).front();
  g.remove_vertex(v);
  if (rec.neighbor) rec.merged = g.suppress(*rec.neighbor);
  if (effect) *effect = rec;
  return Forest(std::move(g));
}

Forest remove_edge(const Forest& forest, const EdgeRef& ref, EdgeRemoval* effect) {
  auto [u, v] = resolve(forest, ref);
  Multigraph g = forest.graph();
  g.remove_edge(u, v);
  EdgeRemoval rec;
  rec.u = u;
  rec.v = v;
  rec.merged_u = g.suppress(u);
  rec.merged_v = g.suppress(v);
  if (effect) *effect = rec;
  return Forest(std::move(g));
}

std::vector<Cherry> cherries(const Forest& forest) { return graph_cherries(forest.graph()); }

bool is_cherry(const Forest& forest, const Label& x, const Label& y) {
  const auto& g = forest.graph();
  auto vx = g.find_label(x);
  auto vy = g.find_label(y);
  return vx && vy && is_cherry(g, *vx, *vy);
}

CherryCase classify(const Forest& forest, const Forest& other, const Label& x, const Label& y) {
  if (!is_cherry(forest, x, y)) throw Error(Errc::NotACherry, "(" + x + "," + y + ") is not a cherry");
  const auto& g = other.graph();
  VertexId ox = other.vertex(x);
  VertexId oy = other.vertex(y);
  if (is_cherry(g, ox, oy)) return CherryCase{CherryCase::Tag::SameCherry, std::nullopt, std::nullopt};
  for (VertexId leaf : {ox, oy}) {
    std::vector<Label> zs;
    for (VertexId z : cherry_partners(g, leaf))
      if (z != ox && z != oy) zs.push_back(g.label(z));
    if (!zs.empty()) {
      std::sort(zs.begin(), zs.end());
      return CherryCase{CherryCase::Tag::OtherCherry, g.label(leaf), zs.front()};
    }
  }
  if (other.same_component(ox, oy)) return CherryCase{CherryCase::Tag::SameTreeNoCherry, std::nullopt, std::nullopt};
  return CherryCase{CherryCase::Tag::DifferentTreesNoCherry, std::nullopt, std::nullopt};
}

}  // namespace hybnet
