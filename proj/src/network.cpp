#include "hybnet/network.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hybnet/errors.hpp"

namespace hybnet {

void validate_pseudo_network(const Multigraph& g) {
  if (g.vertex_count() == 0) throw Error(Errc::Disconnected, "network has no vertices");
  if (!g.connected()) throw Error(Errc::Disconnected, "network is not connected");
  for (VertexId v : g.vertices()) {
    const int d = g.degree(v);
    if (g.labeled(v)) {
      if (d > 1) throw Error(Errc::DegreeViolation, "leaf '" + g.label(v) + "' has degree " + std::to_string(d));
      if (d == 0 && g.vertex_count() != 1) throw Error(Errc::DegreeViolation, "isolated leaf '" + g.label(v) + "'");
    } else if (d != 3) {
      throw Error(Errc::DegreeViolation, "internal vertex of degree " + std::to_string(d));
    }
    for (VertexId w : g.neighbors(v))
      if (g.multiplicity(v, w) > 2) throw Error(Errc::TripleEdge, "more than two parallel edges");
  }
  auto labels = g.labels();
  auto dup = std::adjacent_find(labels.begin(), labels.end());
  if (dup != labels.end()) throw Error(Errc::DuplicateLabel, "label '" + *dup + "' occurs twice");
  if (labels.empty()) throw Error(Errc::DegreeViolation, "network has no leaves");
}

PseudoNetwork::PseudoNetwork(Multigraph g) : g_(std::move(g)) { validate_pseudo_network(g_); }

bool PseudoNetwork::is_simple() const { return multi_edges().empty(); }

VertexId PseudoNetwork::leaf(const Label& x) const {
  auto v = g_.find_label(x);
  if (!v) throw Error(Errc::UnknownLabel, "label '" + x + "' not in network");
  return *v;
}

std::vector<std::pair<VertexId, VertexId>> PseudoNetwork::multi_edges() const {
  auto e = g_.edges();
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t i = 1; i < e.size(); ++i)
    if (e[i] == e[i - 1] && (out.empty() || out.back() != e[i])) out.push_back(e[i]);
  return out;
}

bool Blob::contains(VertexId v) const { return std::binary_search(vertices.begin(), vertices.end(), v); }

bool Blob::contains_edge(VertexId u, VertexId v) const {
  auto key = std::make_pair(std::min(u, v), std::max(u, v));
  return std::binary_search(edges.begin(), edges.end(), key);
}

std::vector<Blob> blobs(const Multigraph& g) {
  const auto edges = g.edges();
  const std::size_t n = g.id_bound();
  std::vector<std::vector<std::pair<VertexId, int>>> adj(n);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    adj[edges[i].first].emplace_back(edges[i].second, static_cast<int>(i));
    adj[edges[i].second].emplace_back(edges[i].first, static_cast<int>(i));
  }
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<int> stack;
  std::vector<std::vector<int>> groups;
  int clock = 0;
  std::function<void(VertexId, int)> dfs = [&](VertexId v, int parent_edge) {
    disc[v] = low[v] = clock++;
    for (auto [w, id] : adj[v]) {
      if (id == parent_edge) continue;
      if (disc[w] < 0) {
        stack.push_back(id);
        dfs(w, id);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<int> group;
          int top;
          do {
            top = stack.back();
            stack.pop_back();
            group.push_back(top);
          } while (top != id);
          groups.push_back(std::move(group));
        }
      } else if (disc[w] < disc[v]) {
        stack.push_back(id);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (VertexId v : g.vertices())
    if (disc[v] < 0) dfs(v, -1);

  std::vector<Blob> out;
  for (const auto& group : groups) {
    if (group.size() < 2) continue;
    Blob b;
    for (int id : group) {
      b.edges.push_back(edges[id]);
      b.vertices.push_back(edges[id].first);
      b.vertices.push_back(edges[id].second);
    }
    std::sort(b.edges.begin(), b.edges.end());
    std::sort(b.vertices.begin(), b.vertices.end());
    b.vertices.erase(std::unique(b.vertices.begin(), b.vertices.end()), b.vertices.end());
    for (VertexId v : b.vertices) {
      for (VertexId w : g.neighbors(v)) {
        if (b.contains(w)) continue;
        b.incident.emplace_back(v, w);
        if (g.labeled(w) && g.degree(w) == 1)
          b.leaves.push_back(g.label(w));
        else
          ++b.nontrivial_cut_edges;
      }
    }
    std::sort(b.leaves.begin(), b.leaves.end());
    b.pendant = b.nontrivial_cut_edges <= 1;
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(), [](const Blob& a, const Blob& b) { return a.vertices < b.vertices; });
  return out;
}

std::vector<Blob> blobs(const PseudoNetwork& net) { return blobs(net.graph()); }

bool blobs_have_reticulation_at_least_two(const PseudoNetwork& net) {
  for (const auto& b : blobs(net))
    if (b.reticulation() < 2) return false;
  return true;
}

PseudoNetwork remove_network_leaf(const PseudoNetwork& net, const Label& x) {
  if (net.labels().size() < 2) throw Error(Errc::TooSmall, "cannot remove the only leaf");
  Multigraph g = net.graph();
  VertexId v = net.leaf(x);
  VertexId attach = g.neighbors(v).front();
  g.remove_vertex(v);
  if (!g.labeled(attach) && !g.suppress(attach))
    throw Error(Errc::UnsupportedConfiguration, "attachment vertex of '" + x + "' cannot be suppressed");
  return PseudoNetwork(std::move(g));
}

namespace {

const Blob* blob_with_edge(const std::vector<Blob>& bs, VertexId u, VertexId v) {
  for (const auto& b : bs)
    if (b.contains_edge(u, v)) return &b;
  return nullptr;
}

// Suppresses multi-edges one at a time; each step needs the multi-edge's
// blob to be incident with at least two cut-edges.
int simplify_in_place(Multigraph& g) {
  int count = 0;
  for (;;) {
    auto multi = PseudoNetwork(g).multi_edges();
    if (multi.empty()) return count;
    auto [u, v] = multi.front();
    auto bs = blobs(g);
    const Blob* b = blob_with_edge(bs, u, v);
    if (!b || b->incident.size() < 2)
      throw Error(Errc::UnsupportedConfiguration, "multi-edge blob is incident with fewer than two cut-edges");
    g.remove_edge(u, v);
    if (!g.suppress(u) || !g.suppress(v))
      throw Error(Errc::UnsupportedConfiguration, "multi-edge endpoints cannot be suppressed");
    ++count;
  }
}

}  // namespace

SimplificationResult simplify(const PseudoNetwork& net) {
  if (net.multi_edges().size() > 1) throw Error(Errc::UnsupportedConfiguration, "more than one multi-edge");
  Multigraph g = net.graph();
  int count = simplify_in_place(g);
  return SimplificationResult{PseudoNetwork(std::move(g)), count};
}

PseudoNetwork remove_blob_edge(const PseudoNetwork& net, VertexId u, VertexId v) {
  const auto& g0 = net.graph();
  if (!g0.alive(u) || !g0.alive(v) || !g0.adjacent(u, v)) throw Error(Errc::NotABlobEdge, "no such edge");
  auto bs = blobs(net);
  const Blob* b = blob_with_edge(bs, u, v);
  if (!b) throw Error(Errc::NotABlobEdge, "edge is a cut-edge");
  if (!b->pendant || b->leaves.size() < 2)
    throw Error(Errc::NotABlobEdge, "edge does not lie in a pendant blob with at least two leaves");
  Multigraph g = g0;
  g.remove_edge(u, v);
  if (!g.suppress(u) || !g.suppress(v))
    throw Error(Errc::UnsupportedConfiguration, "blob edge endpoints cannot be suppressed");
  simplify_in_place(g);
  return PseudoNetwork(std::move(g));
}

PseudoNetwork remove_pendant_blob(const PseudoNetwork& net, const Blob& blob) {
  auto bs = blobs(net);
  auto it = std::find_if(bs.begin(), bs.end(), [&](const Blob& b) { return b.vertices == blob.vertices; });
  if (it == bs.end() || !it->pendant) throw Error(Errc::NotPendantBlob, "not a pendant blob of this network");
  const Blob& b = *it;
  if (b.leaves.size() > 1) throw Error(Errc::TooManyLeaves, "pendant blob has more than one leaf");

  Multigraph g = net.graph();
  std::optional<VertexId> outer;
  for (auto [in, out] : b.incident)
    if (!(g.labeled(out) && g.degree(out) == 1)) outer = out;

  if (b.leaves.size() == 1) {
    VertexId x = net.leaf(b.leaves.front());
    for (VertexId v : b.vertices) g.remove_vertex(v);
    if (outer) g.add_edge(x, *outer);
    return PseudoNetwork(std::move(g));
  }
  if (!outer) throw Error(Errc::NotPendantBlob, "blob without incident edges");
  for (VertexId v : b.vertices) g.remove_vertex(v);
  const VertexId u = *outer;
  const VertexId w1 = g.neighbors(u)[0];
  const VertexId w2 = g.neighbors(u)[1];
  if (!g.adjacent(w1, w2)) {
    g.suppress(u);
  } else {
    VertexId fresh = g.subdivide(w1, w2);
    g.add_edge(u, fresh);
  }
  return PseudoNetwork(std::move(g));
}

}  // namespace hybnet
