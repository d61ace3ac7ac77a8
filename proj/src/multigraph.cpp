#include "hybnet/multigraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "hybnet/errors.hpp"

namespace hybnet {

namespace {

void erase_one(std::vector<VertexId>& list, VertexId value) {
  auto it = std::find(list.begin(), list.end(), value);
  if (it == list.end()) throw std::logic_error("multigraph: missing adjacency entry");
  list.erase(it);
}

}  // namespace

VertexId Multigraph::add_vertex(Label label) {
  verts_.push_back(Vertex{std::move(label), {}, true});
  ++live_;
  return static_cast<VertexId>(verts_.size() - 1);
}

void Multigraph::add_edge(VertexId u, VertexId v) {
  if (u == v) throw std::logic_error("multigraph: loops are not allowed");
  verts_[u].nbrs.push_back(v);
  verts_[v].nbrs.push_back(u);
}

void Multigraph::remove_edge(VertexId u, VertexId v) {
  erase_one(verts_[u].nbrs, v);
  erase_one(verts_[v].nbrs, u);
}

void Multigraph::remove_vertex(VertexId v) {
  for (VertexId w : verts_[v].nbrs) erase_one(verts_[w].nbrs, v);
  verts_[v].nbrs.clear();
  verts_[v].alive = false;
  verts_[v].label.clear();
  --live_;
}

std::optional<std::pair<VertexId, VertexId>> Multigraph::suppress(VertexId v) {
  const auto& n = verts_[v].nbrs;
  if (!verts_[v].alive || labeled(v) || n.size() != 2 || n[0] == n[1]) return std::nullopt;
  std::pair<VertexId, VertexId> ends{n[0], n[1]};
  remove_vertex(v);
  add_edge(ends.first, ends.second);
  return ends;
}

VertexId Multigraph::subdivide(VertexId u, VertexId v) {
  remove_edge(u, v);
  VertexId s = add_vertex();
  add_edge(u, s);
  add_edge(s, v);
  return s;
}

bool Multigraph::alive(VertexId v) const {
  return v >= 0 && static_cast<std::size_t>(v) < verts_.size() && verts_[v].alive;
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
  return static_cast<int>(std::count(verts_[u].nbrs.begin(), verts_[u].nbrs.end(), v));
}

std::vector<VertexId> Multigraph::vertices() const {
  std::vector<VertexId> out;
  out.reserve(live_);
  for (std::size_t i = 0; i < verts_.size(); ++i)
    if (verts_[i].alive) out.push_back(static_cast<VertexId>(i));
  return out;
}

std::size_t Multigraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& v : verts_)
    if (v.alive) twice += v.nbrs.size();
  return twice / 2;
}

std::vector<std::pair<VertexId, VertexId>> Multigraph::edges() const {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    if (!verts_[i].alive) continue;
    for (VertexId w : verts_[i].nbrs)
      if (static_cast<VertexId>(i) < w) out.emplace_back(static_cast<VertexId>(i), w);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<VertexId> Multigraph::find_label(const Label& label) const {
  for (std::size_t i = 0; i < verts_.size(); ++i)
    if (verts_[i].alive && verts_[i].label == label) return static_cast<VertexId>(i);
  return std::nullopt;
}

std::vector<Label> Multigraph::labels() const {
  std::vector<Label> out;
  for (const auto& v : verts_)
    if (v.alive && !v.label.empty()) out.push_back(v.label);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<VertexId>> Multigraph::components() const {
  std::vector<std::vector<VertexId>> out;
  std::vector<char> seen(verts_.size(), 0);
  for (std::size_t s = 0; s < verts_.size(); ++s) {
    if (!verts_[s].alive || seen[s]) continue;
    std::vector<VertexId> comp{static_cast<VertexId>(s)};
    seen[s] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k) {
      for (VertexId w : verts_[comp[k]].nbrs) {
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Multigraph::connected() const { return components().size() <= 1; }

Multigraph Multigraph::induced(const std::vector<VertexId>& keep) const {
  std::vector<VertexId> index(verts_.size(), -1);
  Multigraph out;
  for (VertexId v : keep) index[v] = out.add_vertex(verts_[v].label);
  for (VertexId v : keep) {
    for (VertexId w : verts_[v].nbrs) {
      if (index[w] >= 0 && v < w) out.add_edge(index[v], index[w]);
    }
  }
  return out;
}

Multigraph Multigraph::compacted() const { return induced(vertices()); }

int reticulation_number(const Multigraph& g) {
  if (g.vertex_count() == 0) throw Error(Errc::Disconnected, "empty graph");
  if (!g.connected()) throw Error(Errc::Disconnected, "graph is not connected");
  return static_cast<int>(g.edge_count()) - static_cast<int>(g.vertex_count()) + 1;
}

namespace {

std::string rooted_string(const Multigraph& g, VertexId v, VertexId parent) {
  if (g.labeled(v)) return g.label(v);
  std::vector<std::string> parts;
  for (VertexId w : g.neighbors(v))
    if (w != parent) parts.push_back(rooted_string(g, w, v));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  out += ')';
  return out;
}

}  // namespace

std::string canonical_tree_string(const Multigraph& g, VertexId start) {
  // least labeled vertex of the component
  std::vector<VertexId> comp{start};
  std::vector<char> seen(g.id_bound(), 0);
  seen[start] = 1;
  VertexId root = -1;
  for (std::size_t k = 0; k < comp.size(); ++k) {
    VertexId v = comp[k];
    if (g.labeled(v) && (root < 0 || g.label(v) < g.label(root))) root = v;
    for (VertexId w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        comp.push_back(w);
      }
    }
  }
  if (root < 0) throw std::logic_error("canonical_tree_string: component without leaves");
  if (g.degree(root) == 0) return g.label(root) + ";";
  VertexId hub = g.neighbors(root).front();
  if (g.labeled(hub)) return "(" + g.label(root) + "," + g.label(hub) + ");";
  std::vector<std::string> parts;
  for (VertexId w : g.neighbors(hub))
    if (w != root) parts.push_back(rooted_string(g, w, hub));
  std::sort(parts.begin(), parts.end());
  std::string out = "(" + g.label(root);
  for (const auto& p : parts) out += "," + p;
  out += ");";
  return out;
}

}  // namespace hybnet
