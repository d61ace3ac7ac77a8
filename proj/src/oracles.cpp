#include "hybnet/oracles.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "hybnet/errors.hpp"
#include "hybnet/newick.hpp"

namespace hybnet {

std::optional<std::string> verify_embedding(const PseudoNetwork& net, const Forest& forest, const EmbeddingImage& img) {
  const auto& n = net.graph();
  const auto& f = forest.graph();
  std::vector<int> uses(n.id_bound(), 0);
  auto bad = [](const std::string& s) { return std::optional<std::string>(s); };

  for (VertexId v : f.vertices()) {
    auto it = img.vertex_map.find(v);
    if (it == img.vertex_map.end()) return bad("forest vertex " + std::to_string(v) + " has no image");
    VertexId w = it->second;
    if (w < 0 || static_cast<std::size_t>(w) >= n.id_bound() || !n.alive(w)) return bad("image is not a network vertex");
    if (f.labeled(v) ? (!n.labeled(w) || n.label(w) != f.label(v)) : n.labeled(w))
      return bad("vertex " + std::to_string(v) + " mapped onto a vertex of the wrong kind");
    if (++uses[w] > 1) return bad("network vertex " + std::to_string(w) + " used twice");
  }
  if (img.vertex_map.size() != f.vertex_count()) return bad("vertex map has extra entries");

  auto edges = f.edges();
  if (img.edge_paths.size() != edges.size()) return bad("edge map size differs from the forest's edge count");
  for (auto [a, b] : edges) {
    auto it = img.edge_paths.find({a, b});
    if (it == img.edge_paths.end()) return bad("forest edge has no path");
    const auto& path = it->second;
    if (path.size() < 2 || path.front() != img.vertex_map.at(a) || path.back() != img.vertex_map.at(b))
      return bad("path endpoints do not match the vertex images");
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      if (!n.alive(path[i + 1]) || !n.adjacent(path[i], path[i + 1])) return bad("path steps off the network");
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      if (n.labeled(path[i])) return bad("path runs through a leaf");
      if (++uses[path[i]] > 1) return bad("network vertex " + std::to_string(path[i]) + " used twice");
    }
  }
  return std::nullopt;
}

namespace {

class Embedder {
 public:
  Embedder(const Multigraph& n, const Multigraph& f) : n_(n), f_(f), used_(n.id_bound(), 0) {
    for (const auto& comp : f.components()) {
      VertexId root = -1;
      for (VertexId v : comp)
        if (f.labeled(v) && (root < 0 || f.label(v) < f.label(root))) root = v;
      tasks_.push_back({-1, root});
      order(root, -1);
    }
  }

  std::optional<EmbeddingImage> run() {
    if (step(0)) return img_;
    return std::nullopt;
  }

 private:
  struct Task {
    VertexId parent, child;
  };

  void order(VertexId v, VertexId parent) {
    std::vector<VertexId> kids;
    for (VertexId c : f_.neighbors(v))
      if (c != parent) kids.push_back(c);
    // leaves are fixed, so they go first
    std::stable_partition(kids.begin(), kids.end(), [&](VertexId c) { return f_.labeled(c); });
    for (VertexId c : kids) {
      tasks_.push_back({v, c});
      order(c, v);
    }
  }

  VertexId leaf_of(VertexId c) const { return *n_.find_label(f_.label(c)); }

  bool reachable(VertexId from, VertexId to) const {
    std::vector<char> seen(n_.id_bound(), 0);
    std::vector<VertexId> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : n_.neighbors(v)) {
        if (w == to) return true;
        if (seen[w] || used_[w] || n_.labeled(w)) continue;
        seen[w] = 1;
        stack.push_back(w);
      }
    }
    return false;
  }

  int free_neighbors(VertexId w) const {
    std::vector<VertexId> nb = n_.neighbors(w);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    return static_cast<int>(std::count_if(nb.begin(), nb.end(), [&](VertexId x) { return !used_[x]; }));
  }

  bool step(std::size_t t) {
    if (t == tasks_.size()) return true;
    const Task task = tasks_[t];
    if (task.parent < 0) {
      VertexId target = leaf_of(task.child);
      if (used_[target]) return false;
      used_[target] = 1;
      img_.vertex_map[task.child] = target;
      if (step(t + 1)) return true;
      img_.vertex_map.erase(task.child);
      used_[target] = 0;
      return false;
    }
    const VertexId start = img_.vertex_map.at(task.parent);
    const bool leaf = f_.labeled(task.child);
    const VertexId target = leaf ? leaf_of(task.child) : -1;
    if (leaf && (used_[target] || !reachable(start, target))) return false;
    std::vector<VertexId> path{start};
    return extend(t, path, target);
  }

  bool finish(std::size_t t, std::vector<VertexId>& path, VertexId end) {
    const Task task = tasks_[t];
    used_[end] = 1;
    img_.vertex_map[task.child] = end;
    auto key = std::minmax(task.parent, task.child);
    std::vector<VertexId> p = path;
    p.push_back(end);
    if (task.parent > task.child) std::reverse(p.begin(), p.end());
    img_.edge_paths[{key.first, key.second}] = p;
    if (step(t + 1)) return true;
    img_.edge_paths.erase({key.first, key.second});
    img_.vertex_map.erase(task.child);
    used_[end] = 0;
    return false;
  }

  bool extend(std::size_t t, std::vector<VertexId>& path, VertexId target) {
    std::vector<VertexId> nb = n_.neighbors(path.back());
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    for (VertexId w : nb) {
      if (used_[w]) continue;
      if (w == target) {
        if (finish(t, path, w)) return true;
        continue;
      }
      if (n_.labeled(w)) continue;
      if (target < 0 && n_.degree(w) == 3) {
        // try w as the image of the child; it needs two more free directions
        used_[w] = 1;
        const bool room = free_neighbors(w) >= 2;
        used_[w] = 0;
        if (room && finish(t, path, w)) return true;
      }
      used_[w] = 1;
      path.push_back(w);
      const bool ok = (target < 0 || reachable(w, target)) && extend(t, path, target);
      path.pop_back();
      used_[w] = 0;
      if (ok) return true;
    }
    return false;
  }

  const Multigraph& n_;
  const Multigraph& f_;
  std::vector<char> used_;
  std::vector<Task> tasks_;
  EmbeddingImage img_;
};

}  // namespace

std::optional<EmbeddingImage> displays(const PseudoNetwork& net, const Forest& forest) {
  const auto& n = net.graph();
  if (n.vertex_count() > 40)
    throw Error(Errc::ScaleGuard, "network has " + std::to_string(n.vertex_count()) + " vertices (limit 40)");
  for (const auto& x : forest.ground_set())
    if (!n.find_label(x)) throw Error(Errc::LabelMismatch, "label '" + x + "' is not a leaf of the network");
  return Embedder(n, forest.graph()).run();
}

namespace {

std::vector<VertexId> attach_points(const Multigraph& g, const std::vector<VertexId>& comp,
                                    std::vector<std::pair<VertexId, VertexId>>& edges) {
  edges.clear();
  if (comp.size() == 1) return comp;
  std::vector<char> in(g.id_bound(), 0);
  for (VertexId v : comp) in[v] = 1;
  for (auto e : g.edges())
    if (in[e.first]) edges.push_back(e);
  return {};
}

std::set<std::string> neighbors_uncached(const PhyloTree& t) {
  const auto& g = t.graph();
  std::set<std::string> out;
  for (auto [u, v] : g.edges()) {
    Multigraph h = g;
    h.remove_edge(u, v);
    h.suppress(u);
    h.suppress(v);
    auto comps = h.components();
    std::vector<std::pair<VertexId, VertexId>> e1, e2;
    auto p1 = attach_points(h, comps[0], e1);
    auto p2 = attach_points(h, comps[1], e2);
    // a part is either one vertex (attach directly) or a set of edges (subdivide one)
    const std::size_t n1 = p1.empty() ? e1.size() : 1;
    const std::size_t n2 = p2.empty() ? e2.size() : 1;
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n2; ++j) {
        Multigraph k = h;
        VertexId a = p1.empty() ? k.subdivide(e1[i].first, e1[i].second) : p1[0];
        VertexId b = p2.empty() ? k.subdivide(e2[j].first, e2[j].second) : p2[0];
        k.add_edge(a, b);
        out.insert(canonical_tree_string(k, a));
      }
  }
  out.erase(t.canonical());
  return out;
}

std::mutex cache_mu;
std::unordered_map<std::string, std::set<std::string>> cache;

const std::set<std::string>& neighbors_cached(const std::string& key) {
  {
    std::lock_guard lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto nb = neighbors_uncached(parse_tree(key));
  std::lock_guard lock(cache_mu);
  return cache.emplace(key, std::move(nb)).first->second;
}

}  // namespace

std::set<std::string> tbr_neighbors(const PhyloTree& t) {
  if (t.leaf_count() < 4) throw Error(Errc::TooSmall, "TBR moves need at least four leaves");
  return neighbors_uncached(t);
}

std::set<std::string> tbr_ball(const PhyloTree& t, int cap) {
  std::set<std::string> seen{t.canonical()};
  if (t.leaf_count() < 4) return seen;
  std::vector<std::string> frontier{t.canonical()};
  for (int d = 0; d < cap && !frontier.empty(); ++d) {
    std::vector<std::string> next;
    for (const auto& s : frontier)
      for (const auto& nb : neighbors_cached(s))
        if (seen.insert(nb).second) next.push_back(nb);
    frontier = std::move(next);
  }
  return seen;
}

int tbr_distance_bfs(const PhyloTree& t1, const PhyloTree& t2, int cap) {
  if (t1.labels() != t2.labels()) throw Error(Errc::LabelMismatch, "trees have different leaf sets");
  const auto goal = t2.canonical();
  const auto start = t1.canonical();
  if (start == goal) return 0;
  if (t1.leaf_count() < 4) throw Error(Errc::InvalidTree, "distinct trees on fewer than four leaves");
  std::set<std::string> seen{start};
  std::vector<std::string> frontier{start};
  for (int d = 1; d <= cap && !frontier.empty(); ++d) {
    std::vector<std::string> next;
    for (const auto& s : frontier)
      for (const auto& nb : neighbors_cached(s)) {
        if (nb == goal) return d;
        if (seen.insert(nb).second) next.push_back(nb);
      }
    frontier = std::move(next);
  }
  throw Error(Errc::CapExceeded, "no path within " + std::to_string(cap) + " moves");
}

}  // namespace hybnet
