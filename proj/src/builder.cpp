#include "hybnet/builder.hpp"

#include <algorithm>

#include "hybnet/errors.hpp"

namespace hybnet {

namespace {

using Edge = std::pair<VertexId, VertexId>;

Edge key(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

[[noreturn]] void tracking(const std::string& msg) { throw Error(Errc::ImageTrackingError, msg); }

class Builder {
 public:
  Builder() = default;

  void start(const Label& z, VertexId id1, VertexId id2) {
    VertexId v = net_.add_vertex(z);
    img_[0].vertex_map[id1] = v;
    img_[1].vertex_map[id2] = v;
  }

  // Undo removal of leaf x from both forests. `partner` is set for C1.
  void undo_leaf(const Label& x, const std::optional<Label>& partner, const std::array<LeafRemoval, 2>& rem) {
    std::optional<Edge> where;
    if (net_.vertex_count() > 1) {
      if (partner) {
        // the cherry partner's pendant edge lies on both images
        VertexId y = *net_.find_label(*partner);
        where = Edge{y, net_.neighbors(y).front()};
      } else {
        for (int j = 0; j < 2 && !where; ++j) {
          const auto& r = rem[j];
          if (!r.neighbor) continue;
          if (r.merged) {
            where = first_edge(j, r.merged->first, r.merged->second);
          } else {
            VertexId y = image(j, *r.neighbor);
            where = Edge{y, net_.neighbors(y).front()};
          }
        }
      }
    }

    const bool lone = net_.vertex_count() == 1;
    Edge e{};
    if (!lone) e = where ? *where : least_pendant();
    VertexId xv = net_.add_vertex(x);
    VertexId s = -1;
    if (lone) {
      net_.add_edge(net_.vertices().front(), xv);
    } else {
      s = subdivide(e.first, e.second);
      net_.add_edge(s, xv);
    }

    for (int j = 0; j < 2; ++j) {
      const auto& r = rem[j];
      img_[j].vertex_map[r.leaf] = xv;
      if (!r.neighbor) continue;
      if (r.merged) {
        auto [a, b] = *r.merged;
        split(j, a, b, *r.neighbor, s);
        img_[j].edge_paths[key(*r.neighbor, r.leaf)] = orient(*r.neighbor, r.leaf, {s, xv});
      } else {
        VertexId y = image(j, *r.neighbor);
        std::vector<VertexId> p = s < 0 ? std::vector<VertexId>{xv, y} : std::vector<VertexId>{xv, s, y};
        if (s >= 0 && !net_.adjacent(s, y)) tracking("leaf partner not adjacent to attachment");
        img_[j].edge_paths[key(r.leaf, *r.neighbor)] = orient(r.leaf, *r.neighbor, p);
      }
    }
  }

  // Undo deletion of edge {u,v} from forest j.
  void undo_edge(int j, const EdgeRemoval& rem, const Forest& before) {
    const auto& fg = before.graph();
    std::array<VertexId, 2> ends{rem.u, rem.v};
    std::array<std::optional<Edge>, 2> merged{rem.merged_u, rem.merged_v};
    std::array<VertexId, 2> att{};
    std::array<std::vector<VertexId>, 2> tail;
    // locate both attachment edges before modifying the network
    std::array<Edge, 2> sites{};
    for (int k = 0; k < 2; ++k) {
      if (merged[k]) {
        sites[k] = first_edge(j, merged[k]->first, merged[k]->second);
      } else {
        if (!fg.labeled(ends[k])) tracking("unsuppressed internal endpoint");
        VertexId leaf = image(j, ends[k]);
        if (net_.degree(leaf) != 1) tracking("leaf image is not a pendant vertex");
        sites[k] = {leaf, net_.neighbors(leaf).front()};
      }
    }
    if (key(sites[0].first, sites[0].second) == key(sites[1].first, sites[1].second))
      tracking("both ends of the deleted edge land on one network edge");
    for (int k = 0; k < 2; ++k) {
      att[k] = subdivide(sites[k].first, sites[k].second);
      if (merged[k]) {
        split(j, merged[k]->first, merged[k]->second, ends[k], att[k]);
        tail[k] = {att[k]};
      } else {
        tail[k] = {image(j, ends[k]), att[k]};
      }
    }
    net_.add_edge(att[0], att[1]);
    std::vector<VertexId> p = tail[0];
    p.insert(p.end(), tail[1].rbegin(), tail[1].rend());
    img_[j].edge_paths[key(ends[0], ends[1])] = orient(ends[0], ends[1], p);
  }

  const Multigraph& net() const { return net_; }
  EmbeddingImage& image_of(int j) { return img_[j]; }

 private:
  VertexId image(int j, VertexId v) const {
    auto it = img_[j].vertex_map.find(v);
    if (it == img_[j].vertex_map.end()) tracking("forest vertex without image");
    return it->second;
  }

  const std::vector<VertexId>& path(int j, VertexId a, VertexId b) const {
    auto it = img_[j].edge_paths.find(key(a, b));
    if (it == img_[j].edge_paths.end() || it->second.size() < 2) tracking("forest edge without image path");
    return it->second;
  }

  Edge first_edge(int j, VertexId a, VertexId b) const {
    const auto& p = path(j, a, b);
    return {p[0], p[1]};
  }

  Edge least_pendant() const {
    VertexId best = -1;
    for (VertexId v : net_.vertices())
      if (net_.labeled(v) && (best < 0 || net_.label(v) < net_.label(best))) best = v;
    return {best, net_.neighbors(best).front()};
  }

  // Path stored for (min,max), given as running from a to b.
  static std::vector<VertexId> orient(VertexId a, VertexId b, std::vector<VertexId> p) {
    if (a > b) std::reverse(p.begin(), p.end());
    return p;
  }

  // Subdivides a network edge and threads the new vertex through every image path.
  VertexId subdivide(VertexId a, VertexId b) {
    if (!net_.adjacent(a, b)) tracking("subdividing a missing edge");
    VertexId s = net_.subdivide(a, b);
    for (auto& im : img_)
      for (auto& [e, p] : im.edge_paths)
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
          if ((p[i] == a && p[i + 1] == b) || (p[i] == b && p[i + 1] == a)) {
            p.insert(p.begin() + static_cast<std::ptrdiff_t>(i) + 1, s);
            break;
          }
    return s;
  }

  // Replace the image of forest edge (a,b) by (a,u) and (u,b), cutting at s.
  void split(int j, VertexId a, VertexId b, VertexId u, VertexId s) {
    auto p = path(j, a, b);
    if (a > b) std::reverse(p.begin(), p.end());  // now runs a -> b
    auto it = std::find(p.begin(), p.end(), s);
    if (it == p.end()) tracking("attachment vertex not on the merged path");
    std::vector<VertexId> left(p.begin(), it + 1);
    std::vector<VertexId> right(it, p.end());
    img_[j].edge_paths.erase(key(a, b));
    img_[j].edge_paths[key(a, u)] = orient(a, u, left);
    img_[j].edge_paths[key(u, b)] = orient(u, b, right);
    img_[j].vertex_map[u] = s;
  }

  Multigraph net_;
  std::array<EmbeddingImage, 2> img_;
};

}  // namespace

BuildResult build_network(const Forest& f1, const Forest& f2, const ReductionTrace& trace) {
  try {
    validate_trace(f1, f2, trace);
  } catch (const ReplayError& e) {
    throw Error(Errc::InvalidTrace, "step " + std::to_string(e.step()) + ": " + e.reason());
  } catch (const Error& e) {
    throw Error(Errc::InvalidTrace, e.what());
  }

  std::vector<ForestPair> states{ForestPair{f1, f2}};
  std::vector<StepEffect> effects;
  for (const auto& s : trace.steps) {
    StepEffect eff;
    auto next = apply_step(states.back().first, states.back().second, s, &eff);
    states.push_back(std::move(next));
    effects.push_back(eff);
  }

  Builder b;
  const auto& last = states.back();
  const Label z = last.first.ground_set().front();
  b.start(z, last.first.vertex(z), last.second.vertex(z));
  for (std::size_t i = trace.steps.size(); i-- > 0;) {
    const auto& before = states[i];
    const auto& eff = effects[i];
    if (eff.leaf) {
      b.undo_leaf(trace.steps[i].label, trace.steps[i].rule == Rule::C1 ? trace.steps[i].partner : std::nullopt,
                   *eff.leaf);
    } else if (eff.edge) {
      b.undo_edge(eff.edge_forest, *eff.edge, eff.edge_forest == 0 ? before.first : before.second);
    } else {
      throw Error(Errc::ImageTrackingError, "step without recorded effect");
    }
  }
  BuildResult out{PhyloNetwork(b.net()), b.image_of(0), b.image_of(1)};
  if (!out.network.is_simple()) throw Error(Errc::ImageTrackingError, "built network has a multi-edge");
  return out;
}

}  // namespace hybnet
