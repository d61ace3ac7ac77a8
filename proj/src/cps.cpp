#include "hybnet/cps.hpp"

#include <algorithm>

#include "hybnet/errors.hpp"

namespace hybnet {

std::string_view to_string(Rule r) {
  switch (r) {
    case Rule::C1: return "C1";
    case Rule::C2a_i: return "C2a_i";
    case Rule::C2a_ii: return "C2a_ii";
    case Rule::C2a_iii: return "C2a_iii";
    case Rule::C2b_i: return "C2b_i";
    case Rule::C2b_ii: return "C2b_ii";
    case Rule::C2c: return "C2c";
    case Rule::C3: return "C3";
  }
  return "?";
}

std::string_view to_string(Orientation o) { return o == Orientation::Forward ? "forward" : "reversed"; }

std::string_view to_string(Cut c) {
  switch (c) {
    case Cut::None: return "none";
    case Cut::Ex: return "e_x";
    case Cut::Ey: return "e_y";
    case Cut::Ep: return "e_p";
    case Cut::Eq: return "e_q";
    case Cut::Epq: return "e_pq";
    case Cut::Exyp: return "e_xyp";
    case Cut::C2bEdge: return "c2b_edge";
  }
  return "?";
}

std::optional<Rule> rule_from_string(std::string_view s) {
  for (Rule r : {Rule::C1, Rule::C2a_i, Rule::C2a_ii, Rule::C2a_iii, Rule::C2b_i, Rule::C2b_ii, Rule::C2c, Rule::C3})
    if (to_string(r) == s) return r;
  return std::nullopt;
}

std::optional<Orientation> orientation_from_string(std::string_view s) {
  if (s == "forward") return Orientation::Forward;
  if (s == "reversed") return Orientation::Reversed;
  return std::nullopt;
}

std::optional<Cut> cut_from_string(std::string_view s) {
  for (Cut c : {Cut::Ex, Cut::Ey, Cut::Ep, Cut::Eq, Cut::Epq, Cut::Exyp, Cut::C2bEdge})
    if (to_string(c) == s) return c;
  return std::nullopt;
}

bool is_c2(Rule r) { return r != Rule::C1 && r != Rule::C3; }

int weight(const ReductionTrace& trace) {
  return static_cast<int>(std::count_if(trace.steps.begin(), trace.steps.end(),
                                        [](const ReductionStep& s) { return is_c2(s.rule); }));
}

void require_same_ground_set(const Forest& f1, const Forest& f2) {
  auto x1 = f1.ground_set();
  if (x1.empty()) throw Error(Errc::GroundSetMismatch, "empty ground set");
  if (x1 != f2.ground_set()) throw Error(Errc::GroundSetMismatch, "forests have different leaf sets");
}

namespace {

bool in_cherry(const Multigraph& g, VertexId v) { return !cherry_partners(g, v).empty(); }

bool cut_in(Cut c, std::initializer_list<Cut> allowed) {
  return std::find(allowed.begin(), allowed.end(), c) != allowed.end();
}

// Edge of the C2b_ii rule: at the neighbour u of x, the edge not on the path to y.
std::pair<VertexId, VertexId> c2b_edge(const Forest& other, VertexId x, VertexId y) {
  const auto& g = other.graph();
  VertexId u = g.neighbors(x).front();
  for (VertexId w : g.neighbors(u)) {
    if (w == x) continue;
    // does the branch at w (away from u) contain y?
    std::vector<VertexId> stack{w};
    std::vector<char> seen(g.id_bound(), 0);
    seen[u] = seen[w] = 1;
    bool found = false;
    while (!stack.empty() && !found) {
      VertexId v = stack.back();
      stack.pop_back();
      if (v == y) found = true;
      for (VertexId n : g.neighbors(v))
        if (!seen[n]) {
          seen[n] = 1;
          stack.push_back(n);
        }
    }
    if (!found) return {std::min(u, w), std::max(u, w)};
  }
  throw Error(Errc::InapplicableStep, "C2b_ii edge not found");
}

std::optional<std::string> check_c2(const Forest& a, const Forest& b, const ReductionStep& s) {
  const auto& ga = a.graph();
  const auto& gb = b.graph();
  VertexId ax = a.vertex(s.label);
  VertexId ay = a.vertex(*s.partner);
  if (!is_cherry(ga, ax, ay)) return "(" + s.label + "," + *s.partner + ") is not a cherry of the picked forest";
  VertexId bx = b.vertex(s.label);
  VertexId by = b.vertex(*s.partner);

  switch (s.rule) {
    case Rule::C2a_i:
    case Rule::C2a_ii:
    case Rule::C2a_iii: {
      auto zs = cherry_partners(gb, bx);
      zs.erase(std::remove(zs.begin(), zs.end(), by), zs.end());
      if (zs.empty()) return s.label + " is not in a cherry (x,z) with z != " + *s.partner + " in the other forest";
      if (s.rule == Rule::C2a_i) {
        if (s.p || s.q) return std::string("C2a_i takes no p/q");
        if (!cut_in(s.cut, {Cut::Ex, Cut::Ey})) return std::string("C2a_i cuts e_x or e_y");
        return std::nullopt;
      }
      if (!s.p) return std::string("missing p");
      const bool quad = s.rule == Rule::C2a_iii;
      if (quad != s.q.has_value()) return std::string(quad ? "missing q" : "C2a_ii takes no q");
      if (quad && *s.p == *s.q) return std::string("p and q must differ");
      if (quad ? !cut_in(s.cut, {Cut::Ep, Cut::Eq, Cut::Epq}) : !cut_in(s.cut, {Cut::Ep, Cut::Exyp}))
        return std::string("cut selector not allowed for ") + std::string(to_string(s.rule));
      // {p,q} is unordered; only the sorted spelling is a step
      if (quad && *s.q < *s.p) return std::string("p must precede q");
      for (const auto& shape : pendant_shapes(ga, ax, ay)) {
        if (shape.p != *s.p || shape.q != s.q) continue;
        if (!shape.proper) return std::string("pendant subtree is not proper");
        return std::nullopt;
      }
      return std::string("no pendant subtree of the required shape");
    }
    case Rule::C2b_i:
    case Rule::C2b_ii:
    case Rule::C2c: {
      if (s.p || s.q) return std::string(to_string(s.rule)) + " takes no p/q";
      if (in_cherry(gb, bx) || in_cherry(gb, by))
        return s.label + " or " + *s.partner + " is in a cherry of the other forest";
      const bool same = b.same_component(bx, by);
      if (s.rule == Rule::C2c) {
        if (same) return s.label + " and " + *s.partner + " are in the same tree of the other forest";
        if (gb.degree(bx) == 0 || gb.degree(by) == 0)
          return s.label + " or " + *s.partner + " is an isolated vertex of the other forest";
        if (!cut_in(s.cut, {Cut::Ex, Cut::Ey})) return std::string("C2c cuts e_x or e_y");
        return std::nullopt;
      }
      if (!same) return s.label + " and " + *s.partner + " are in different trees of the other forest";
      if (s.rule == Rule::C2b_i && !cut_in(s.cut, {Cut::Ex, Cut::Ey})) return std::string("C2b_i cuts e_x or e_y");
      if (s.rule == Rule::C2b_ii && s.cut != Cut::C2bEdge) return std::string("C2b_ii cuts c2b_edge");
      return std::nullopt;
    }
    default:
      return std::string("not a C2 rule");
  }
}

EdgeRef edge_ref_for(const ReductionStep& s) {
  switch (s.cut) {
    case Cut::Ex: return PendantOf{s.label};
    case Cut::Ey: return PendantOf{*s.partner};
    case Cut::Ep: return PendantOf{*s.p};
    case Cut::Eq: return PendantOf{*s.q};
    case Cut::Epq: return CherryCut{*s.p, *s.q};
    case Cut::Exyp: return PendantSubtreeCut{s.label, *s.partner, *s.p, std::nullopt};
    default: break;
  }
  throw Error(Errc::InapplicableStep, "cut selector has no edge in the picked forest");
}

}  // namespace

std::optional<std::string> check_step(const Forest& f1, const Forest& f2, const ReductionStep& step) {
  if (f1.size() < 2) return std::string("no step applies to a single leaf");
  if (!f1.contains(step.label)) return "unknown label '" + step.label + "'";
  if (step.partner && !f1.contains(*step.partner)) return "unknown label '" + *step.partner + "'";
  if (step.p && !f1.contains(*step.p)) return "unknown label '" + *step.p + "'";
  if (step.q && !f1.contains(*step.q)) return "unknown label '" + *step.q + "'";
  const bool forward = step.orientation == Orientation::Forward;
  const Forest& a = forward ? f1 : f2;
  const Forest& b = forward ? f2 : f1;

  if (step.rule == Rule::C3) {
    if (step.partner || step.p || step.q || step.cut != Cut::None) return std::string("C3 takes no parameters");
    if (!a.is_isolated(step.label)) return step.label + " is not an isolated vertex of the picked forest";
    return std::nullopt;
  }
  if (!step.partner) return std::string("missing partner");
  if (*step.partner == step.label) return std::string("partner equals the picked label");
  if (step.rule == Rule::C1) {
    if (!forward) return std::string("C1 is symmetric and has no reversed form");
    if (step.p || step.q || step.cut != Cut::None) return std::string("C1 takes no p/q/cut");
    if (!is_cherry(f1, step.label, *step.partner) || !is_cherry(f2, step.label, *step.partner))
      return "(" + step.label + "," + *step.partner + ") is not a cherry of both forests";
    return std::nullopt;
  }
  return check_c2(a, b, step);
}

std::vector<ReductionStep> applicable_steps(const Forest& f1, const Forest& f2) {
  require_same_ground_set(f1, f2);
  std::vector<ReductionStep> out;
  if (f1.size() < 2) return out;
  for (Orientation o : {Orientation::Forward, Orientation::Reversed}) {
    const Forest& a = o == Orientation::Forward ? f1 : f2;
    const Forest& b = o == Orientation::Forward ? f2 : f1;
    const auto& ga = a.graph();
    const auto& gb = b.graph();
    for (VertexId v : ga.vertices())
      if (ga.labeled(v) && ga.degree(v) == 0) out.push_back(ReductionStep{Rule::C3, ga.label(v), {}, {}, {}, Cut::None, o});

    for (const auto& [c1, c2] : cherries(a)) {
      for (const auto& [x, y] : {std::make_pair(c1, c2), std::make_pair(c2, c1)}) {
        VertexId ax = a.vertex(x), ay = a.vertex(y);
        VertexId bx = b.vertex(x), by = b.vertex(y);
        auto step = [&](Rule r, Cut c, std::optional<Label> p = {}, std::optional<Label> q = {}) {
          out.push_back(ReductionStep{r, x, y, std::move(p), std::move(q), c, o});
        };
        if (o == Orientation::Forward && is_cherry(gb, bx, by)) step(Rule::C1, Cut::None);

        auto zs = cherry_partners(gb, bx);
        zs.erase(std::remove(zs.begin(), zs.end(), by), zs.end());
        if (!zs.empty()) {
          step(Rule::C2a_i, Cut::Ex);
          step(Rule::C2a_i, Cut::Ey);
          for (const auto& shape : pendant_shapes(ga, ax, ay)) {
            if (!shape.proper) continue;
            if (shape.kind == PendantShape::Kind::Triple) {
              step(Rule::C2a_ii, Cut::Ep, shape.p);
              step(Rule::C2a_ii, Cut::Exyp, shape.p);
            } else {
              for (Cut c : {Cut::Ep, Cut::Eq, Cut::Epq}) step(Rule::C2a_iii, c, shape.p, shape.q);
            }
          }
        }
        if (in_cherry(gb, bx) || in_cherry(gb, by)) continue;
        if (b.same_component(bx, by)) {
          step(Rule::C2b_i, Cut::Ex);
          step(Rule::C2b_i, Cut::Ey);
          step(Rule::C2b_ii, Cut::C2bEdge);
        } else if (gb.degree(bx) > 0 && gb.degree(by) > 0) {
          step(Rule::C2c, Cut::Ex);
          step(Rule::C2c, Cut::Ey);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ForestPair apply_step(const Forest& f1, const Forest& f2, const ReductionStep& step, StepEffect* effect) {
  if (auto why = check_step(f1, f2, step)) throw Error(Errc::InapplicableStep, *why);
  StepEffect rec;
  ForestPair next;
  if (!is_c2(step.rule)) {
    std::array<LeafRemoval, 2> leaf;
    next.first = remove_leaf(f1, step.label, &leaf[0]);
    next.second = remove_leaf(f2, step.label, &leaf[1]);
    rec.leaf = leaf;
  } else {
    const bool forward = step.orientation == Orientation::Forward;
    // C2b_ii cuts the other forest; every other C2 rule cuts the picked one
    const bool cut_first = (step.rule == Rule::C2b_ii) ? !forward : forward;
    const Forest& target = cut_first ? f1 : f2;
    EdgeRef ref = step.rule == Rule::C2b_ii ? EdgeRef{[&] {
      auto [u, v] = c2b_edge(target, target.vertex(step.label), target.vertex(*step.partner));
      return ExplicitEdge{u, v};
    }()}
                                            : edge_ref_for(step);
    EdgeRemoval er;
    Forest cut = remove_edge(target, ref, &er);
    next.first = cut_first ? std::move(cut) : f1;
    next.second = cut_first ? f2 : std::move(cut);
    rec.edge = er;
    rec.edge_forest = cut_first ? 0 : 1;
  }
  if (effect) *effect = rec;
  return next;
}

int validate_trace(const Forest& f1, const Forest& f2, const ReductionTrace& trace) {
  require_same_ground_set(f1, f2);
  Forest a = f1;
  Forest b = f2;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    if (auto why = check_step(a, b, trace.steps[i])) throw ReplayError(i, *why);
    auto next = apply_step(a, b, trace.steps[i]);
    a = std::move(next.first);
    b = std::move(next.second);
  }
  if (a.size() != 1 || a.component_count() != 1 || b.component_count() != 1)
    throw Error(Errc::BadTerminal, "trace ends with " + std::to_string(a.size()) + " leaves instead of one");
  return weight(trace);
}

std::vector<Label> label_sequence(const Forest& f1, const Forest& f2, const ReductionTrace& trace) {
  require_same_ground_set(f1, f2);
  Forest a = f1;
  Forest b = f2;
  std::vector<Label> out;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    if (auto why = check_step(a, b, trace.steps[i])) throw ReplayError(i, *why);
    auto next = apply_step(a, b, trace.steps[i]);
    a = std::move(next.first);
    b = std::move(next.second);
    out.push_back(trace.steps[i].label);
  }
  auto rest = a.ground_set();
  if (rest.size() != 1) throw Error(Errc::BadTerminal, "trace does not end with a single leaf");
  out.push_back(rest.front());
  return out;
}

}  // namespace hybnet
