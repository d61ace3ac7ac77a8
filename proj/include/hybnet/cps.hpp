#pragma once

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hybnet/forest.hpp"

namespace hybnet {

enum class Rule { C1, C2a_i, C2a_ii, C2a_iii, C2b_i, C2b_ii, C2c, C3 };

// Which forest plays the role of the first forest in the rule. C1 is
// symmetric and is always Forward.
enum class Orientation { Forward, Reversed };

// Edge selected for deletion by a C2 rule. Ex and Ey are the pendant edges
// of the picked leaf and its partner; Ep/Eq the pendant edges of p and q;
// Epq the cut-edge of the cherry (p,q); Exyp the cut-edge of ((x,y),p);
// C2bEdge the edge determined by C2b_ii in the other forest.
enum class Cut { None, Ex, Ey, Ep, Eq, Epq, Exyp, C2bEdge };

std::string_view to_string(Rule r);
std::string_view to_string(Orientation o);
std::string_view to_string(Cut c);
std::optional<Rule> rule_from_string(std::string_view s);
std::optional<Orientation> orientation_from_string(std::string_view s);
std::optional<Cut> cut_from_string(std::string_view s);

bool is_c2(Rule r);

struct ReductionStep {
  Rule rule = Rule::C3;
  Label label;
  std::optional<Label> partner;
  std::optional<Label> p;
  std::optional<Label> q;
  Cut cut = Cut::None;
  Orientation orientation = Orientation::Forward;

  // Ordering used for enumeration and witness tie-breaking.
  auto operator<=>(const ReductionStep&) const = default;
  bool operator==(const ReductionStep&) const = default;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
};

int weight(const ReductionTrace& trace);

// A forest pair on a common ground set.
struct ForestPair {
  Forest first;
  Forest second;
};

// Throws Error(GroundSetMismatch) unless both forests share a nonempty ground set.
void require_same_ground_set(const Forest& f1, const Forest& f2);

// Reason the step is not legal at (f1, f2), or nullopt when it is.
std::optional<std::string> check_step(const Forest& f1, const Forest& f2, const ReductionStep& step);

// Every legal step at (f1, f2), sorted.
std::vector<ReductionStep> applicable_steps(const Forest& f1, const Forest& f2);

// What a step did to the underlying graphs; vertex ids refer to the forests
// the step was applied to.
struct StepEffect {
  // C1 and C3: the picked leaf leaves both forests.
  std::optional<std::array<LeafRemoval, 2>> leaf;
  // C2: one edge leaves forest `edge_forest` (0 = first, 1 = second).
  std::optional<EdgeRemoval> edge;
  int edge_forest = -1;
};

// Throws Error(InapplicableStep) naming the violated condition.
ForestPair apply_step(const Forest& f1, const Forest& f2, const ReductionStep& step, StepEffect* effect = nullptr);

// Replays the trace and returns its weight. Throws ReplayError(step, reason)
// or Error(BadTerminal) when the final forests are not one common leaf.
int validate_trace(const Forest& f1, const Forest& f2, const ReductionTrace& trace);

// The label sequence (x_1, ..., x_m): picked labels followed by the last
// remaining leaf. Replays the trace.
std::vector<Label> label_sequence(const Forest& f1, const Forest& f2, const ReductionTrace& trace);

}  // namespace hybnet
