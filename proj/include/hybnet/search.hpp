#pragma once

#include <cstdint>
#include <optional>

#include "hybnet/cps.hpp"

namespace hybnet {

// Constructive recipe: C1 when the cherry is shared, C3 for singletons,
// otherwise cut e_x and pick x with C3.
ReductionTrace greedy_cps(const Forest& f1, const Forest& f2);

struct SearchOptions {
  std::optional<std::uint64_t> budget;  // expanded-node cap
  unsigned threads = 1;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t memo_hits = 0;
  double elapsed_ms = 0;
};

struct SearchResult {
  enum class Status { Exact, Bounded };
  Status status = Status::Exact;
  int min_weight = 0;  // Exact only
  int lower = 0;       // lower == upper == min_weight when Exact
  int upper = 0;
  // Exact: the least optimal trace under step ordering (single-threaded).
  // Bounded: the trace achieving `upper`.
  ReductionTrace witness;
  SearchStats stats;
};

SearchResult min_weight_cps(const Forest& f1, const Forest& f2, const SearchOptions& opts = {});

// Weight of a bare label sequence: the least weight of a trace whose
// label sequence is `seq`, or nullopt when no trace has it.
std::optional<int> sequence_weight(const Forest& f1, const Forest& f2, const std::vector<Label>& seq);

int hybrid_number(const Forest& f1, const Forest& f2);
// Throws Error(NotATree) unless both inputs have a single component.
int tbr_distance(const Forest& t1, const Forest& t2);
int tbr_distance(const PhyloTree& t1, const PhyloTree& t2);

}  // namespace hybnet
