#include "hybnet/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <limits>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "hybnet/errors.hpp"

namespace hybnet {

ReductionTrace greedy_cps(const Forest& f1, const Forest& f2) {
  require_same_ground_set(f1, f2);
  ReductionTrace tr;
  Forest a = f1;
  Forest b = f2;
  auto push = [&](ReductionStep s) {
    auto next = apply_step(a, b, s);
    a = std::move(next.first);
    b = std::move(next.second);
    tr.steps.push_back(std::move(s));
  };
  while (a.size() > 1) {
    auto ca = cherries(a);
    auto cb = cherries(b);
    if (ca.empty() && cb.empty()) {
      // every component is a single vertex
      push(ReductionStep{Rule::C3, a.ground_set().front(), {}, {}, {}, Cut::None, Orientation::Forward});
      continue;
    }
    const bool forward = !ca.empty();
    const Orientation o = forward ? Orientation::Forward : Orientation::Reversed;
    const Orientation flip = forward ? Orientation::Reversed : Orientation::Forward;
    const Forest& pick = forward ? a : b;
    const Forest& other = forward ? b : a;
    auto [x, y] = forward ? ca.front() : cb.front();

    if (other.is_isolated(x) || other.is_isolated(y)) {
      Label s = other.is_isolated(x) ? x : y;
      push(ReductionStep{Rule::C3, s, {}, {}, {}, Cut::None, flip});
      continue;
    }
    auto cc = classify(pick, other, x, y);
    Label lead = x;
    Label mate = y;
    Rule rule = Rule::C1;
    switch (cc.tag) {
      case CherryCase::Tag::SameCherry:
        push(ReductionStep{Rule::C1, x, y, {}, {}, Cut::None, Orientation::Forward});
        continue;
      case CherryCase::Tag::OtherCherry:
        lead = *cc.via;
        mate = lead == x ? y : x;
        rule = Rule::C2a_i;
        break;
      case CherryCase::Tag::SameTreeNoCherry:
        rule = Rule::C2b_i;
        break;
      case CherryCase::Tag::DifferentTreesNoCherry:
        rule = Rule::C2c;
        break;
    }
    push(ReductionStep{rule, lead, mate, {}, {}, Cut::Ex, o});
    push(ReductionStep{Rule::C3, lead, {}, {}, {}, Cut::None, o});
  }
  return tr;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

struct BudgetExceeded {};

struct Entry {
  int lower = 0;
  bool exact = false;
};

std::string state_key(const Forest& a, const Forest& b) {
  auto ka = canonical_form(a);
  auto kb = canonical_form(b);
  if (kb < ka) std::swap(ka, kb);
  return ka + "|" + kb;
}

struct Child {
  int cost;
  std::string key;
  Forest a, b;
};

class Solver {
 public:
  explicit Solver(std::optional<std::uint64_t> budget) : budget_(budget) {}

  // Exact residual when it is <= k, otherwise a lower bound > k.
  std::pair<int, bool> solve(const Forest& a, const Forest& b, const std::string& key, int k) {
    if (a.size() <= 1) return {0, true};
    {
      std::lock_guard lock(mu_);
      auto it = memo_.find(key);
      if (it != memo_.end() && (it->second.exact || it->second.lower > k)) {
        ++hits_;
        return {it->second.lower, it->second.exact};
      }
    }
    if (budget_ && ++nodes_ > *budget_) throw BudgetExceeded{};
    if (!budget_) ++nodes_;

    int best = kInf;
    for (const auto& c : children(a, b)) {
      if (c.cost > k) {
        best = std::min(best, c.cost + known_lower(c.key));
        continue;
      }
      int r = solve(c.a, c.b, c.key, k - c.cost).first;
      best = std::min(best, c.cost + r);
    }
    const bool exact = best <= k;
    std::lock_guard lock(mu_);
    auto& e = memo_[key];
    if (!e.exact) {
      if (exact) e = Entry{best, true};
      else e.lower = std::max(e.lower, best);
    }
    return {e.lower, e.exact};
  }

  std::vector<Child> children(const Forest& a, const Forest& b) {
    std::vector<Child> out;
    std::unordered_set<std::string> seen;
    // zero-cost steps first
    auto steps = applicable_steps(a, b);
    std::stable_partition(steps.begin(), steps.end(), [](const ReductionStep& s) { return !is_c2(s.rule); });
    for (const auto& s : steps) {
      auto next = apply_step(a, b, s);
      auto key = state_key(next.first, next.second);
      if (!seen.insert(key).second) continue;
      out.push_back(Child{is_c2(s.rule) ? 1 : 0, std::move(key), std::move(next.first), std::move(next.second)});
    }
    return out;
  }

  int known_lower(const std::string& key) {
    std::lock_guard lock(mu_);
    auto it = memo_.find(key);
    return it == memo_.end() ? 0 : it->second.lower;
  }

  std::uint64_t nodes() const { return nodes_; }
  std::uint64_t hits() const { return hits_; }

 private:
  std::optional<std::uint64_t> budget_;
  std::mutex mu_;
  std::unordered_map<std::string, Entry> memo_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<std::uint64_t> hits_{0};
};

}  // namespace

SearchResult min_weight_cps(const Forest& f1, const Forest& f2, const SearchOptions& opts) {
  require_same_ground_set(f1, f2);
  const auto t0 = std::chrono::steady_clock::now();
  SearchResult res;
  auto greedy = greedy_cps(f1, f2);
  const int ub = weight(greedy);
  Solver solver(opts.budget);
  const auto root_key = state_key(f1, f2);
  auto finish = [&] {
    res.stats.nodes = solver.nodes();
    res.stats.memo_hits = solver.hits();
    res.stats.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return res;
  };

  int value = ub;
  int k = 0;
  try {
    for (; k < ub; ++k) {
      std::pair<int, bool> r;
      if (opts.threads > 1 && f1.size() > 1) {
        // warm the memo with the root's children concurrently, then resolve the root
        auto kids = solver.children(f1, f2);
        std::atomic<std::size_t> next{0};
        std::atomic<bool> over{false};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < opts.threads; ++t)
          pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < kids.size() && !over;) {
              if (kids[i].cost > k) continue;
              try {
                solver.solve(kids[i].a, kids[i].b, kids[i].key, k - kids[i].cost);
              } catch (const BudgetExceeded&) {
                over = true;
              }
            }
          });
        for (auto& th : pool) th.join();
        if (over) throw BudgetExceeded{};
      }
      r = solver.solve(f1, f2, root_key, k);
      if (r.second) {
        value = r.first;
        break;
      }
    }
  } catch (const BudgetExceeded&) {
    res.status = SearchResult::Status::Bounded;
    res.lower = k;
    res.upper = ub;
    res.min_weight = ub;
    res.witness = greedy;
    return finish();
  }

  res.min_weight = res.lower = res.upper = value;
  // Walk down taking the first step (in sorted order) that keeps the optimum.
  Forest a = f1;
  Forest b = f2;
  int left = value;
  try {
    while (a.size() > 1) {
      bool moved = false;
      for (const auto& s : applicable_steps(a, b)) {
        const int c = is_c2(s.rule) ? 1 : 0;
        if (c > left) continue;
        auto next = apply_step(a, b, s);
        auto [r, ex] = solver.solve(next.first, next.second, state_key(next.first, next.second), left - c);
        if (ex && r == left - c) {
          res.witness.steps.push_back(s);
          left -= c;
          a = std::move(next.first);
          b = std::move(next.second);
          moved = true;
          break;
        }
      }
      if (!moved) throw Error(Errc::InvalidTrace, "witness reconstruction failed");
    }
  } catch (const BudgetExceeded&) {
    // the value is exact; fall back to the greedy witness only if it is optimal
    res.witness = greedy;
    if (weight(greedy) != value) {
      res.status = SearchResult::Status::Bounded;
      res.upper = ub;
    }
  }
  return finish();
}

std::optional<int> sequence_weight(const Forest& f1, const Forest& f2, const std::vector<Label>& seq) {
  require_same_ground_set(f1, f2);
  if (seq.empty()) return std::nullopt;
  std::map<std::pair<std::size_t, std::string>, std::optional<int>> memo;
  std::function<std::optional<int>(std::size_t, const Forest&, const Forest&)> rec =
      [&](std::size_t i, const Forest& a, const Forest& b) -> std::optional<int> {
    if (a.size() == 1) {
      if (i + 1 == seq.size() && a.ground_set().front() == seq[i]) return 0;
      return std::nullopt;
    }
    if (i + 1 >= seq.size()) return std::nullopt;
    auto k = std::make_pair(i, state_key(a, b));
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    std::optional<int> best;
    for (const auto& s : applicable_steps(a, b)) {
      if (s.label != seq[i]) continue;
      auto next = apply_step(a, b, s);
      if (auto r = rec(i + 1, next.first, next.second)) {
        int w = *r + (is_c2(s.rule) ? 1 : 0);
        if (!best || w < *best) best = w;
      }
    }
    memo[k] = best;
    return best;
  };
  return rec(0, f1, f2);
}

int hybrid_number(const Forest& f1, const Forest& f2) { return min_weight_cps(f1, f2).min_weight; }

int tbr_distance(const Forest& t1, const Forest& t2) {
  if (t1.component_count() != 1 || t2.component_count() != 1)
    throw Error(Errc::NotATree, "tbr distance needs single trees");
  return hybrid_number(t1, t2);
}

int tbr_distance(const PhyloTree& t1, const PhyloTree& t2) {
  return tbr_distance(Forest::from_trees({t1}), Forest::from_trees({t2}));
}

}  // namespace hybnet
