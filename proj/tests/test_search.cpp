#include <doctest.h>

#include "hybnet/errors.hpp"
#include "hybnet/search.hpp"
#include "support.hpp"

using namespace hybnet;
using namespace hybnet::testing;

TEST_CASE("greedy on identical trees uses only C1/C3") {
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    auto t = Forest::from_trees({random_tree(7, rng)});
    auto tr = greedy_cps(t, t);
    CHECK(validate_trace(t, t, tr) == 0);
  }
}

TEST_CASE("greedy on the quartet pair") {
  auto a = F("((1,2),(3,4));");
  auto b = F("((1,3),(2,4));");
  auto tr = greedy_cps(a, b);
  REQUIRE(tr.steps.size() >= 2);
  CHECK(tr.steps[0] == ReductionStep{Rule::C2a_i, "1", "2", {}, {}, Cut::Ex, Orientation::Forward});
  CHECK(tr.steps[1] == ReductionStep{Rule::C3, "1", {}, {}, {}, Cut::None, Orientation::Forward});
  CHECK(validate_trace(a, b, tr) == 1);
}

TEST_CASE("greedy on all-singleton forests") {
  auto f = F("1;\n2;\n3;");
  auto tr = greedy_cps(f, f);
  CHECK(tr.steps.size() == 2);
  for (const auto& s : tr.steps) CHECK(s.rule == Rule::C3);
  CHECK(validate_trace(f, f, tr) == 0);
}

TEST_CASE("greedy length is at least |X| - 1 steps plus the terminal") {
  Rng rng(10);
  for (int i = 0; i < 200; ++i) {
    int n = 1 + i % 10;
    auto a = random_forest(n, 1 + i % 3, rng);
    auto b = random_forest(n, 1 + (i / 3) % 3, rng);
    auto tr = greedy_cps(a, b);
    CHECK_NOTHROW(validate_trace(a, b, tr));
    CHECK(tr.steps.size() + 1 >= a.size());
  }
}

TEST_CASE("min weight matches the TBR oracle") {
  auto a = F("((1,2),(3,4));");
  auto b = F("((1,3),(2,4));");
  CHECK(min_weight_cps(a, b).min_weight == tbr_distance_bfs(a.components()[0], b.components()[0], 5));
  auto c1 = parse_tree("(((((1,2),3),4),5),6);");
  auto c2 = parse_tree("(((((1,5),3),4),2),6);");
  int oracle = tbr_distance_bfs(c1, c2, 6);
  CHECK(tbr_distance(c1, c2) == oracle);
  Rng rng(90);
  for (int i = 0; i < 15; ++i) {
    auto s = random_tree(6, rng);
    auto t = random_tree(6, rng);
    CHECK(tbr_distance(s, t) == tbr_distance_bfs(s, t, 10));
  }
}

TEST_CASE("search properties") {
  Rng rng(66);
  for (int i = 0; i < 25; ++i) {
    auto a = random_forest(6, 1 + i % 3, rng);
    auto b = random_forest(6, 1 + (i / 3) % 2, rng);
    auto r = min_weight_cps(a, b);
    CHECK(r.status == SearchResult::Status::Exact);
    CHECK(r.min_weight <= weight(greedy_cps(a, b)));
    CHECK(validate_trace(a, b, r.witness) == r.min_weight);
    CHECK(min_weight_cps(b, a).min_weight == r.min_weight);
    CHECK(hybrid_number(a, a) == 0);
  }
}

TEST_CASE("h = 0 exactly for isomorphic trees") {
  auto all = all_trees(5);
  for (std::size_t i = 0; i < all.size(); i += 3)
    for (std::size_t j = 0; j < all.size(); j += 2)
      CHECK((tbr_distance(all[i], all[j]) == 0) == (i == j));
}

TEST_CASE("witness is deterministic and least") {
  auto a = F("((1,2),(3,(4,5)));");
  auto b = F("((1,4),(2,(3,5)));");
  auto r1 = min_weight_cps(a, b);
  auto r2 = min_weight_cps(a, b);
  CHECK(r1.witness.steps == r2.witness.steps);
  // first step is the least applicable step that still reaches the optimum
  for (const auto& s : applicable_steps(a, b)) {
    auto next = apply_step(a, b, s);
    int rest = min_weight_cps(next.first, next.second).min_weight + (is_c2(s.rule) ? 1 : 0);
    if (rest == r1.min_weight) {
      CHECK(s == r1.witness.steps.front());
      break;
    }
  }
}

TEST_CASE("threads give the same value") {
  Rng rng(12);
  for (int i = 0; i < 8; ++i) {
    auto a = random_forest(7, 1, rng);
    auto b = random_forest(7, 2, rng);
    SearchOptions par;
    par.threads = 4;
    auto r = min_weight_cps(a, b, par);
    CHECK(r.min_weight == min_weight_cps(a, b).min_weight);
    CHECK(validate_trace(a, b, r.witness) == r.min_weight);
  }
}

TEST_CASE("budget gives bounds") {
  auto a = F("(((((1,2),3),4),5),(6,7));");
  auto b = F("(((((7,5),3),1),6),(2,4));");
  SearchOptions tight;
  tight.budget = 3;
  auto r = min_weight_cps(a, b, tight);
  CHECK(r.status == SearchResult::Status::Bounded);
  CHECK(r.lower <= r.upper);
  CHECK(validate_trace(a, b, r.witness) == r.upper);
  auto exact = min_weight_cps(a, b);
  CHECK(r.lower <= exact.min_weight);
  CHECK(exact.min_weight <= r.upper);
  CHECK(exact.stats.nodes > 0);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS(min_weight_cps(F("(1,2);"), F("(1,3);")), Error);
  try {
    tbr_distance(F("(1,2);\n3;"), F("(1,(2,3));"));
    FAIL("expected NotATree");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotATree);
  }
}
