#include <doctest.h>

#include "hybnet/errors.hpp"
#include "hybnet/network_io.hpp"
#include "support.hpp"

using namespace hybnet;
using namespace hybnet::testing;

namespace {

// cycle through the attachment points of 1..4 with leaves on chords
const char* kFour =
    "1 -- a\n2 -- b\n3 -- c\n4 -- d\n"
    "a -- b\nb -- c\nc -- d\nd -- a\n";

}  // namespace

TEST_CASE("a 4-cycle displays two of three quartets") {
  auto net = parse_network(kFour);
  CHECK(net.reticulation() == 1);
  auto q1 = F("((1,2),(3,4));");
  auto q2 = F("((1,4),(2,3));");
  auto q3 = F("((1,3),(2,4));");
  auto img = displays(net, q1);
  REQUIRE(img.has_value());
  CHECK_FALSE(verify_embedding(net, q1, *img).has_value());
  CHECK(displays(net, q2).has_value());
  CHECK_FALSE(displays(net, q3).has_value());
}

TEST_CASE("forests are displayed componentwise") {
  auto net = parse_network(kFour);
  CHECK(displays(net, F("(1,3);\n(2,4);")).has_value() == false);
  CHECK(displays(net, F("(1,3);\n2;\n4;")).has_value());
  CHECK(displays(net, F("1;\n2;\n3;\n4;")).has_value());
}

TEST_CASE("a tree displays itself and nothing else") {
  auto t = F("((1,2),(3,(4,5)));");
  PseudoNetwork net(t.graph());
  for (const auto& s : all_trees(5)) {
    bool same = s.canonical() == t.components()[0].canonical();
    CHECK(displays(net, Forest::from_trees({s})).has_value() == same);
  }
}

TEST_CASE("verify_embedding catches bad images") {
  auto net = parse_network(kFour);
  auto q = F("((1,2),(3,4));");
  auto img = *displays(net, q);
  auto broken = img;
  auto it = broken.edge_paths.begin();
  it->second.pop_back();
  CHECK(verify_embedding(net, q, broken).has_value());
  broken = img;
  // swap two leaf images
  auto v1 = q.vertex("1"), v2 = q.vertex("2");
  std::swap(broken.vertex_map[v1], broken.vertex_map[v2]);
  CHECK(verify_embedding(net, q, broken).has_value());
}

TEST_CASE("display errors") {
  auto net = parse_network(kFour);
  try {
    displays(net, F("(1,5);"));
    FAIL("expected LabelMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LabelMismatch);
  }
}

TEST_CASE("TBR neighbourhood sizes") {
  // every tree on 4 leaves is one move from the other two
  auto q = parse_tree("((1,2),(3,4));");
  CHECK(tbr_neighbors(q).size() == 2);
  CHECK(tbr_ball(q, 3).size() == 3);
  CHECK(all_trees(5).size() == 15);
  CHECK(all_trees(6).size() == 105);
  CHECK_THROWS_AS(tbr_neighbors(parse_tree("(1,(2,3));")), Error);
}

TEST_CASE("TBR neighbours are symmetric") {
  Rng rng(5);
  auto t = random_tree(6, rng);
  for (const auto& s : tbr_neighbors(t)) CHECK(tbr_neighbors(parse_tree(s)).count(t.canonical()) == 1);
}

TEST_CASE("TBR BFS") {
  auto a = parse_tree("(((((1,2),3),4),5),6);");
  CHECK(tbr_distance_bfs(a, a, 0) == 0);
  CHECK(tbr_distance_bfs(a, parse_tree("(((((2,1),3),4),6),5);"), 3) == 0);
  auto b = parse_tree("(((((1,6),3),4),5),2);");
  int d = tbr_distance_bfs(a, b, 6);
  CHECK(d >= 1);
  try {
    tbr_distance_bfs(a, b, d - 1);
    FAIL("expected CapExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CapExceeded);
  }
  try {
    tbr_distance_bfs(a, parse_tree("(((((1,2),3),4),5),7);"), 3);
    FAIL("expected LabelMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::LabelMismatch);
  }
}
