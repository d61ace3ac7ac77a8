#include <doctest.h>

#include "hybnet/errors.hpp"
#include "hybnet/network_io.hpp"
#include "hybnet/trace_io.hpp"
#include "support.hpp"

using namespace hybnet;
using namespace hybnet::testing;

namespace {

// Returns (code, line, column) of the ParseError thrown by f.
std::tuple<Errc, std::size_t, std::size_t> parse_failure(const std::function<void()>& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return {e.code(), e.line(), e.column()};
  }
  FAIL("no ParseError");
  return {Errc::SyntaxError, 0, 0};
}

}  // namespace

TEST_CASE("forest documents") {
  auto fp = parse_forest("(1,3);\n((2,4),(5,6));");
  CHECK(fp.component_count() == 2);
  CHECK(fp.ground_set() == std::vector<Label>{"1", "2", "3", "4", "5", "6"});
  CHECK(serialize_forest(parse_forest("x;")) == "x;\n");
  CHECK(serialize_forest(parse_forest("(x,y);")) == "(x,y);\n");
  CHECK(parse_forest("((1,2),(3,4),(5,6));").size() == 6);
  CHECK(serialize_forest(parse_forest("# header\r\n(2,1);  # trailing\r\n\r\n3;\r\n")) == "(1,2);\n3;\n");
  CHECK(serialize_forest(parse_forest("((a:1.5,b:2)ab:0.1,c);")) == "(a,b,c);\n");
}

TEST_CASE("rooted input is unrooted by suppressing the root") {
  CHECK(canonical_form(parse_forest("((1,2),(3,4));")) == canonical_form(parse_forest("(1,(2,(3,4)));")));
  CHECK(canonical_form(parse_forest("((1,2),(3,4));")) != canonical_form(parse_forest("(((1,3),2),4);")));
  CHECK(canonical_form(parse_forest("((1,2),(3,4));")) == canonical_form(parse_forest("(((1,2),3),4);")));
}

TEST_CASE("forest parse errors carry positions") {
  auto [c1, l1, k1] = parse_failure([] { parse_forest("(1,2,3,4);"); });
  CHECK(c1 == Errc::NonBinary);
  CHECK(l1 == 1);
  CHECK(k1 == 1);
  auto [c2, l2, k2] = parse_failure([] { parse_forest("(1,2);\n(3,(4,1));"); });
  CHECK(c2 == Errc::DuplicateLabel);
  CHECK(l2 == 2);
  CHECK(k2 == 7);
  auto [c3, l3, k3] = parse_failure([] { parse_forest("((1,2),3;"); });
  CHECK(c3 == Errc::SyntaxError);
  CHECK(l3 == 1);
  CHECK(k3 == 9);
  auto [c4, l4, k4] = parse_failure([] { parse_forest("(1,(2));"); });
  CHECK(c4 == Errc::NonBinary);
  CHECK(k4 == 4);
  CHECK(std::get<0>(parse_failure([] { parse_forest("(1,2)"); })) == Errc::SyntaxError);
  CHECK(std::get<0>(parse_failure([] { parse_forest("(1,2);x"); })) == Errc::SyntaxError);
}

TEST_CASE("forest round-trip") {
  Rng rng(77);
  for (int i = 0; i < 200; ++i) {
    auto f = random_forest(1 + i % 11, 1 + i % 4, rng);
    auto text = serialize_forest(f);
    auto back = parse_forest(text);
    CHECK(canonical_form(back) == canonical_form(f));
    CHECK(serialize_forest(back) == text);
  }
}

TEST_CASE("network documents") {
  auto sq = parse_network("1 -- a\n2 -- b\n3 -- c\n4 -- d\na -- b\nb -- c\nc -- d\nd -- a\n");
  CHECK(sq.reticulation() == 1);
  CHECK(serialize_network(sq) ==
        "1 -- v1\n2 -- v2\n3 -- v3\n4 -- v4\nv1 -- v2\nv1 -- v4\nv2 -- v3\nv3 -- v4\n");
  CHECK(serialize_network(parse_network("x\n")) == "x\n");
  // internal names that clash with leaf labels get a prefix
  auto clash = parse_network("v1 -- a\nv2 -- a\nv3 -- a\n");
  CHECK(serialize_network(clash) == "_v1 -- v1\n_v1 -- v2\n_v1 -- v3\n");
}

TEST_CASE("network parse errors") {
  auto [c1, l1, k1] = parse_failure([] { parse_network("x -- u\ny -- v\nu -- v\nu -- v\nu -- v\n"); });
  CHECK(c1 == Errc::TripleEdge);
  CHECK(l1 == 5);
  (void)k1;
  CHECK(std::get<0>(parse_failure([] { parse_network("a -- u\nb -- u\n"); })) == Errc::DegreeViolation);
  CHECK(std::get<0>(parse_failure([] { parse_network("a -- b\nc -- d\n"); })) == Errc::Disconnected);
  auto [c4, l4, k4] = parse_failure([] { parse_network("a -- b\n\na => b\n"); });
  CHECK(c4 == Errc::SyntaxError);
  CHECK(l4 == 3);
  CHECK(k4 == 3);
  CHECK(std::get<0>(parse_failure([] { parse_network("a -- a\n"); })) == Errc::SyntaxError);
}

TEST_CASE("network round-trip") {
  Rng rng(5);
  for (int i = 0; i < 40; ++i) {
    Multigraph g = random_tree(6, rng).graph();
    auto edges = g.edges();
    VertexId s1 = g.subdivide(edges[0].first, edges[0].second);
    VertexId s2 = g.subdivide(edges.back().first, edges.back().second);
    g.add_edge(s1, s2);
    PseudoNetwork n(g);
    auto back = parse_network(serialize_network(n));
    CHECK(isomorphic(back.graph(), n.graph()));
  }
}

TEST_CASE("trace documents") {
  ReductionTrace tr;
  tr.steps.push_back(ReductionStep{Rule::C1, "1", "2", {}, {}, Cut::None, Orientation::Forward});
  tr.steps.push_back(ReductionStep{Rule::C2a_iii, "3", "4", "5", "6", Cut::Epq, Orientation::Reversed});
  tr.steps.push_back(ReductionStep{Rule::C3, "2", {}, {}, {}, Cut::None, Orientation::Forward});
  auto back = parse_trace(serialize_trace(tr));
  CHECK(back.steps == tr.steps);

  auto schema = [](const std::string& text) {
    try {
      parse_trace(text);
    } catch (const Error& e) {
      return e.code() == Errc::SchemaError;
    }
    return false;
  };
  CHECK(schema(R"([{"label":"1","rule":"C4"}])"));
  CHECK(schema(R"([{"label":"1","rule":"C1"}])"));
  CHECK(schema(R"([{"label":"1","rule":"C3","params":{"partner":"2"}}])"));
  CHECK(schema(R"([{"label":"1","rule":"C2a_i","params":{"partner":"2"}}])"));
  CHECK(schema(R"([{"label":"1","rule":"C2a_ii","params":{"partner":"2","cut":"e_p"}}])"));
  CHECK(schema(R"([{"label":"1","rule":"C2a_i","params":{"partner":"2","cut":"e_z"}}])"));
  CHECK(schema(R"([{"label":"1","rule":"C1","orientation":"sideways","params":{"partner":"2"}}])"));
  CHECK(schema(R"([{"label":"1","rule":"C1","extra":1,"params":{"partner":"2"}}])"));
  CHECK(schema(R"({"label":"1"})"));
  auto [c, l, k] = parse_failure([] { parse_trace("[\n  {\"label\": 1,,}\n]"); });
  CHECK(c == Errc::SchemaError);
  CHECK(l == 2);
  CHECK(k > 1);
  auto c2b = parse_trace(R"([{"label":"1","rule":"C2b_ii","params":{"partner":"2"}}])");
  CHECK(c2b.steps[0].cut == Cut::C2bEdge);
}
