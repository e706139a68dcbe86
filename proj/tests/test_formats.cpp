#include <string>

#include "doctest.h"

#include "fincat/format.hpp"
#include "fincat/verify.hpp"

using namespace fincat;
using namespace fincat::verify;

TEST_CASE("graph files round-trip") {
  for (const auto& g : {path_graph(3), square_graph(), two_loop_graph()}) {
    FinGraph back = parse_graph(write_graph(g), "roundtrip");
    CHECK(back == g);
    CHECK(back.name == g.name);
  }
}

TEST_CASE("graph files round-trip across the whole corpus") {
  for (const auto& g : graph_corpus(3, 3))
    CHECK(parse_graph(write_graph(g), "rt") == g);
}

TEST_CASE("graph parse errors carry line numbers") {
  const std::string text =
      "graph g\n"
      "vertex a\n"
      "edge e : a -> missing\n";
  try {
    parse_graph(text, "bad.graph");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("bad.graph:3") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_graph("graph g\nvertex a.b\n", "dot"), ParseError);
  CHECK_THROWS_AS(parse_graph("vertex a\n", "nohdr"), ParseError);
  // comments and blank lines are ignored
  FinGraph g = parse_graph("# hello\ngraph g\n\nvertex a # trailing\n", "ok");
  CHECK(g.vertices == std::vector<std::string>{"a"});
}

TEST_CASE("category files round-trip and validate laws") {
  FinCategory z2 = cyclic_group_category(2, "z2");
  FinCategory back = parse_category(write_category(z2), "z2.cat");
  CHECK(back == z2);

  // a broken composite is reported with the violated law
  const std::string text =
      "graph broken\n"
      "vertex *\n"
      "edge one : * -> *\n"
      "edge v : * -> *\n"
      "id * = one\n"
      "comp one = one . one\n"
      "comp one = v . one\n"
      "comp v = one . v\n"
      "comp one = v . v\n";
  try {
    parse_category(text, "broken.cat");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("left-unit") != std::string::npos);
  }
}

TEST_CASE("model files round-trip") {
  ModelData m;
  m.carrier = two_loop_graph();
  m.comp[{"u", "u"}] = "u";
  m.comp[{"u", "w"}] = "w";
  m.comp[{"w", "u"}] = "w";
  m.comp[{"w", "w"}] = "u";
  m.unit = {{"v", "u"}};
  m.inv = StrMap{{"u", "u"}, {"w", "w"}};
  ModelData back = parse_model(write_model(m), "m.model");
  CHECK(back.carrier == m.carrier);
  CHECK(back.comp == m.comp);
  CHECK(back.unit == m.unit);
  CHECK(back.inv == m.inv);

  CHECK_THROWS_AS(parse_model("graph g\nvertex a\nunit a = nope\n", "m"),
                  ParseError);
}

TEST_CASE("presentation files round-trip") {
  Presentation z2 = z2_presentation();
  Presentation back = parse_presentation(write_presentation(z2), "z2.pres");
  CHECK(back.generators == z2.generators);
  CHECK(back.relations == z2.relations);
  CHECK(back.alpha.v_map == z2.alpha.v_map);
  CHECK(back.alpha.e_map.at("r") == z2.alpha.e_map.at("r"));
  CHECK(back.beta.e_map.at("r") == z2.beta.e_map.at("r"));

  // block names are fixed
  const std::string wrong =
      "graph H\nvertex w\ngraph generators\nvertex v\nalpha w = v\n"
      "beta w = v\n";
  CHECK_THROWS_AS(parse_presentation(wrong, "w.pres"), ParseError);
}

TEST_CASE("path expressions") {
  FinGraph g = square_graph();
  Path p = parse_path_expr("f.g", g);
  CHECK(p.start == "a");
  CHECK(p.edges == std::vector<std::string>{"f", "g"});
  Path id = parse_path_expr("id(c)", g);
  CHECK(id.start == "c");
  CHECK(id.empty());
  CHECK_THROWS_AS(parse_path_expr("f.k", g), ParseError);  // not composable
  CHECK_THROWS_AS(parse_path_expr("nope", g), ParseError);
  CHECK_THROWS_AS(parse_path_expr("id(zzz)", g), ParseError);
}

TEST_CASE("span files") {
  const std::string text =
      "graph apex\n"
      "vertex a\n"
      "vertex b\n"
      "edge l : a -> b\n"
      "graph left\n"
      "vertex x\n"
      "vertex y\n"
      "edge e : x -> y\n"
      "graph right\n"
      "vertex z\n"
      "edge d : z -> z\n"
      "map f : apex -> left\n"
      "vmap f a = x\n"
      "vmap f b = y\n"
      "emap f l = e\n"
      "map g : apex -> right\n"
      "vmap g a = z\n"
      "vmap g b = z\n"
      "emap g l = d\n";
  SpanFile sf = parse_span(text, "s.span");
  CHECK(sf.graphs.size() == 3);
  CHECK(sf.maps.size() == 2);
  CHECK(sf.map_names == std::vector<std::string>{"f", "g"});
  CHECK(sf.maps[0].v_map.at("a") == "x");
  CHECK(sf.maps[1].e_map.at("l") == "d");

  CHECK_THROWS_AS(parse_span("graph a\nvertex v\nvmap f v = v\n", "s"),
                  ParseError);
}
