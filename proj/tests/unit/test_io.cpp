#include "doctest.h"
#include "ordertop/errors.hpp"
#include "ordertop/io.hpp"

using namespace ordertop;

TEST_CASE("poset json round trip") {
  const char* text = R"({"elements": ["b","x","y","t"],
                         "covers": [["b","x"],["b","y"],["x","t"],["y","t"]]})";
  auto p = poset_from_json_text(text);
  CHECK(p.size() == 4);
  CHECK(p.leq(p.index_of("b"), p.index_of("t")));
  auto q = poset_from_json_text(poset_to_json_text(p));
  CHECK(q.same_relation(p));
  CHECK(q.labels() == p.labels());
}

TEST_CASE("poset json validation") {
  CHECK_THROWS_AS(poset_from_json_text("{"), InvalidInput);
  CHECK_THROWS_AS(poset_from_json_text(R"([1,2])"), InvalidInput);
  CHECK_THROWS_AS(poset_from_json_text(R"({"elements": ["a"]})"), InvalidInput);
  CHECK_THROWS_AS(
      poset_from_json_text(R"({"elements": ["a"], "covers": [], "extra": 1})"),
      InvalidInput);
  CHECK_THROWS_AS(
      poset_from_json_text(R"({"elements": ["a","b"], "covers": [["a"]]})"),
      InvalidInput);
  CHECK_THROWS_AS(
      poset_from_json_text(R"({"elements": ["a","b"], "covers": [["a","z"]]})"),
      UnknownLabel);
  CHECK_THROWS_AS(
      poset_from_json_text(R"({"elements": ["a","a"], "covers": []})"),
      InvalidInput);
  CHECK_THROWS_AS(
      poset_from_json_text(
          R"({"elements": ["a","b"], "covers": [["a","b"],["b","a"]]})"),
      CycleDetected);
}

TEST_CASE("space json round trip") {
  const char* text = R"({"points": ["a","b"], "closed": [[], ["a"], ["a","b"]]})";
  auto x = space_from_json_text(text);
  CHECK(x.points() == 2);
  CHECK(x.closed_sets().size() == 3);
  auto y = space_from_json_text(space_to_json_text(x));
  CHECK(y.specialization().same_relation(x.specialization()));
  // sobrify output (with eta) reloads as a space
  auto z = space_from_json_text(sobrify_to_json_text(x, y));
  CHECK(z.points() == 2);
}

TEST_CASE("space json validation") {
  CHECK_THROWS_AS(space_from_json_text(R"({"points": ["a"]})"), InvalidInput);
  CHECK_THROWS_AS(
      space_from_json_text(R"({"points": ["a"], "closed": [["a"]]})"), NotAFamily);
  CHECK_THROWS_AS(
      space_from_json_text(R"({"points": ["a","b"], "closed": [[], ["a","b"]]})"),
      NotT0);
  CHECK_THROWS_AS(
      space_from_json_text(R"({"points": ["a"], "closed": [[], ["q"]]})"),
      UnknownLabel);
  CHECK_THROWS_AS(
      space_from_json_text(R"({"points": ["a","a"], "closed": [[], ["a"]]})"),
      InvalidInput);
}

TEST_CASE("input dispatch") {
  auto a = input_from_json_text(R"({"elements": ["a"], "covers": []})");
  CHECK(std::holds_alternative<FinitePoset>(a));
  auto b = input_from_json_text(R"({"points": ["a"], "closed": [[], ["a"]]})");
  CHECK(std::holds_alternative<FiniteSpace>(b));
  CHECK_THROWS_AS(input_from_json_text(R"({"foo": 1})"), InvalidInput);
}

TEST_CASE("dot export") {
  auto chain = poset_from_json_text(R"({"elements": ["lo","hi"], "covers": [["lo","hi"]]})");
  std::string dot = poset_to_dot(chain);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("\"lo\" -> \"hi\";") != std::string::npos);

  // diamond: 4 nodes, 4 cover edges
  auto d = poset_from_json_text(
      R"({"elements": ["b","x","y","t"],
          "covers": [["b","x"],["b","y"],["x","t"],["y","t"]]})");
  std::string ddot = poset_to_dot(d);
  std::size_t edges = 0;
  for (std::size_t at = ddot.find("->"); at != std::string::npos;
       at = ddot.find("->", at + 1))
    ++edges;
  CHECK(edges == 4);

  // deterministic: identical output across calls
  CHECK(poset_to_dot(d) == ddot);
  // labels with quotes survive escaping
  auto tricky = FinitePoset::from_covers({"a\"b", "c"}, {{"a\"b", "c"}});
  CHECK(poset_to_dot(tricky).find("\"a\\\"b\"") != std::string::npos);
}

TEST_CASE("text files") {
  const std::string path = "/tmp/ordertop_io_test.json";
  write_text_file(path, "{\"elements\": [\"a\"], \"covers\": []}");
  CHECK(poset_from_json_text(read_text_file(path)).size() == 1);
  CHECK_THROWS_AS(read_text_file("/nonexistent/nope.json"), InvalidInput);
}
