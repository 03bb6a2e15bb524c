#include "doctest.h"

#include "fitch/errors.hpp"
#include "fitch/io.hpp"
#include "support.hpp"

using namespace fitch;
using namespace fitch::testing;

namespace {

template <typename F>
ParseError parse_error_of(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError");
  return ParseError("", ParseError::Unit::byte, 0);
}

}  // namespace

TEST_SUITE_BEGIN("io");

TEST_CASE("relation JSON") {
  const Relation r = io::parse_relation_json(R"({"labels":["c","a","b"],"pairs":[["c","b"]]})");
  CHECK(r == relation_of({"a", "b", "c"}, {{"c", "b"}}));
  CHECK(io::write_relation_json(r) == "{\"labels\":[\"a\",\"b\",\"c\"],\"pairs\":[[\"c\",\"b\"]]}\n");
  CHECK(io::parse_relation_json(R"({"labels":["a"]})") == Relation(labels_of({"a"})));
}

TEST_CASE("relation JSON errors carry positions") {
  auto reflexive = parse_error_of(
      [] { io::parse_relation_json(R"({"labels":["a","b"],"pairs":[["a","b"],["a","a"]]})"); });
  CHECK(reflexive.unit() == ParseError::Unit::element);
  CHECK(reflexive.position() == 1);
  CHECK(std::string(reflexive.what()).find("reflexive pair") != std::string::npos);

  auto duplicate = parse_error_of(
      [] { io::parse_relation_json(R"({"labels":["a","b"],"pairs":[["a","b"],["a","b"]]})"); });
  CHECK(std::string(duplicate.what()).find("pairs[1]: duplicate pair") != std::string::npos);

  auto syntax = parse_error_of([] { io::parse_relation_json(R"({"labels":["a",})"); });
  CHECK(syntax.unit() == ParseError::Unit::byte);
  CHECK(syntax.position() == 15);

  CHECK_THROWS_AS(io::parse_relation_json(R"({"labels":["a","a"]})"), ParseError);
  CHECK_THROWS_AS(io::parse_relation_json(R"({"labels":["a"],"pairs":[["a","q"]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_relation_json(R"({"labels":[""]})"), ParseError);
  CHECK_THROWS_AS(io::parse_relation_json(R"({"pairs":[]})"), ParseError);
  CHECK_THROWS_AS(io::parse_relation_json(R"({"labels":[],"extra":1})"), ParseError);
  CHECK_THROWS_AS(io::parse_relation_json(R"([1,2])"), ParseError);
}

TEST_CASE("edge list") {
  const Relation r = io::parse_edge_list("#labels: a b c d\n# comment\nc\tb\n\na\tb\r\n");
  CHECK(r == relation_of({"a", "b", "c", "d"}, {{"c", "b"}, {"a", "b"}}));
  CHECK(io::write_edge_list(r) == "#labels: a b c d\na\tb\nc\tb\n");

  // Labels declared by appearance only.
  CHECK(io::parse_edge_list("x\ty\n").labels() == labels_of({"x", "y"}));
  CHECK(io::parse_edge_list("").labels().empty());
}

TEST_CASE("edge list errors carry line numbers") {
  auto reflexive = parse_error_of([] { io::parse_edge_list("a\tb\nb\tb\n"); });
  CHECK(reflexive.unit() == ParseError::Unit::line);
  CHECK(reflexive.position() == 2);
  CHECK(std::string(reflexive.what()).find("reflexive pair") != std::string::npos);

  auto duplicate = parse_error_of([] { io::parse_edge_list("a\tb\n\na\tb\n"); });
  CHECK(duplicate.position() == 3);

  CHECK(parse_error_of([] { io::parse_edge_list("a b\n"); }).position() == 1);
  CHECK_THROWS_AS(io::parse_edge_list("a\tb\tc\n"), ParseError);
  CHECK_THROWS_AS(io::parse_edge_list("\tb\n"), ParseError);
  CHECK_THROWS_AS(io::parse_edge_list("#labels: a a\n"), ParseError);

  CHECK_THROWS_AS(io::write_edge_list(Relation(labels_of({"a b"}))), DomainError);
  CHECK_THROWS_AS(io::write_edge_list(Relation(labels_of({"#a"}))), DomainError);
}

TEST_CASE("newick") {
  const auto t = io::parse_newick("((5:0,6:0)v:1,1:1,2:0)u;");
  CHECK(t.leaf_labels() == labels_of({"1", "2", "5", "6"}));
  CHECK(t.topology().name(t.topology().root()) == "u");
  CHECK(io::write_newick(t) == "((5:0,6:0)v:1,1:1,2:0)u;");

  const auto spaced = io::parse_newick("  ( a : 1 ,\n b:0 ) ;\n");
  CHECK(io::write_newick(spaced) == "(a:1,b:0);");

  const auto quoted = io::parse_newick("('a b':0,'it''s':1,'x:y':0);");
  CHECK(quoted.leaf_labels() == labels_of({"a b", "it's", "x:y"}));
  CHECK(io::write_newick(quoted) == "('a b':0,'it''s':1,'x:y':0);");
}

TEST_CASE("newick syntax errors carry byte offsets") {
  CHECK(parse_error_of([] { io::parse_newick("(a:0,b:0)"); }).position() == 9);
  CHECK(parse_error_of([] { io::parse_newick("(a:0,b:0.5);"); }).position() == 7);
  CHECK(parse_error_of([] { io::parse_newick("(a:0,b);"); }).position() == 6);
  CHECK(parse_error_of([] { io::parse_newick("(a:0,:1);"); }).position() == 5);
  CHECK(parse_error_of([] { io::parse_newick("(a:0,b:0):1;"); }).position() == 9);
  CHECK(parse_error_of([] { io::parse_newick("(a:0,b:0); x"); }).position() == 11);
  CHECK(parse_error_of([] { io::parse_newick("(a:0,b:2);"); }).unit() == ParseError::Unit::byte);
  CHECK_THROWS_AS(io::parse_newick("('a:0,b:0);"), ParseError);
  CHECK_THROWS_AS(io::parse_newick(""), ParseError);
}

TEST_CASE("newick structural errors are distinct from syntax errors") {
  CHECK_THROWS_AS(io::parse_newick("(a:0);"), StructuralError);
  CHECK_THROWS_AS(io::parse_newick("((a:0,b:0):1,(c:0):0);"), StructuralError);
  CHECK_THROWS_AS(io::parse_newick("(a:0,a:1);"), StructuralError);
  CHECK_THROWS_AS(io::parse_newick("a;"), StructuralError);
}

TEST_CASE("dot marks exactly the 0-edges dashed") {
  const auto t = io::parse_newick("((a:0,b:1):1,c:0,d:1);");
  const std::string dot = io::write_dot(t);
  auto count = [&](const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = dot.find(needle); pos != std::string::npos; pos = dot.find(needle, pos + 1)) ++n;
    return n;
  };
  CHECK(count("style=dashed") == 2);
  CHECK(count("style=solid") == 3);
  CHECK(dot.rfind("digraph tree {", 0) == 0);
  CHECK(dot.find("[label=\"a\"]") != std::string::npos);
}

TEST_CASE("random relations survive JSON -> edge list -> JSON") {
  std::mt19937_64 rng(23);
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto labels = numbered_labels(n);
    for (int round = 0; round < 40; ++round) {
      const Relation r = random_relation(labels, rng);
      const std::string json = io::write_relation_json(r);
      const Relation via = io::parse_edge_list(io::write_edge_list(io::parse_relation_json(json)));
      CHECK(io::write_relation_json(via) == json);
    }
  }
}

TEST_CASE("random trees survive newick round trips") {
  std::mt19937_64 rng(29);
  for (std::size_t n = 2; n <= 9; ++n) {
    const auto labels = numbered_labels(n);
    for (int round = 0; round < 20; ++round) {
      const auto t = random_tree(labels, rng);
      const std::string text = io::write_newick(t);
      const auto back = io::parse_newick(text);
      CHECK(io::write_newick(back) == text);
      CHECK(extract_relation(back) == extract_relation(t));
    }
  }
}

TEST_SUITE_END();
