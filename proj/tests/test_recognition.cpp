#include "doctest.h"

#include "fitch/errors.hpp"
#include "fitch/io.hpp"
#include "fitch/oracle.hpp"
#include "fitch/recognition.hpp"
#include "support.hpp"

using namespace fitch;
using namespace fitch::testing;

TEST_SUITE_BEGIN("recognition");

TEST_CASE("satisfies_hlc") {
  CHECK_FALSE(satisfies_hlc(relation_of({"a", "b", "c"}, {{"c", "b"}})));
  CHECK_FALSE(satisfies_hlc(Relation(labels_of({"a", "b", "c"}))));

  // N[x] = {x,y,y'}, N[y] = {x,y}, N[y'] = {x,y'}: the last two share only x.
  const Relation swap = relation_of({"x", "y", "y'"}, {{"y", "y'"}, {"y'", "y"}});
  const auto witness = satisfies_hlc(swap);
  REQUIRE(witness);
  CHECK(swap.labels().names_of(witness->first) == std::vector<std::string>{"x", "y"});
  CHECK(swap.labels().names_of(witness->second) == std::vector<std::string>{"x", "y'"});
  CHECK_FALSE(oracle::oracle_is_fitch(swap));
}

TEST_CASE("satisfies_ic") {
  const Relation x = relation_of({"a", "b", "c"}, {{"c", "b"}});
  const auto witness = satisfies_ic(x);
  REQUIRE(witness);
  CHECK(witness->neighborhood == neighborhood(x, "b"));
  CHECK(x.labels()[witness->member] == "a");
  CHECK(neighborhood(x, "a").size() == 3);

  CHECK_FALSE(satisfies_ic(Relation(labels_of({"a", "b", "c"}))));
  CHECK_FALSE(satisfies_ic(Relation::complete(labels_of({"a", "b", "c"}))));
}

TEST_CASE("is_fitch_neighborhood") {
  const Relation x = relation_of({"a", "b", "c"}, {{"c", "b"}});
  const Verdict v = is_fitch_neighborhood(x);
  CHECK_FALSE(v.is_fitch());
  REQUIRE(v.neighborhood);
  CHECK(std::holds_alternative<InequalityWitness>(*v.neighborhood));
  CHECK_FALSE(v.triangle);

  CHECK(is_fitch_neighborhood(Relation(labels_of({"a", "b", "c"}))).is_fitch());

  // HLC is reported ahead of IC.
  const Relation swap = relation_of({"x", "y", "z"}, {{"y", "z"}, {"z", "y"}});
  const Verdict s = is_fitch_neighborhood(swap);
  REQUIRE(s.neighborhood);
  CHECK(std::holds_alternative<OverlapWitness>(*s.neighborhood));
}

TEST_CASE("is_fitch_triangles") {
  const Verdict v = is_fitch_triangles(relation_of({"a", "b", "c"}, {{"c", "b"}}));
  CHECK_FALSE(v.is_fitch());
  REQUIRE(v.triangle);
  CHECK(*v.triangle == Triple{0, 1, 2});
  CHECK(is_fitch_triangles(Relation(labels_of({"a", "b", "c"}))).is_fitch());
}

TEST_CASE("both recognizers match the oracle on every relation over three labels") {
  const auto labels = labels_of({"a", "b", "c"});
  int fitch_count = 0;
  for (std::uint64_t code = 0; code < relation_count(3); ++code) {
    const Relation r = relation_from_code(labels, code);
    const bool truth = oracle::oracle_is_fitch(r);
    CHECK(is_fitch_triangles(r).is_fitch() == truth);
    CHECK(is_fitch_neighborhood(r).is_fitch() == truth);
    fitch_count += truth ? 1 : 0;
  }
  // Frozen from the oracle; equals the allowed member total of the catalog.
  CHECK(fitch_count == 26);
  std::size_t allowed_members = 0;
  for (const auto& c : oracle::derive_triangle_catalog())
    if (c.allowed) allowed_members += c.member_count;
  CHECK(allowed_members == 26);
}

TEST_CASE("neighborhood recognizer matches the oracle on every relation over four labels") {
  const auto labels = labels_of({"a", "b", "c", "d"});
  const oracle::ExplanationAtlas atlas(labels);
  for (std::uint64_t code = 0; code < relation_count(4); ++code) {
    const Relation r = relation_from_code(labels, code);
    CHECK(is_fitch_neighborhood(r).is_fitch() == atlas.is_fitch(r));
  }
}

TEST_CASE("single label") {
  const Relation one(labels_of({"a"}));
  CHECK(is_fitch_neighborhood(one).is_fitch());
  CHECK(is_fitch_triangles(one).is_fitch());
  const Verdict v = explain(one);
  CHECK(v.is_fitch());
  CHECK_FALSE(v.tree);
  CHECK_THROWS_AS(least_resolved_tree(one), DomainError);
}

TEST_CASE("least_resolved_tree") {
  const auto empty = least_resolved_tree(Relation(labels_of({"a", "b", "c"})));
  CHECK(io::write_newick(empty) == "(a:0,b:0,c:0);");

  const auto complete = least_resolved_tree(Relation::complete(labels_of({"a", "b", "c"})));
  CHECK(io::write_newick(complete) == "(a:1,b:1,c:1);");
  CHECK(extract_relation(complete) == Relation::complete(labels_of({"a", "b", "c"})));

  CHECK_THROWS_AS(least_resolved_tree(relation_of({"a", "b", "c"}, {{"c", "b"}})), ContractError);
}

TEST_CASE("least_resolved_tree on the six-leaf example") {
  const Relation x = extract_relation(newick("((5:0,6:1)v:1,1:1,2:0,3:0,4:1)u;"));
  CHECK(neighborhood(x, "5") == IndexSet{x.labels().index_of("5"), x.labels().index_of("6")});

  const EdgeLabeledTree t = least_resolved_tree(x);
  const Tree& s = t.topology();
  std::vector<VertexId> inner_one;
  for (VertexId v = 0; v < s.size(); ++v) {
    if (v != s.root() && !s.is_leaf(v) && t.is_one_edge(v)) inner_one.push_back(v);
  }
  REQUIRE(inner_one.size() == 1);
  const VertexId v = inner_one[0];
  CHECK(s.parent(v) == s.root());
  CHECK(s.leaf_labels().names_of(s.cluster(v)) == std::vector<std::string>{"5", "6"});
  const VertexId five = s.leaf(x.labels().index_of("5"));
  CHECK(s.parent(five) == v);
  CHECK_FALSE(t.is_one_edge(five));
  CHECK(is_least_resolved(t, x));
}

TEST_CASE("explain") {
  const Relation x = relation_of({"a", "b", "c"}, {{"c", "b"}});
  const Verdict v = explain(x);
  CHECK_FALSE(v.is_fitch());
  CHECK(v.triangle);
  CHECK(v.neighborhood);
  CHECK_FALSE(v.tree);

  const Verdict two = explain(Relation(labels_of({"a", "b"})));
  REQUIRE(two.tree);
  CHECK(io::write_newick(*two.tree) == "(a:0,b:0);");
}

TEST_CASE("explain attaches a least-resolved tree to every Fitch relation on four labels") {
  const auto labels = labels_of({"a", "b", "c", "d"});
  for (std::uint64_t code = 0; code < relation_count(4); ++code) {
    const Relation r = relation_from_code(labels, code);
    const Verdict v = explain(r);
    CHECK(v.is_fitch() == v.tree.has_value());
    CHECK(v.is_fitch() != (v.triangle.has_value() || v.neighborhood.has_value()));
    if (v.tree) {
      CHECK(explains(*v.tree, r));
      CHECK(is_least_resolved(*v.tree, r));
    }
  }
}

TEST_SUITE_END();
