#include <doctest.h>

#include "bgamma/catalog.hpp"
#include "bgamma/census.hpp"
#include "bgamma/error.hpp"
#include "bgamma/lifts.hpp"

using namespace bgamma;

namespace {

const BinaryMatroid& g(const std::string& name) { return *catalog_get(name).matroid; }

}  // namespace

TEST_CASE("every defining property holds") {
  for (const auto& c : check_all()) {
    INFO(c.name << ": " << c.detail);
    CHECK(c.passed);
    CHECK(c.corrections.empty());
  }
}

TEST_CASE("K4 has rank 3, six elements and seven circuits") {
  CHECK(g("K4").rank() == 3);
  CHECK(g("K4").size() == 6);
  CHECK(circuits(g("K4")).size() == 7);
  CHECK(isomorphic(g("K4"), k4_matroid()).has_value());
}

TEST_CASE("G_i and Q_i share cycle matroids") {
  CHECK(isomorphic(g("G2"), g("Q2")).has_value());
  CHECK(isomorphic(g("G3"), g("Q3")).has_value());
  CHECK(isomorphic(g("G4"), g("Q4")).has_value());
  CHECK(isomorphic(g("Q1"), k4_matroid()).has_value());
  CHECK_FALSE(isomorphic(g("Q2"), g("Q4")).has_value());
}

TEST_CASE("G1 minus x and y is K4 minus an edge") {
  const Multigraph k4_less(4, {{0, 1, "a"}, {0, 2, "b"}, {0, 3, "c"}, {1, 2, "d"}, {1, 3, "e"}});
  const auto d = deletion(g("G1"), {"x", "y"});
  CHECK(d.size() == 5);
  CHECK(isomorphic(cycle_matroid(k4_less), d).has_value());
  CHECK_FALSE(is_binary_gammoid(splitting(g("G1"), {"x", "y"})));
}

TEST_CASE("G1 contracts onto Q2 and is a coextension of it") {
  const auto c = has_minor(g("G1"), g("Q2"));
  REQUIRE(c.has_value());
  CHECK(c->contracted.size() == 1);
  CHECK(c->deleted.empty());
  bool found = false;
  for (const auto& n : coextensions(g("Q2"))) found = found || isomorphic(n, g("G1")).has_value();
  CHECK(found);
}

TEST_CASE("G6 breaks element splitting with two and with three elements in H") {
  CHECK(breaks_element_splitting(g("G6"), 3, 3));
  CHECK(breaks_element_splitting(g("G6"), 2, 2));
  CHECK(breaks_element_splitting(g("G6"), 2, 5));
}

TEST_CASE("G7 breaks es-splitting with x as the pivot") {
  CHECK_FALSE(is_binary_gammoid(es_splitting(g("G7"), {"x", "y"}, "x")));
  CHECK(is_binary_gammoid(es_splitting(g("G7"), {"x", "y"}, "y")));
}

TEST_CASE("pattern resolution") {
  CHECK(std::holds_alternative<RankOraclePattern>(resolve_pattern("U24")));
  CHECK(std::holds_alternative<BinaryMatroid>(resolve_pattern("F7")));
  CHECK_THROWS_AS(resolve_pattern("G5"), LabelError);
  CHECK_THROWS_AS(catalog_get("nope"), LabelError);
  CHECK(has_minor(g("F7"), resolve_pattern("K4")).has_value());
  CHECK_FALSE(has_minor(g("F7"), resolve_pattern("U24")).has_value());
}

TEST_CASE("catalog entries carry graphs where the object is graphic") {
  for (const auto& name : catalog_names()) {
    const auto& e = catalog_get(name);
    CHECK(e.name == name);
    if (e.graph) CHECK(same_matroid(cycle_matroid(*e.graph), *e.matroid));
  }
  CHECK_FALSE(catalog_get("U24").matroid.has_value());
  CHECK_FALSE(catalog_get("F7").graph.has_value());
}
