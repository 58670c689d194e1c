#include <doctest.h>

#include <algorithm>
#include <random>

#include "bgamma/census.hpp"
#include "bgamma/error.hpp"
#include "bgamma/multigraph.hpp"
#include "oracles.hpp"

using namespace bgamma;

namespace {

Multigraph random_graph(std::mt19937& rng, std::size_t n, std::size_t m) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    edges.push_back({rng() % n, rng() % n, "e" + std::to_string(i)});
  }
  return Multigraph(n, edges);
}

Multigraph permuted(std::mt19937& rng, const Multigraph& g) {
  std::vector<std::size_t> perm(g.vertex_count());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) edges.push_back({perm[e.u], perm[e.v], "r" + e.label});
  std::shuffle(edges.begin(), edges.end(), rng);
  return Multigraph(g.vertex_count(), edges);
}

}  // namespace

TEST_CASE("cycle matroid of a triangle with a loop") {
  const Multigraph g(3, {{0, 1, "a"}, {1, 2, "b"}, {0, 2, "c"}, {1, 1, "l"}});
  const auto m = cycle_matroid(g);
  CHECK(m.rank() == 2);
  CHECK(m.is_loop(m.index_of("l")));
  CHECK(circuits(m).size() == 2);
}

TEST_CASE("cycle matroid rank is vertices minus components") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_graph(rng, 1 + rng() % 6, rng() % 9);
    CHECK(cycle_matroid(g).rank() == g.vertex_count() - g.component_count());
  }
}

TEST_CASE("graph deletion and contraction commute with the cycle matroid") {
  std::mt19937 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = random_graph(rng, 2 + rng() % 5, 1 + rng() % 8);
    const auto& e = g.edges()[rng() % g.edge_count()].label;
    CHECK(same_matroid(cycle_matroid(g.delete_edge(e)), deletion(cycle_matroid(g), {e})));
    CHECK(same_matroid(cycle_matroid(g.contract_edge(e)), contraction(cycle_matroid(g), {e})));
  }
}

TEST_CASE("canonical encoding is invariant under relabeling") {
  std::mt19937 rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_graph(rng, 1 + rng() % 6, rng() % 9);
    const auto h = permuted(rng, g);
    CHECK(canonical_encoding(g) == canonical_encoding(h));
    auto iso = graph_isomorphic(g, h);
    REQUIRE(iso.has_value());
    std::map<std::string, std::pair<std::size_t, std::size_t>> ends;
    for (const auto& e : h.edges()) ends[e.label] = {std::min(e.u, e.v), std::max(e.u, e.v)};
    for (const auto& e : g.edges()) {
      const auto a = iso->vertex_map[e.u], b = iso->vertex_map[e.v];
      CHECK(ends.at(iso->edge_map.at(e.label)) == std::pair{std::min(a, b), std::max(a, b)});
    }
  }
}

TEST_CASE("canonical encoding separates what brute force separates") {
  std::mt19937 rng(34);
  std::map<std::string, std::string> by_brute;
  std::map<std::string, std::string> by_canon;
  for (int trial = 0; trial < 400; ++trial) {
    const auto g = random_graph(rng, 1 + rng() % 5, rng() % 7);
    const auto brute = oracle::brute_key(g);
    const auto canon = canonical_encoding(g);
    auto [it, fresh] = by_brute.emplace(brute, canon);
    if (!fresh) CHECK(it->second == canon);
    auto [jt, fresh2] = by_canon.emplace(canon, brute);
    if (!fresh2) CHECK(jt->second == brute);
  }
}

TEST_CASE("canonical form and encoding round trip") {
  const Multigraph g(4, {{0, 1, "a"}, {2, 3, "b"}, {1, 3, "c"}, {0, 2, "d"}, {0, 3, "e"}, {0, 2, "x"}, {0, 1, "y"}});
  const auto enc = canonical_encoding(g);
  const auto back = graph_from_encoding(enc);
  CHECK(canonical_encoding(back) == enc);
  CHECK(graph_isomorphic(back, g).has_value());
  const auto cf = canonical_form(g);
  CHECK(cf.edges().front().label == "e1");
  CHECK(canonical_encoding(cf) == enc);
  CHECK_THROWS_AS(graph_from_encoding("3:0-5"), DimensionError);
  CHECK_THROWS_AS(graph_from_encoding("3;0-1"), ParseError);
}

TEST_CASE("distinct loop placements are not isomorphic") {
  const Multigraph a(3, {{0, 1, "a"}, {0, 1, "b"}, {0, 2, "c"}, {0, 2, "d"}, {1, 2, "e"}, {0, 0, "f"}});
  const Multigraph b(3, {{0, 1, "a"}, {0, 1, "b"}, {0, 2, "c"}, {0, 2, "d"}, {1, 2, "e"}, {2, 2, "f"}});
  CHECK_FALSE(graph_isomorphic(a, b).has_value());
  CHECK(canonical_encoding(a) != canonical_encoding(b));
  CHECK(isomorphic(cycle_matroid(a), cycle_matroid(b)).has_value());
}

TEST_CASE("graphic witness reproduces cycle matroids") {
  const auto graphs = enumerate_multigraphs(6, true, 1);
  std::mt19937 rng(35);
  for (std::size_t i = 0; i < graphs.size(); i += 1 + rng() % 7) {
    const auto m = cycle_matroid(graphs[i]);
    const auto w = graphic_witness(m, m.rank() + 1);
    REQUIRE(w.has_value());
    CHECK(same_matroid(cycle_matroid(*w), m));
  }
}

TEST_CASE("the Fano plane is not graphic") {
  Gf2Matrix rep(3, 7);
  std::vector<Label> labels;
  for (std::size_t j = 0; j < 7; ++j) {
    for (std::size_t i = 0; i < 3; ++i) rep.set(i, j, ((j + 1) >> i) & 1u);
    labels.push_back("p" + std::to_string(j + 1));
  }
  CHECK_FALSE(graphic_witness(BinaryMatroid(rep, labels), 4).has_value());
}

TEST_CASE("graph validation and text round trip") {
  CHECK_THROWS_AS(Multigraph(2, {{0, 2, "a"}}), DimensionError);
  CHECK_THROWS_AS(Multigraph(2, {{0, 1, "a"}, {1, 1, "a"}}), LabelError);
  const Multigraph g(3, {{2, 0, "a"}, {1, 1, "b"}});
  CHECK(g.edges()[0].u == 0);
  CHECK(g.has_isolated_vertex() == false);
  CHECK(g.component_count() == 2);
  CHECK(graph_from_text(to_text(g)) == g);
  CHECK_THROWS_AS(graph_from_text("graph 2 1\na 0\n"), ParseError);
}
