#include <doctest.h>

#include <algorithm>
#include <random>

#include "bgamma/error.hpp"
#include "bgamma/matroid.hpp"
#include "oracles.hpp"

using namespace bgamma;

namespace {

BinaryMatroid k4_rep() {
  return BinaryMatroid(Gf2Matrix::from_rows({{1, 0, 0, 1, 1, 0}, {0, 1, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1}}),
                       {"a", "b", "c", "d", "e", "f"});
}

Bijection random_relabel(std::mt19937& rng, const BinaryMatroid& m, const std::string& prefix) {
  std::vector<Label> targets;
  for (std::size_t j = 0; j < m.size(); ++j) targets.push_back(prefix + std::to_string(j));
  std::shuffle(targets.begin(), targets.end(), rng);
  Bijection map;
  for (std::size_t j = 0; j < m.size(); ++j) map[m.labels()[j]] = targets[j];
  return map;
}

}  // namespace

TEST_CASE("rank function matches the dense oracle") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = oracle::random_matroid(rng, 1 + rng() % 4, 1 + rng() % 7);
    for (const auto& s : oracle::all_subsets(m.labels())) CHECK(rank_of(m, s) == oracle::dense_rank_of(m, s));
  }
}

TEST_CASE("deletion and contraction match the minor rank formula") {
  std::mt19937 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = oracle::random_matroid(rng, 1 + rng() % 4, 2 + rng() % 6);
    LabelSet x, y;
    for (const auto& l : m.labels()) {
      const auto roll = rng() % 4;
      if (roll == 0) x.insert(l);
      if (roll == 1) y.insert(l);
    }
    const auto n = minor_of(m, x, y);
    std::vector<Label> rest;
    for (const auto& l : m.labels()) {
      if (!x.contains(l) && !y.contains(l)) rest.push_back(l);
    }
    REQUIRE(n.ground_set() == LabelSet(rest.begin(), rest.end()));
    for (const auto& s : oracle::all_subsets(rest)) CHECK(rank_of(n, s) == oracle::minor_rank(m, s, y));
  }
}

TEST_CASE("contracting a loop deletes it") {
  const BinaryMatroid m(Gf2Matrix::from_rows({{1, 0, 1}, {0, 0, 1}}), {"p", "z", "q"});
  CHECK(same_matroid(contraction(m, {"z"}), deletion(m, {"z"})));
}

TEST_CASE("minor_of rejects overlapping sets and unknown labels") {
  const auto m = k4_rep();
  CHECK_THROWS_AS(minor_of(m, {"a"}, {"a"}), PreconditionError);
  CHECK_THROWS_AS(deletion(m, {"zz"}), LabelError);
}

TEST_CASE("dual is an involution and has the complementary rank") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 100; ++trial) {
    const auto m = oracle::random_matroid(rng, 1 + rng() % 5, 1 + rng() % 8);
    const auto d = dual(m);
    CHECK(d.rank() == m.size() - m.rank());
    CHECK(same_matroid(dual(d), m));
    // r*(S) = |S| - r(E) + r(E - S)
    for (const auto& s : oracle::all_subsets(m.labels())) {
      LabelSet rest;
      for (const auto& l : m.labels()) {
        if (!s.contains(l)) rest.insert(l);
      }
      CHECK(rank_of(d, s) == s.size() - m.rank() + rank_of(m, rest));
    }
  }
}

TEST_CASE("rank submodularity on random instances") {
  std::mt19937 rng(24);
  for (int trial = 0; trial < 500; ++trial) {
    const auto m = oracle::random_matroid(rng, 1 + rng() % 4, 1 + rng() % 7);
    LabelSet a, b, un, in;
    for (const auto& l : m.labels()) {
      const bool ia = rng() & 1u, ib = rng() & 1u;
      if (ia) a.insert(l);
      if (ib) b.insert(l);
      if (ia || ib) un.insert(l);
      if (ia && ib) in.insert(l);
    }
    CHECK(rank_of(m, a) + rank_of(m, b) >= rank_of(m, un) + rank_of(m, in));
  }
}

TEST_CASE("M(K4) has rank 3, six elements and seven circuits") {
  const auto m = k4_rep();
  CHECK(m.rank() == 3);
  CHECK(m.size() == 6);
  const auto cs = circuits(m);
  CHECK(cs.size() == 7);
  CHECK(std::count_if(cs.begin(), cs.end(), [](const LabelSet& c) { return c.size() == 3; }) == 4);
}

TEST_CASE("circuits are minimal dependent sets") {
  std::mt19937 rng(25);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = oracle::random_matroid(rng, 1 + rng() % 4, 1 + rng() % 7);
    const auto cs = circuits(m);
    std::set<LabelSet> found(cs.begin(), cs.end());
    for (const auto& s : oracle::all_subsets(m.labels())) {
      const bool dependent = oracle::dense_rank_of(m, s) < s.size();
      bool minimal = dependent;
      for (const auto& l : s) {
        auto t = s;
        t.erase(l);
        if (oracle::dense_rank_of(m, t) < t.size()) minimal = false;
      }
      CHECK(found.contains(s) == minimal);
    }
  }
}

TEST_CASE("isomorphism recovers random relabelings and re-verifies") {
  std::mt19937 rng(26);
  for (int trial = 0; trial < 80; ++trial) {
    const auto m = oracle::random_matroid(rng, 1 + rng() % 4, 1 + rng() % 8);
    const auto image = relabel(m, random_relabel(rng, m, "t"));
    std::vector<Label> order = image.labels();
    std::shuffle(order.begin(), order.end(), rng);
    const auto shuffled = with_column_order(image, order);
    auto iso = isomorphic(m, shuffled);
    REQUIRE(iso.has_value());
    CHECK(verify_isomorphism(m, shuffled, *iso));
  }
}

TEST_CASE("non-isomorphic matroids of equal size and rank") {
  // U_{1,2} plus coloop versus a loop plus two coloops share size and rank.
  const BinaryMatroid a(Gf2Matrix::from_rows({{1, 1, 0}, {0, 0, 1}}), {"p", "q", "r"});
  const BinaryMatroid b(Gf2Matrix::from_rows({{1, 0, 0}, {0, 1, 0}}), {"p", "q", "r"});
  CHECK_FALSE(isomorphic(a, b).has_value());
  Bijection id{{"p", "p"}, {"q", "q"}, {"r", "r"}};
  CHECK_FALSE(verify_isomorphism(a, b, id));
}

TEST_CASE("isomorphism returns the least bijection") {
  // Three parallel elements: every bijection works; the identity is least.
  const BinaryMatroid m(Gf2Matrix::from_rows({{1, 1, 1}}), {"a", "b", "c"});
  const auto iso = isomorphic(m, m);
  REQUIRE(iso.has_value());
  CHECK(*iso == Bijection{{"a", "a"}, {"b", "b"}, {"c", "c"}});
}

TEST_CASE("canonical storage makes equality column-order independent") {
  const auto m = k4_rep();
  const auto r = with_column_order(m, {"f", "e", "d", "c", "b", "a"});
  CHECK(same_matroid(m, r));
  CHECK(r.labels().front() == "f");
}

TEST_CASE("labels are validated") {
  const auto rep = Gf2Matrix::from_rows({{1, 0}});
  CHECK_THROWS_AS(BinaryMatroid(rep, {"a", "a"}), LabelError);
  CHECK_THROWS_AS(BinaryMatroid(rep, {"a"}), LabelError);
  CHECK_THROWS_AS(BinaryMatroid(rep, {"a", "b c"}), LabelError);
  CHECK_THROWS_AS(BinaryMatroid(rep, {"a", "b,c"}), LabelError);
  CHECK_THROWS_AS(BinaryMatroid(rep, {"a", ""}), LabelError);
  CHECK(fresh_label(BinaryMatroid(rep, {"γ1", "b"}), "γ") == "γ2");
}

TEST_CASE("matroid text round trip") {
  std::mt19937 rng(27);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = oracle::random_matroid(rng, rng() % 4, rng() % 7);
    const auto back = matroid_from_text(to_text(m));
    CHECK(back.labels() == m.labels());
    CHECK(back.matrix() == m.matrix());
  }
  CHECK_THROWS_AS(matroid_from_text("matroid 1 2\na b\n1\n"), ParseError);
  CHECK_THROWS_AS(matroid_from_text("matroid 1 2\na\n11\n"), ParseError);
  CHECK_THROWS_AS(matroid_from_text("graph 1 2\n"), ParseError);
}

TEST_CASE("label set parsing") {
  std::size_t dups = 0;
  CHECK(parse_label_set("b, a,b", &dups) == LabelSet{"a", "b"});
  CHECK(dups == 1);
  CHECK(parse_label_set("").empty());
  CHECK(join_labels({"x", "y"}) == "x,y");
}
