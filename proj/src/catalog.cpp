#include "bgamma/catalog.hpp"

#include <algorithm>
#include <functional>
#include <bit>
#include <map>
#include <set>

#include "bgamma/census.hpp"
#include "bgamma/error.hpp"
#include "bgamma/lifts.hpp"

namespace bgamma {

namespace {

Multigraph graph_of(std::size_t n, std::vector<Edge> edges) { return Multigraph(n, std::move(edges)); }

CatalogEntry graph_entry(std::string name, Multigraph g, std::string property) {
  auto m = cycle_matroid(g);
  return {std::move(name), std::move(g), std::move(m), std::move(property)};
}

BinaryMatroid fano() {
  Gf2Matrix rep(3, 7);
  std::vector<Label> labels;
  for (std::size_t j = 0; j < 7; ++j) {
    for (std::size_t i = 0; i < 3; ++i) {
      if (((j + 1) >> i) & 1u) rep.set(i, j, true);
    }
    labels.push_back("p" + std::to_string(j + 1));
  }
  return BinaryMatroid(rep, labels);
}

std::map<std::string, CatalogEntry> build_catalog() {
  std::map<std::string, CatalogEntry> c;
  auto add = [&](CatalogEntry e) { c.emplace(e.name, std::move(e)); };

  const auto k4 = graph_of(4, {{0, 1, "a"}, {0, 2, "b"}, {0, 3, "c"}, {1, 2, "d"}, {1, 3, "e"}, {2, 3, "f"}});
  add(graph_entry("K4", k4, "cycle matroid is F7 minus the point 111"));
  add(graph_entry("Q1", k4, "cycle matroid is M(K4)"));
  add(graph_entry("Q2",
                  graph_of(3, {{0, 1, "a"}, {0, 1, "b"}, {0, 2, "c"}, {0, 2, "d"}, {1, 2, "e"}, {0, 0, "f"}}),
                  "graphic quotient of M(K4) with one loop; loop at a doubled-edge junction"));
  add(graph_entry("Q3",
                  graph_of(3, {{0, 1, "a"}, {0, 1, "b"}, {0, 2, "c"}, {0, 2, "d"}, {1, 2, "e"}, {2, 2, "f"}}),
                  "graphic quotient of M(K4) with one loop; graph differs from Q2"));
  add(graph_entry("Q4",
                  graph_of(3, {{0, 1, "a"}, {0, 1, "b"}, {0, 2, "c"}, {0, 2, "d"}, {1, 2, "e"}, {1, 2, "f"}}),
                  "loopless graphic quotient of M(K4)"));
  add(graph_entry("G1",
                  graph_of(4, {{0, 1, "a"},
                               {2, 3, "b"},
                               {1, 3, "c"},
                               {0, 2, "d"},
                               {0, 3, "e"},
                               {0, 2, "x"},
                               {0, 1, "y"}}),
                  "binary gammoid in G_2, minimal"));
  add(graph_entry("G2",
                  graph_of(3, {{0, 1, "x"}, {0, 1, "a"}, {0, 2, "z"}, {0, 2, "b"}, {1, 2, "c"}, {0, 0, "y"}}),
                  "M(G2) = M(Q2), in G_3, minimal"));
  add(graph_entry("G3",
                  graph_of(3, {{0, 1, "x"}, {0, 1, "a"}, {0, 2, "y"}, {0, 2, "b"}, {1, 2, "c"}, {2, 2, "z"}}),
                  "M(G3) = M(Q3), in G_3, minimal"));
  add(graph_entry("G4",
                  graph_of(3, {{0, 1, "x"}, {0, 1, "a"}, {0, 2, "y"}, {0, 2, "b"}, {1, 2, "z"}, {1, 2, "c"}}),
                  "M(G4) = M(Q4), in G_3, minimal"));
  add(graph_entry("G6", graph_of(3, {{0, 1, "x"}, {0, 1, "a"}, {0, 2, "y"}, {0, 2, "b"}, {1, 2, "z"}}),
                  "some 3-set H makes element splitting non-gammoid; minimal"));
  add(graph_entry("G7", graph_of(3, {{0, 1, "x"}, {0, 2, "c"}, {1, 2, "y"}, {1, 2, "a"}}),
                  "some 2-set H with e in H makes es-splitting non-gammoid; minimal"));
  add({"F7", std::nullopt, fano(), "seven distinct nonzero columns of GF(2)^3"});
  add({"U24", std::nullopt, std::nullopt, "rank 2 on 4 elements, no dependent pair, every triple dependent"});
  return c;
}

const std::map<std::string, CatalogEntry>& catalog() {
  static const auto c = build_catalog();
  return c;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"K4", "U24", "F7", "G1", "G2", "G3", "G4",
                                              "G6", "G7", "Q1", "Q2", "Q3", "Q4"};
  return names;
}

const CatalogEntry& catalog_get(const std::string& name) {
  auto it = catalog().find(name);
  if (it == catalog().end()) throw LabelError("unknown catalog name '" + name + "'");
  return it->second;
}

Pattern resolve_pattern(const std::string& name) {
  const auto& e = catalog_get(name);
  if (e.matroid) return *e.matroid;
  return uniform_pattern(2, 4);
}

std::optional<MinorCertificate> has_minor(const BinaryMatroid& host, const Pattern& pattern,
                                          const MinorSearchOptions& opts) {
  return std::visit([&](const auto& p) { return has_minor(host, p, opts); }, pattern);
}

bool verify_certificate(const BinaryMatroid& host, const Pattern& pattern, const MinorCertificate& c) {
  return std::visit([&](const auto& p) { return verify_certificate(host, p, c); }, pattern);
}

bool in_g2(const BinaryMatroid& m) { return is_binary_gammoid(m) && in_class_gk(m, 2).has_value(); }

bool in_g3(const BinaryMatroid& m) { return is_binary_gammoid(m) && in_class_gk(m, 3).has_value(); }

bool breaks_element_splitting(const BinaryMatroid& m, std::size_t min_h, std::size_t max_h) {
  const auto labels = sorted_labels(m);
  for (std::size_t k = min_h; k <= std::min(max_h, m.size()); ++k) {
    if (for_each_k_subset(labels, k, [&](const LabelSet& h) { return !is_binary_gammoid(element_splitting(m, h)); })) {
      return true;
    }
  }
  return false;
}

bool breaks_es_splitting(const BinaryMatroid& m, std::size_t min_h, std::size_t max_h) {
  const auto labels = sorted_labels(m);
  for (std::size_t k = min_h; k <= std::min(max_h, m.size()); ++k) {
    bool hit = for_each_k_subset(labels, k, [&](const LabelSet& h) {
      return std::any_of(h.begin(), h.end(),
                         [&](const Label& e) { return !is_binary_gammoid(es_splitting(m, h, e)); });
    });
    if (hit) return true;
  }
  return false;
}

namespace {

struct Verdict {
  bool ok;
  std::string detail;
};

using Predicate = std::function<Verdict(const BinaryMatroid&)>;

Verdict all_of(std::initializer_list<std::pair<const char*, bool>> parts) {
  Verdict v{true, ""};
  for (const auto& [what, ok] : parts) {
    if (!v.detail.empty()) v.detail += "; ";
    v.detail += std::string(what) + (ok ? " ok" : " FAILED");
    v.ok = v.ok && ok;
  }
  return v;
}

bool matches_some_quotient(const BinaryMatroid& m) {
  static const auto quotients = quotients_of_k4();
  return std::any_of(quotients.begin(), quotients.end(),
                     [&](const QuotientRecord& q) { return isomorphic(q.quotient, m).has_value(); });
}

std::size_t loop_count(const BinaryMatroid& m) {
  std::size_t loops = 0;
  for (std::size_t j = 0; j < m.size(); ++j) loops += m.is_loop(j);
  return loops;
}

Verdict check_u24() {
  const auto p = uniform_pattern(2, 4);
  bool ok = p.labels.size() == 4 && p.rank == 2 && p.rank_fn(0b1111) == 2;
  for (ElementMask s = 0; s < 16; ++s) {
    const auto n = static_cast<std::size_t>(std::popcount(s));
    if (n == 2 && p.rank_fn(s) != 2) ok = false;
    if (n == 3 && p.rank_fn(s) != 2) ok = false;
  }
  return {ok, ok ? "rank function ok" : "rank function FAILED"};
}

Predicate predicate_for(const std::string& name) {
  if (name == "K4") {
    return [](const BinaryMatroid& m) {
      return all_of({{"isomorphic to F7 minus 111", isomorphic(deletion(fano(), {"p7"}), m).has_value()},
                     {"7 circuits", circuits(m).size() == 7}});
    };
  }
  if (name == "Q1") {
    return [](const BinaryMatroid& m) {
      return all_of({{"isomorphic to M(K4)", isomorphic(k4_matroid(), m).has_value()}});
    };
  }
  if (name == "Q2" || name == "Q3") {
    return [](const BinaryMatroid& m) {
      return all_of({{"quotient of M(K4)", matches_some_quotient(m)}, {"one loop", loop_count(m) == 1}});
    };
  }
  if (name == "Q4") {
    return [](const BinaryMatroid& m) {
      return all_of({{"quotient of M(K4)", matches_some_quotient(m)}, {"loopless", loop_count(m) == 0}});
    };
  }
  if (name == "G1") {
    return [](const BinaryMatroid& m) {
      return all_of({{"binary gammoid", is_binary_gammoid(m)},
                     {"in G_2", in_class_gk(m, 2).has_value()},
                     {"minimal in G_2", is_minimal_in_class(m, in_g2)}});
    };
  }
  if (name == "G2" || name == "G3" || name == "G4") {
    const std::string q = "Q" + name.substr(1);
    return [q](const BinaryMatroid& m) {
      return all_of({{"isomorphic to its Q", isomorphic(*catalog_get(q).matroid, m).has_value()},
                     {"binary gammoid", is_binary_gammoid(m)},
                     {"in G_3", in_class_gk(m, 3).has_value()},
                     {"minimal in G_3", is_minimal_in_class(m, in_g3)}});
    };
  }
  if (name == "G6") {
    return [](const BinaryMatroid& m) {
      auto breaks = [](const BinaryMatroid& n) { return is_binary_gammoid(n) && breaks_element_splitting(n); };
      return all_of({{"binary gammoid", is_binary_gammoid(m)},
                     {"some 3-set breaks element splitting", breaks_element_splitting(m, 3, 3)},
                     {"minimal", is_minimal_in_class(m, breaks)}});
    };
  }
  if (name == "G7") {
    return [](const BinaryMatroid& m) {
      auto breaks = [](const BinaryMatroid& n) { return is_binary_gammoid(n) && breaks_es_splitting(n); };
      return all_of({{"binary gammoid", is_binary_gammoid(m)},
                     {"some 2-set breaks es-splitting", breaks_es_splitting(m, 2, 2)},
                     {"minimal", is_minimal_in_class(m, breaks)}});
    };
  }
  if (name == "F7") {
    return [](const BinaryMatroid& m) {
      std::set<BitVec> cols;
      bool nonzero = true;
      for (std::size_t j = 0; j < m.size(); ++j) {
        cols.insert(m.column_vector(j));
        nonzero = nonzero && !m.is_loop(j);
      }
      return all_of({{"rank 3", m.rank() == 3}, {"7 distinct nonzero columns", cols.size() == 7 && nonzero}});
    };
  }
  throw LabelError("unknown catalog name '" + name + "'");
}

// Same-size connected graphs whose cycle matroids satisfy `pred`.
std::vector<std::string> correction_search(const Multigraph& g, const Predicate& pred) {
  std::vector<std::string> out;
  for (const auto& cand : enumerate_multigraphs(g.edge_count(), true)) {
    if (cand.edge_count() != g.edge_count() || cand.vertex_count() != g.vertex_count()) continue;
    if (pred(cycle_matroid(cand)).ok) out.push_back(canonical_encoding(cand));
  }
  return out;
}

PropertyCheck minor_check(const std::string& host, const std::string& pattern) {
  auto cert = has_minor(*catalog_get(host).matroid, *catalog_get(pattern).matroid);
  PropertyCheck p{host + " has " + pattern + " minor", cert.has_value(), "", {}};
  p.detail = cert ? to_text(*cert) : "absent";
  if (cert && !verify_certificate(*catalog_get(host).matroid, *catalog_get(pattern).matroid, *cert)) {
    p.passed = false;
    p.detail += " (certificate does not re-verify)";
  }
  return p;
}

}  // namespace

PropertyCheck check_entry(const std::string& name) {
  const auto& e = catalog_get(name);
  PropertyCheck p{name, false, "", {}};
  if (name == "U24") {
    auto v = check_u24();
    p.passed = v.ok;
    p.detail = v.detail;
    return p;
  }
  const auto pred = predicate_for(name);
  auto v = pred(*e.matroid);
  p.passed = v.ok;
  p.detail = v.detail;
  if (name == "Q3") {
    const bool distinct = !graph_isomorphic(*catalog_get("Q2").graph, *e.graph).has_value();
    p.passed = p.passed && distinct;
    p.detail += std::string("; graph not isomorphic to Q2") + (distinct ? " ok" : " FAILED");
  }
  if (!p.passed && e.graph) p.corrections = correction_search(*e.graph, pred);
  return p;
}

std::vector<PropertyCheck> check_all() {
  std::vector<PropertyCheck> out;
  for (const auto& name : catalog_names()) out.push_back(check_entry(name));
  for (const std::string q : {"Q2", "Q3", "Q4"}) out.push_back(minor_check(q, "G6"));
  out.push_back(minor_check("G6", "G7"));
  return out;
}

}  // namespace bgamma
