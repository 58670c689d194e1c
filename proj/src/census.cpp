#include "bgamma/census.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bgamma/catalog.hpp"
#include "bgamma/error.hpp"
#include "bgamma/minor.hpp"
#include "bgamma/parallel.hpp"
#include "text_util.hpp"

namespace bgamma {

namespace {

Multigraph with_edge(const Multigraph& g, std::size_t nvertices, std::size_t u, std::size_t v) {
  auto edges = g.edges();
  edges.push_back({u, v, "e" + std::to_string(edges.size() + 1)});
  return Multigraph(nvertices, std::move(edges));
}

// Every graph one edge larger than g that stays inside the census universe.
std::vector<std::string> extension_encodings(const Multigraph& g, bool connected_only) {
  const std::size_t n = g.vertex_count();
  std::vector<std::string> out;
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u; v < n; ++v) out.push_back(canonical_encoding(with_edge(g, n, u, v)));
    out.push_back(canonical_encoding(with_edge(g, n + 1, u, n)));
  }
  if (!connected_only || n == 0) {
    out.push_back(canonical_encoding(with_edge(g, n + 1, n, n)));
    out.push_back(canonical_encoding(with_edge(g, n + 2, n, n + 1)));
  }
  return out;
}

}  // namespace

std::vector<Multigraph> enumerate_multigraphs(std::size_t max_edges, bool connected_only, std::size_t jobs) {
  if (max_edges > kCensusMaxEdges) {
    throw BudgetError("census limited to " + std::to_string(kCensusMaxEdges) + " edges, got " +
                      std::to_string(max_edges));
  }
  std::vector<Multigraph> result;
  std::vector<Multigraph> level{Multigraph(0, {})};
  for (std::size_t k = 1; k <= max_edges; ++k) {
    std::vector<std::vector<std::string>> found(level.size());
    parallel_for(level.size(), jobs, [&](std::size_t i) { found[i] = extension_encodings(level[i], connected_only); });
    std::set<std::string> merged;
    for (auto& f : found) merged.insert(std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
    level.clear();
    for (const auto& enc : merged) level.push_back(graph_from_encoding(enc));
    result.insert(result.end(), level.begin(), level.end());
  }
  return result;
}

namespace {

struct IsoKey {
  std::size_t size;
  std::size_t rank;
  std::vector<ElementFingerprint> prints;
  friend auto operator<=>(const IsoKey&, const IsoKey&) = default;
};

IsoKey iso_key(const BinaryMatroid& m) {
  auto prints = element_fingerprints(m);
  std::sort(prints.begin(), prints.end());
  return {m.size(), m.rank(), std::move(prints)};
}

// Keeps the first of each isomorphism class, preserving input order.
template <class T, class Get>
std::vector<T> dedupe_by_isomorphism(std::vector<T> items, Get&& get) {
  std::map<IsoKey, std::vector<std::size_t>> buckets;
  std::vector<T> out;
  for (auto& item : items) {
    const BinaryMatroid& m = get(item);
    auto& bucket = buckets[iso_key(m)];
    bool seen = false;
    for (auto idx : bucket) {
      if (isomorphic(get(out[idx]), m)) {
        seen = true;
        break;
      }
    }
    if (!seen) {
      bucket.push_back(out.size());
      out.push_back(std::move(item));
    }
  }
  return out;
}

}  // namespace

std::vector<CensusGammoid> enumerate_binary_gammoids(std::size_t max_edges, std::size_t jobs) {
  const auto graphs = enumerate_multigraphs(max_edges, true, jobs);
  std::vector<std::optional<CensusGammoid>> slots(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    auto m = cycle_matroid(graphs[i]);
    if (is_binary_gammoid(m)) slots[i] = CensusGammoid{std::move(m), graphs[i]};
  });
  std::vector<CensusGammoid> candidates;
  for (auto& s : slots) {
    if (s) candidates.push_back(std::move(*s));
  }
  return dedupe_by_isomorphism(std::move(candidates), [](const CensusGammoid& g) -> const BinaryMatroid& {
    return g.matroid;
  });
}

std::vector<QuotientRecord> quotients_of_k4() {
  const auto& k4 = k4_matroid();
  std::vector<QuotientRecord> out;
  for (unsigned c = 0; c < 8; ++c) {
    BitVec column;
    for (std::size_t i = 0; i < 3; ++i) {
      if ((c >> i) & 1u) column.set(i);
    }
    auto labels = k4.labels();
    labels.push_back("x");
    BinaryMatroid n(k4.matrix().append_column(column), labels);
    QuotientRecord rec{column, contraction(n, {"x"}), std::nullopt, {}};
    rec.graph = graphic_witness(rec.quotient, rec.quotient.rank() + 1);
    for (const std::string name : {"Q1", "Q2", "Q3", "Q4"}) {
      if (isomorphic(*catalog_get(name).matroid, rec.quotient)) rec.matches.push_back(name);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

std::vector<BinaryMatroid> coextensions(const BinaryMatroid& m) {
  constexpr std::size_t kMaxBase = 10;
  if (m.size() > kMaxBase) {
    throw BudgetError("coextensions limited to " + std::to_string(kMaxBase) + " elements, got " +
                      std::to_string(m.size()));
  }
  const Label x = fresh_label(m, "x");
  auto labels = m.labels();
  labels.push_back(x);
  std::vector<BinaryMatroid> all;
  for (std::size_t b = 0; b < (std::size_t{1} << m.size()); ++b) {
    BitVec row;
    for (std::size_t j = 0; j < m.size(); ++j) {
      if ((b >> j) & 1u) row.set(j);
    }
    auto rep = m.matrix().append_row(row);
    BitVec unit;
    unit.set(rep.rows() - 1);
    all.emplace_back(rep.append_column(unit), labels);
  }
  return dedupe_by_isomorphism(std::move(all), [](const BinaryMatroid& n) -> const BinaryMatroid& { return n; });
}

std::string to_text(const CensusCache& c) {
  std::string out = "census max_edges=" + std::to_string(c.max_edges) +
                    " connected=" + (c.connected ? "true" : "false") + "\n";
  for (const auto& e : c.encodings) out += e + "\n";
  return out;
}

CensusCache census_cache_from_text(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("census cache is empty");
  auto head = detail::split_ws(lines[0]);
  if (head.size() != 3 || head[0] != "census" || head[1].substr(0, 10) != "max_edges=" ||
      head[2].substr(0, 10) != "connected=") {
    throw ParseError("census cache header should read 'census max_edges=<k> connected=<b>'");
  }
  CensusCache c;
  c.max_edges = detail::parse_count(head[1].substr(10), "max_edges");
  const auto conn = head[2].substr(10);
  if (conn != "true" && conn != "false") throw ParseError("connected= must be true or false");
  c.connected = conn == "true";
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string enc(lines[i]);
    if (canonical_encoding(graph_from_encoding(enc)) != enc) {
      throw ParseError("census cache line " + std::to_string(i + 1) + " is not a canonical encoding");
    }
    c.encodings.push_back(std::move(enc));
  }
  return c;
}

}  // namespace bgamma
