#include "bgamma/multigraph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "bgamma/error.hpp"
#include "text_util.hpp"

namespace bgamma {

Multigraph::Multigraph(std::size_t nvertices, std::vector<Edge> edges) : n_(nvertices), edges_(std::move(edges)) {
  if (n_ > kMaxCols) throw DimensionError("graph has more than " + std::to_string(kMaxCols) + " vertices");
  std::set<Label> seen;
  for (auto& e : edges_) {
    if (e.u >= n_ || e.v >= n_) {
      throw DimensionError("edge '" + e.label + "' has an endpoint outside [0, " + std::to_string(n_) + ")");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
    check_label(e.label);
    if (!seen.insert(e.label).second) throw LabelError("duplicate edge label '" + e.label + "'");
  }
}

std::size_t Multigraph::multiplicity(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  std::size_t c = 0;
  for (const auto& e : edges_) c += (e.u == u && e.v == v) ? 1 : 0;
  return c;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

std::size_t Multigraph::component_count() const {
  UnionFind uf(n_);
  std::size_t comps = n_;
  for (const auto& e : edges_) comps -= uf.unite(e.u, e.v) ? 1 : 0;
  return comps;
}

bool Multigraph::has_isolated_vertex() const {
  std::vector<bool> touched(n_, false);
  for (const auto& e : edges_) touched[e.u] = touched[e.v] = true;
  return std::find(touched.begin(), touched.end(), false) != touched.end();
}

Multigraph Multigraph::delete_edge(const Label& label) const {
  std::vector<Edge> rest;
  bool found = false;
  for (const auto& e : edges_) {
    if (e.label == label) {
      found = true;
    } else {
      rest.push_back(e);
    }
  }
  if (!found) throw LabelError("unknown edge '" + label + "'");
  return Multigraph(n_, std::move(rest));
}

Multigraph Multigraph::contract_edge(const Label& label) const {
  auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.label == label; });
  if (it == edges_.end()) throw LabelError("unknown edge '" + label + "'");
  if (it->u == it->v) return delete_edge(label);
  const std::size_t keep = it->u;
  const std::size_t gone = it->v;
  auto remap = [&](std::size_t x) {
    if (x == gone) x = keep;
    return x > gone ? x - 1 : x;
  };
  std::vector<Edge> rest;
  for (const auto& e : edges_) {
    if (e.label == label) continue;
    rest.push_back({remap(e.u), remap(e.v), e.label});
  }
  return Multigraph(n_ - 1, std::move(rest));
}

BinaryMatroid cycle_matroid(const Multigraph& g) {
  Gf2Matrix inc(g.vertex_count(), g.edge_count());
  std::vector<Label> labels;
  for (std::size_t j = 0; j < g.edge_count(); ++j) {
    const auto& e = g.edges()[j];
    if (e.u != e.v) {
      inc.set(e.u, j, true);
      inc.set(e.v, j, true);
    }
    labels.push_back(e.label);
  }
  return BinaryMatroid(inc, std::move(labels));
}

namespace {

using MultTable = std::vector<std::vector<std::size_t>>;

MultTable multiplicity_table(const Multigraph& g) {
  MultTable t(g.vertex_count(), std::vector<std::size_t>(g.vertex_count(), 0));
  for (const auto& e : g.edges()) {
    ++t[e.u][e.v];
    if (e.u != e.v) ++t[e.v][e.u];
  }
  return t;
}

// Stable colour refinement. Colours are ranks of isomorphism-invariant
// signatures, so equal graphs get equal colour classes in the same order.
std::vector<std::size_t> refined_colors(const MultTable& t) {
  const std::size_t n = t.size();
  using Signature = std::vector<std::size_t>;
  std::vector<Signature> sig(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t deg = 0;
    for (std::size_t w = 0; w < n; ++w) deg += (w == v) ? 0 : t[v][w];
    sig[v] = {t[v][v], deg};
  }
  auto rank_signatures = [&](const std::vector<Signature>& s) {
    std::vector<Signature> uniq = s;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<std::size_t> out(n);
    for (std::size_t v = 0; v < n; ++v) {
      out[v] = static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), s[v]) - uniq.begin());
    }
    return std::pair{out, uniq.size()};
  };
  auto [color, classes] = rank_signatures(sig);
  while (true) {
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::pair<std::size_t, std::size_t>> nb;
      for (std::size_t w = 0; w < n; ++w) {
        if (w != v && t[v][w] > 0) nb.emplace_back(color[w], t[v][w]);
      }
      std::sort(nb.begin(), nb.end());
      Signature s{color[v]};
      for (auto [c, m] : nb) {
        s.push_back(c);
        s.push_back(m);
      }
      sig[v] = std::move(s);
    }
    auto [next, next_classes] = rank_signatures(sig);
    color = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }
  return color;
}

// Finds the vertex order, consistent with the refined colours, whose
// lower-triangular multiplicity sequence is lexicographically greatest.
class CanonSearch {
 public:
  explicit CanonSearch(const MultTable& t) : t_(t), n_(t.size()) {
    color_ = refined_colors(t);
    color_at_ = color_;
    std::sort(color_at_.begin(), color_at_.end());
    placed_.assign(n_, false);
    order_.assign(n_, 0);
    twin_.assign(n_, std::vector<bool>(n_, false));
    for (std::size_t u = 0; u < n_; ++u) {
      for (std::size_t v = u + 1; v < n_; ++v) {
        bool same = t[u][u] == t[v][v];
        for (std::size_t w = 0; same && w < n_; ++w) {
          if (w != u && w != v && t[u][w] != t[v][w]) same = false;
        }
        twin_[u][v] = twin_[v][u] = same;
      }
    }
  }

  std::vector<std::size_t> run() {
    go(0);
    return best_order_;
  }

 private:
  void go(std::size_t i) {
    if (i == n_) {
      if (!have_best_ || code_ > best_) {
        best_ = code_;
        best_order_ = order_;
        have_best_ = true;
      }
      return;
    }
    std::vector<std::size_t> tried;
    for (std::size_t v = 0; v < n_; ++v) {
      if (placed_[v] || color_[v] != color_at_[i]) continue;
      bool redundant = false;
      for (auto u : tried) redundant = redundant || twin_[u][v];
      if (redundant) continue;
      tried.push_back(v);

      const std::size_t mark = code_.size();
      for (std::size_t j = 0; j < i; ++j) code_.push_back(t_[order_[j]][v]);
      code_.push_back(t_[v][v]);
      if (!have_best_ || !std::lexicographical_compare(code_.begin(), code_.end(), best_.begin(),
                                                       best_.begin() + static_cast<std::ptrdiff_t>(code_.size()))) {
        order_[i] = v;
        placed_[v] = true;
        go(i + 1);
        placed_[v] = false;
      }
      code_.resize(mark);
    }
  }

  const MultTable& t_;
  std::size_t n_;
  std::vector<std::size_t> color_, color_at_;
  std::vector<bool> placed_;
  std::vector<std::size_t> order_, best_order_;
  std::vector<std::vector<bool>> twin_;
  std::vector<std::size_t> code_, best_;
  bool have_best_ = false;
};

std::vector<std::pair<std::size_t, std::size_t>> canonical_edges(const Multigraph& g) {
  const auto order = CanonSearch(multiplicity_table(g)).run();
  std::vector<std::size_t> pos(g.vertex_count());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& e : g.edges()) {
    auto a = pos[e.u];
    auto b = pos[e.v];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

std::string canonical_encoding(const Multigraph& g) {
  std::string out = std::to_string(g.vertex_count()) + ":";
  bool first = true;
  for (auto [a, b] : canonical_edges(g)) {
    if (!first) out.push_back(',');
    first = false;
    out += std::to_string(a) + "-" + std::to_string(b);
  }
  return out;
}

Multigraph canonical_form(const Multigraph& g) {
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (auto [a, b] : canonical_edges(g)) edges.push_back({a, b, "e" + std::to_string(++k)});
  return Multigraph(g.vertex_count(), std::move(edges));
}

Multigraph graph_from_encoding(std::string_view encoding) {
  const auto colon = encoding.find(':');
  if (colon == std::string_view::npos) throw ParseError("graph encoding lacks ':'");
  const auto n = detail::parse_count(detail::trim(encoding.substr(0, colon)), "vertex count");
  std::vector<Edge> edges;
  auto body = detail::trim(encoding.substr(colon + 1));
  if (!body.empty()) {
    std::size_t k = 0;
    for (auto tok : detail::split_on(body, ',')) {
      auto dash = tok.find('-');
      if (dash == std::string_view::npos) throw ParseError("edge token '" + std::string(tok) + "' lacks '-'");
      edges.push_back({detail::parse_count(tok.substr(0, dash), "endpoint"),
                       detail::parse_count(tok.substr(dash + 1), "endpoint"), "e" + std::to_string(++k)});
    }
  }
  return Multigraph(n, std::move(edges));
}

namespace {

class GraphIsoSearch {
 public:
  GraphIsoSearch(const Multigraph& a, const Multigraph& b)
      : ta_(multiplicity_table(a)), tb_(multiplicity_table(b)), n_(a.vertex_count()) {
    ca_ = refined_colors(ta_);
    cb_ = refined_colors(tb_);
    map_.assign(n_, 0);
    used_.assign(n_, false);
  }

  bool color_classes_match() const {
    auto x = ca_;
    auto y = cb_;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }

  // Colours are comparable across the two graphs because callers only get
  // here after the canonical encodings matched.
  bool run(std::size_t u) {
    if (u == n_) return true;
    for (std::size_t w = 0; w < n_; ++w) {
      if (used_[w] || ca_[u] != cb_[w] || ta_[u][u] != tb_[w][w]) continue;
      bool ok = true;
      for (std::size_t p = 0; ok && p < u; ++p) ok = ta_[p][u] == tb_[map_[p]][w];
      if (!ok) continue;
      used_[w] = true;
      map_[u] = w;
      if (run(u + 1)) return true;
      used_[w] = false;
    }
    return false;
  }

  const std::vector<std::size_t>& mapping() const { return map_; }

 private:
  MultTable ta_, tb_;
  std::size_t n_;
  std::vector<std::size_t> ca_, cb_;
  std::vector<std::size_t> map_;
  std::vector<bool> used_;
};

}  // namespace

std::optional<GraphIsomorphism> graph_isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return std::nullopt;
  if (canonical_encoding(a) != canonical_encoding(b)) return std::nullopt;
  GraphIsoSearch search(a, b);
  if (!search.color_classes_match() || !search.run(0)) return std::nullopt;

  GraphIsomorphism out;
  out.vertex_map = search.mapping();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Label>> b_edges;
  for (const auto& e : b.edges()) b_edges[{e.u, e.v}].push_back(e.label);
  for (auto& [k, v] : b_edges) std::sort(v.begin(), v.end());
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Label>> a_edges;
  for (const auto& e : a.edges()) a_edges[{e.u, e.v}].push_back(e.label);
  for (auto& [key, labels] : a_edges) {
    std::sort(labels.begin(), labels.end());
    auto x = out.vertex_map[key.first];
    auto y = out.vertex_map[key.second];
    const auto& targets = b_edges.at({std::min(x, y), std::max(x, y)});
    for (std::size_t i = 0; i < labels.size(); ++i) out.edge_map[labels[i]] = targets[i];
  }
  return out;
}

namespace {

std::size_t count_triangles(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::size_t c = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t d = b + 1; d < n; ++d) c += (adj[a][b] && adj[b][d] && adj[a][d]) ? 1 : 0;
  return c;
}

}  // namespace

std::optional<Multigraph> graphic_witness(const BinaryMatroid& m, std::size_t max_vertices) {
  if (m.size() > kGraphicWitnessMaxElements) {
    throw BudgetError("graphic_witness limited to " + std::to_string(kGraphicWitnessMaxElements) +
                      " elements, got " + std::to_string(m.size()));
  }
  // Reduce to the simple matroid: one representative per parallel class.
  std::vector<std::size_t> loops;
  std::vector<std::size_t> reps;
  std::vector<std::size_t> rep_of(m.size(), 0);
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m.is_loop(j)) {
      loops.push_back(j);
      continue;
    }
    bool placed = false;
    for (std::size_t k = 0; k < reps.size() && !placed; ++k) {
      if (m.column_vector(reps[k]) == m.column_vector(j)) {
        rep_of[j] = k;
        placed = true;
      }
    }
    if (!placed) {
      rep_of[j] = reps.size();
      reps.push_back(j);
    }
  }
  const std::size_t nv = m.rank() + 1;
  if (nv > max_vertices) return std::nullopt;

  std::vector<Label> rep_labels;
  LabelSet non_reps;
  for (auto j : reps) rep_labels.push_back(m.labels()[j]);
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m.is_loop(j) || reps[rep_of[j]] != j) non_reps.insert(m.labels()[j]);
  }
  const BinaryMatroid simple = with_column_order(deletion(m, non_reps), rep_labels);
  std::size_t target_triangles = 0;
  for (auto c : small_circuits(simple, 3)) target_triangles += std::popcount(c) == 3 ? 1 : 0;

  // Candidate simple graphs on nv vertices with |reps| edges.
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t a = 0; a < nv; ++a)
    for (std::size_t b = a + 1; b < nv; ++b) slots.emplace_back(a, b);
  const std::size_t s = reps.size();
  if (s > slots.size()) return std::nullopt;

  std::optional<std::vector<std::pair<std::size_t, std::size_t>>> found;
  Bijection found_map;
  std::vector<std::size_t> pick(s);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    UnionFind uf(nv);
    std::size_t comps = nv;
    std::vector<std::vector<bool>> adj(nv, std::vector<bool>(nv, false));
    for (auto p : pick) {
      comps -= uf.unite(slots[p].first, slots[p].second) ? 1 : 0;
      adj[slots[p].first][slots[p].second] = adj[slots[p].second][slots[p].first] = true;
    }
    if (comps == 1 && count_triangles(adj) == target_triangles) {
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < s; ++k) edges.push_back({slots[pick[k]].first, slots[pick[k]].second, rep_labels[k]});
      Multigraph cand(nv, edges);
      if (auto iso = isomorphic(simple, cycle_matroid(cand))) {
        found = std::vector<std::pair<std::size_t, std::size_t>>();
        for (const auto& e : edges) found->emplace_back(e.u, e.v);
        found_map = *iso;
        break;
      }
    }
    std::size_t i = s;
    while (i > 0 && pick[i - 1] == slots.size() - s + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t k = i; k < s; ++k) pick[k] = pick[k - 1] + 1;
  }
  if (!found) return std::nullopt;

  // found_map sends each representative to the candidate edge playing its role.
  std::map<Label, std::pair<std::size_t, std::size_t>> where;
  for (std::size_t k = 0; k < s; ++k) where[rep_labels[k]] = (*found)[k];
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < m.size(); ++j) {
    if (m.is_loop(j)) {
      edges.push_back({0, 0, m.labels()[j]});
    } else {
      const auto& rep_label = m.labels()[reps[rep_of[j]]];
      auto [u, v] = where.at(found_map.at(rep_label));
      edges.push_back({u, v, m.labels()[j]});
    }
  }
  return Multigraph(nv, std::move(edges));
}

std::string to_text(const Multigraph& g) {
  std::string out = "graph " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const auto& e : g.edges()) out += e.label + " " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Multigraph graph_from_text(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty graph text");
  auto head = detail::split_ws(lines[0]);
  if (head.size() != 3 || head[0] != "graph") throw ParseError("graph header must be 'graph <nvertices> <nedges>'");
  const auto n = detail::parse_count(head[1], "nvertices");
  const auto m = detail::parse_count(head[2], "nedges");
  if (lines.size() != m + 1) {
    throw ParseError("expected " + std::to_string(m) + " edge lines, found " + std::to_string(lines.size() - 1));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < m; ++i) {
    auto tok = detail::split_ws(lines[i + 1]);
    if (tok.size() != 3) throw ParseError("edge line must be '<label> <u> <v>'");
    edges.push_back({detail::parse_count(tok[1], "u"), detail::parse_count(tok[2], "v"), std::string(tok[0])});
  }
  return Multigraph(n, std::move(edges));
}

}  // namespace bgamma
