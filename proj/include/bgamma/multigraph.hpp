#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bgamma/matroid.hpp"

namespace bgamma {

struct Edge {
  std::size_t u = 0;  // u <= v; a loop has u == v
  std::size_t v = 0;
  Label label;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Labeled multigraph with loops on vertices {0, ..., nvertices - 1}.
class Multigraph {
 public:
  Multigraph() = default;
  // Normalises each edge so u <= v. Throws DimensionError for endpoints out
  // of range and LabelError for invalid or repeated labels.
  Multigraph(std::size_t nvertices, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  // Number of edges joining u and v (loops when u == v).
  std::size_t multiplicity(std::size_t u, std::size_t v) const;
  std::size_t component_count() const;
  bool connected() const { return component_count() <= 1; }
  bool has_isolated_vertex() const;

  Multigraph delete_edge(const Label& label) const;
  // Merges the endpoints; a loop is simply removed.
  Multigraph contract_edge(const Label& label) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

// Vertex-edge incidence matrix over GF(2); loops become zero columns.
BinaryMatroid cycle_matroid(const Multigraph& g);

struct GraphIsomorphism {
  std::vector<std::size_t> vertex_map;  // a-vertex -> b-vertex
  Bijection edge_map;                   // a-label -> b-label
};
std::optional<GraphIsomorphism> graph_isomorphic(const Multigraph& a, const Multigraph& b);

// Canonical text encoding "<n>:u-v,u-v,..." (edges sorted, u <= v), equal
// for two graphs iff they are isomorphic as unlabeled multigraphs.
std::string canonical_encoding(const Multigraph& g);
// Graph in canonical vertex order with edges labeled e1..ek in encoding order.
Multigraph canonical_form(const Multigraph& g);
Multigraph graph_from_encoding(std::string_view encoding);

inline constexpr std::size_t kGraphicWitnessMaxElements = 12;

// Searches for a graph whose cycle matroid is isomorphic to m, on at most
// max_vertices vertices. The returned graph carries m's labels. Throws
// BudgetError when |E(m)| exceeds kGraphicWitnessMaxElements.
std::optional<Multigraph> graphic_witness(const BinaryMatroid& m, std::size_t max_vertices);

// Text form: "graph <nvertices> <nedges>" then "<label> <u> <v>" per edge.
std::string to_text(const Multigraph& g);
Multigraph graph_from_text(std::string_view text);

}  // namespace bgamma
