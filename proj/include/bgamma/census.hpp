#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bgamma/matroid.hpp"
#include "bgamma/multigraph.hpp"

namespace bgamma {

inline constexpr std::size_t kCensusMaxEdges = 9;

// One representative per isomorphism class of multigraphs (loops and
// parallel edges allowed) with 1..max_edges edges, in canonical form and
// ordered by (edge count, canonical encoding). connected_only = false admits
// disconnected graphs without isolated vertices. Throws BudgetError above
// kCensusMaxEdges. jobs = 0 uses all cores; the result does not depend on it.
std::vector<Multigraph> enumerate_multigraphs(std::size_t max_edges, bool connected_only, std::size_t jobs = 0);

struct CensusGammoid {
  BinaryMatroid matroid;
  Multigraph graph;  // first census graph with this cycle matroid
};

// Cycle matroids of connected census graphs without an M(K_4) minor, one per
// matroid isomorphism class, in order of first appearance.
std::vector<CensusGammoid> enumerate_binary_gammoids(std::size_t max_edges, std::size_t jobs = 0);

struct QuotientRecord {
  BitVec column;  // bit i = row i of the M(K_4) representation
  BinaryMatroid quotient;
  std::optional<Multigraph> graph;
  std::vector<std::string> matches;  // catalog Q names with isomorphic matroids
  bool graphic() const { return graph.has_value(); }
};

// For each of the 8 columns c over GF(2)^3: append c to M(K_4) as "x" and
// contract it.
std::vector<QuotientRecord> quotients_of_k4();

// Single-element binary coextensions N with N / x = m, one per isomorphism
// class, in order of the appended row read as a binary number. x is labeled
// fresh_label(m, "x"). Throws BudgetError for |E(m)| > 10.
std::vector<BinaryMatroid> coextensions(const BinaryMatroid& m);

struct CensusCache {
  std::size_t max_edges = 0;
  bool connected = true;
  std::vector<std::string> encodings;
};

std::string to_text(const CensusCache& c);
// Throws ParseError on a bad header or an encoding that is not canonical.
CensusCache census_cache_from_text(std::string_view text);

}  // namespace bgamma
