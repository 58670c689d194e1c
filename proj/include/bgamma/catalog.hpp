#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "bgamma/matroid.hpp"
#include "bgamma/minor.hpp"
#include "bgamma/multigraph.hpp"

namespace bgamma {

// A named object with its construction and the predicate that pins it down.
// U24 has no matroid (not binary); it is served as a rank-oracle pattern.
struct CatalogEntry {
  std::string name;
  std::optional<Multigraph> graph;
  std::optional<BinaryMatroid> matroid;
  std::string property;  // one-line statement of the defining property
};

// Known names: K4, U24, F7, G1, G2, G3, G4, G6, G7, Q1, Q2, Q3, Q4.
const std::vector<std::string>& catalog_names();
// Throws LabelError for an unknown name.
const CatalogEntry& catalog_get(const std::string& name);

using Pattern = std::variant<BinaryMatroid, RankOraclePattern>;
// Catalog name or matroid text; throws LabelError for an unknown name.
Pattern resolve_pattern(const std::string& name);

std::optional<MinorCertificate> has_minor(const BinaryMatroid& host, const Pattern& pattern,
                                          const MinorSearchOptions& opts = {});
bool verify_certificate(const BinaryMatroid& host, const Pattern& pattern, const MinorCertificate& c);

struct PropertyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
  // Filled when a graph transcription fails: encodings of same-size graphs
  // that satisfy the property instead.
  std::vector<std::string> corrections;
};

// Defining property of one entry.
PropertyCheck check_entry(const std::string& name);
// Every entry, then the cross-entry checks (Q_i contain G6, G6 contains G7).
std::vector<PropertyCheck> check_all();

// Membership predicates shared with the verifier.
bool in_g2(const BinaryMatroid& m);
bool in_g3(const BinaryMatroid& m);
// Some H with 2 <= |H| <= |E| makes element_splitting non-gammoid.
bool breaks_element_splitting(const BinaryMatroid& m, std::size_t min_h = 2, std::size_t max_h = 64);
// Some H with |H| in [min_h, max_h] and e in H makes es_splitting non-gammoid.
bool breaks_es_splitting(const BinaryMatroid& m, std::size_t min_h = 2, std::size_t max_h = 64);

}  // namespace bgamma
