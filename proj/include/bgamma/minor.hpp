#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bgamma/matroid.hpp"

namespace bgamma {

// Witness that pattern ≅ host \ deleted / contracted. `map` sends pattern
// labels to the host labels that survive the minor operation.
struct MinorCertificate {
  LabelSet deleted;
  LabelSet contracted;
  Bijection map;
  friend bool operator==(const MinorCertificate&, const MinorCertificate&) = default;
};

// "delete: a,b; contract: c; map: p1->h3,p2->h4"
std::string to_text(const MinorCertificate& c);
MinorCertificate certificate_from_text(std::string_view text);

// A pattern given only by its rank function. Used for U_{2,4}, which has no
// GF(2) representation.
struct RankOraclePattern {
  std::string name;
  std::vector<Label> labels;
  std::size_t rank = 0;
  std::function<std::size_t(ElementMask)> rank_fn;
};

// U_{r,n} with labels u1..un.
RankOraclePattern uniform_pattern(std::size_t r, std::size_t n);

// Independent re-checks: apply the deletions and contractions to the host,
// relabel, and compare with the pattern.
bool verify_certificate(const BinaryMatroid& host, const BinaryMatroid& pattern, const MinorCertificate& c);
bool verify_certificate(const BinaryMatroid& host, const RankOraclePattern& pattern, const MinorCertificate& c);

struct MinorSearchOptions {
  std::size_t max_elements = 14;
};

// Contract-first search: independent contraction sets Y of size
// r(host) - r(pattern), then deletion sets X leaving |E(pattern)| elements,
// both in lexicographic order of sorted labels; first hit wins. Throws
// BudgetError when the host exceeds opts.max_elements.
std::optional<MinorCertificate> has_minor(const BinaryMatroid& host, const BinaryMatroid& pattern,
                                          const MinorSearchOptions& opts = {});
std::optional<MinorCertificate> has_minor(const BinaryMatroid& host, const RankOraclePattern& pattern,
                                          const MinorSearchOptions& opts = {});

// M(K_4) as [I_3 | 110, 101, 011] on labels k1..k6.
const BinaryMatroid& k4_matroid();

std::optional<MinorCertificate> k4_minor(const BinaryMatroid& m, const MinorSearchOptions& opts = {});
// For binary input: no M(K_4) minor.
bool is_binary_gammoid(const BinaryMatroid& m, const MinorSearchOptions& opts = {});

// Lexicographically least k-set H (sorted labels) with splitting(m, H) not a
// binary gammoid. Throws PreconditionError if m itself is not a gammoid.
std::optional<LabelSet> in_class_gk(const BinaryMatroid& m, std::size_t k, const MinorSearchOptions& opts = {});

struct MinimalWitness {
  BinaryMatroid minor;         // P = m \ outside_deleted / outside_contracted
  LabelSet outside_deleted;    // H1'' (disjoint from H)
  LabelSet outside_contracted; // H2''
  LabelSet deleted_in_h;       // H1' ⊆ H
  LabelSet contracted_in_h;    // H2' ⊆ H
  MinorCertificate k4_cert;    // splitting(m, H) \ H1 / H2 ≅ M(K_4)
};

// Pushes the outside-H part of an M(K_4) certificate for splitting(m, H) down
// into m, so splitting(P, H) \ H1' / H2' ≅ M(K_4). Throws PreconditionError
// when splitting(m, H) has no M(K_4) minor.
MinimalWitness reduce_to_minimal_witness(const BinaryMatroid& m, const LabelSet& h,
                                         const MinorSearchOptions& opts = {});

// True when `in_class(m)` holds and fails for every single-element deletion
// and contraction of m.
bool is_minimal_in_class(const BinaryMatroid& m, const std::function<bool(const BinaryMatroid&)>& in_class);

// Calls fn(subset) for each k-subset of `items` in lexicographic order; stops
// early when fn returns true. Returns whether it stopped early.
bool for_each_k_subset(const std::vector<Label>& items, std::size_t k,
                       const std::function<bool(const LabelSet&)>& fn);

std::vector<Label> sorted_labels(const BinaryMatroid& m);

}  // namespace bgamma
