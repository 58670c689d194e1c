#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "bgamma/gf2.hpp"

namespace bgamma {

using Label = std::string;
using LabelSet = std::set<Label>;
// Pattern label -> host label (or a -> b for isomorphisms).
using Bijection = std::map<Label, Label>;
// Bit i stands for the i-th column of a matroid.
using ElementMask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

// Prefix for generated labels (see fresh_label).
inline constexpr std::string_view kFreshPrefix = "γ";

// A binary matroid: a GF(2) representation plus one label per column.
//
// The stored matrix is always the canonical RREF of the row space (full row
// rank, rows ordered by pivot column), so two matroids on the same labeled
// ground set with the same column order are equal iff their matrices are.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;
  // Canonicalises `rep`. Throws LabelError for a label count mismatch,
  // duplicates, or labels with whitespace, ',' ';' or '>'.
  BinaryMatroid(const Gf2Matrix& rep, std::vector<Label> labels);

  const Gf2Matrix& matrix() const { return mat_; }
  const std::vector<Label>& labels() const { return labels_; }
  std::size_t size() const { return labels_.size(); }
  std::size_t rank() const { return mat_.rows(); }
  LabelSet ground_set() const { return {labels_.begin(), labels_.end()}; }

  bool contains(const Label& l) const;
  std::size_t index_of(const Label& l) const;  // throws LabelError
  ElementMask mask_of(const LabelSet& s) const;
  LabelSet labels_of(ElementMask mask) const;
  ElementMask full_mask() const;

  // Column j as a vector over the stored rows.
  const BitVec& column_vector(std::size_t j) const { return cols_[j]; }
  std::size_t rank_of_mask(ElementMask mask) const;

  bool is_loop(std::size_t j) const { return cols_[j].none(); }
  bool is_coloop(std::size_t j) const;

 private:
  Gf2Matrix mat_;
  std::vector<Label> labels_;
  std::vector<BitVec> cols_;
};

// Matroid equality: same ground set and the same rank function. Column
// order may differ.
bool same_matroid(const BinaryMatroid& a, const BinaryMatroid& b);

std::size_t rank_of(const BinaryMatroid& m, const LabelSet& s);

BinaryMatroid deletion(const BinaryMatroid& m, const LabelSet& x);
// Contracting a loop deletes it.
BinaryMatroid contraction(const BinaryMatroid& m, const LabelSet& y);
// m \ x / y. Throws PreconditionError when x and y intersect.
BinaryMatroid minor_of(const BinaryMatroid& m, const LabelSet& x, const LabelSet& y);
BinaryMatroid dual(const BinaryMatroid& m);

// Renames labels; labels missing from `map` keep their name.
BinaryMatroid relabel(const BinaryMatroid& m, const Bijection& map);
// Reorders columns to `order`, which must be a permutation of the labels.
BinaryMatroid with_column_order(const BinaryMatroid& m, const std::vector<Label>& order);

inline constexpr std::size_t kDefaultCircuitBound = 16;

// All circuits as label sets, smallest first. Throws BudgetError when
// |E(m)| exceeds `max_elements`.
std::vector<LabelSet> circuits(const BinaryMatroid& m, std::size_t max_elements = kDefaultCircuitBound);
// Circuits as masks, only those of size <= max_size.
std::vector<ElementMask> small_circuits(const BinaryMatroid& m, std::size_t max_size);

// Per-element isomorphism invariant: loop and coloop flags, parallel class
// size and the number of 3- and 4-element circuits through the element.
struct ElementFingerprint {
  bool loop = false;
  bool coloop = false;
  std::size_t parallel_class = 0;
  std::size_t triangles = 0;
  std::size_t quads = 0;
  friend auto operator<=>(const ElementFingerprint&, const ElementFingerprint&) = default;
};
std::vector<ElementFingerprint> element_fingerprints(const BinaryMatroid& m);

// Returns the lexicographically least bijection E(a) -> E(b) (a's labels
// taken in sorted order, candidates tried in sorted order) under which the
// matroids are equal, or nullopt.
std::optional<Bijection> isomorphic(const BinaryMatroid& a, const BinaryMatroid& b);
// Re-checks a bijection a -> b independently of the search.
bool verify_isomorphism(const BinaryMatroid& a, const BinaryMatroid& b, const Bijection& map);

// Smallest "<prefix><i>" (i >= 1) not already a label of m.
Label fresh_label(const BinaryMatroid& m, std::string_view prefix);

// Text form: "matroid <r> <n>", the n labels, then r rows of n '0'/'1'.
std::string to_text(const BinaryMatroid& m);
BinaryMatroid matroid_from_text(std::string_view text);

// Validates a single label (non-empty, no whitespace or ",;>").
void check_label(std::string_view label);

std::string join_labels(const LabelSet& s, std::string_view sep = ",");
// Comma-separated, order-insensitive. Duplicates are dropped; `duplicates`
// (when non-null) receives how many were dropped.
LabelSet parse_label_set(std::string_view text, std::size_t* duplicates = nullptr);

}  // namespace bgamma
