#pragma once

#include <optional>

#include "bgamma/matroid.hpp"

namespace bgamma {

// Target of a lift operation: the set H and, for es-splitting, e in H.
struct SplitSpec {
  LabelSet h;
  std::optional<Label> pivot;

  // Throws LabelError when H or the pivot is not in E(m), and
  // PreconditionError when the pivot is not in H.
  void validate(const BinaryMatroid& m) const;
};

// Row over m's columns with a 1 exactly at the elements of h.
BitVec indicator_row(const BinaryMatroid& m, const LabelSet& h);

// Splitting M_H: append the indicator row of H to the representation.
BinaryMatroid splitting(const BinaryMatroid& m, const LabelSet& h);

// Element splitting M'_H: splitting plus a fresh element ("γ1", ...) whose
// column is the unit vector on the new row.
BinaryMatroid element_splitting(const BinaryMatroid& m, const LabelSet& h);

// es-splitting M^e_H: adjoin a parallel copy of e ("γp1", ...), then apply
// element splitting with the same H.
BinaryMatroid es_splitting(const BinaryMatroid& m, const LabelSet& h, const Label& e);

// The parallel-copy step of es_splitting on its own.
BinaryMatroid add_parallel_copy(const BinaryMatroid& m, const Label& e);

inline constexpr std::string_view kElementSplitPrefix = "γ";
inline constexpr std::string_view kParallelCopyPrefix = "γp";

}  // namespace bgamma
