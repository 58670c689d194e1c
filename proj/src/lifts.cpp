#include "bgamma/lifts.hpp"

#include "bgamma/error.hpp"

namespace bgamma {

void SplitSpec::validate(const BinaryMatroid& m) const {
  for (const auto& l : h) m.index_of(l);
  if (pivot) {
    m.index_of(*pivot);
    if (!h.contains(*pivot)) throw PreconditionError("pivot '" + *pivot + "' is not in the split set");
  }
}

BitVec indicator_row(const BinaryMatroid& m, const LabelSet& h) {
  BitVec row;
  for (const auto& l : h) row.set(m.index_of(l));
  return row;
}

BinaryMatroid splitting(const BinaryMatroid& m, const LabelSet& h) {
  return BinaryMatroid(m.matrix().append_row(indicator_row(m, h)), m.labels());
}

BinaryMatroid element_splitting(const BinaryMatroid& m, const LabelSet& h) {
  const auto extended = m.matrix().append_row(indicator_row(m, h));
  BitVec unit;
  unit.set(extended.rows() - 1);
  auto labels = m.labels();
  labels.push_back(fresh_label(m, kElementSplitPrefix));
  return BinaryMatroid(extended.append_column(unit), std::move(labels));
}

BinaryMatroid add_parallel_copy(const BinaryMatroid& m, const Label& e) {
  const auto j = m.index_of(e);
  auto labels = m.labels();
  labels.push_back(fresh_label(m, kParallelCopyPrefix));
  return BinaryMatroid(m.matrix().append_column(m.column_vector(j)), std::move(labels));
}

BinaryMatroid es_splitting(const BinaryMatroid& m, const LabelSet& h, const Label& e) {
  SplitSpec{h, e}.validate(m);
  return element_splitting(add_parallel_copy(m, e), h);
}

}  // namespace bgamma
