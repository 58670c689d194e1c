#include "bgamma/gf2.hpp"

#include <algorithm>
#include <sstream>

#include "bgamma/error.hpp"
#include "text_util.hpp"

namespace bgamma {

Gf2Matrix::Gf2Matrix(std::size_t nrows, std::size_t ncols) : nrows_(nrows), ncols_(ncols) {
  if (ncols > kMaxCols || nrows > kMaxCols) {
    throw DimensionError("matrix " + std::to_string(nrows) + "x" + std::to_string(ncols) +
                         " exceeds the supported width of " + std::to_string(kMaxCols));
  }
  rows_.resize(nrows);
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows, std::size_t ncols) {
  Gf2Matrix m(rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != ncols) throw DimensionError("ragged row in from_rows");
    for (std::size_t j = 0; j < ncols; ++j) m.set(i, j, rows[i][j] != 0);
  }
  return m;
}

Gf2Matrix Gf2Matrix::from_rows(const std::vector<std::vector<int>>& rows) {
  return from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

Gf2Matrix Gf2Matrix::from_columns(std::span<const BitVec> cols, std::size_t nrows) {
  Gf2Matrix m(nrows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    for (std::size_t i = 0; i < nrows; ++i) {
      if (cols[j].test(i)) m.rows_[i].set(j);
    }
  }
  return m;
}

void Gf2Matrix::check_row(std::size_t i) const {
  if (i >= nrows_) {
    throw DimensionError("row index " + std::to_string(i) + " out of range (" + std::to_string(nrows_) +
                         " rows)");
  }
}

void Gf2Matrix::check_col(std::size_t j) const {
  if (j >= ncols_) {
    throw DimensionError("column index " + std::to_string(j) + " out of range (" +
                         std::to_string(ncols_) + " columns)");
  }
}

bool Gf2Matrix::get(std::size_t i, std::size_t j) const {
  check_row(i);
  check_col(j);
  return rows_[i].test(j);
}

void Gf2Matrix::set(std::size_t i, std::size_t j, bool value) {
  check_row(i);
  check_col(j);
  rows_[i].set(j, value);
}

const BitVec& Gf2Matrix::row(std::size_t i) const {
  check_row(i);
  return rows_[i];
}

BitVec Gf2Matrix::column(std::size_t j) const {
  check_col(j);
  BitVec c;
  for (std::size_t i = 0; i < nrows_; ++i) {
    if (rows_[i].test(j)) c.set(i);
  }
  return c;
}

Gf2Matrix Gf2Matrix::append_row(const BitVec& r) const {
  for (std::size_t j = ncols_; j < kMaxCols; ++j) {
    if (r.test(j)) throw DimensionError("appended row is wider than the matrix");
  }
  Gf2Matrix out(nrows_ + 1, ncols_);
  std::copy(rows_.begin(), rows_.end(), out.rows_.begin());
  out.rows_.back() = r;
  return out;
}

Gf2Matrix Gf2Matrix::append_column(const BitVec& c) const {
  for (std::size_t i = nrows_; i < kMaxCols; ++i) {
    if (c.test(i)) throw DimensionError("appended column is taller than the matrix");
  }
  Gf2Matrix out(nrows_, ncols_ + 1);
  for (std::size_t i = 0; i < nrows_; ++i) {
    out.rows_[i] = rows_[i];
    if (c.test(i)) out.rows_[i].set(ncols_);
  }
  return out;
}

Gf2Matrix Gf2Matrix::delete_columns(std::span<const std::size_t> cols) const {
  std::vector<bool> drop(ncols_, false);
  for (auto j : cols) {
    check_col(j);
    drop[j] = true;
  }
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < ncols_; ++j) {
    if (!drop[j]) keep.push_back(j);
  }
  return select_columns(keep);
}

Gf2Matrix Gf2Matrix::select_columns(std::span<const std::size_t> cols) const {
  for (auto j : cols) check_col(j);
  Gf2Matrix out(nrows_, cols.size());
  for (std::size_t i = 0; i < nrows_; ++i) {
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (rows_[i].test(cols[k])) out.rows_[i].set(k);
    }
  }
  return out;
}

Gf2Matrix Gf2Matrix::transpose() const {
  Gf2Matrix out(ncols_, nrows_);
  for (std::size_t i = 0; i < nrows_; ++i) {
    for (std::size_t j = 0; j < ncols_; ++j) {
      if (rows_[i].test(j)) out.rows_[j].set(i);
    }
  }
  return out;
}

RrefResult rref(const Gf2Matrix& m) {
  std::vector<BitVec> work;
  work.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) work.push_back(m.row(i));

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t j = 0; j < m.cols() && r < work.size(); ++j) {
    std::size_t p = r;
    while (p < work.size() && !work[p].test(j)) ++p;
    if (p == work.size()) continue;
    std::swap(work[r], work[p]);
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (i != r && work[i].test(j)) work[i] ^= work[r];
    }
    pivots.push_back(j);
    ++r;
  }

  RrefResult out{Gf2Matrix(r, m.cols()), r, std::move(pivots)};
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (work[i].test(j)) out.matrix.set(i, j, true);
    }
  }
  return out;
}

std::size_t rank(const Gf2Matrix& m) {
  std::vector<BitVec> rows;
  rows.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rank_of_vectors(rows);
}

bool row_space_equal(const Gf2Matrix& a, const Gf2Matrix& b) {
  if (a.cols() != b.cols()) {
    throw DimensionError("row_space_equal: width mismatch (" + std::to_string(a.cols()) + " vs " +
                         std::to_string(b.cols()) + ")");
  }
  return rref(a).matrix == rref(b).matrix;
}

bool XorBasis::insert(BitVec v) {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (v.test(pivots_[k])) v ^= basis_[k];
  }
  if (v.none()) return false;
  pivots_.push_back(v.lowest());
  basis_.push_back(v);
  return true;
}

bool XorBasis::contains(BitVec v) const {
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    if (v.test(pivots_[k])) v ^= basis_[k];
  }
  return v.none();
}

std::size_t rank_of_vectors(std::span<const BitVec> vecs) {
  XorBasis basis;
  for (const auto& v : vecs) basis.insert(v);
  return basis.size();
}

std::string to_text(const Gf2Matrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.row(i).test(j) ? '1' : '0');
    out.push_back('\n');
  }
  return out;
}

BitVec bits_from_string(std::string_view s) {
  if (s.size() > kMaxCols) throw DimensionError("bit string longer than " + std::to_string(kMaxCols));
  BitVec v;
  for (std::size_t j = 0; j < s.size(); ++j) {
    if (s[j] == '1') {
      v.set(j);
    } else if (s[j] != '0') {
      throw ParseError("invalid matrix entry '" + std::string(1, s[j]) + "'");
    }
  }
  return v;
}

Gf2Matrix matrix_from_text(std::string_view text) {
  auto lines = detail::content_lines(text);
  if (lines.empty()) throw ParseError("empty matrix text");
  auto head = detail::split_ws(lines[0]);
  if (head.size() != 2) throw ParseError("matrix header must be '<nrows> <ncols>'");
  const auto nrows = detail::parse_count(head[0], "nrows");
  const auto ncols = detail::parse_count(head[1], "ncols");
  // A 0-column matrix has empty row lines, which content_lines drops.
  if (ncols == 0) {
    if (lines.size() != 1) throw ParseError("unexpected rows for a 0-column matrix");
    return Gf2Matrix(nrows, 0);
  }
  if (lines.size() != nrows + 1) {
    throw ParseError("expected " + std::to_string(nrows) + " matrix rows, found " +
                     std::to_string(lines.size() - 1));
  }
  Gf2Matrix m(nrows, ncols);
  for (std::size_t i = 0; i < nrows; ++i) {
    auto row = lines[i + 1];
    if (row.size() != ncols) {
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                       " entries, expected " + std::to_string(ncols));
    }
    auto bits = bits_from_string(row);
    for (std::size_t j = 0; j < ncols; ++j) {
      if (bits.test(j)) m.set(i, j, true);
    }
  }
  return m;
}

}  // namespace bgamma
