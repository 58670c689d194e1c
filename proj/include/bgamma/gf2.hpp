#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bgamma {

inline constexpr std::size_t kWordBits = 64;
inline constexpr std::size_t kBitVecWords = 2;
// Widest row (and tallest column) a Gf2Matrix can hold.
inline constexpr std::size_t kMaxCols = kWordBits * kBitVecWords;

// Fixed-capacity bit vector. Bit j lives in word j / 64 at position j % 64.
class BitVec {
 public:
  constexpr BitVec() = default;

  bool test(std::size_t j) const {
    return (words_[j / kWordBits] >> (j % kWordBits)) & 1u;
  }
  void set(std::size_t j, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (j % kWordBits);
    if (value) {
      words_[j / kWordBits] |= mask;
    } else {
      words_[j / kWordBits] &= ~mask;
    }
  }
  void flip(std::size_t j) { words_[j / kWordBits] ^= std::uint64_t{1} << (j % kWordBits); }

  bool any() const {
    for (auto w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  // Index of the lowest set bit, or kMaxCols when empty.
  std::size_t lowest() const {
    for (std::size_t i = 0; i < kBitVecWords; ++i) {
      if (words_[i] != 0) return i * kWordBits + static_cast<std::size_t>(std::countr_zero(words_[i]));
    }
    return kMaxCols;
  }

  BitVec& operator^=(const BitVec& o) {
    for (std::size_t i = 0; i < kBitVecWords; ++i) words_[i] ^= o.words_[i];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    for (std::size_t i = 0; i < kBitVecWords; ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }
  friend BitVec operator&(BitVec a, const BitVec& b) { return a &= b; }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend auto operator<=>(const BitVec&, const BitVec&) = default;

  std::span<const std::uint64_t, kBitVecWords> words() const { return words_; }

 private:
  std::array<std::uint64_t, kBitVecWords> words_{};
};

// Dense matrix over GF(2). Rows are BitVecs; bit j of row i is entry (i, j).
// Every bit at or beyond column ncols is zero.
class Gf2Matrix {
 public:
  Gf2Matrix() = default;
  // Zero matrix. Throws DimensionError when ncols or nrows exceeds kMaxCols.
  Gf2Matrix(std::size_t nrows, std::size_t ncols);

  // Builds from nested 0/1 lists; all rows must have the same length.
  static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows, std::size_t ncols);
  static Gf2Matrix from_rows(const std::vector<std::vector<int>>& rows);
  // Builds from column vectors, each holding nrows bits.
  static Gf2Matrix from_columns(std::span<const BitVec> cols, std::size_t nrows);

  std::size_t rows() const { return nrows_; }
  std::size_t cols() const { return ncols_; }

  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value);
  const BitVec& row(std::size_t i) const;
  BitVec column(std::size_t j) const;

  Gf2Matrix append_row(const BitVec& r) const;
  Gf2Matrix append_column(const BitVec& c) const;
  Gf2Matrix delete_columns(std::span<const std::size_t> cols) const;
  Gf2Matrix select_columns(std::span<const std::size_t> cols) const;
  Gf2Matrix transpose() const;

  friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

 private:
  void check_row(std::size_t i) const;
  void check_col(std::size_t j) const;

  std::size_t nrows_ = 0;
  std::size_t ncols_ = 0;
  std::vector<BitVec> rows_;
};

struct RrefResult {
  Gf2Matrix matrix;  // reduced, zero rows removed, rows ordered by pivot column
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_cols;
};

RrefResult rref(const Gf2Matrix& m);
std::size_t rank(const Gf2Matrix& m);

// True iff the row spaces coincide. Throws DimensionError on width mismatch.
bool row_space_equal(const Gf2Matrix& a, const Gf2Matrix& b);

// Incremental span membership over BitVecs. Used wherever a rank of a column
// subset is needed without materialising a matrix.
class XorBasis {
 public:
  // Reduces v against the basis; returns true and stores v when independent.
  bool insert(BitVec v);
  bool contains(BitVec v) const;
  std::size_t size() const { return basis_.size(); }

 private:
  std::vector<BitVec> basis_;
  std::vector<std::size_t> pivots_;
};

std::size_t rank_of_vectors(std::span<const BitVec> vecs);

// Text form: "<nrows> <ncols>" then nrows lines of ncols '0'/'1' characters.
std::string to_text(const Gf2Matrix& m);
Gf2Matrix matrix_from_text(std::string_view text);

// Parses a string of '0'/'1' characters into a BitVec.
BitVec bits_from_string(std::string_view s);

}  // namespace bgamma
