#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcd/bit_vector.hpp"

namespace lcd {

/// Dense matrix over GF(2) stored as a list of packed rows.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  /// All rows must share one length; `cols` is only consulted for an empty list.
  static BitMatrix from_rows(std::vector<BitVector> rows, std::size_t cols = 0);
  static BitMatrix from_strings(std::initializer_list<std::string_view> rows);
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t rows() const noexcept { return rows_.size(); }
  std::size_t cols() const noexcept { return cols_; }

  const BitVector& row(std::size_t i) const { return rows_[i]; }
  void set_row(std::size_t i, BitVector v);
  const std::vector<BitVector>& row_list() const noexcept { return rows_; }

  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }

  void add_row_to(std::size_t target, std::size_t source) { rows_[target] ^= rows_[source]; }
  void swap_rows(std::size_t a, std::size_t b) { std::swap(rows_[a], rows_[b]); }
  void push_row(BitVector v);

  BitVector column(std::size_t j) const;
  BitMatrix transpose() const;
  BitMatrix operator*(const BitMatrix& rhs) const;
  /// G * G^T.
  BitMatrix gram() const;
  /// a * M for a row vector a of length rows().
  BitVector combine(const BitVector& coefficients) const;
  /// M * x^T for x of length cols(); entry i is <row_i, x>.
  BitVector apply(const BitVector& x) const;

  std::size_t rank() const;
  bool is_symmetric() const;
  bool is_zero() const;
  bool has_zero_diagonal() const;

  BitMatrix select_rows(std::span<const std::size_t> indices) const;
  BitMatrix select_columns(std::span<const std::size_t> indices) const;
  BitMatrix erase_columns(std::span<const std::size_t> sorted_indices) const;
  /// [column | M]
  BitMatrix prepend_column(const BitVector& column) const;
  /// [M | column]
  BitMatrix append_column(const BitVector& column) const;
  /// Rows of *this followed by rows of `below`.
  BitMatrix stack(const BitMatrix& below) const;

  /// Basis of {x : M x^T = 0}, returned as rows (a parity-check / dual generator).
  BitMatrix kernel() const;
  /// Basis of {a : a M = 0}.
  BitMatrix left_kernel() const;

  /// Rows are independent, at most min(rows, cols) of them.
  bool full_row_rank() const { return rank() == rows(); }

  std::string to_string() const;

  friend bool operator==(const BitMatrix& a, const BitMatrix& b) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVector> rows_;
};

/// Reduced row echelon form together with the pivot column of each nonzero row.
struct Echelon {
  BitMatrix reduced;  // only the nonzero rows
  std::vector<std::size_t> pivots;
};

Echelon rref(const BitMatrix& m);

/// True when the two matrices have the same row space.
bool same_row_space(const BitMatrix& a, const BitMatrix& b);

/// Independent subset of the rows (first occurrences kept, original order).
BitMatrix independent_rows(const BitMatrix& m);

/// Finds x with x * M = b (b expressed as a combination of M's rows), or
/// nothing when b is outside the row space. Free coefficients are set to zero.
std::optional<BitVector> solve(const BitMatrix& m, const BitVector& b);

/// P * S * P^T = N with N = diag(0_s, A); A is a direct sum of J_2 blocks when
/// S has zero diagonal and the identity otherwise.
struct CongruentNormalForm {
  BitMatrix transform;  // P
  BitMatrix normal;     // N
  std::size_t radical_dim = 0;
  bool alternating = false;  // A is built from J_2 blocks
};

CongruentNormalForm congruent_normal_form(const BitMatrix& symmetric);

/// Symmetric matrix diag(0_zeros, J_2, ..., J_2) with `pairs` blocks.
BitMatrix symplectic_block(std::size_t zeros, std::size_t pairs);

}  // namespace lcd
