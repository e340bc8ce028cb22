#pragma once

// Prime-field arithmetic and dense matrices over F_q.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "modlat/rng.hpp"

namespace modlat {

using FieldElement = std::uint32_t;

/// The prime field F_q, 2 <= q < 2^31. Construction rejects composite q.
class FieldSpec {
 public:
  explicit FieldSpec(std::uint32_t q);

  std::uint32_t q() const noexcept { return q_; }

  FieldElement add(FieldElement a, FieldElement b) const noexcept {
    const std::uint32_t s = a + b;  // q < 2^31, no overflow
    return s >= q_ ? s - q_ : s;
  }
  FieldElement sub(FieldElement a, FieldElement b) const noexcept { return a >= b ? a - b : a + q_ - b; }
  FieldElement neg(FieldElement a) const noexcept { return a == 0 ? 0 : q_ - a; }
  FieldElement mul(FieldElement a, FieldElement b) const noexcept {
    return static_cast<FieldElement>((std::uint64_t{a} * b) % q_);
  }
  /// Multiplicative inverse; throws InvalidArgument for zero.
  FieldElement inv(FieldElement a) const;
  /// Canonical representative of an arbitrary integer.
  FieldElement reduce(std::int64_t v) const noexcept {
    const std::int64_t r = v % static_cast<std::int64_t>(q_);
    return static_cast<FieldElement>(r < 0 ? r + q_ : r);
  }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
  friend auto operator<=>(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint32_t q_;
};

bool is_prime(std::uint32_t q) noexcept;

/// Dense row-major matrix over F_q. Every stored entry is canonical in [0, q).
class Matrix {
 public:
  /// rows x cols zero matrix.
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  /// Builds from integer rows, reducing every entry mod q. All rows must have
  /// `cols` entries.
  static Matrix from_rows(FieldSpec field, std::size_t cols,
                          std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix from_rows(FieldSpec field, std::size_t cols,
                          const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix identity(FieldSpec field, std::size_t n);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  FieldElement at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Stores `v mod q`.
  void set(std::size_t r, std::size_t c, FieldElement v) { data_[r * cols_ + c] = v % field_.q(); }

  std::span<const FieldElement> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<FieldElement> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const FieldElement> entries() const noexcept { return data_; }

  /// Appends a row; its length must equal cols().
  void append_row(std::span<const FieldElement> values);

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix&, const Matrix&) = default;

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

struct RrefResult {
  Matrix reduced;  // zero rows removed
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row echelon form: leftmost-nonzero pivots normalised to 1,
/// cleared above and below. Unique for a given row space.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis (in RREF) of {v : m * v^T = 0}.
Matrix kernel(const Matrix& m);

/// Every entry independently uniform in [0, q).
Matrix random_matrix(std::size_t rows, std::size_t cols, const FieldSpec& field, SeededRng& rng);

Matrix add(const Matrix& a, const Matrix& b);
Matrix scale(const Matrix& a, FieldElement factor);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
/// Rows of `top` followed by rows of `bottom`.
Matrix stack(const Matrix& top, const Matrix& bottom);

}  // namespace modlat
