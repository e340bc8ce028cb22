#include "modlat/gf_matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "modlat/errors.hpp"

namespace modlat {

bool is_prime(std::uint32_t q) noexcept {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (std::uint64_t d = 3; d * d <= q; d += 2) {
    if (q % d == 0) return false;
  }
  return true;
}

FieldSpec::FieldSpec(std::uint32_t q) : q_(q) {
  if (q >= (std::uint32_t{1} << 31)) throw InvalidArgument("field modulus must be below 2^31");
  if (!is_prime(q)) throw InvalidArgument("field modulus " + std::to_string(q) + " is not prime");
}

FieldElement FieldSpec::inv(FieldElement a) const {
  if (a % q_ == 0) throw InvalidArgument("zero has no inverse");
  // Extended Euclid on (a, q).
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = q_, new_r = a % q_;
  while (new_r != 0) {
    const std::int64_t quot = r / new_r;
    t = std::exchange(new_t, t - quot * new_t);
    r = std::exchange(new_r, r - quot * new_r);
  }
  return reduce(t);
}

Matrix::Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(FieldSpec field, std::size_t cols,
                         std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> copy;
  copy.reserve(rows.size());
  for (const auto& r : rows) copy.emplace_back(r);
  return from_rows(field, cols, copy);
}

Matrix Matrix::from_rows(FieldSpec field, std::size_t cols,
                         const std::vector<std::vector<std::int64_t>>& rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeMismatch("row length does not match column count");
    for (std::size_t j = 0; j < cols; ++j) m.data_[i * cols + j] = field.reduce(rows[i][j]);
  }
  return m;
}

Matrix Matrix::identity(FieldSpec field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

void Matrix::append_row(std::span<const FieldElement> values) {
  if (values.size() != cols_) throw ShapeMismatch("appended row has wrong length");
  for (auto v : values) data_.push_back(v % field_.q());
  ++rows_;
}

RrefResult rref(const Matrix& m) {
  const FieldSpec& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t sel = lead;
    while (sel < a.rows() && a.at(sel, col) == 0) ++sel;
    if (sel == a.rows()) continue;
    if (sel != lead) {
      auto x = a.row(sel);
      auto y = a.row(lead);
      std::swap_ranges(x.begin(), x.end(), y.begin());
    }
    auto prow = a.row(lead);
    const FieldElement inv = f.inv(prow[col]);
    for (std::size_t j = col; j < a.cols(); ++j) prow[j] = f.mul(prow[j], inv);
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead) continue;
      auto r = a.row(i);
      const FieldElement factor = r[col];
      if (factor == 0) continue;
      for (std::size_t j = col; j < a.cols(); ++j) r[j] = f.sub(r[j], f.mul(factor, prow[j]));
    }
    pivots.push_back(col);
    ++lead;
  }
  Matrix reduced(f, 0, a.cols());
  for (std::size_t i = 0; i < lead; ++i) reduced.append_row(a.row(i));
  return {std::move(reduced), lead, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel(const Matrix& m) {
  const FieldSpec& f = m.field();
  const auto [r, rk, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  Matrix basis(f, 0, m.cols());
  std::vector<FieldElement> v(m.cols());
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::fill(v.begin(), v.end(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < rk; ++i) v[pivots[i]] = f.neg(r.at(i, free));
    basis.append_row(v);
  }
  return rref(basis).reduced;
}

Matrix random_matrix(std::size_t rows, std::size_t cols, const FieldSpec& field, SeededRng& rng) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, rng.uniform_below(field.q()));
  }
  return m;
}

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw ShapeMismatch("matrices are over different fields");
}

}  // namespace

Matrix add(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeMismatch("add: shapes differ");
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.field().add(a.at(i, j), b.at(i, j)));
  }
  return out;
}

Matrix scale(const Matrix& a, FieldElement factor) {
  const FieldElement c = factor % a.field().q();
  Matrix out(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(i, j, a.field().mul(a.at(i, j), c));
  }
  return out;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) throw ShapeMismatch("multiply: inner dimensions differ");
  const FieldSpec& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const FieldElement aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out.set(i, j, f.add(out.at(i, j), f.mul(aik, b.at(k, j))));
    }
  }
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.set(j, i, a.at(i, j));
  }
  return out;
}

Matrix stack(const Matrix& top, const Matrix& bottom) {
  require_same_field(top, bottom);
  if (top.cols() != bottom.cols()) throw ShapeMismatch("stack: column counts differ");
  Matrix out = top;
  for (std::size_t i = 0; i < bottom.rows(); ++i) out.append_row(bottom.row(i));
  return out;
}

}  // namespace modlat
