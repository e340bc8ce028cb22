#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>

#include "modlat/gf_matrix.hpp"
#include "modlat/rng.hpp"

namespace modlat {

/// A subspace of F_q^n, held as its unique RREF basis. Equality is equality
/// of the canonical bases, so two Subspaces compare equal exactly when they
/// are the same set of vectors.
class Subspace {
 public:
  static Subspace zero(FieldSpec field, std::size_t ambient_dim);
  static Subspace full(FieldSpec field, std::size_t ambient_dim);
  /// Row space of `generators`.
  static Subspace span(const Matrix& generators);
  /// Span of the standard basis vectors e_i for the listed indices.
  static Subspace coordinate(FieldSpec field, std::size_t ambient_dim, std::initializer_list<std::size_t> axes);

  const FieldSpec& field() const noexcept { return basis_.field(); }
  std::size_t ambient_dim() const noexcept { return basis_.cols(); }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  bool is_zero() const noexcept { return basis_.rows() == 0; }
  bool is_full() const noexcept { return basis_.rows() == basis_.cols(); }

  bool contains(std::span<const FieldElement> vector) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;

 private:
  explicit Subspace(Matrix canonical_basis) : basis_(std::move(canonical_basis)) {}
  Matrix basis_;
};

/// Canonical text form: `q=<q> n=<n> k=<k>\n` followed by k lines of n
/// space-separated decimal entries, one RREF basis row per line.
std::string to_canonical_text(const Subspace& s);
/// Inverse of to_canonical_text. Rejects anything that is not already the
/// canonical encoding (wrong header, entries >= q, non-RREF rows).
Subspace parse_canonical_text(std::string_view text);

/// The subspace lattice L(F_q^n): join is the span of the union, meet is
/// intersection.
class SubspaceLattice {
 public:
  using element_type = Subspace;

  SubspaceLattice(FieldSpec field, std::size_t ambient_dim);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return n_; }

  Subspace bottom() const { return Subspace::zero(field_, n_); }
  Subspace top() const { return Subspace::full(field_, n_); }

  Subspace join(const Subspace& x, const Subspace& y) const;
  /// Intersection via one row reduction of the block matrix [X X; Y 0].
  Subspace meet(const Subspace& x, const Subspace& y) const;
  bool leq(const Subspace& x, const Subspace& y) const;
  bool contains(const Subspace& x) const noexcept;

  /// Greedy basis extension by standard basis vectors; returns the span of the
  /// vectors that were added.
  Subspace complement_of(const Subspace& x) const;

  /// Span of m i.i.d. uniform vectors.
  Subspace random_subspace(std::size_t m, SeededRng& rng) const;
  /// Uniform over the k-dimensional subspaces (rejection until rank k).
  Subspace random_subspace_of_dim(std::size_t k, SeededRng& rng) const;
  /// Span of `base` plus m i.i.d. uniform vectors.
  Subspace random_superspace(const Subspace& base, std::size_t m, SeededRng& rng) const;
  /// Uniform over the k-dimensional subspaces containing `base`.
  Subspace random_superspace_of_dim(const Subspace& base, std::size_t k, SeededRng& rng) const;
  /// Span of m uniform vectors drawn from inside `outer`.
  Subspace random_subspace_within(const Subspace& outer, std::size_t m, SeededRng& rng) const;
  /// Dimension-agnostic sampler for property tests: span of a uniform number
  /// (0..n) of uniform vectors.
  Subspace random_element(SeededRng& rng) const;

  friend bool operator==(const SubspaceLattice&, const SubspaceLattice&) = default;

 private:
  void require_member(const Subspace& x) const;

  FieldSpec field_;
  std::size_t n_;
};

}  // namespace modlat
