#pragma once

// Lattice backends: subset lattices, explicit finite posets, and the runtime
// handle that composes subspace, subset and product lattices.

#include <compare>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "modlat/rng.hpp"
#include "modlat/subspace.hpp"

namespace modlat {

/// Anything with bounded-lattice operations over an equality-comparable
/// element type.
template <class L>
concept LatticeBackend = requires(const L& lattice, const typename L::element_type& x) {
  { lattice.bottom() } -> std::convertible_to<typename L::element_type>;
  { lattice.top() } -> std::convertible_to<typename L::element_type>;
  { lattice.join(x, x) } -> std::convertible_to<typename L::element_type>;
  { lattice.meet(x, x) } -> std::convertible_to<typename L::element_type>;
  { lattice.leq(x, x) } -> std::convertible_to<bool>;
} && std::equality_comparable<typename L::element_type>;

/// Backends that can draw random elements for property tests.
template <class L>
concept SampledLattice = LatticeBackend<L> && requires(const L& lattice, SeededRng& rng) {
  { lattice.random_element(rng) } -> std::convertible_to<typename L::element_type>;
};

/// A subset of a ground set of at most 64 points.
struct Subset {
  std::uint64_t bits = 0;
  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;
};

/// The Boolean lattice of all subsets of {0, ..., size-1}.
class BooleanLattice {
 public:
  using element_type = Subset;

  explicit BooleanLattice(std::size_t ground_size);

  std::size_t ground_size() const noexcept { return size_; }
  std::uint64_t element_count() const noexcept { return std::uint64_t{1} << size_; }

  Subset bottom() const noexcept { return {}; }
  Subset top() const noexcept { return {mask_}; }
  Subset join(Subset x, Subset y) const;
  Subset meet(Subset x, Subset y) const;
  bool leq(Subset x, Subset y) const;
  bool contains(Subset x) const noexcept { return (x.bits & ~mask_) == 0; }
  Subset random_element(SeededRng& rng) const { return {rng.next_u64() & mask_}; }

  friend bool operator==(const BooleanLattice&, const BooleanLattice&) = default;

 private:
  void require_member(Subset x) const;
  std::size_t size_;
  std::uint64_t mask_;
};

/// A finite lattice given explicitly by its order relation on elements
/// 0..size-1. Join and meet are looked up from precomputed tables.
class FiniteLattice {
 public:
  using element_type = std::size_t;

  /// `order` lists pairs (a, b) with a <= b; the reflexive-transitive closure
  /// is taken. Throws InvalidArgument if the closure is not a bounded lattice.
  FiniteLattice(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& order);

  /// N5: 0 < a < c < 1 and 0 < b < 1 with b incomparable to a and c.
  /// Elements are numbered 0=O, 1=a, 2=b, 3=c, 4=I.
  static FiniteLattice pentagon();
  /// M3: O < x, y, z < I with three pairwise incomparable atoms.
  static FiniteLattice diamond();
  /// Total order 0 < 1 < ... < length-1.
  static FiniteLattice chain(std::size_t length);

  std::size_t size() const noexcept { return size_; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }
  std::size_t join(std::size_t x, std::size_t y) const;
  std::size_t meet(std::size_t x, std::size_t y) const;
  bool leq(std::size_t x, std::size_t y) const;
  std::size_t random_element(SeededRng& rng) const {
    return rng.uniform_below(static_cast<std::uint32_t>(size_));
  }

 private:
  void require_member(std::size_t x) const;
  std::size_t size_;
  std::vector<bool> leq_;  // size_ x size_
  std::vector<std::size_t> join_;
  std::vector<std::size_t> meet_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

class Lattice;

/// Element of a runtime Lattice: a subspace, a subset, or a tuple of
/// component elements for product lattices.
class Element {
 public:
  using Tuple = std::vector<Element>;

  Element(Subspace s) : value_(std::move(s)) {}
  Element(Subset s) : value_(s) {}
  Element(Tuple t) : value_(std::move(t)) {}

  bool is_subspace() const noexcept { return value_.index() == 0; }
  bool is_subset() const noexcept { return value_.index() == 1; }
  bool is_tuple() const noexcept { return value_.index() == 2; }

  const Subspace& subspace() const;
  Subset subset() const;
  const Tuple& components() const;

  friend bool operator==(const Element& a, const Element& b);

 private:
  std::variant<Subspace, Subset, Tuple> value_;
};

/// Runtime lattice handle: L(F_q^n), a Boolean lattice, or a direct product
/// of other handles (mixed backends allowed).
class Lattice {
 public:
  using element_type = Element;

  static Lattice subspaces(FieldSpec field, std::size_t ambient_dim);
  static Lattice boolean(std::size_t ground_size);
  static Lattice product(std::vector<Lattice> factors);

  bool is_subspace() const noexcept { return backend_.index() == 0; }
  bool is_boolean() const noexcept { return backend_.index() == 1; }
  bool is_product() const noexcept { return backend_.index() == 2; }
  const SubspaceLattice& as_subspace() const;
  const BooleanLattice& as_boolean() const;
  const std::vector<Lattice>& factors() const;

  Element bottom() const;
  Element top() const;
  Element join(const Element& x, const Element& y) const;
  Element meet(const Element& x, const Element& y) const;
  bool leq(const Element& x, const Element& y) const;
  /// True iff `x` is an element of this lattice.
  bool contains(const Element& x) const;

  /// Subspace backend only; other backends throw UnsupportedBackend.
  Element complement_of(const Element& x) const;
  Element random_element(SeededRng& rng) const;

  std::string describe() const;

 private:
  struct Product {
    std::vector<Lattice> factors;
  };
  explicit Lattice(std::variant<SubspaceLattice, BooleanLattice, Product> b) : backend_(std::move(b)) {}
  void require_member(const Element& x) const;

  std::variant<SubspaceLattice, BooleanLattice, Product> backend_;
};

}  // namespace modlat
