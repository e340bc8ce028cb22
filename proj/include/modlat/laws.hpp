#pragma once

// Law checkers that work on any LatticeBackend. Each one evaluates a single
// instance; property tests feed them sampled or enumerated elements.

#include <cstddef>
#include <optional>
#include <tuple>

#include "modlat/errors.hpp"
#include "modlat/lattice.hpp"

namespace modlat {

/// a <= c  implies  (a + b) . c == a + b . c. Vacuously true when a is not
/// below c.
template <LatticeBackend L>
bool check_modular_triple(const L& lattice, const typename L::element_type& a, const typename L::element_type& b,
                          const typename L::element_type& c) {
  if (!lattice.leq(a, c)) return true;
  return lattice.meet(lattice.join(a, b), c) == lattice.join(a, lattice.meet(b, c));
}

/// Both distributive laws on (x, y, z).
template <LatticeBackend L>
bool check_distributive_triple(const L& lattice, const typename L::element_type& x,
                               const typename L::element_type& y, const typename L::element_type& z) {
  const bool meet_over_join =
      lattice.meet(x, lattice.join(y, z)) == lattice.join(lattice.meet(x, y), lattice.meet(x, z));
  const bool join_over_meet =
      lattice.join(x, lattice.meet(y, z)) == lattice.meet(lattice.join(x, y), lattice.join(x, z));
  return meet_over_join && join_over_meet;
}

/// a . b == O and a + b == I.
template <LatticeBackend L>
bool is_complement(const L& lattice, const typename L::element_type& a, const typename L::element_type& b) {
  return lattice.meet(a, b) == lattice.bottom() && lattice.join(a, b) == lattice.top();
}

/// Idempotence, commutativity, associativity, absorption, and the order /
/// bound relations meet(x,y) <= x <= join(x,y), O <= x <= I.
template <LatticeBackend L>
bool check_lattice_axioms(const L& lattice, const typename L::element_type& x, const typename L::element_type& y,
                          const typename L::element_type& z) {
  const auto j = [&](const auto& a, const auto& b) { return lattice.join(a, b); };
  const auto m = [&](const auto& a, const auto& b) { return lattice.meet(a, b); };
  return j(x, x) == x && m(x, x) == x &&                          // idempotent
         j(x, y) == j(y, x) && m(x, y) == m(y, x) &&              // commutative
         j(j(x, y), z) == j(x, j(y, z)) &&                        // associative
         m(m(x, y), z) == m(x, m(y, z)) &&                        //
         j(x, m(x, y)) == x && m(x, j(x, y)) == x &&              // absorption
         lattice.leq(m(x, y), x) && lattice.leq(x, j(x, y)) &&    //
         lattice.leq(lattice.bottom(), x) && lattice.leq(x, lattice.top()) &&
         (lattice.leq(x, y) == (m(x, y) == x));
}

/// Closed interval [lo, hi] of a lattice.
template <LatticeBackend L>
class Interval {
 public:
  using element_type = typename L::element_type;

  Interval(L lattice, element_type lo, element_type hi)
      : lattice_(std::move(lattice)), lo_(std::move(lo)), hi_(std::move(hi)) {
    if (!lattice_.leq(lo_, hi_)) throw InvalidArgument("interval bounds are not ordered");
  }

  const L& lattice() const noexcept { return lattice_; }
  const element_type& lo() const noexcept { return lo_; }
  const element_type& hi() const noexcept { return hi_; }
  bool contains(const element_type& x) const { return lattice_.leq(lo_, x) && lattice_.leq(x, hi_); }

 private:
  L lattice_;
  element_type lo_;
  element_type hi_;
};

/// Samples up to `max_samples` triples and returns the first one violating
/// distributivity together with its 1-based sample index.
template <LatticeBackend L, class Sampler>
std::optional<std::tuple<typename L::element_type, typename L::element_type, typename L::element_type, std::size_t>>
find_distributive_counterexample(const L& lattice, Sampler&& sample, std::size_t max_samples, SeededRng& rng) {
  for (std::size_t i = 1; i <= max_samples; ++i) {
    auto x = sample(rng);
    auto y = sample(rng);
    auto z = sample(rng);
    if (!check_distributive_triple(lattice, x, y, z)) return std::tuple{std::move(x), std::move(y), std::move(z), i};
  }
  return std::nullopt;
}

}  // namespace modlat
