#pragma once

// The lattice pairing e_d(x, y) = d . (x + y) with the meet-action of the
// interval [d, I].

#include <cstddef>
#include <utility>
#include <vector>

#include "modlat/errors.hpp"
#include "modlat/laws.hpp"
#include "modlat/lattice.hpp"

namespace modlat {

template <LatticeBackend L>
class PairingContext {
 public:
  using element_type = typename L::element_type;

  /// Requires O < d < I.
  PairingContext(L lattice, element_type d) : lattice_(std::move(lattice)), d_(std::move(d)) {
    if (d_ == lattice_.bottom() || d_ == lattice_.top()) {
      throw PreconditionViolation("pairing target d must lie strictly between O and I");
    }
  }

  const L& lattice() const noexcept { return lattice_; }
  const element_type& d() const noexcept { return d_; }

  /// The acting semigroup [d, I].
  Interval<L> acting_interval() const { return {lattice_, d_, lattice_.top()}; }
  /// The value range [O, d].
  Interval<L> range() const { return {lattice_, lattice_.bottom(), d_}; }

  bool acts(const element_type& a) const { return lattice_.leq(d_, a); }

  /// a acting on x.
  element_type act(const element_type& a, const element_type& x) const {
    require_acting(a);
    return lattice_.meet(a, x);
  }

  element_type pair(const element_type& x, const element_type& y) const {
    return lattice_.meet(d_, lattice_.join(x, y));
  }

  /// e(a x1, x2) == e(x1, a x2). Throws PreconditionViolation unless a is in
  /// [d, I].
  bool check_bilinear(const element_type& x1, const element_type& x2, const element_type& a) const {
    require_acting(a);
    return pair(lattice_.meet(a, x1), x2) == pair(x1, lattice_.meet(a, x2));
  }

  /// The two-action chain e(a x1, b x2) == e(x1, ab x2) == e(x1, b(a x2)) ==
  /// e(b x1, a x2), plus the single-action identity for a and for b.
  bool check_bilinear(const element_type& x1, const element_type& x2, const element_type& a,
                      const element_type& b) const {
    require_acting(a);
    require_acting(b);
    const auto ax1 = lattice_.meet(a, x1);
    const auto bx1 = lattice_.meet(b, x1);
    const auto ax2 = lattice_.meet(a, x2);
    const auto bx2 = lattice_.meet(b, x2);
    const auto ab = lattice_.meet(a, b);
    const auto lhs = pair(ax1, bx2);
    return check_bilinear(x1, x2, a) && check_bilinear(x1, x2, b) && lhs == pair(x1, lattice_.meet(ab, x2)) &&
           lhs == pair(x1, lattice_.meet(b, ax2)) && lhs == pair(bx1, ax2);
  }

  /// d.x + d.y: what the pairing collapses to in a distributive lattice.
  element_type leak_value(const element_type& x, const element_type& y) const {
    return lattice_.join(lattice_.meet(d_, x), lattice_.meet(d_, y));
  }

 private:
  void require_acting(const element_type& a) const {
    if (!acts(a)) throw PreconditionViolation("acting element must lie in the interval [d, I]");
  }

  L lattice_;
  element_type d_;
};

/// Empirical value distribution of the pairing over sampled pairs.
template <class E>
struct NondegeneracyReport {
  std::size_t samples = 0;
  std::vector<std::pair<E, std::size_t>> histogram;  // distinct value -> count
  std::size_t bottom_count = 0;
  std::size_t d_count = 0;
  std::size_t leak_matches = 0;  // samples where pair == leak_value

  std::size_t distinct_values() const noexcept { return histogram.size(); }
  /// Every sampled value was O, or every one was d.
  bool collapsed() const noexcept { return samples > 0 && (bottom_count == samples || d_count == samples); }
  /// The pairing agreed with the public leak value on every sample.
  bool distributive_degenerate() const noexcept { return samples > 0 && leak_matches == samples; }
};

/// Samples `sample_size` pairs (x, y) from `sampler` and tabulates
/// pair(x, y). Nondegeneracy has no formal definition here; the report is
/// descriptive.
template <LatticeBackend L, class Sampler>
NondegeneracyReport<typename L::element_type> check_nondegenerate(const PairingContext<L>& ctx,
                                                                  std::size_t sample_size, Sampler&& sampler,
                                                                  SeededRng& rng) {
  NondegeneracyReport<typename L::element_type> report;
  const auto bottom = ctx.lattice().bottom();
  for (std::size_t i = 0; i < sample_size; ++i) {
    const auto x = sampler(rng);
    const auto y = sampler(rng);
    auto value = ctx.pair(x, y);
    ++report.samples;
    if (value == bottom) ++report.bottom_count;
    if (value == ctx.d()) ++report.d_count;
    if (value == ctx.leak_value(x, y)) ++report.leak_matches;
    bool found = false;
    for (auto& [v, count] : report.histogram) {
      if (v == value) {
        ++count;
        found = true;
        break;
      }
    }
    if (!found) report.histogram.emplace_back(std::move(value), 1);
  }
  return report;
}

}  // namespace modlat
