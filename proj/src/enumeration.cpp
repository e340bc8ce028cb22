#include "modlat/enumeration.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <vector>

#include "modlat/errors.hpp"

namespace modlat {

std::uint64_t default_enumeration_budget() {
  if (const char* env = std::getenv("MODLAT_ENUM_BUDGET")) {
    std::uint64_t value = 0;
    const auto* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  return kDefaultEnumerationBudget;
}

void for_each_rref(const FieldSpec& field, std::size_t m, std::size_t k,
                   const std::function<void(const Matrix&)>& visit) {
  if (k > m) return;
  if (k == 0) {
    visit(Matrix(field, 0, m));
    return;
  }
  // Pivot columns as an increasing k-combination of 0..m-1.
  std::vector<std::size_t> pivots(k);
  for (std::size_t i = 0; i < k; ++i) pivots[i] = i;
  for (;;) {
    std::vector<bool> is_pivot(m, false);
    for (auto p : pivots) is_pivot[p] = true;
    // Free slots: row i, column j > pivot_i, j not a pivot column.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = pivots[i] + 1; j < m; ++j) {
        if (!is_pivot[j]) slots.emplace_back(i, j);
      }
    }
    Matrix basis(field, k, m);
    for (std::size_t i = 0; i < k; ++i) basis.set(i, pivots[i], 1);
    std::vector<FieldElement> digits(slots.size(), 0);
    for (;;) {
      visit(basis);
      std::size_t pos = 0;
      while (pos < digits.size()) {
        digits[pos] = digits[pos] + 1 == field.q() ? 0 : digits[pos] + 1;
        basis.set(slots[pos].first, slots[pos].second, digits[pos]);
        if (digits[pos] != 0) break;
        ++pos;
      }
      if (pos == digits.size()) break;
    }
    // Next combination.
    std::size_t i = k;
    while (i > 0 && pivots[i - 1] == m - k + (i - 1)) --i;
    if (i == 0) return;
    ++pivots[i - 1];
    for (std::size_t j = i; j < k; ++j) pivots[j] = pivots[j - 1] + 1;
  }
}

BigInteger interval_size(const SubspaceLattice& lattice, const Subspace& base, std::optional<std::size_t> dim) {
  if (!lattice.contains(base)) throw LatticeMismatch("interval base does not belong to the lattice");
  const std::size_t quotient = lattice.ambient_dim() - base.dim();
  const auto q = lattice.field().q();
  if (dim) {
    if (*dim < base.dim() || *dim > lattice.ambient_dim()) return 0;
    return gaussian_coeff(quotient, *dim - base.dim(), q);
  }
  return subspace_count(quotient, q);
}

namespace {

void check_budget(const BigInteger& count, std::uint64_t budget) {
  if (count > BigInteger(static_cast<unsigned long>(budget))) {
    throw BudgetExceeded("enumeration of " + count.get_str() + " elements exceeds budget " + std::to_string(budget),
                         count.get_str());
  }
}

}  // namespace

void for_each_superspace(const SubspaceLattice& lattice, const Subspace& base, std::optional<std::size_t> dim,
                         std::uint64_t budget, const std::function<void(const Subspace&)>& visit) {
  check_budget(interval_size(lattice, base, dim), budget);
  const Matrix complement = lattice.complement_of(base).basis();
  const std::size_t quotient = complement.rows();
  std::size_t lo = 0, hi = quotient;
  if (dim) {
    if (*dim < base.dim() || *dim > lattice.ambient_dim()) return;
    lo = hi = *dim - base.dim();
  }
  for (std::size_t k = lo; k <= hi; ++k) {
    for_each_rref(lattice.field(), quotient, k, [&](const Matrix& coords) {
      visit(Subspace::span(stack(base.basis(), multiply(coords, complement))));
    });
  }
}

void for_each_subspace(const SubspaceLattice& lattice, std::uint64_t budget,
                       const std::function<void(const Subspace&)>& visit) {
  for_each_superspace(lattice, lattice.bottom(), std::nullopt, budget, visit);
}

}  // namespace modlat
