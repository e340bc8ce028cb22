#pragma once

// Exhaustive enumeration of subspaces and of intervals [base, I]. Every entry
// point checks the exact (Gaussian-coefficient) element count against a
// budget before visiting anything.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

#include "modlat/combinatorics.hpp"
#include "modlat/subspace.hpp"

namespace modlat {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// kDefaultEnumerationBudget, or the value of MODLAT_ENUM_BUDGET when set to
/// a positive integer.
std::uint64_t default_enumeration_budget();

/// Visits the canonical basis (RREF, k rows) of every k-dimensional subspace
/// of F_q^m, by pivot pattern and then by free entries.
void for_each_rref(const FieldSpec& field, std::size_t m, std::size_t k, const std::function<void(const Matrix&)>& visit);

/// Exact number of elements of [base, I] in L(F_q^n), optionally restricted
/// to one dimension.
BigInteger interval_size(const SubspaceLattice& lattice, const Subspace& base, std::optional<std::size_t> dim = {});

/// Visits every subspace containing `base` (of dimension `dim` when given).
/// Works in the quotient F_q^n / base: each subspace of a fixed complement of
/// `base` is lifted by adding `base`. Throws BudgetExceeded if the interval
/// is larger than `budget`.
void for_each_superspace(const SubspaceLattice& lattice, const Subspace& base, std::optional<std::size_t> dim,
                         std::uint64_t budget, const std::function<void(const Subspace&)>& visit);

/// Every subspace of F_q^n, under the same budget rule.
void for_each_subspace(const SubspaceLattice& lattice, std::uint64_t budget,
                       const std::function<void(const Subspace&)>& visit);

}  // namespace modlat
