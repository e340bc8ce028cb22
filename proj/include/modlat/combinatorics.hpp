#pragma once

// Exact counting and probability for subspaces and random matrices over F_q.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace modlat {

using BigInteger = mpz_class;
using BigRational = mpq_class;

BigInteger ipow(std::uint64_t base, std::uint64_t exponent);

/// Gaussian binomial [n k]_q: the number of k-dimensional subspaces of F_q^n.
/// Zero when k > n.
BigInteger gaussian_coeff(std::size_t n, std::size_t k, std::uint64_t q);

/// Total number of subspaces of F_q^n (all dimensions).
BigInteger subspace_count(std::size_t n, std::uint64_t q);

/// Exact law of the rank of a uniform m x n matrix over F_q.
struct RankDistribution {
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t q = 0;
  std::vector<BigRational> probabilities;  // index = rank, 0..min(m, n)

  /// Zero outside 0..min(m, n).
  BigRational at(std::size_t r) const;
  BigRational total() const;
  BigRational expectation() const;
};

/// Pr(rank = r) = q^{-(n-r)(m-r)} prod_{i<r} (1 - q^{i-n})(1 - q^{i-m}) / (1 - q^{i-r}).
/// The product form assumes m <= n; larger m is handled by transposition.
RankDistribution rank_pmf(std::size_t m, std::size_t n, std::uint64_t q);

/// prod_{i<m} (1 - q^{i-n}): probability that m uniform vectors in F_q^n are
/// independent. Zero when m > n.
BigRational full_rank_probability(std::size_t m, std::size_t n, std::uint64_t q);

struct ExpectedDims {
  BigRational dim1;
  BigRational dim2;
  BigRational union_dim;     // dimension of the join (stacked matrix)
  BigRational intersection;  // dim1 + dim2 - union_dim
};

/// Expected dimensions for spans of m1 and m2 uniform vectors of F_q^n.
ExpectedDims expected_dims(std::size_t m1, std::size_t m2, std::size_t n, std::uint64_t q);

/// Number of outer_dim-dimensional subspaces of F_q^n containing a fixed
/// inner_dim-dimensional one: [n - inner, outer - inner]_q. Throws
/// InvalidArgument unless inner <= outer <= n.
BigInteger count_containing_spaces(std::size_t n, std::size_t inner_dim, std::size_t outer_dim, std::uint64_t q);

/// The two counting lower bounds for the vector-space policy at size n:
/// superspaces of dimension ceil(3n/4) over a fixed ceil(n/2)-space number at
/// least q^{n^2/16}; all ceil(3n/4)-spaces number at least q^{3n^2/16}.
struct CountingBounds {
  std::size_t n = 0;
  std::uint64_t q = 0;
  BigInteger containing;
  BigInteger containing_bound;
  BigInteger total;
  BigInteger total_bound;

  bool containing_holds() const { return containing >= containing_bound; }
  bool total_holds() const { return total >= total_bound; }
};

CountingBounds counting_bounds(std::size_t n, std::uint64_t q);

}  // namespace modlat
