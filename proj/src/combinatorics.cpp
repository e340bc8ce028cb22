#include "modlat/combinatorics.hpp"

#include <algorithm>

#include "modlat/errors.hpp"

namespace modlat {

BigInteger ipow(std::uint64_t base, std::uint64_t exponent) {
  BigInteger out;
  BigInteger b(static_cast<unsigned long>(base));
  mpz_pow_ui(out.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exponent));
  return out;
}

BigInteger gaussian_coeff(std::size_t n, std::size_t k, std::uint64_t q) {
  if (k > n) return 0;
  if (q < 2) throw InvalidArgument("gaussian_coeff: q must be at least 2");
  k = std::min(k, n - k);
  // After step i the running value is [n, i+1]_q, an integer, so each
  // division is exact.
  BigInteger value = 1;
  for (std::size_t i = 0; i < k; ++i) {
    value *= ipow(q, n - i) - 1;
    const BigInteger den = ipow(q, i + 1) - 1;
    mpz_divexact(value.get_mpz_t(), value.get_mpz_t(), den.get_mpz_t());
  }
  return value;
}

BigInteger subspace_count(std::size_t n, std::uint64_t q) {
  BigInteger total = 0;
  for (std::size_t k = 0; k <= n; ++k) total += gaussian_coeff(n, k, q);
  return total;
}

BigRational RankDistribution::at(std::size_t r) const {
  return r < probabilities.size() ? probabilities[r] : BigRational(0);
}

BigRational RankDistribution::total() const {
  BigRational sum = 0;
  for (const auto& p : probabilities) sum += p;
  return sum;
}

BigRational RankDistribution::expectation() const {
  BigRational e = 0;
  for (std::size_t r = 0; r < probabilities.size(); ++r) e += BigRational(static_cast<unsigned long>(r)) * probabilities[r];
  return e;
}

namespace {

// 1 - q^{-e} for e >= 1, as an exact fraction (q^e - 1) / q^e.
BigRational one_minus_inverse_power(std::uint64_t q, std::size_t e) {
  const BigInteger p = ipow(q, e);
  BigRational out(p - 1, p);
  out.canonicalize();
  return out;
}

}  // namespace

RankDistribution rank_pmf(std::size_t m, std::size_t n, std::uint64_t q) {
  if (q < 2) throw InvalidArgument("rank_pmf: q must be at least 2");
  RankDistribution dist{m, n, q, {}};
  const std::size_t lo = std::min(m, n);
  const std::size_t hi = std::max(m, n);
  dist.probabilities.reserve(lo + 1);
  for (std::size_t r = 0; r <= lo; ++r) {
    BigRational p(BigInteger(1), ipow(q, (hi - r) * (lo - r)));
    p.canonicalize();
    for (std::size_t i = 0; i < r; ++i) {
      p *= one_minus_inverse_power(q, hi - i);
      p *= one_minus_inverse_power(q, lo - i);
      p /= one_minus_inverse_power(q, r - i);
    }
    dist.probabilities.push_back(p);
  }
  return dist;
}

BigRational full_rank_probability(std::size_t m, std::size_t n, std::uint64_t q) {
  if (m > n) return 0;
  BigRational p = 1;
  for (std::size_t i = 0; i < m; ++i) p *= one_minus_inverse_power(q, n - i);
  return p;
}

ExpectedDims expected_dims(std::size_t m1, std::size_t m2, std::size_t n, std::uint64_t q) {
  ExpectedDims e;
  e.dim1 = rank_pmf(m1, n, q).expectation();
  e.dim2 = rank_pmf(m2, n, q).expectation();
  e.union_dim = rank_pmf(m1 + m2, n, q).expectation();
  e.intersection = e.dim1 + e.dim2 - e.union_dim;
  return e;
}

BigInteger count_containing_spaces(std::size_t n, std::size_t inner_dim, std::size_t outer_dim, std::uint64_t q) {
  if (inner_dim > outer_dim || outer_dim > n) {
    throw InvalidArgument("count_containing_spaces requires inner <= outer <= n");
  }
  return gaussian_coeff(n - inner_dim, outer_dim - inner_dim, q);
}

CountingBounds counting_bounds(std::size_t n, std::uint64_t q) {
  const std::size_t half = (n + 1) / 2;
  const std::size_t three_quarters = (3 * n + 3) / 4;
  CountingBounds b;
  b.n = n;
  b.q = q;
  b.containing = count_containing_spaces(n, half, three_quarters, q);
  b.containing_bound = ipow(q, n * n / 16);
  b.total = gaussian_coeff(n, three_quarters, q);
  b.total_bound = ipow(q, 3 * n * n / 16);
  return b;
}

}  // namespace modlat
