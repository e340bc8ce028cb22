#include "modlat/subspace.hpp"

#include <charconv>
#include <string>
#include <vector>

#include "modlat/errors.hpp"

namespace modlat {

Subspace Subspace::zero(FieldSpec field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim));
}

Subspace Subspace::full(FieldSpec field, std::size_t ambient_dim) {
  return Subspace(Matrix::identity(field, ambient_dim));
}

Subspace Subspace::span(const Matrix& generators) { return Subspace(rref(generators).reduced); }

Subspace Subspace::coordinate(FieldSpec field, std::size_t ambient_dim, std::initializer_list<std::size_t> axes) {
  Matrix m(field, 0, ambient_dim);
  std::vector<FieldElement> row(ambient_dim);
  for (auto axis : axes) {
    if (axis >= ambient_dim) throw InvalidArgument("coordinate axis out of range");
    std::fill(row.begin(), row.end(), 0);
    row[axis] = 1;
    m.append_row(row);
  }
  return span(m);
}

bool Subspace::contains(std::span<const FieldElement> vector) const {
  if (vector.size() != ambient_dim()) throw ShapeMismatch("vector length differs from ambient dimension");
  // Reduce the vector against the RREF basis; it lies in the span iff the
  // remainder vanishes.
  const FieldSpec& f = field();
  std::vector<FieldElement> v(vector.begin(), vector.end());
  for (auto& e : v) e %= f.q();
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    auto row = basis_.row(i);
    std::size_t pivot = 0;
    while (row[pivot] == 0) ++pivot;
    const FieldElement c = v[pivot];
    if (c == 0) continue;
    for (std::size_t j = pivot; j < v.size(); ++j) v[j] = f.sub(v[j], f.mul(c, row[j]));
  }
  for (auto e : v) {
    if (e != 0) return false;
  }
  return true;
}

std::string to_canonical_text(const Subspace& s) {
  std::string out = "q=" + std::to_string(s.field().q()) + " n=" + std::to_string(s.ambient_dim()) +
                    " k=" + std::to_string(s.dim()) + "\n";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    auto row = s.basis().row(i);
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j > 0) out.push_back(' ');
      out += std::to_string(row[j]);
    }
    out.push_back('\n');
  }
  return out;
}

namespace {

// Reads an unsigned decimal at `pos`, advancing past it.
std::uint64_t read_decimal(std::string_view text, std::size_t& pos) {
  std::uint64_t value = 0;
  const auto* first = text.data() + pos;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr == first) throw FormatError("expected decimal number in subspace text");
  pos += static_cast<std::size_t>(ptr - first);
  return value;
}

void expect(std::string_view text, std::size_t& pos, std::string_view literal) {
  if (text.substr(pos, literal.size()) != literal) {
    throw FormatError("subspace text: expected '" + std::string(literal) + "'");
  }
  pos += literal.size();
}

}  // namespace

Subspace parse_canonical_text(std::string_view text) {
  std::size_t pos = 0;
  expect(text, pos, "q=");
  const auto q = read_decimal(text, pos);
  expect(text, pos, " n=");
  const auto n = read_decimal(text, pos);
  expect(text, pos, " k=");
  const auto k = read_decimal(text, pos);
  expect(text, pos, "\n");
  if (q >= (std::uint64_t{1} << 31) || !is_prime(static_cast<std::uint32_t>(q))) {
    throw FormatError("subspace text: modulus is not a supported prime");
  }
  if (k > n) throw FormatError("subspace text: k exceeds n");
  const FieldSpec field(static_cast<std::uint32_t>(q));

  Matrix m(field, 0, n);
  std::vector<FieldElement> row(n);
  for (std::uint64_t i = 0; i < k; ++i) {
    for (std::uint64_t j = 0; j < n; ++j) {
      if (j > 0) expect(text, pos, " ");
      const auto v = read_decimal(text, pos);
      if (v >= q) throw FormatError("subspace text: entry out of range");
      row[j] = static_cast<FieldElement>(v);
    }
    expect(text, pos, "\n");
    m.append_row(row);
  }
  if (pos != text.size()) throw FormatError("subspace text: trailing data");

  Subspace s = Subspace::span(m);
  if (s.basis() != m) throw FormatError("subspace text: basis is not in canonical RREF");
  if (to_canonical_text(s) != text) throw FormatError("subspace text: non-canonical encoding");
  return s;
}

SubspaceLattice::SubspaceLattice(FieldSpec field, std::size_t ambient_dim) : field_(field), n_(ambient_dim) {}

void SubspaceLattice::require_member(const Subspace& x) const {
  if (!contains(x)) throw LatticeMismatch("subspace does not belong to this lattice");
}

bool SubspaceLattice::contains(const Subspace& x) const noexcept {
  return x.field() == field_ && x.ambient_dim() == n_;
}

Subspace SubspaceLattice::join(const Subspace& x, const Subspace& y) const {
  require_member(x);
  require_member(y);
  return Subspace::span(stack(x.basis(), y.basis()));
}

Subspace SubspaceLattice::meet(const Subspace& x, const Subspace& y) const {
  require_member(x);
  require_member(y);
  if (x.is_zero() || y.is_zero()) return bottom();
  // Zassenhaus: rows [x | x] and [y | 0]; after reduction, rows whose left half
  // vanishes carry a basis of the intersection in their right half.
  Matrix block(field_, 0, 2 * n_);
  std::vector<FieldElement> row(2 * n_);
  for (std::size_t i = 0; i < x.dim(); ++i) {
    auto r = x.basis().row(i);
    std::copy(r.begin(), r.end(), row.begin());
    std::copy(r.begin(), r.end(), row.begin() + static_cast<std::ptrdiff_t>(n_));
    block.append_row(row);
  }
  for (std::size_t i = 0; i < y.dim(); ++i) {
    auto r = y.basis().row(i);
    std::copy(r.begin(), r.end(), row.begin());
    std::fill(row.begin() + static_cast<std::ptrdiff_t>(n_), row.end(), 0);
    block.append_row(row);
  }
  const auto reduced = rref(block);
  Matrix inter(field_, 0, n_);
  for (std::size_t i = 0; i < reduced.rank; ++i) {
    if (reduced.pivots[i] < n_) continue;
    inter.append_row(reduced.reduced.row(i).subspan(n_));
  }
  return Subspace::span(inter);
}

bool SubspaceLattice::leq(const Subspace& x, const Subspace& y) const {
  require_member(x);
  require_member(y);
  if (x.dim() > y.dim()) return false;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (!y.contains(x.basis().row(i))) return false;
  }
  return true;
}

Subspace SubspaceLattice::complement_of(const Subspace& x) const {
  require_member(x);
  Matrix current = x.basis();
  Matrix added(field_, 0, n_);
  std::size_t current_rank = x.dim();
  std::vector<FieldElement> e(n_);
  for (std::size_t i = 0; i < n_ && current_rank < n_; ++i) {
    std::fill(e.begin(), e.end(), 0);
    e[i] = 1;
    Matrix trial = current;
    trial.append_row(e);
    const std::size_t r = rank(trial);
    if (r > current_rank) {
      current = std::move(trial);
      current_rank = r;
      added.append_row(e);
    }
  }
  return Subspace::span(added);
}

Subspace SubspaceLattice::random_subspace(std::size_t m, SeededRng& rng) const {
  return Subspace::span(random_matrix(m, n_, field_, rng));
}

Subspace SubspaceLattice::random_subspace_of_dim(std::size_t k, SeededRng& rng) const {
  if (k > n_) throw InvalidArgument("requested dimension exceeds ambient dimension");
  for (;;) {
    Subspace s = random_subspace(k, rng);
    if (s.dim() == k) return s;
  }
}

Subspace SubspaceLattice::random_superspace(const Subspace& base, std::size_t m, SeededRng& rng) const {
  require_member(base);
  return Subspace::span(stack(base.basis(), random_matrix(m, n_, field_, rng)));
}

Subspace SubspaceLattice::random_superspace_of_dim(const Subspace& base, std::size_t k, SeededRng& rng) const {
  require_member(base);
  if (k > n_ || k < base.dim()) throw InvalidArgument("superspace dimension out of range");
  for (;;) {
    Subspace s = random_superspace(base, k - base.dim(), rng);
    if (s.dim() == k) return s;
  }
}

Subspace SubspaceLattice::random_subspace_within(const Subspace& outer, std::size_t m, SeededRng& rng) const {
  require_member(outer);
  if (outer.is_zero()) return bottom();
  const Matrix coeffs = random_matrix(m, outer.dim(), field_, rng);
  return Subspace::span(multiply(coeffs, outer.basis()));
}

Subspace SubspaceLattice::random_element(SeededRng& rng) const {
  const auto m = rng.uniform_below(static_cast<std::uint32_t>(n_ + 1));
  return random_subspace(m, rng);
}

}  // namespace modlat
