#include "modlat/lattice.hpp"

#include <limits>

#include "modlat/errors.hpp"

namespace modlat {

// ---- BooleanLattice ----------------------------------------------------------

BooleanLattice::BooleanLattice(std::size_t ground_size)
    : size_(ground_size), mask_(ground_size == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << ground_size) - 1) {
  if (ground_size == 0 || ground_size > 64) throw InvalidArgument("Boolean lattice ground set must have 1..64 points");
}

void BooleanLattice::require_member(Subset x) const {
  if (!contains(x)) throw LatticeMismatch("subset exceeds the ground set");
}

Subset BooleanLattice::join(Subset x, Subset y) const {
  require_member(x);
  require_member(y);
  return {x.bits | y.bits};
}

Subset BooleanLattice::meet(Subset x, Subset y) const {
  require_member(x);
  require_member(y);
  return {x.bits & y.bits};
}

bool BooleanLattice::leq(Subset x, Subset y) const {
  require_member(x);
  require_member(y);
  return (x.bits & ~y.bits) == 0;
}

// ---- FiniteLattice -----------------------------------------------------------

FiniteLattice::FiniteLattice(std::size_t size, const std::vector<std::pair<std::size_t, std::size_t>>& order)
    : size_(size), leq_(size * size, false) {
  if (size == 0) throw InvalidArgument("finite lattice must be nonempty");
  for (std::size_t i = 0; i < size; ++i) leq_[i * size + i] = true;
  for (auto [a, b] : order) {
    if (a >= size || b >= size) throw InvalidArgument("order pair out of range");
    leq_[a * size + b] = true;
  }
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      if (!leq_[i * size + k]) continue;
      for (std::size_t j = 0; j < size; ++j) {
        if (leq_[k * size + j]) leq_[i * size + j] = true;
      }
    }
  }
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = i + 1; j < size; ++j) {
      if (leq_[i * size + j] && leq_[j * size + i]) throw InvalidArgument("order relation is not antisymmetric");
    }
  }

  constexpr auto kNone = std::numeric_limits<std::size_t>::max();
  join_.assign(size * size, kNone);
  meet_.assign(size * size, kNone);
  for (std::size_t x = 0; x < size; ++x) {
    for (std::size_t y = 0; y < size; ++y) {
      for (std::size_t u = 0; u < size; ++u) {
        if (!(leq_[x * size + u] && leq_[y * size + u])) continue;
        bool least = true;
        for (std::size_t v = 0; v < size && least; ++v) {
          if (leq_[x * size + v] && leq_[y * size + v] && !leq_[u * size + v]) least = false;
        }
        if (least) join_[x * size + y] = u;
      }
      for (std::size_t l = 0; l < size; ++l) {
        if (!(leq_[l * size + x] && leq_[l * size + y])) continue;
        bool greatest = true;
        for (std::size_t v = 0; v < size && greatest; ++v) {
          if (leq_[v * size + x] && leq_[v * size + y] && !leq_[v * size + l]) greatest = false;
        }
        if (greatest) meet_[x * size + y] = l;
      }
      if (join_[x * size + y] == kNone || meet_[x * size + y] == kNone) {
        throw InvalidArgument("order relation is not a lattice");
      }
    }
  }
  bottom_ = 0;
  top_ = 0;
  for (std::size_t x = 1; x < size; ++x) {
    bottom_ = meet_[bottom_ * size + x];
    top_ = join_[top_ * size + x];
  }
}

FiniteLattice FiniteLattice::pentagon() { return FiniteLattice(5, {{0, 1}, {1, 3}, {3, 4}, {0, 2}, {2, 4}}); }

FiniteLattice FiniteLattice::diamond() {
  return FiniteLattice(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
}

FiniteLattice FiniteLattice::chain(std::size_t length) {
  std::vector<std::pair<std::size_t, std::size_t>> order;
  for (std::size_t i = 0; i + 1 < length; ++i) order.emplace_back(i, i + 1);
  return FiniteLattice(length, order);
}

void FiniteLattice::require_member(std::size_t x) const {
  if (x >= size_) throw LatticeMismatch("element index outside the finite lattice");
}

std::size_t FiniteLattice::join(std::size_t x, std::size_t y) const {
  require_member(x);
  require_member(y);
  return join_[x * size_ + y];
}

std::size_t FiniteLattice::meet(std::size_t x, std::size_t y) const {
  require_member(x);
  require_member(y);
  return meet_[x * size_ + y];
}

bool FiniteLattice::leq(std::size_t x, std::size_t y) const {
  require_member(x);
  require_member(y);
  return leq_[x * size_ + y];
}

// ---- Element -----------------------------------------------------------------

const Subspace& Element::subspace() const {
  if (!is_subspace()) throw LatticeMismatch("element is not a subspace");
  return std::get<Subspace>(value_);
}

Subset Element::subset() const {
  if (!is_subset()) throw LatticeMismatch("element is not a subset");
  return std::get<Subset>(value_);
}

const Element::Tuple& Element::components() const {
  if (!is_tuple()) throw LatticeMismatch("element is not a product tuple");
  return std::get<Tuple>(value_);
}

bool operator==(const Element& a, const Element& b) {
  if (a.value_.index() != b.value_.index()) return false;
  switch (a.value_.index()) {
    case 0:
      return std::get<0>(a.value_) == std::get<0>(b.value_);
    case 1:
      return std::get<1>(a.value_) == std::get<1>(b.value_);
    default: {
      const auto& x = std::get<2>(a.value_);
      const auto& y = std::get<2>(b.value_);
      if (x.size() != y.size()) return false;
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] == y[i])) return false;
      }
      return true;
    }
  }
}

// ---- Lattice -----------------------------------------------------------------

Lattice Lattice::subspaces(FieldSpec field, std::size_t ambient_dim) {
  return Lattice(SubspaceLattice(field, ambient_dim));
}

Lattice Lattice::boolean(std::size_t ground_size) { return Lattice(BooleanLattice(ground_size)); }

Lattice Lattice::product(std::vector<Lattice> factors) {
  if (factors.empty()) throw InvalidArgument("product lattice needs at least one factor");
  return Lattice(Product{std::move(factors)});
}

const SubspaceLattice& Lattice::as_subspace() const {
  if (!is_subspace()) throw UnsupportedBackend("lattice is not a subspace lattice");
  return std::get<SubspaceLattice>(backend_);
}

const BooleanLattice& Lattice::as_boolean() const {
  if (!is_boolean()) throw UnsupportedBackend("lattice is not a Boolean lattice");
  return std::get<BooleanLattice>(backend_);
}

const std::vector<Lattice>& Lattice::factors() const {
  if (!is_product()) throw UnsupportedBackend("lattice is not a product lattice");
  return std::get<Product>(backend_).factors;
}

bool Lattice::contains(const Element& x) const {
  if (is_subspace()) return x.is_subspace() && as_subspace().contains(x.subspace());
  if (is_boolean()) return x.is_subset() && as_boolean().contains(x.subset());
  if (!x.is_tuple()) return false;
  const auto& fs = factors();
  const auto& cs = x.components();
  if (fs.size() != cs.size()) return false;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!fs[i].contains(cs[i])) return false;
  }
  return true;
}

void Lattice::require_member(const Element& x) const {
  if (!contains(x)) throw LatticeMismatch("element does not belong to lattice " + describe());
}

namespace {

template <class Fn>
Element componentwise(const std::vector<Lattice>& fs, const Element& x, const Element& y, Fn fn) {
  Element::Tuple out;
  out.reserve(fs.size());
  for (std::size_t i = 0; i < fs.size(); ++i) out.push_back(fn(fs[i], x.components()[i], y.components()[i]));
  return out;
}

}  // namespace

Element Lattice::bottom() const {
  if (is_subspace()) return as_subspace().bottom();
  if (is_boolean()) return as_boolean().bottom();
  Element::Tuple out;
  for (const auto& f : factors()) out.push_back(f.bottom());
  return out;
}

Element Lattice::top() const {
  if (is_subspace()) return as_subspace().top();
  if (is_boolean()) return as_boolean().top();
  Element::Tuple out;
  for (const auto& f : factors()) out.push_back(f.top());
  return out;
}

Element Lattice::join(const Element& x, const Element& y) const {
  require_member(x);
  require_member(y);
  if (is_subspace()) return as_subspace().join(x.subspace(), y.subspace());
  if (is_boolean()) return as_boolean().join(x.subset(), y.subset());
  return componentwise(factors(), x, y, [](const Lattice& l, const Element& a, const Element& b) { return l.join(a, b); });
}

Element Lattice::meet(const Element& x, const Element& y) const {
  require_member(x);
  require_member(y);
  if (is_subspace()) return as_subspace().meet(x.subspace(), y.subspace());
  if (is_boolean()) return as_boolean().meet(x.subset(), y.subset());
  return componentwise(factors(), x, y, [](const Lattice& l, const Element& a, const Element& b) { return l.meet(a, b); });
}

bool Lattice::leq(const Element& x, const Element& y) const {
  require_member(x);
  require_member(y);
  if (is_subspace()) return as_subspace().leq(x.subspace(), y.subspace());
  if (is_boolean()) return as_boolean().leq(x.subset(), y.subset());
  const auto& fs = factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (!fs[i].leq(x.components()[i], y.components()[i])) return false;
  }
  return true;
}

Element Lattice::complement_of(const Element& x) const {
  if (!is_subspace()) throw UnsupportedBackend("complement_of is only constructed for subspace lattices");
  require_member(x);
  return as_subspace().complement_of(x.subspace());
}

Element Lattice::random_element(SeededRng& rng) const {
  if (is_subspace()) return as_subspace().random_element(rng);
  if (is_boolean()) return as_boolean().random_element(rng);
  Element::Tuple out;
  for (const auto& f : factors()) out.push_back(f.random_element(rng));
  return out;
}

std::string Lattice::describe() const {
  if (is_subspace()) {
    const auto& s = as_subspace();
    return "L(F_" + std::to_string(s.field().q()) + "^" + std::to_string(s.ambient_dim()) + ")";
  }
  if (is_boolean()) return "Bool(" + std::to_string(as_boolean().ground_size()) + ")";
  std::string out = "Product(";
  const auto& fs = factors();
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i > 0) out += ", ";
    out += fs[i].describe();
  }
  return out + ")";
}

}  // namespace modlat
