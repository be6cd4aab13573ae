#pragma once
// Linear subspaces of F_p^n in reduced row-echelon form, cosets, and annihilators.
// Coordinates follow the group's mixed-radix encoding (first coordinate most significant).

#include "hen/function.hpp"

#include <algorithm>
#include <utility>
#include <vector>

namespace hen {

using Vec = std::vector<std::uint32_t>;

namespace detail {

inline std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr) {
    const std::int64_t q = r / nr;
    t = std::exchange(nt, t - q * nt);
    r = std::exchange(nr, r - q * nr);
  }
  if (r != 1) throw DomainError("element not invertible mod p");
  return static_cast<std::uint32_t>((t % p + p) % p);
}

/// In-place RREF; returns pivot columns. Zero rows are removed.
inline std::vector<std::size_t> rref(std::vector<Vec>& rows, std::uint32_t p, std::size_t n) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] % p == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[r], rows[piv]);
    const std::uint32_t inv = inv_mod(rows[r][c], p);
    for (auto& v : rows[r]) v = static_cast<std::uint32_t>((std::uint64_t{v} * inv) % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const std::uint64_t m = rows[i][c];
      for (std::size_t j = 0; j < n; ++j)
        rows[i][j] = static_cast<std::uint32_t>((rows[i][j] + (p - (m * rows[r][j]) % p)) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace detail

class Subspace {
 public:
  /// Span of the given vectors (or element indices) in a vector-space group.
  Subspace(Group g, std::vector<Vec> generators) : group_(std::move(g)) {
    if (!group_.is_vector_space()) throw DomainError("subspaces need a vector-space group, got " + group_.spec());
    p_ = group_.prime();
    n_ = group_.dimension();
    for (auto& v : generators) {
      if (v.size() != n_) throw DomainError("generator has wrong length");
      for (auto& c : v) c %= p_;
    }
    basis_ = std::move(generators);
    pivots_ = detail::rref(basis_, p_, n_);
  }

  static Subspace span(const Group& g, std::span<const std::uint32_t> elements) {
    std::vector<Vec> gens;
    for (auto e : elements) gens.push_back(g.coords(e));
    return Subspace(g, std::move(gens));
  }
  static Subspace whole(const Group& g) {
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < g.dimension(); ++i) {
      Vec v(g.dimension(), 0);
      v[i] = 1;
      gens.push_back(v);
    }
    return Subspace(g, std::move(gens));
  }
  static Subspace zero(const Group& g) { return Subspace(g, {}); }

  const Group& group() const { return group_; }
  const std::vector<Vec>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t codim() const { return n_ - basis_.size(); }
  std::uint64_t size() const { return sat_pow(p_, static_cast<unsigned>(dim())); }

  /// x minus its projection along the pivots: zero exactly on V, and a canonical coset representative.
  Vec reduce(Vec x) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const std::uint32_t c = x[pivots_[i]];
      if (!c) continue;
      for (std::size_t j = 0; j < n_; ++j)
        x[j] = static_cast<std::uint32_t>((x[j] + std::uint64_t{p_ - c} * basis_[i][j]) % p_);
    }
    return x;
  }
  std::uint32_t representative(std::uint32_t x) const {
    const Vec r = reduce(group_.coords(x));
    return group_.index(r);
  }
  bool contains(std::uint32_t x) const {
    const Vec r = reduce(group_.coords(x));
    return std::all_of(r.begin(), r.end(), [](auto v) { return v == 0; });
  }

  /// Coordinates of x in V along the basis (x must lie in V).
  Vec coordinates(std::uint32_t x) const {
    const Vec c = group_.coords(x);
    Vec out(dim());
    for (std::size_t i = 0; i < dim(); ++i) out[i] = c[pivots_[i]];
    return out;
  }
  /// sum_i c_i b_i as an element index.
  std::uint32_t combine(std::span<const std::uint32_t> c) const {
    Vec x(n_, 0);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < n_; ++j)
        x[j] = static_cast<std::uint32_t>((x[j] + std::uint64_t{c[i]} * basis_[i][j]) % p_);
    return group_.index(x);
  }

  /// Elements of V in the order of the cell group's indexing over F_p^dim.
  std::vector<std::uint32_t> elements() const {
    std::vector<std::uint32_t> out;
    out.reserve(static_cast<std::size_t>(size()));
    Vec c(dim(), 0);
    for (std::uint64_t k = 0; k < size(); ++k) {
      std::uint64_t rest = k;
      for (std::size_t i = dim(); i-- > 0;) c[i] = static_cast<std::uint32_t>(rest % p_), rest /= p_;
      out.push_back(combine(c));
    }
    return out;
  }

  /// Canonical representatives: vectors vanishing on the pivot columns, in increasing index order.
  std::vector<std::uint32_t> coset_representatives() const {
    std::vector<std::uint32_t> out;
    out.reserve(static_cast<std::size_t>(sat_pow(p_, static_cast<unsigned>(codim()))));
    for (std::uint32_t x = 0; x < group_.order(); ++x) {
      const Vec c = group_.coords(x);
      bool free = true;
      for (auto pc : pivots_) free = free && c[pc] == 0;
      if (free) out.push_back(x);
    }
    return out;
  }

  GroupSet as_set() const {
    const auto el = elements();
    return GroupSet::from_indices(group_, std::span<const std::uint32_t>(el));
  }
  GroupSet coset(std::uint32_t x) const {
    std::vector<std::uint32_t> pts;
    for (auto v : elements()) pts.push_back(group_.add(v, x));
    return GroupSet::from_indices(group_, std::span<const std::uint32_t>(pts));
  }

  /// {x : <x, v> = 0 for every v in V}; characters chi_r with r in the annihilator are trivial on V.
  Subspace annihilator() const {
    // Null space from the RREF: one vector per free column.
    std::vector<Vec> gens;
    std::vector<char> is_pivot(n_, 0);
    for (auto pc : pivots_) is_pivot[pc] = 1;
    for (std::size_t f = 0; f < n_; ++f) {
      if (is_pivot[f]) continue;
      Vec v(n_, 0);
      v[f] = 1;
      for (std::size_t i = 0; i < basis_.size(); ++i) v[pivots_[i]] = (p_ - basis_[i][f]) % p_;
      gens.push_back(v);
    }
    return Subspace(group_, std::move(gens));
  }

  Subspace intersect(const Subspace& other) const {
    // V ∩ W = (V^perp + W^perp)^perp.
    auto a = annihilator().basis_;
    const auto b = other.annihilator().basis_;
    a.insert(a.end(), b.begin(), b.end());
    return Subspace(group_, std::move(a)).annihilator();
  }

  bool contains(const Subspace& w) const {
    for (const auto& v : w.basis_)
      if (!contains(group_.index(v))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.group_ == b.group_ && a.basis_ == b.basis_;
  }

  /// F_p^dim, the cell group used when V (or a coset of V) is treated as an ambient group.
  Group cell_group() const {
    if (dim() == 0) throw DomainError("the zero subspace has no cell group");
    return Group::vector_space(p_, static_cast<std::uint32_t>(dim()));
  }

 private:
  Group group_;
  std::uint32_t p_ = 2;
  std::size_t n_ = 0;
  std::vector<Vec> basis_;
  std::vector<std::size_t> pivots_;
};

/// Restriction of A - x to V, as a set in V's cell group.
inline GroupSet restrict_to_cell(const GroupSet& a, const Subspace& v, std::uint32_t x) {
  const Group cell = v.cell_group();
  const auto el = v.elements();
  std::vector<std::uint32_t> idx;
  for (std::uint32_t i = 0; i < el.size(); ++i)
    if (a.contains(a.group().add(el[i], x))) idx.push_back(i);
  return GroupSet::from_indices(cell, std::span<const std::uint32_t>(idx));
}

}  // namespace hen
