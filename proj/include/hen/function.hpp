#pragma once
// Dense functions, subsets and tensors on a finite abelian group.

#include "hen/config.hpp"
#include "hen/errors.hpp"
#include "hen/group.hpp"
#include "hen/numeric.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hen {

template <typename T>
class DenseFunction {
 public:
  using value_type = T;

  DenseFunction() = default;
  explicit DenseFunction(Group g) : group_(std::move(g)), values_(group_.size(), T(0)) {}
  DenseFunction(Group g, std::vector<T> values) : group_(std::move(g)), values_(std::move(values)) {
    if (values_.size() != group_.size()) throw GroupMismatch("function length does not match group order");
  }

  static DenseFunction constant(const Group& g, const T& c) { return DenseFunction(g, std::vector<T>(g.size(), c)); }
  static DenseFunction delta(const Group& g, std::uint32_t at) {
    DenseFunction f(g);
    f.values_.at(at) = T(1);
    return f;
  }

  const Group& group() const { return group_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<T>& values() const { return values_; }
  std::vector<T>& values() { return values_; }
  const T& operator[](std::uint32_t x) const { return values_[x]; }
  T& operator[](std::uint32_t x) { return values_[x]; }
  const T& operator()(Element x) const { return values_[x.index]; }

  T sum() const {
    T s(0);
    for (const auto& v : values_) s += v;
    return s;
  }

  bool is_zero() const {
    for (const auto& v : values_)
      if (v != T(0)) return false;
    return true;
  }

  /// True when every value is 0 or 1.
  bool is_indicator() const {
    for (const auto& v : values_)
      if (v != T(0) && v != T(1)) return false;
    return true;
  }

  /// x -> f(x + t).
  DenseFunction shifted(std::uint32_t t) const {
    DenseFunction out(group_);
    for (std::uint32_t x = 0; x < group_.order(); ++x) out.values_[x] = values_[group_.add(x, t)];
    return out;
  }

  DenseFunction& operator+=(const DenseFunction& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
    return *this;
  }
  DenseFunction& operator-=(const DenseFunction& o) {
    check_same(o);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
    return *this;
  }
  DenseFunction& operator*=(const T& c) {
    for (auto& v : values_) v *= c;
    return *this;
  }
  friend DenseFunction operator+(DenseFunction a, const DenseFunction& b) { return a += b; }
  friend DenseFunction operator-(DenseFunction a, const DenseFunction& b) { return a -= b; }
  friend DenseFunction operator*(DenseFunction a, const T& c) { return a *= c; }
  friend DenseFunction operator*(const T& c, DenseFunction a) { return a *= c; }
  friend bool operator==(const DenseFunction& a, const DenseFunction& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

  void check_same(const DenseFunction& o) const {
    if (!(group_ == o.group_)) throw GroupMismatch("functions live on different groups");
  }

 private:
  Group group_;
  std::vector<T> values_;
};

using ExactFunction = DenseFunction<Rational>;
using RealFunction = DenseFunction<double>;

template <typename T>
RealFunction to_real(const DenseFunction<T>& f) {
  std::vector<double> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = to_double(f.values()[i]);
  return RealFunction(f.group(), std::move(v));
}

inline ExactFunction to_exact(const RealFunction& f) {
  std::vector<Rational> v(f.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = exact_from_double(f.values()[i]);
  return ExactFunction(f.group(), std::move(v));
}

inline ExactFunction from_integers(const Group& g, std::span<const std::int64_t> values) {
  std::vector<Rational> v(values.begin(), values.end());
  return ExactFunction(g, std::move(v));
}

/// A subset of G stored as a bit-vector, with its element list cached.
class GroupSet {
 public:
  GroupSet() = default;
  explicit GroupSet(Group g) : group_(std::move(g)), words_((group_.size() + 63) / 64, 0) {}

  static GroupSet from_indices(const Group& g, std::span<const std::uint32_t> idx) {
    GroupSet s(g);
    for (auto i : idx) {
      if (i >= g.order()) throw DomainError("element index " + std::to_string(i) + " out of range");
      s.words_[i / 64] |= std::uint64_t{1} << (i % 64);
    }
    s.refresh();
    return s;
  }
  static GroupSet from_indices(const Group& g, std::initializer_list<std::uint32_t> idx) {
    return from_indices(g, std::span<const std::uint32_t>(idx.begin(), idx.size()));
  }
  static GroupSet from_words(const Group& g, std::vector<std::uint64_t> words) {
    GroupSet s(g);
    s.words_ = std::move(words);
    s.words_.resize((g.size() + 63) / 64, 0);
    if (g.size() % 64) s.words_.back() &= (std::uint64_t{1} << (g.size() % 64)) - 1;
    s.refresh();
    return s;
  }
  static GroupSet all(const Group& g) {
    GroupSet s(g);
    for (auto& w : s.words_) w = ~std::uint64_t{0};
    if (g.size() % 64) s.words_.back() = (std::uint64_t{1} << (g.size() % 64)) - 1;
    s.refresh();
    return s;
  }
  static GroupSet empty(const Group& g) { return GroupSet(g); }
  template <typename Pred>
  static GroupSet where(const Group& g, Pred&& pred) {
    GroupSet s(g);
    for (std::uint32_t x = 0; x < g.order(); ++x)
      if (pred(x)) s.words_[x / 64] |= std::uint64_t{1} << (x % 64);
    s.refresh();
    return s;
  }

  const Group& group() const { return group_; }
  bool contains(std::uint32_t x) const { return (words_[x / 64] >> (x % 64)) & 1U; }
  bool contains(Element x) const { return contains(x.index); }
  std::size_t cardinality() const { return elements_.size(); }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  Rational density() const { return Rational(Integer(elements_.size()), Integer(group_.size())); }
  double density_real() const { return static_cast<double>(elements_.size()) / static_cast<double>(group_.size()); }
  const std::vector<std::uint32_t>& elements() const { return elements_; }
  const std::vector<std::uint64_t>& words() const { return words_; }

  /// A - t = {u : u + t in A}.
  GroupSet minus(std::uint32_t t) const {
    GroupSet s(group_);
    for (auto a : elements_) {
      const std::uint32_t u = group_.sub(a, t);
      s.words_[u / 64] |= std::uint64_t{1} << (u % 64);
    }
    s.refresh();
    return s;
  }
  /// A + t.
  GroupSet plus(std::uint32_t t) const { return minus(group_.neg(t)); }

  GroupSet operator&(const GroupSet& o) const { return combine(o, [](auto a, auto b) { return a & b; }); }
  GroupSet operator|(const GroupSet& o) const { return combine(o, [](auto a, auto b) { return a | b; }); }
  GroupSet operator-(const GroupSet& o) const { return combine(o, [](auto a, auto b) { return a & ~b; }); }
  GroupSet complement() const { return all(group_) - *this; }

  friend bool operator==(const GroupSet& a, const GroupSet& b) {
    return a.group_ == b.group_ && a.words_ == b.words_;
  }

  template <typename T = Rational>
  DenseFunction<T> indicator() const {
    DenseFunction<T> f(group_);
    for (auto a : elements_) f[a] = T(1);
    return f;
  }

 private:
  template <typename Op>
  GroupSet combine(const GroupSet& o, Op op) const {
    if (!(group_ == o.group_)) throw GroupMismatch("sets live on different groups");
    GroupSet s(group_);
    for (std::size_t i = 0; i < words_.size(); ++i) s.words_[i] = op(words_[i], o.words_[i]);
    s.refresh();
    return s;
  }

  void refresh() {
    elements_.clear();
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        elements_.push_back(static_cast<std::uint32_t>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  Group group_;
  std::vector<std::uint64_t> words_;
  std::vector<std::uint32_t> elements_;
};

/// f_A(x) = A(x) - |A|/N.
template <typename T = Rational>
DenseFunction<T> balanced(const GroupSet& a) {
  DenseFunction<T> f(a.group());
  T delta;
  if constexpr (is_exact_v<T>) delta = a.density();
  else delta = a.density_real();
  for (auto& v : f.values()) v = -delta;
  for (auto x : a.elements()) f[x] += T(1);
  return f;
}

/// mu_A(x) = A(x)/|A|.
template <typename T = Rational>
DenseFunction<T> mu(const GroupSet& a) {
  if (a.empty()) throw DomainError("mu of the empty set");
  DenseFunction<T> f(a.group());
  T w;
  if constexpr (is_exact_v<T>) w = Rational(1, static_cast<long long>(a.size()));
  else w = 1.0 / static_cast<double>(a.size());
  for (auto x : a.elements()) f[x] = w;
  return f;
}

/// A map G^l -> T stored row-major: flat index = ((x_1 * N + x_2) * N + ...) + x_l.
template <typename T>
class TensorFunction {
 public:
  TensorFunction() = default;
  TensorFunction(Group g, unsigned arity) : group_(std::move(g)), arity_(arity) {
    if (arity_ < 1) throw DomainError("tensor arity must be >= 1");
    const std::uint64_t entries = sat_pow(group_.size(), arity_);
    if (entries > limits().tensor_entries)
      throw BudgetError("tensor of " + std::to_string(group_.size()) + "^" + std::to_string(arity_) +
                        " entries exceeds the tensor budget of " + std::to_string(limits().tensor_entries));
    values_.assign(static_cast<std::size_t>(entries), T(0));
  }

  const Group& group() const { return group_; }
  unsigned arity() const { return arity_; }
  std::size_t size() const { return values_.size(); }
  const std::vector<T>& values() const { return values_; }
  std::vector<T>& values() { return values_; }
  const T& operator[](std::size_t flat) const { return values_[flat]; }
  T& operator[](std::size_t flat) { return values_[flat]; }

  std::size_t flat(std::span<const std::uint32_t> x) const {
    if (x.size() != arity_) throw DomainError("tensor index has wrong arity");
    std::size_t idx = 0;
    for (auto xi : x) idx = idx * group_.size() + xi;
    return idx;
  }
  const T& at(std::span<const std::uint32_t> x) const { return values_[flat(x)]; }
  const T& at(std::initializer_list<std::uint32_t> x) const {
    return at(std::span<const std::uint32_t>(x.begin(), x.size()));
  }

  std::vector<std::uint32_t> unflat(std::size_t idx) const {
    std::vector<std::uint32_t> x(arity_);
    for (unsigned i = arity_; i-- > 0;) {
      x[i] = static_cast<std::uint32_t>(idx % group_.size());
      idx /= group_.size();
    }
    return x;
  }

  friend bool operator==(const TensorFunction& a, const TensorFunction& b) {
    return a.group_ == b.group_ && a.arity_ == b.arity_ && a.values_ == b.values_;
  }

 private:
  Group group_;
  unsigned arity_ = 1;
  std::vector<T> values_;
};

}  // namespace hen
