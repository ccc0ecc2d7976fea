#pragma once

// Signed structure constants e_i x e_j = L_ijk e_k for a pairing scheme, and
// the bilinear product they define.
//
// Orientation is not part of a scheme. It is derived from (pair, axis) alone:
// the product e_first x e_second = +e_axis is the ordering for which
// (first, second, axis) is an even permutation of the ascending triple.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "vcp/scheme.hpp"

namespace vcp {

struct OrderedPair {
  Index first = 0;
  Index second = 0;

  friend constexpr bool operator==(const OrderedPair&, const OrderedPair&) = default;
};

/// Orders p so that e_first x e_second = +e_axis. Throws AxisCollision if
/// the axis is a member of the pair.
OrderedPair orient_pair(IndexPair p, Index axis);

/// Target axis and sign of one basis product.
struct TensorEntry {
  Index axis = 0;
  int sign = 0;

  friend constexpr bool operator==(const TensorEntry&, const TensorEntry&) = default;
};

/// Sparse generalized Levi-Civita symbol: one (axis, sign) slot per ordered
/// pair of distinct indices. The cubic tensor is never materialized.
class StructureTensor {
 public:
  const Dimension& dim() const noexcept { return dim_; }
  int n() const noexcept { return dim_.n(); }

  /// (k, sign) with e_i x e_j = sign * e_k, or nullopt when i == j.
  std::optional<TensorEntry> lookup(Index i, Index j) const;

  /// L_ijk in {-1, 0, +1}.
  int sign(Index i, Index j, Index k) const;

  /// Positively oriented pairs targeting the given axis, i.e. those (i, j)
  /// with e_i x e_j = +e_axis.
  std::span<const OrderedPair> oriented_pairs(Index axis) const;

 private:
  StructureTensor(Dimension dim, std::vector<TensorEntry> table,
                  std::vector<std::vector<OrderedPair>> by_axis)
      : dim_(dim), table_(std::move(table)), by_axis_(std::move(by_axis)) {}
  friend StructureTensor build_tensor(const Scheme& s);

  // Unchecked access, indices already validated.
  const TensorEntry& at(Index i, Index j) const noexcept {
    return table_[static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(dim_.n()) +
                  static_cast<std::size_t>(j - 1)];
  }

  Dimension dim_;
  std::vector<TensorEntry> table_;  // n*n, diagonal holds axis 0
  std::vector<std::vector<OrderedPair>> by_axis_;
};

StructureTensor build_tensor(const Scheme& s);

/// Dense vector of n components, addressed 1-based via component().
/// T is std::int64_t for exact evaluation or double otherwise.
template <typename T>
class Vector {
 public:
  using value_type = T;

  Vector() = default;
  explicit Vector(std::vector<T> components) : c_(std::move(components)) {}
  Vector(std::initializer_list<T> components) : c_(components) {}

  static Vector zero(int n) { return Vector(std::vector<T>(static_cast<std::size_t>(n), T{})); }
  static Vector basis(int n, Index i) {
    if (i < 1 || i > n) {
      throw Error(ErrorCode::IndexOutOfRange, "basis index " + std::to_string(i));
    }
    auto v = zero(n);
    v.c_[static_cast<std::size_t>(i - 1)] = T{1};
    return v;
  }

  int size() const noexcept { return static_cast<int>(c_.size()); }

  const T& component(Index i) const {
    check(i);
    return c_[static_cast<std::size_t>(i - 1)];
  }
  T& component(Index i) {
    check(i);
    return c_[static_cast<std::size_t>(i - 1)];
  }

  std::span<const T> components() const noexcept { return c_; }

  Vector& operator+=(const Vector& o) {
    same_size(o);
    for (std::size_t t = 0; t < c_.size(); ++t) c_[t] += o.c_[t];
    return *this;
  }
  Vector& operator-=(const Vector& o) {
    same_size(o);
    for (std::size_t t = 0; t < c_.size(); ++t) c_[t] -= o.c_[t];
    return *this;
  }
  Vector& operator*=(T s) {
    for (auto& x : c_) x *= s;
    return *this;
  }
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(T s, Vector a) { return a *= s; }
  friend Vector operator-(Vector a) { return a *= T{-1}; }

  friend bool operator==(const Vector&, const Vector&) = default;

 private:
  void check(Index i) const {
    if (i < 1 || i > size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "component " + std::to_string(i) + " of a " + std::to_string(size()) + "-vector");
    }
  }
  void same_size(const Vector& o) const {
    if (o.size() != size()) {
      throw Error(ErrorCode::DimensionMismatch,
                  std::to_string(size()) + " vs " + std::to_string(o.size()) + " components");
    }
  }

  std::vector<T> c_;
};

using IntVector = Vector<std::int64_t>;
using RealVector = Vector<double>;

template <typename T>
T dot(const Vector<T>& a, const Vector<T>& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(a.size()) + " vs " + std::to_string(b.size()) + " components");
  }
  T s{};
  const auto x = a.components();
  const auto y = b.components();
  for (std::size_t t = 0; t < x.size(); ++t) s += x[t] * y[t];
  return s;
}

template <typename T>
T norm2(const Vector<T>& a) {
  return dot(a, a);
}

namespace detail {

inline void require_dim(int n, int size, const char* what) {
  if (size != n) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has " + std::to_string(size) +
                                                  " components, tensor dimension is " +
                                                  std::to_string(n));
  }
}

}  // namespace detail

/// Generalized cross product: (A x B)_k = sum over ordered (i, j) of
/// a_i b_j L_ijk.
template <typename T>
Vector<T> cross(const StructureTensor& L, const Vector<T>& a, const Vector<T>& b) {
  const int n = L.n();
  detail::require_dim(n, a.size(), "A");
  detail::require_dim(n, b.size(), "B");
  auto out = Vector<T>::zero(n);
  for (Index i = 1; i <= n; ++i) {
    for (Index j = 1; j <= n; ++j) {
      if (const auto e = L.lookup(i, j)) {
        out.component(e->axis) += static_cast<T>(e->sign) * a.component(i) * b.component(j);
      }
    }
  }
  return out;
}

/// The 2x2 minor a_alpha b_beta - a_beta b_alpha.
template <typename T>
T pair_determinant(const Vector<T>& a, const Vector<T>& b, Index alpha, Index beta) {
  return a.component(alpha) * b.component(beta) - a.component(beta) * b.component(alpha);
}

}  // namespace vcp
