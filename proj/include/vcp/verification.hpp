#pragma once

// Axiom checks for a structure tensor.
//
// X_AB is defined as the magnitude defect |A x B|^2 - |A|^2 |B|^2 + (A.B)^2.
// It is computed three independent ways:
//   direct  - from the product itself;
//   tensor  - by contracting chi = T + dd - dd with a (x) b (x) a (x) b, where
//             T_ij^lm = sum_k L_ijk L_lmk;
//   pairs   - as twice the sum, per axis, of products of distinct oriented
//             2x2 minors (the squared minors cancel by Lagrange's identity).
// On integer inputs all three agree exactly.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>

#include "vcp/scheme.hpp"
#include "vcp/tensor.hpp"

namespace vcp {

template <typename T>
struct DefectReport {
  T dot_with_a{};
  T dot_with_b{};
  T xab_direct{};
  T xab_tensor{};
  T xab_pairs{};
};

/// ((A x B).A, (A x B).B). Both vanish when the orthogonality axiom holds.
template <typename T>
std::pair<T, T> orthogonality_defect(const StructureTensor& L, const Vector<T>& a, const Vector<T>& b) {
  const auto c = cross(L, a, b);
  return {dot(c, a), dot(c, b)};
}

template <typename T>
T xab_direct(const StructureTensor& L, const Vector<T>& a, const Vector<T>& b) {
  const auto c = cross(L, a, b);
  const T ab = dot(a, b);
  return norm2(c) - norm2(a) * norm2(b) + ab * ab;
}

template <typename T>
T xab_tensor(const StructureTensor& L, const Vector<T>& a, const Vector<T>& b) {
  const int n = L.n();
  detail::require_dim(n, a.size(), "A");
  detail::require_dim(n, b.size(), "B");
  T total{};
  for (Index i = 1; i <= n; ++i) {
    for (Index j = 1; j <= n; ++j) {
      const auto eij = L.lookup(i, j);
      for (Index l = 1; l <= n; ++l) {
        for (Index m = 1; m <= n; ++m) {
          int chi = 0;
          if (eij) {
            const auto elm = L.lookup(l, m);
            if (elm && elm->axis == eij->axis) chi += eij->sign * elm->sign;
          }
          if (i == m && j == l) chi += 1;
          if (j == m && i == l) chi -= 1;
          if (chi != 0) {
            total += static_cast<T>(chi) * a.component(i) * b.component(j) * a.component(l) *
                     b.component(m);
          }
        }
      }
    }
  }
  return total;
}

/// Throws SchemeTensorMismatch unless L is exactly build_tensor(s).
void require_tensor_of(const StructureTensor& L, const Scheme& s);

template <typename T>
T xab_pairs(const StructureTensor& L, const Vector<T>& a, const Vector<T>& b, const Scheme& s) {
  require_tensor_of(L, s);
  detail::require_dim(L.n(), a.size(), "A");
  detail::require_dim(L.n(), b.size(), "B");
  T total{};
  for (const auto& m : s.matchings()) {
    const auto& pairs = m.pairs;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      const auto op = orient_pair(pairs[p], m.axis);
      const T dp = pair_determinant(a, b, op.first, op.second);
      for (std::size_t q = p + 1; q < pairs.size(); ++q) {
        const auto oq = orient_pair(pairs[q], m.axis);
        total += dp * pair_determinant(a, b, oq.first, oq.second);
      }
    }
  }
  return T{2} * total;
}

template <typename T>
DefectReport<T> defect_report(const StructureTensor& L, const Scheme& s, const Vector<T>& a,
                              const Vector<T>& b) {
  const auto [da, db] = orthogonality_defect(L, a, b);
  return DefectReport<T>{da, db, xab_direct(L, a, b), xab_tensor(L, a, b), xab_pairs(L, a, b, s)};
}

/// True iff (A x B).A and (A x B).B vanish as polynomials, i.e.
/// L_ijk = -L_kji and L_ijk = -L_ikj for all index triples.
bool orthogonality_identically_zero(const StructureTensor& L);

/// Monomial a_i a_l b_j b_m with i <= l and j <= m, stored as {i, l, j, m}.
using XabMonomial = std::array<Index, 4>;

/// Nonzero integer coefficients of X_AB as a polynomial in the components of
/// A and B, obtained by exact expansion.
std::map<XabMonomial, std::int64_t> xab_polynomial(const StructureTensor& L);

bool xab_identically_zero(const StructureTensor& L);

/// Integer vectors with nonzero X_AB.
struct Witness {
  IntVector a;
  IntVector b;
  std::int64_t xab = 0;

  friend bool operator==(const Witness&, const Witness&) = default;
};

/// Seeded search over vectors with entries in -2..2. Returns the first pair
/// with nonzero X_AB, or nullopt if none is found within max_attempts.
/// The result depends only on (L, seed, stream).
std::optional<Witness> find_xab_witness(const StructureTensor& L, std::uint64_t seed,
                                        std::uint64_t stream = 0, std::size_t max_attempts = 100000);

}  // namespace vcp
