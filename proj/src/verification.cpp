#include "vcp/verification.hpp"

#include <algorithm>
#include <random>

namespace vcp {

void require_tensor_of(const StructureTensor& L, const Scheme& s) {
  if (L.dim() != s.dim()) {
    throw Error(ErrorCode::SchemeTensorMismatch, "tensor is " + std::to_string(L.n()) +
                                                     "-dimensional, scheme is " +
                                                     std::to_string(s.n()) + "-dimensional");
  }
  for (const auto& m : s.matchings()) {
    for (const auto& p : m.pairs) {
      const auto o = orient_pair(p, m.axis);
      const auto e = L.lookup(o.first, o.second);
      if (!e || e->axis != m.axis || e->sign != +1) {
        throw Error(ErrorCode::SchemeTensorMismatch,
                    "tensor disagrees with scheme on pair " + to_string(p) + " (axis " +
                        std::to_string(m.axis) + ")");
      }
    }
  }
}

bool orthogonality_identically_zero(const StructureTensor& L) {
  const int n = L.n();
  for (Index i = 1; i <= n; ++i) {
    for (Index j = 1; j <= n; ++j) {
      for (Index k = 1; k <= n; ++k) {
        const int s = L.sign(i, j, k);
        if (s != -L.sign(k, j, i) || s != -L.sign(i, k, j)) return false;
      }
    }
  }
  return true;
}

std::map<XabMonomial, std::int64_t> xab_polynomial(const StructureTensor& L) {
  const int n = L.n();
  std::map<XabMonomial, std::int64_t> coeff;
  auto add = [&](Index i, Index l, Index j, Index m, std::int64_t c) {
    coeff[XabMonomial{std::min(i, l), std::max(i, l), std::min(j, m), std::max(j, m)}] += c;
  };

  // |A x B|^2 = sum_k (sum_{(i,j) -> k} s_ij a_i b_j)^2
  for (Index k = 1; k <= n; ++k) {
    std::vector<std::pair<OrderedPair, int>> terms;
    for (const auto& o : L.oriented_pairs(k)) {
      terms.push_back({o, +1});
      terms.push_back({OrderedPair{o.second, o.first}, -1});
    }
    for (const auto& [e, se] : terms) {
      for (const auto& [f, sf] : terms) add(e.first, f.first, e.second, f.second, se * sf);
    }
  }
  // -|A|^2 |B|^2
  for (Index i = 1; i <= n; ++i) {
    for (Index j = 1; j <= n; ++j) add(i, i, j, j, -1);
  }
  // +(A.B)^2
  for (Index i = 1; i <= n; ++i) {
    for (Index l = 1; l <= n; ++l) add(i, l, i, l, +1);
  }

  std::erase_if(coeff, [](const auto& kv) { return kv.second == 0; });
  return coeff;
}

bool xab_identically_zero(const StructureTensor& L) { return xab_polynomial(L).empty(); }

std::optional<Witness> find_xab_witness(const StructureTensor& L, std::uint64_t seed, std::uint64_t stream,
                                        std::size_t max_attempts) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  std::mt19937_64 rng(seq);
  // Plain modulo keeps the sequence identical across standard libraries,
  // unlike std::uniform_int_distribution.
  auto draw = [&] { return static_cast<std::int64_t>(rng() % 5) - 2; };

  const int n = L.n();
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    auto a = IntVector::zero(n);
    auto b = IntVector::zero(n);
    for (Index i = 1; i <= n; ++i) a.component(i) = draw();
    for (Index i = 1; i <= n; ++i) b.component(i) = draw();
    const std::int64_t x = xab_direct(L, a, b);
    if (x != 0) return Witness{std::move(a), std::move(b), x};
  }
  return std::nullopt;
}

}  // namespace vcp
