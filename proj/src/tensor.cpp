#include "vcp/tensor.hpp"

namespace vcp {

OrderedPair orient_pair(IndexPair p, Index axis) {
  if (p.contains(axis)) {
    throw Error(ErrorCode::AxisCollision,
                "axis " + std::to_string(axis) + " is a member of pair " + to_string(p));
  }
  // The even permutations of a sorted triple (x < y < z) are its rotations:
  // (x,y,z), (y,z,x), (z,x,y). The axis either sits outside [lo, hi], where
  // (lo, hi, axis) is a rotation, or between them, where (hi, lo, axis) is.
  if (axis > p.lo && axis < p.hi) return OrderedPair{p.hi, p.lo};
  return OrderedPair{p.lo, p.hi};
}

std::optional<TensorEntry> StructureTensor::lookup(Index i, Index j) const {
  if (!dim_.contains(i) || !dim_.contains(j)) {
    throw Error(ErrorCode::IndexOutOfRange, "(" + std::to_string(i) + ", " + std::to_string(j) +
                                                ") outside 1.." + std::to_string(dim_.n()));
  }
  if (i == j) return std::nullopt;
  return at(i, j);
}

int StructureTensor::sign(Index i, Index j, Index k) const {
  if (!dim_.contains(k)) {
    throw Error(ErrorCode::IndexOutOfRange, "axis " + std::to_string(k));
  }
  const auto e = lookup(i, j);
  return e && e->axis == k ? e->sign : 0;
}

std::span<const OrderedPair> StructureTensor::oriented_pairs(Index axis) const {
  if (!dim_.contains(axis)) {
    throw Error(ErrorCode::IndexOutOfRange, "axis " + std::to_string(axis));
  }
  return by_axis_[static_cast<std::size_t>(axis - 1)];
}

StructureTensor build_tensor(const Scheme& s) {
  const auto n = static_cast<std::size_t>(s.n());
  std::vector<TensorEntry> table(n * n);
  std::vector<std::vector<OrderedPair>> by_axis(n);
  for (const auto& m : s.matchings()) {
    for (const auto& p : m.pairs) {
      const OrderedPair o = orient_pair(p, m.axis);
      const auto f = static_cast<std::size_t>(o.first - 1);
      const auto g = static_cast<std::size_t>(o.second - 1);
      table[f * n + g] = TensorEntry{m.axis, +1};
      table[g * n + f] = TensorEntry{m.axis, -1};
      by_axis[static_cast<std::size_t>(m.axis - 1)].push_back(o);
    }
  }
  return StructureTensor(s.dim(), std::move(table), std::move(by_axis));
}

}  // namespace vcp
