#pragma once

#include <random>

#include "oracles.hpp"
#include "vcp/io.hpp"
#include "vcp/scheme.hpp"
#include "vcp/tensor.hpp"

namespace fixtures {

// Rows as printed in the reference tables.
inline vcp::Scheme row3_5d() { return vcp::parse_scheme_compact("24 35 / 13 45 / 14 25 / 15 23 / 12 34"); }
inline vcp::Scheme row2_7d() {
  return vcp::parse_scheme_compact("23 45 67 / 13 47 56 / 12 46 57 / 15 27 36 / 14 26 37 / 17 25 34 / 16 24 35");
}
inline vcp::Scheme row11_7d() {
  return vcp::parse_scheme_compact("24 37 56 / 14 35 67 / 17 25 46 / 12 36 57 / 16 23 47 / 15 27 34 / 13 26 45");
}
inline vcp::Scheme row20_7d() {
  return vcp::parse_scheme_compact("26 34 57 / 16 37 45 / 14 27 56 / 13 25 67 / 17 24 36 / 12 35 47 / 15 23 46");
}
inline vcp::Scheme unique_3d() { return vcp::parse_scheme_compact("23 / 13 / 12"); }

inline vcp::IntVector ivec(std::initializer_list<std::int64_t> c) { return vcp::IntVector(std::vector<std::int64_t>(c)); }

inline vcp::IntVector random_ivec(std::mt19937_64& rng, int n, int bound) {
  auto v = vcp::IntVector::zero(n);
  const auto span = static_cast<std::uint64_t>(2 * bound + 1);
  for (int i = 1; i <= n; ++i) v.component(i) = static_cast<std::int64_t>(rng() % span) - bound;
  return v;
}

/// 1-based copy for the oracles.
inline oracle::IVec to_oracle(const vcp::IntVector& v) {
  oracle::IVec out{0};
  for (auto x : v.components()) out.push_back(x);
  return out;
}

inline oracle::SchemeRows to_rows(const vcp::Scheme& s) {
  oracle::SchemeRows rows;
  for (const auto& m : s.matchings()) {
    oracle::PairList r;
    for (const auto& p : m.pairs) r.emplace_back(p.lo, p.hi);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace fixtures
