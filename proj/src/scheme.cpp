#include "vcp/scheme.hpp"

#include <algorithm>

namespace vcp {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EvenDimension: return "EvenDimension";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DuplicatePair: return "DuplicatePair";
    case ErrorCode::MissingPair: return "MissingPair";
    case ErrorCode::SelfPair: return "SelfPair";
    case ErrorCode::BadMatching: return "BadMatching";
    case ErrorCode::AxisCollision: return "AxisCollision";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::SchemeTensorMismatch: return "SchemeTensorMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Unknown";
}

Dimension feasibility(int n) {
  if (n < 3) {
    throw Error(ErrorCode::TooSmall, "dimension " + std::to_string(n) + " is below 3");
  }
  // C(n,2) pairs shared equally among n axes: (n-1)/2 each, integral only for odd n.
  if ((n * (n - 1) / 2) % n != 0) {
    throw Error(ErrorCode::EvenDimension,
                "dimension " + std::to_string(n) + " is even; C(n,2)/n is not an integer");
  }
  return Dimension(n);
}

std::string to_string(IndexPair p) { return std::to_string(p.lo) + "-" + std::to_string(p.hi); }

std::size_t pair_ordinal(const Dimension& dim, IndexPair p) {
  if (!dim.contains(p.lo) || !dim.contains(p.hi) || p.lo >= p.hi) {
    throw Error(ErrorCode::IndexOutOfRange, "pair " + to_string(p) + " is not a pair over 1.." +
                                                std::to_string(dim.n()));
  }
  const auto n = static_cast<std::size_t>(dim.n());
  const auto lo = static_cast<std::size_t>(p.lo);
  const auto hi = static_cast<std::size_t>(p.hi);
  return (lo - 1) * n - (lo - 1) * lo / 2 + (hi - lo - 1);
}

namespace {

void extend_matchings(std::vector<Index>& rest, std::vector<IndexPair>& partial, Index axis,
                      std::vector<Matching>& out) {
  if (rest.empty()) {
    out.push_back(Matching{axis, partial});
    return;
  }
  // The smallest free index pairs with each other free index in turn, which
  // yields the matchings in lexicographic order.
  const Index first = rest.front();
  for (std::size_t j = 1; j < rest.size(); ++j) {
    const Index partner = rest[j];
    std::vector<Index> remaining;
    remaining.reserve(rest.size() - 2);
    for (std::size_t t = 1; t < rest.size(); ++t) {
      if (t != j) remaining.push_back(rest[t]);
    }
    partial.push_back(IndexPair{first, partner});
    extend_matchings(remaining, partial, axis, out);
    partial.pop_back();
  }
}

}  // namespace

std::vector<Matching> enumerate_axis_matchings(const Dimension& dim, Index axis) {
  if (!dim.contains(axis)) {
    throw Error(ErrorCode::IndexOutOfRange,
                "axis " + std::to_string(axis) + " outside 1.." + std::to_string(dim.n()));
  }
  std::vector<Index> rest;
  for (Index i = 1; i <= dim.n(); ++i) {
    if (i != axis) rest.push_back(i);
  }
  std::vector<Matching> out;
  std::vector<IndexPair> partial;
  extend_matchings(rest, partial, axis, out);
  return out;
}

const Matching& Scheme::matching(Index axis) const {
  if (!dim_.contains(axis)) {
    throw Error(ErrorCode::IndexOutOfRange, "axis " + std::to_string(axis));
  }
  return matchings_[static_cast<std::size_t>(axis - 1)];
}

Index Scheme::axis_of(IndexPair p) const { return axis_by_pair_[pair_ordinal(dim_, p)]; }

Scheme validate_scheme(const RawAssignment& assignment) {
  const Dimension dim = feasibility(static_cast<int>(assignment.size()));
  const int n = dim.n();

  std::vector<Matching> matchings;
  matchings.reserve(assignment.size());
  for (Index axis = 1; axis <= n; ++axis) {
    const auto& raw = assignment[static_cast<std::size_t>(axis - 1)];
    Matching m{axis, {}};
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [a, b] : raw) {
      if (!dim.contains(a) || !dim.contains(b)) {
        throw Error(ErrorCode::IndexOutOfRange, "pair " + std::to_string(a) + "-" + std::to_string(b) +
                                                    " under axis " + std::to_string(axis) +
                                                    " leaves 1.." + std::to_string(n));
      }
      if (a == b) {
        throw Error(ErrorCode::BadMatching, "degenerate pair " + std::to_string(a) + "-" +
                                                std::to_string(b) + " under axis " +
                                                std::to_string(axis));
      }
      const IndexPair p = IndexPair::of(a, b);
      if (p.contains(axis)) {
        throw Error(ErrorCode::SelfPair,
                    "pair " + to_string(p) + " contains its own axis " + std::to_string(axis));
      }
      if (seen[static_cast<std::size_t>(p.lo)] || seen[static_cast<std::size_t>(p.hi)]) {
        throw Error(ErrorCode::BadMatching,
                    "pair " + to_string(p) + " overlaps another pair under axis " + std::to_string(axis));
      }
      seen[static_cast<std::size_t>(p.lo)] = seen[static_cast<std::size_t>(p.hi)] = 1;
      m.pairs.push_back(p);
    }
    std::sort(m.pairs.begin(), m.pairs.end());
    matchings.push_back(std::move(m));
  }

  std::vector<Index> axis_by_pair(static_cast<std::size_t>(dim.pair_count()), 0);
  for (const auto& m : matchings) {
    for (const auto& p : m.pairs) {
      Index& slot = axis_by_pair[pair_ordinal(dim, p)];
      if (slot != 0) {
        throw Error(ErrorCode::DuplicatePair, "pair " + to_string(p) + " assigned to axes " +
                                                  std::to_string(slot) + " and " +
                                                  std::to_string(m.axis));
      }
      slot = m.axis;
    }
  }
  // With no duplicates, full coverage forces every axis to hold exactly K
  // disjoint pairs, so a short axis surfaces here.
  for (Index lo = 1; lo <= n; ++lo) {
    for (Index hi = lo + 1; hi <= n; ++hi) {
      if (axis_by_pair[pair_ordinal(dim, IndexPair{lo, hi})] == 0) {
        throw Error(ErrorCode::MissingPair, "pair " + to_string(IndexPair{lo, hi}) + " is not assigned");
      }
    }
  }
  return Scheme(dim, std::move(matchings), std::move(axis_by_pair));
}

bool is_closed(const Scheme& s) {
  for (const auto& m : s.matchings()) {
    const Index k = m.axis;
    for (const auto& [i, j] : m.pairs) {
      if (s.axis_of(IndexPair::of(j, k)) != i || s.axis_of(IndexPair::of(i, k)) != j) return false;
    }
  }
  return true;
}

SchemeEnumerator::SchemeEnumerator(Dimension dim, EnumerationOptions options)
    : dim_(dim), options_(std::move(options)) {
  const auto n = static_cast<std::size_t>(dim_.n());
  axis_matchings_.reserve(n);
  pair_ordinals_.reserve(n);
  for (Index axis = 1; axis <= dim_.n(); ++axis) {
    auto ms = enumerate_axis_matchings(dim_, axis);
    std::vector<std::vector<std::size_t>> ords;
    ords.reserve(ms.size());
    for (const auto& m : ms) {
      std::vector<std::size_t> o;
      for (const auto& p : m.pairs) o.push_back(pair_ordinal(dim_, p));
      ords.push_back(std::move(o));
    }
    axis_matchings_.push_back(std::move(ms));
    pair_ordinals_.push_back(std::move(ords));
  }
  used_.assign(static_cast<std::size_t>(dim_.pair_count()), 0);
  choice_.assign(n, 0);

  const auto& prefix = options_.prefix;
  if (prefix.size() > n) {
    throw Error(ErrorCode::IndexOutOfRange, "enumeration prefix longer than the dimension");
  }
  for (std::size_t d = 0; d < prefix.size(); ++d) {
    if (prefix[d] >= axis_matchings_[d].size()) {
      throw Error(ErrorCode::IndexOutOfRange, "enumeration prefix choice out of range at axis " +
                                                  std::to_string(d + 1));
    }
  }

  if (options_.resume_after) {
    const Cursor& c = *options_.resume_after;
    if (c.size() != n) {
      throw Error(ErrorCode::IndexOutOfRange, "resume cursor must hold one choice per axis");
    }
    for (std::size_t d = 0; d < n; ++d) {
      if (c[d] >= axis_matchings_[d].size() || !fits(d, c[d])) {
        throw Error(ErrorCode::BadMatching,
                    "resume cursor is not a valid scheme position at axis " + std::to_string(d + 1));
      }
      place(d, c[d], 1);
      choice_[d] = c[d];
    }
    depth_ = n;
    // A cursor outside the prefix subtree either precedes it (start normally)
    // or follows it (nothing left).
    const auto cmp = std::lexicographical_compare_three_way(
        c.begin(), c.begin() + static_cast<std::ptrdiff_t>(prefix.size()), prefix.begin(), prefix.end());
    if (cmp < 0) {
      std::fill(used_.begin(), used_.end(), 0);
      std::fill(choice_.begin(), choice_.end(), 0);
      depth_ = 0;
    } else if (cmp > 0) {
      exhausted_ = true;
    }
  }
  if (depth_ == 0 && !prefix.empty()) choice_[0] = prefix[0];
}

bool SchemeEnumerator::fits(std::size_t depth, std::size_t choice) const {
  for (std::size_t ord : pair_ordinals_[depth][choice]) {
    if (used_[ord]) return false;
  }
  return true;
}

void SchemeEnumerator::place(std::size_t depth, std::size_t choice, char value) {
  for (std::size_t ord : pair_ordinals_[depth][choice]) used_[ord] = value;
}

bool SchemeEnumerator::advance() {
  const std::size_t n = axis_matchings_.size();
  const auto& prefix = options_.prefix;
  auto first_choice = [&](std::size_t d) { return d < prefix.size() ? prefix[d] : std::size_t{0}; };
  auto end_choice = [&](std::size_t d) {
    return d < prefix.size() ? prefix[d] + 1 : axis_matchings_[d].size();
  };

  if (depth_ == n) {
    --depth_;
    place(depth_, choice_[depth_], 0);
    ++choice_[depth_];
  }
  while (true) {
    const std::size_t end = end_choice(depth_);
    std::size_t& c = choice_[depth_];
    while (c < end && !fits(depth_, c)) ++c;
    if (c < end) {
      place(depth_, c, 1);
      ++depth_;
      if (depth_ == n) return true;
      choice_[depth_] = first_choice(depth_);
    } else {
      if (depth_ == 0) return false;
      --depth_;
      place(depth_, choice_[depth_], 0);
      ++choice_[depth_];
    }
  }
}

Scheme SchemeEnumerator::current() const {
  std::vector<Matching> matchings;
  matchings.reserve(choice_.size());
  std::vector<Index> axis_by_pair(used_.size(), 0);
  for (std::size_t d = 0; d < choice_.size(); ++d) {
    matchings.push_back(axis_matchings_[d][choice_[d]]);
    for (std::size_t ord : pair_ordinals_[d][choice_[d]]) axis_by_pair[ord] = static_cast<Index>(d + 1);
  }
  return Scheme(dim_, std::move(matchings), std::move(axis_by_pair));
}

std::optional<Scheme> SchemeEnumerator::next() {
  if (exhausted_) return std::nullopt;
  if (options_.limit && emitted_ >= *options_.limit) return std::nullopt;
  if (!advance()) {
    exhausted_ = true;
    return std::nullopt;
  }
  ++emitted_;
  return current();
}

std::vector<Scheme> collect_schemes(SchemeEnumerator& stream) {
  std::vector<Scheme> out;
  while (auto s = stream.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace vcp
