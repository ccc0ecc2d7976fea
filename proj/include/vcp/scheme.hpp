#pragma once

// Pairing schemes: for every axis k of an odd-dimensional space, a perfect
// matching of the other n-1 indices, such that every unordered index pair is
// assigned to exactly one axis. A scheme fixes which basis products land on
// which axis; signs are derived separately (see tensor.hpp).

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vcp/error.hpp"

namespace vcp {

/// 1-based axis index.
using Index = int;

/// An odd dimension n = 2K + 1 with K pairs per axis.
class Dimension {
 public:
  int n() const noexcept { return n_; }
  int pairs_per_axis() const noexcept { return (n_ - 1) / 2; }
  /// n(n-1)/2, the number of unordered index pairs.
  int pair_count() const noexcept { return n_ * (n_ - 1) / 2; }

  bool contains(Index i) const noexcept { return i >= 1 && i <= n_; }

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  explicit Dimension(int n) noexcept : n_(n) {}
  friend Dimension feasibility(int n);

  int n_;
};

/// Checks that the pairs of {1..n} can be shared out equally among the n axes.
/// Throws TooSmall for n < 3 and EvenDimension for even n.
Dimension feasibility(int n);

/// Unordered pair of distinct indices, normalized so that lo < hi.
struct IndexPair {
  Index lo = 0;
  Index hi = 0;

  /// Normalizes (a, b) into ascending order. Does not check a != b.
  static constexpr IndexPair of(Index a, Index b) noexcept {
    return a < b ? IndexPair{a, b} : IndexPair{b, a};
  }

  constexpr bool contains(Index i) const noexcept { return lo == i || hi == i; }

  friend constexpr auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

std::string to_string(IndexPair p);

/// Position of a pair in the lexicographic list of all pairs over {1..n}.
std::size_t pair_ordinal(const Dimension& dim, IndexPair p);

/// The K disjoint pairs assigned to one axis, in ascending order.
struct Matching {
  Index axis = 0;
  std::vector<IndexPair> pairs;

  friend auto operator<=>(const Matching&, const Matching&) = default;
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// All perfect matchings of {1..n} \ {axis}, in lexicographic order of their
/// pair lists. There are (n-2)!! of them.
std::vector<Matching> enumerate_axis_matchings(const Dimension& dim, Index axis);

/// A validated pairing scheme. Immutable once built.
class Scheme {
 public:
  const Dimension& dim() const noexcept { return dim_; }
  int n() const noexcept { return dim_.n(); }

  /// Matching of axis k (1-based).
  const Matching& matching(Index axis) const;
  std::span<const Matching> matchings() const noexcept { return matchings_; }

  /// Axis the pair is assigned to.
  Index axis_of(IndexPair p) const;

  friend bool operator==(const Scheme& a, const Scheme& b) { return a.matchings_ == b.matchings_; }
  friend auto operator<=>(const Scheme& a, const Scheme& b) { return a.matchings_ <=> b.matchings_; }

 private:
  Scheme(Dimension dim, std::vector<Matching> matchings, std::vector<Index> axis_by_pair)
      : dim_(dim), matchings_(std::move(matchings)), axis_by_pair_(std::move(axis_by_pair)) {}

  friend Scheme validate_scheme(const std::vector<std::vector<std::pair<int, int>>>& assignment);
  friend class SchemeEnumerator;

  Dimension dim_;
  std::vector<Matching> matchings_;
  std::vector<Index> axis_by_pair_;
};

/// Unchecked input: one list of (a, b) index pairs per axis, axis k at
/// position k-1. Pairs may be given in either order.
using RawAssignment = std::vector<std::vector<std::pair<int, int>>>;

/// Checks the matching and scheme invariants and returns the normalized
/// scheme. The dimension is the number of axes supplied.
///
/// Per axis, in order: index range, SelfPair, BadMatching (overlapping
/// pairs). Then globally: DuplicatePair, MissingPair.
Scheme validate_scheme(const RawAssignment& assignment);

/// True iff every pair {i,j} on axis k has {j,k} on axis i and {i,k} on
/// axis j, i.e. the scheme is a Steiner triple system.
bool is_closed(const Scheme& s);

/// Matching index chosen for each axis, 0-based into
/// enumerate_axis_matchings(dim, k). Identifies a scheme's position in the
/// enumeration order.
using Cursor = std::vector<std::size_t>;

struct EnumerationOptions {
  /// Restricts the stream to schemes whose first axes use these choices.
  Cursor prefix;
  /// Skips every scheme up to and including this one.
  std::optional<Cursor> resume_after;
  /// Stops after this many schemes.
  std::optional<std::size_t> limit;
};

/// Lazy depth-first enumeration of all schemes of a dimension: axes in
/// ascending order, each axis trying its matchings in lexicographic order,
/// pruning any matching that reuses a pair already assigned.
class SchemeEnumerator {
 public:
  explicit SchemeEnumerator(Dimension dim, EnumerationOptions options = {});

  /// Next scheme, or nullopt once the stream (or the limit) is exhausted.
  std::optional<Scheme> next();

  /// Position of the scheme most recently returned by next().
  const Cursor& cursor() const noexcept { return choice_; }
  std::size_t emitted() const noexcept { return emitted_; }
  const Dimension& dim() const noexcept { return dim_; }

  /// Number of matchings available for each axis.
  std::size_t choices_per_axis() const noexcept { return axis_matchings_.front().size(); }

 private:
  bool advance();
  bool fits(std::size_t depth, std::size_t choice) const;
  void place(std::size_t depth, std::size_t choice, char value);
  Scheme current() const;

  Dimension dim_;
  EnumerationOptions options_;
  std::vector<std::vector<Matching>> axis_matchings_;
  std::vector<std::vector<std::vector<std::size_t>>> pair_ordinals_;
  std::vector<char> used_;
  Cursor choice_;
  std::size_t depth_ = 0;
  std::size_t emitted_ = 0;
  bool exhausted_ = false;
};

/// The full stream for a dimension.
inline SchemeEnumerator enumerate_schemes(Dimension dim, EnumerationOptions options = {}) {
  return SchemeEnumerator(dim, std::move(options));
}

/// Drains an enumerator into a vector.
std::vector<Scheme> collect_schemes(SchemeEnumerator& stream);

}  // namespace vcp
