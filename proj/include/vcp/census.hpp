#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "vcp/scheme.hpp"
#include "vcp/verification.hpp"

namespace vcp {

/// Classification of one enumerated scheme. The three properties are
/// reported independently; none is inferred from another.
struct CensusRecord {
  std::size_t scheme_id = 0;  // 1-based position in enumeration order
  bool closed = false;
  bool orthogonality_zero = false;
  bool xab_zero = false;
  /// Present whenever xab_zero is false.
  std::optional<Witness> witness;
};

/// Builds the tensor and runs every identity-level check. The witness search
/// is seeded by (seed, scheme_id), so the record does not depend on which
/// worker computed it.
CensusRecord classify_scheme(const Scheme& s, std::size_t scheme_id, std::uint64_t seed);

struct CensusOptions {
  std::optional<std::size_t> limit;
  unsigned jobs = 1;
  std::uint64_t seed = 0;
  /// Schemes handed to the worker pool per round.
  std::size_t batch_size = 2048;
};

struct CensusSummary {
  std::size_t total = 0;
  std::size_t closed = 0;
  std::size_t orthogonality_zero = 0;
  std::size_t xab_zero = 0;
};

using CensusSink = std::function<void(const CensusRecord&, const Scheme&)>;

/// Classifies every scheme of the dimension (up to the limit) and passes the
/// records to the sink in scheme_id order, whatever the number of jobs.
CensusSummary census(Dimension dim, const CensusOptions& options, const CensusSink& sink);

/// Convenience overload collecting all records.
std::vector<CensusRecord> census(Dimension dim, const CensusOptions& options = {});

}  // namespace vcp
