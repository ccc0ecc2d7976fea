#include "vcp/census.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace vcp {

CensusRecord classify_scheme(const Scheme& s, std::size_t scheme_id, std::uint64_t seed) {
  const auto L = build_tensor(s);
  CensusRecord r;
  r.scheme_id = scheme_id;
  r.closed = is_closed(s);
  r.orthogonality_zero = orthogonality_identically_zero(L);
  r.xab_zero = xab_identically_zero(L);
  if (!r.xab_zero) {
    r.witness = find_xab_witness(L, seed, scheme_id);
  }
  return r;
}

CensusSummary census(Dimension dim, const CensusOptions& options, const CensusSink& sink) {
  if (options.jobs == 0) {
    throw Error(ErrorCode::Unsupported, "census needs at least one worker");
  }
  EnumerationOptions eo;
  eo.limit = options.limit;
  SchemeEnumerator stream(dim, eo);

  const std::size_t batch_size = std::max<std::size_t>(options.batch_size, 1);
  CensusSummary summary;
  std::vector<Scheme> batch;
  std::vector<CensusRecord> records;
  bool done = false;
  while (!done) {
    batch.clear();
    while (batch.size() < batch_size) {
      auto s = stream.next();
      if (!s) {
        done = true;
        break;
      }
      batch.push_back(std::move(*s));
    }
    if (batch.empty()) break;

    const std::size_t first_id = summary.total + 1;
    records.assign(batch.size(), CensusRecord{});
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t t = next.fetch_add(1); t < batch.size(); t = next.fetch_add(1)) {
        records[t] = classify_scheme(batch[t], first_id + t, options.seed);
      }
    };
    const unsigned workers = std::min<std::size_t>(options.jobs, batch.size());
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    }

    for (std::size_t t = 0; t < batch.size(); ++t) {
      const auto& r = records[t];
      ++summary.total;
      summary.closed += r.closed;
      summary.orthogonality_zero += r.orthogonality_zero;
      summary.xab_zero += r.xab_zero;
      if (sink) sink(r, batch[t]);
    }
  }
  return summary;
}

std::vector<CensusRecord> census(Dimension dim, const CensusOptions& options) {
  std::vector<CensusRecord> out;
  census(dim, options, [&](const CensusRecord& r, const Scheme&) { out.push_back(r); });
  return out;
}

}  // namespace vcp
