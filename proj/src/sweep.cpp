#include "raagrep/sweep.hpp"

#include <stdexcept>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace raagrep {

namespace {

std::uint64_t marking_total(const Graph& k, const SweepOptions& opts) {
  if (k.edge_count() > kMaxSweepEdges && !opts.allow_large)
    throw std::length_error("marking sweep over " + std::to_string(k.edge_count()) +
                            " edges exceeds the cap of " + std::to_string(kMaxSweepEdges));
  if (k.edge_count() >= 63) throw std::length_error("marking sweep is limited to 62 edges");
  return std::uint64_t{1} << k.edge_count();
}

MarkingRow classify_row(const Graph& k, std::uint64_t index, bool keep_traces) {
  MarkingRow row;
  row.index = index;
  row.marking = marking_from_index(k.edge_count(), index);
  Classification c = classify_fiber(MarkedGraph(k, row.marking));
  row.fiber = c.fiber;
  if (keep_traces) row.trace = std::move(c.trace);
  return row;
}

}  // namespace

std::vector<MarkingRow> sweep_markings_serial(const Graph& k, const SweepOptions& opts) {
  const std::uint64_t total = marking_total(k, opts);
  std::vector<MarkingRow> rows(total);
  for (std::uint64_t m = 0; m < total; ++m) rows[m] = classify_row(k, m, opts.keep_traces);
  return rows;
}

std::vector<MarkingRow> sweep_markings_parallel(const Graph& k, const SweepOptions& opts) {
  const std::uint64_t total = marking_total(k, opts);
  std::vector<MarkingRow> rows(total);
  const auto n = static_cast<std::int64_t>(total);
#ifdef _OPENMP
  const int threads = opts.jobs > 0 ? opts.jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
#endif
  for (std::int64_t m = 0; m < n; ++m)
    rows[static_cast<std::size_t>(m)] = classify_row(k, static_cast<std::uint64_t>(m), opts.keep_traces);
  return rows;
}

}  // namespace raagrep
