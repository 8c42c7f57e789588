#pragma once

// Data-parallel kernels. Each has a serial reference implementation; the
// OpenMP version must return identical results in identical order.

#include <cstdint>
#include <vector>

#include "raagrep/fiber.hpp"
#include "raagrep/graph.hpp"

namespace raagrep {

struct SweepOptions {
  int jobs = 0;              // OpenMP threads; 0 means the runtime default
  bool allow_large = false;  // lift the 2^20 marking cap
  bool keep_traces = false;
};

struct MarkingRow {
  std::uint64_t index = 0;  // see marking_from_index
  EdgeMarking marking;
  FiberClass fiber;
  ReductionTrace trace;  // empty unless keep_traces
};

/// classify_fiber over all 2^|E| markings, in marking order. Throws
/// std::length_error when |E| > 20 and allow_large is not set.
std::vector<MarkingRow> sweep_markings_serial(const Graph& k, const SweepOptions& opts = {});
std::vector<MarkingRow> sweep_markings_parallel(const Graph& k, const SweepOptions& opts = {});

}  // namespace raagrep
