#pragma once

// Classification of obstruction fibers o_K^-1(L) for SO(3) by vertex
// deletion and edge contraction, with an auditable trace.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "raagrep/graph.hpp"
#include "raagrep/obstruction.hpp"

namespace raagrep {

enum class FiberVerdict { Empty, NonemptyConnected, ComponentCount, Unknown };

struct FiberClass {
  FiberVerdict verdict = FiberVerdict::Unknown;
  std::uint64_t count = 0;  // meaningful for ComponentCount only (n >= 2)

  static FiberClass empty() { return {FiberVerdict::Empty, 0}; }
  static FiberClass connected() { return {FiberVerdict::NonemptyConnected, 1}; }
  static FiberClass unknown() { return {FiberVerdict::Unknown, 0}; }
  /// components(1) is NonemptyConnected and components(0) is Empty.
  static FiberClass components(std::uint64_t n);

  /// Number of connected components, nullopt when Unknown.
  std::optional<std::uint64_t> component_count() const;
  friend bool operator==(const FiberClass&, const FiberClass&) = default;
};

std::string to_string(const FiberClass& f);

/// Fiber of a disjoint union is the product of the fibers.
FiberClass combine_disjoint(const FiberClass& a, const FiberClass& b);

namespace step {
struct VertexDeletion {
  std::string vertex;
};
struct EdgeContraction {
  std::string v, w;  // v survives
};
struct EmptyByEdgeContraction2 {
  std::string v, w, witness;
};
struct ConnectedByDegeneracyOrdering {
  std::vector<std::string> ordering;
};
struct EmptyByK4Core {
  std::array<std::string, 4> clique;
};
struct Residual {
  std::vector<std::string> vertices;
};
}  // namespace step

using ReductionStep = std::variant<step::VertexDeletion, step::EdgeContraction, step::EmptyByEdgeContraction2,
                                   step::ConnectedByDegeneracyOrdering, step::EmptyByK4Core, step::Residual>;

std::string step_name(const ReductionStep& s);

struct TraceEntry {
  ReductionStep step;
  MarkedGraph after;  // marked graph once the step has been applied
};

using ReductionTrace = std::vector<TraceEntry>;

struct ReductionResult {
  MarkedGraph residual;
  ReductionTrace trace;
  bool empty = false;  // halted by the second contraction lemma
};

/// Applies, until none applies: delete a vertex whose edges are all +1;
/// contract a +1 edge with a leaf endpoint, or with both endpoints on some -1
/// edge, when an e-reduction exists; halt Empty when a +1 edge with both
/// endpoints on some -1 edge has no e-reduction. Deletions come first, lowest
/// index first.
ReductionResult reduce(const MarkedGraph& m);

/// Re-applies the deletion and contraction steps of `trace` to `input` and
/// checks every recorded intermediate marked graph.
bool replay_trace(const MarkedGraph& input, const ReductionTrace& trace);

struct Classification {
  FiberClass fiber;
  ReductionTrace trace;
};

/// reduce, then settle each all-(-1) residual component: 2-degenerate ->
/// connected and nonempty; contains K4 -> empty; anything else is Unknown.
Classification classify_fiber(const MarkedGraph& m);

/// Unknown is nullopt.
struct CountOptions {
  int jobs = 0;  // 0: serial
  bool allow_large = false;
};
inline constexpr std::size_t kMaxSweepEdges = 20;
std::optional<std::uint64_t> count_components(const Graph& k, const CountOptions& opts = {});

enum class Surjectivity { Yes, No, Unknown };

struct SurjectivityResult {
  Surjectivity verdict = Surjectivity::Unknown;
  std::optional<EdgeMarking> witness;  // a marking with empty fiber, for No
};

/// Yes for disjoint unions of trees and cycles. No when a non-cycle
/// component has a triangle: the witness marks a triangle {b, c, d} and a
/// pendant edge b-a as (b-d: +1, d-c: -1, c-b: +1, b-a: -1) and every other
/// edge +1.
SurjectivityResult obstruction_surjective(const Graph& k);

struct Q8Result {
  bool realizable = false;
  std::optional<Representation> witness;
};

/// Searches labelings V -> {1, i, j, k}. A witness proves the fiber is
/// nonempty; failure proves nothing. Throws std::length_error above 12 vertices.
inline constexpr std::size_t kQ8MaxVertices = 12;
Q8Result q8_oracle(const MarkedGraph& m);

class NotRigidError : public std::runtime_error {
 public:
  explicit NotRigidError(const std::string& what) : std::runtime_error(what) {}
};

/// Number of fiber components for an all-(-1) marked graph, fixing the frame
/// vertices to i, j, k. Remaining vertices are labeled by coordinate axes;
/// every solution must be an isolated point of the constraint set (checked
/// by the rank of the linearized constraints) and a randomized search for
/// off-axis solutions must come back empty, otherwise NotRigidError.
std::size_t gauge_fixed_component_count(const MarkedGraph& m, const std::vector<std::size_t>& frame,
                                        std::uint64_t seed = 7);

}  // namespace raagrep
