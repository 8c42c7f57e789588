#pragma once

// JSON and DOT formats for graphs, markings, representations, fiber
// reports, bundle ledgers and paths.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "raagrep/fiber.hpp"
#include "raagrep/graph.hpp"
#include "raagrep/obstruction.hpp"
#include "raagrep/path.hpp"
#include "raagrep/sweep.hpp"

namespace raagrep {

using json = nlohmann::ordered_json;

/// Malformed input. `where` is a JSON pointer into the document ("/edges/2").
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string where, const std::string& what)
      : std::runtime_error(where.empty() ? what : where + ": " + what), where_(std::move(where)), message_(what) {}
  const std::string& where() const { return where_; }
  const std::string& message() const { return message_; }

 private:
  std::string where_;
  std::string message_;
};

struct GraphDocument {
  Graph graph;
  std::optional<EdgeMarking> marking;
};

/// {"vertices": [names], "edges": [[v, w], ...], "marking": {"v-w": +1 | -1}}
/// with "marking" optional. When present it must cover every edge.
GraphDocument parse_graph_document(const json& doc);
GraphDocument parse_graph_document_text(const std::string& text);

/// Marking keys "v-w" may name the edge in either orientation.
EdgeMarking parse_marking(const Graph& k, const json& marking, const std::string& where = "/marking");

/// A string of '+' and '-' in edge order, or a JSON object as above.
EdgeMarking parse_marking_argument(const Graph& k, const std::string& text);

json marking_to_json(const Graph& k, const EdgeMarking& m);
json graph_to_json(const Graph& k, const std::optional<EdgeMarking>& m = std::nullopt);

/// Edge labels "+1" / "-1" when a marking is given.
std::string to_dot(const Graph& k, const std::optional<EdgeMarking>& m = std::nullopt);

/// {"v": [x0, x1, x2, x3], ...} in vertex order.
json representation_to_json(const Graph& k, const Representation& x);
Representation parse_representation(const Graph& k, const json& doc);

/// {"v": [[[re, im], ...], ...], ...}; the group is not part of the document.
json matrix_to_json(const CMatrix& m);
CMatrix parse_matrix(const json& doc, const std::string& where);
json matrix_representation_to_json(const Graph& k, const MatrixRepresentation& x);
MatrixRepresentation parse_matrix_representation(const Graph& k, const json& doc, GroupTag group);

json step_to_json(const ReductionStep& s);
json trace_to_json(const ReductionTrace& t);
json fiber_to_json(const FiberClass& f);

/// {"marking": ..., "verdict": ..., "trace": [...], "witness": ...}
json fiber_report(const Graph& k, const EdgeMarking& m, const Classification& c,
                  const std::optional<Representation>& witness = std::nullopt);

struct BundleRecord {
  EdgeMarking marking;
  FiberClass fiber;
  /// Fiber nonempty; nullopt when the fiber verdict is Unknown.
  std::optional<bool> flat_exists;
};

struct BundleReport {
  std::vector<BundleRecord> records;
  bool all_bundles_flat = false;
  bool droms_3manifold_shape = false;
};

/// Raised by bundle_report when the 3-manifold check is requested on a graph
/// that is not a disjoint union of trees and triangles.
class ShapeViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BundleReport bundle_report(const Graph& k, bool require_3manifold_shape, const SweepOptions& opts = {});
json bundle_report_to_json(const Graph& k, const BundleReport& r);

/// [{"t": t, "values": {vertex: matrix}}, ...] at `samples` equispaced times.
json path_samples_to_json(const Graph& k, const GroupPath& p, std::size_t samples);

}  // namespace raagrep
