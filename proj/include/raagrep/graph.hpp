#pragma once

// Finite simple graphs with oriented edges, edge markings in {+1, -1}, graph
// homomorphisms, and the deletion/contraction moves used by the fiber engine.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace raagrep {

enum class Sign : std::int8_t { plus = 1, minus = -1 };

inline int to_int(Sign s) { return static_cast<int>(s); }
inline Sign sign_from_int(int s) { return s < 0 ? Sign::minus : Sign::plus; }
inline Sign operator*(Sign a, Sign b) { return a == b ? Sign::plus : Sign::minus; }

/// Oriented edge, v < w in the vertex order.
struct Edge {
  std::size_t v = 0;
  std::size_t w = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph() = default;
  /// Edges may be given in either orientation; they are stored as (min, max)
  /// and sorted. Throws std::invalid_argument on loops, duplicate edges,
  /// duplicate names or out-of-range endpoints.
  Graph(std::vector<std::string> names, std::vector<Edge> edges);

  /// Vertices named "v0", "v1", ...
  static Graph with_indexed_names(std::size_t n, std::vector<Edge> edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(std::size_t v) const { return names_.at(v); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }
  const std::vector<std::size_t>& neighbors(std::size_t v) const { return adjacency_.at(v); }
  std::size_t degree(std::size_t v) const { return adjacency_.at(v).size(); }

  /// Incident edge indices of v, in edge order.
  std::vector<std::size_t> incident_edges(std::size_t v) const;

  std::optional<std::size_t> edge_index(std::size_t a, std::size_t b) const;
  bool adjacent(std::size_t a, std::size_t b) const { return edge_index(a, b).has_value(); }

  std::optional<std::size_t> find_vertex(std::string_view name) const;
  /// Throws std::out_of_range for unknown names.
  std::size_t vertex(std::string_view name) const;
  /// Throws std::out_of_range for unknown edges.
  std::size_t edge_between(std::string_view a, std::string_view b) const;

  /// "v-w" with v(e) first.
  std::string edge_label(std::size_t e) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
};

/// Total map edges -> {+1, -1}, indexed by edge index.
using EdgeMarking = std::vector<Sign>;

struct MarkedGraph {
  Graph graph;
  EdgeMarking marking;

  MarkedGraph() = default;
  /// Throws std::invalid_argument if the marking is not total on the edges.
  MarkedGraph(Graph g, EdgeMarking m);

  Sign mark(std::size_t e) const { return marking.at(e); }
  friend bool operator==(const MarkedGraph&, const MarkedGraph&) = default;
};

EdgeMarking constant_marking(const Graph& g, Sign s);

/// Marking number `index` in lexicographic order over the edge list with
/// +1 < -1: the first edge is the most significant digit.
EdgeMarking marking_from_index(std::size_t edge_count, std::uint64_t index);
std::uint64_t marking_index(const EdgeMarking& m);

/// Vertex map between graphs. Each source edge maps to a target edge, or
/// collapses to a single vertex (only quotient maps do this). A collapsed
/// edge pulls back the mark +1, since both endpoints carry the same element.
struct GraphHom {
  Graph source;
  Graph target;
  std::vector<std::size_t> vertex_map;

  /// Throws std::invalid_argument if the map is not total or some edge lands
  /// on a non-edge (or collapses when `allow_collapse` is false).
  void validate(bool allow_collapse = true) const;
  bool collapses(std::size_t source_edge) const;
  /// Image edge index, nullopt if the edge collapses.
  std::optional<std::size_t> image_edge(std::size_t source_edge) const;
};

GraphHom identity_hom(const Graph& g);
GraphHom compose(const GraphHom& g, const GraphHom& f);  // g . f

struct SubgraphResult {
  Graph graph;
  GraphHom inclusion;  // result -> input
};

struct ContractionResult {
  Graph graph;
  GraphHom quotient;  // input -> result
  std::size_t merged_vertex = 0;  // in the result
};

/// K - {v}: delete v and its incident edges.
SubgraphResult vertex_delete(const Graph& k, std::size_t v);

/// Induced subgraph on `keep` (sorted by vertex order in the result).
SubgraphResult induced_subgraph(const Graph& k, std::span<const std::size_t> keep);

/// K / e: identify the endpoints of e (the earlier vertex survives and keeps
/// its name and position), drop e, and merge parallel edges.
ContractionResult edge_contract(const Graph& k, std::size_t e);

/// (f* L)_e = L_{f(e)}; collapsed edges pull back to +1.
EdgeMarking pullback_marking(const GraphHom& f, const EdgeMarking& target_marking);

/// The marking L'' on K/e with q* L'' = L, if one exists. Throws
/// std::invalid_argument if e is not +1-marked.
std::optional<EdgeMarking> e_reduction(const MarkedGraph& m, std::size_t e);

/// A vertex u adjacent to both ends of e whose two edges to them carry
/// different marks, if any. This is what blocks an e-reduction.
std::optional<std::size_t> e_reduction_obstacle(const MarkedGraph& m, std::size_t e);

/// Ordering v1..vn in which each vertex has at most two earlier neighbors,
/// found by peeling a minimum-degree vertex (highest index among ties) and
/// reversing. nullopt if the graph is not 2-degenerate.
std::optional<std::vector<std::size_t>> degeneracy_ordering(const Graph& k);

std::vector<std::vector<std::size_t>> connected_components(const Graph& k);

struct ComponentShape {
  std::vector<std::size_t> vertices;
  std::size_t edge_count = 0;
  bool is_tree = false;
  bool is_cycle = false;
  bool is_complete = false;
  bool has_3cycle = false;
};

struct ShapeReport {
  std::vector<ComponentShape> components;
  bool is_tree = false;      // connected and acyclic
  bool is_forest = false;
  bool is_cycle = false;     // connected 2-regular with at least 3 vertices
  bool is_complete = false;
  bool all_trees_or_cycles = false;
  bool contains_3cycle_in_noncycle_component = false;
};

ShapeReport classify_shape(const Graph& k);

/// Every component a tree or a triangle (the Droms 3-manifold condition).
bool droms_shape(const Graph& k);

/// Some triangle, as three vertices in increasing order.
std::optional<std::array<std::size_t, 3>> find_triangle(const Graph& k,
                                                        std::span<const std::size_t> within = {});

/// Some K4, as four vertices in increasing order, using only the edges for
/// which `use_edge` holds (all edges when empty).
std::optional<std::array<std::size_t, 4>> find_k4(const Graph& k,
                                                  const std::vector<bool>& use_edge = {});

}  // namespace raagrep
