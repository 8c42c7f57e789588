#include "raagrep/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace raagrep {

Graph::Graph(std::vector<std::string> names, std::vector<Edge> edges)
    : names_(std::move(names)), adjacency_(names_.size()) {
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw std::invalid_argument("vertex names must be non-empty");
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate vertex name '" + n + "'");
  }
  for (auto& e : edges) {
    if (e.v >= names_.size() || e.w >= names_.size())
      throw std::invalid_argument("edge endpoint out of range");
    if (e.v == e.w) throw std::invalid_argument("loop at vertex '" + names_[e.v] + "'");
    if (e.v > e.w) std::swap(e.v, e.w);
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw std::invalid_argument("duplicate edge");
  edges_ = std::move(edges);
  for (const auto& e : edges_) {
    adjacency_[e.v].push_back(e.w);
    adjacency_[e.w].push_back(e.v);
  }
  for (auto& a : adjacency_) std::sort(a.begin(), a.end());
}

Graph Graph::with_indexed_names(std::size_t n, std::vector<Edge> edges) {
  std::vector<std::string> names(n);
  for (std::size_t v = 0; v < n; ++v) names[v] = "v" + std::to_string(v);
  return Graph(std::move(names), std::move(edges));
}

std::vector<std::size_t> Graph::incident_edges(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t u : adjacency_.at(v)) out.push_back(*edge_index(u, v));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::size_t> Graph::edge_index(std::size_t a, std::size_t b) const {
  if (a > b) std::swap(a, b);
  const Edge key{a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

std::optional<std::size_t> Graph::find_vertex(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

std::size_t Graph::vertex(std::string_view name) const {
  if (auto v = find_vertex(name)) return *v;
  throw std::out_of_range("unknown vertex '" + std::string(name) + "'");
}

std::size_t Graph::edge_between(std::string_view a, std::string_view b) const {
  if (auto e = edge_index(vertex(a), vertex(b))) return *e;
  throw std::out_of_range("unknown edge '" + std::string(a) + "-" + std::string(b) + "'");
}

std::string Graph::edge_label(std::size_t e) const {
  const Edge& ed = edges_.at(e);
  return names_[ed.v] + "-" + names_[ed.w];
}

MarkedGraph::MarkedGraph(Graph g, EdgeMarking m) : graph(std::move(g)), marking(std::move(m)) {
  if (marking.size() != graph.edge_count())
    throw std::invalid_argument("marking is not total on the edge set");
}

EdgeMarking constant_marking(const Graph& g, Sign s) { return EdgeMarking(g.edge_count(), s); }

EdgeMarking marking_from_index(std::size_t edge_count, std::uint64_t index) {
  EdgeMarking m(edge_count, Sign::plus);
  for (std::size_t e = 0; e < edge_count; ++e) {
    if ((index >> (edge_count - 1 - e)) & 1u) m[e] = Sign::minus;
  }
  return m;
}

std::uint64_t marking_index(const EdgeMarking& m) {
  std::uint64_t index = 0;
  for (Sign s : m) index = (index << 1) | (s == Sign::minus ? 1u : 0u);
  return index;
}

void GraphHom::validate(bool allow_collapse) const {
  if (vertex_map.size() != source.vertex_count())
    throw std::invalid_argument("vertex map is not total");
  for (std::size_t t : vertex_map) {
    if (t >= target.vertex_count()) throw std::invalid_argument("vertex map leaves the target");
  }
  for (const Edge& e : source.edges()) {
    const std::size_t a = vertex_map[e.v], b = vertex_map[e.w];
    if (a == b) {
      if (!allow_collapse) throw std::invalid_argument("edge collapses under the vertex map");
      continue;
    }
    if (!target.adjacent(a, b))
      throw std::invalid_argument("edge " + source.name(e.v) + "-" + source.name(e.w) +
                                  " does not map to an edge");
  }
}

bool GraphHom::collapses(std::size_t source_edge) const {
  const Edge& e = source.edge(source_edge);
  return vertex_map[e.v] == vertex_map[e.w];
}

std::optional<std::size_t> GraphHom::image_edge(std::size_t source_edge) const {
  const Edge& e = source.edge(source_edge);
  const std::size_t a = vertex_map[e.v], b = vertex_map[e.w];
  if (a == b) return std::nullopt;
  auto idx = target.edge_index(a, b);
  if (!idx) throw std::logic_error("graph homomorphism maps an edge to a non-edge");
  return idx;
}

GraphHom identity_hom(const Graph& g) {
  std::vector<std::size_t> map(g.vertex_count());
  std::iota(map.begin(), map.end(), std::size_t{0});
  return {g, g, std::move(map)};
}

GraphHom compose(const GraphHom& g, const GraphHom& f) {
  if (!(f.target == g.source)) throw std::invalid_argument("homomorphisms are not composable");
  std::vector<std::size_t> map(f.source.vertex_count());
  for (std::size_t v = 0; v < map.size(); ++v) map[v] = g.vertex_map[f.vertex_map[v]];
  return {f.source, g.target, std::move(map)};
}

SubgraphResult induced_subgraph(const Graph& k, std::span<const std::size_t> keep) {
  std::vector<std::size_t> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  std::vector<std::size_t> new_index(k.vertex_count(), SIZE_MAX);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    new_index.at(kept[i]) = i;
    names.push_back(k.name(kept[i]));
  }
  std::vector<Edge> edges;
  for (const Edge& e : k.edges()) {
    if (new_index[e.v] != SIZE_MAX && new_index[e.w] != SIZE_MAX)
      edges.push_back({new_index[e.v], new_index[e.w]});
  }
  Graph sub(std::move(names), std::move(edges));
  return {sub, GraphHom{sub, k, kept}};
}

SubgraphResult vertex_delete(const Graph& k, std::size_t v) {
  if (v >= k.vertex_count()) throw std::out_of_range("vertex_delete: unknown vertex");
  std::vector<std::size_t> keep;
  for (std::size_t u = 0; u < k.vertex_count(); ++u)
    if (u != v) keep.push_back(u);
  return induced_subgraph(k, keep);
}

ContractionResult edge_contract(const Graph& k, std::size_t e) {
  if (e >= k.edge_count()) throw std::out_of_range("edge_contract: unknown edge");
  const Edge contracted = k.edge(e);
  std::vector<std::size_t> map(k.vertex_count());
  std::vector<std::string> names;
  for (std::size_t u = 0, next = 0; u < k.vertex_count(); ++u) {
    if (u == contracted.w) continue;
    map[u] = next++;
    names.push_back(k.name(u));
  }
  map[contracted.w] = map[contracted.v];
  std::set<Edge> merged;
  for (std::size_t i = 0; i < k.edge_count(); ++i) {
    if (i == e) continue;
    std::size_t a = map[k.edge(i).v], b = map[k.edge(i).w];
    if (a > b) std::swap(a, b);
    merged.insert({a, b});
  }
  Graph quotient(std::move(names), std::vector<Edge>(merged.begin(), merged.end()));
  const std::size_t survivor = map[contracted.v];
  return {quotient, GraphHom{k, quotient, std::move(map)}, survivor};
}

EdgeMarking pullback_marking(const GraphHom& f, const EdgeMarking& target_marking) {
  if (target_marking.size() != f.target.edge_count())
    throw std::invalid_argument("marking is not total on the target");
  EdgeMarking out(f.source.edge_count(), Sign::plus);
  for (std::size_t e = 0; e < out.size(); ++e) {
    if (auto img = f.image_edge(e)) out[e] = target_marking[*img];
  }
  return out;
}

std::optional<std::size_t> e_reduction_obstacle(const MarkedGraph& m, std::size_t e) {
  const Edge& ed = m.graph.edge(e);
  for (std::size_t u : m.graph.neighbors(ed.v)) {
    if (u == ed.w) continue;
    auto other = m.graph.edge_index(u, ed.w);
    if (!other) continue;
    if (m.mark(*m.graph.edge_index(u, ed.v)) != m.mark(*other)) return u;
  }
  return std::nullopt;
}

std::optional<EdgeMarking> e_reduction(const MarkedGraph& m, std::size_t e) {
  if (m.mark(e) != Sign::plus) throw std::invalid_argument("e_reduction: edge is not +1-marked");
  if (e_reduction_obstacle(m, e)) return std::nullopt;
  const ContractionResult c = edge_contract(m.graph, e);
  EdgeMarking reduced(c.graph.edge_count(), Sign::plus);
  for (std::size_t i = 0; i < m.graph.edge_count(); ++i) {
    if (auto img = c.quotient.image_edge(i)) reduced[*img] = m.mark(i);
  }
  return reduced;
}

std::optional<std::vector<std::size_t>> degeneracy_ordering(const Graph& k) {
  const std::size_t n = k.vertex_count();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v) degree[v] = k.degree(v);
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> peeled;
  peeled.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = SIZE_MAX;
    for (std::size_t v = 0; v < n; ++v) {
      if (removed[v]) continue;
      if (pick == SIZE_MAX || degree[v] <= degree[pick]) pick = v;
    }
    if (degree[pick] > 2) return std::nullopt;
    removed[pick] = true;
    peeled.push_back(pick);
    for (std::size_t u : k.neighbors(pick))
      if (!removed[u]) --degree[u];
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& k) {
  const std::size_t n = k.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (std::size_t u : k.neighbors(comp[head])) {
        if (!seen[u]) {
          seen[u] = true;
          comp.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::optional<std::array<std::size_t, 3>> find_triangle(const Graph& k,
                                                        std::span<const std::size_t> within) {
  std::vector<bool> allowed(k.vertex_count(), within.empty());
  for (std::size_t v : within) allowed.at(v) = true;
  for (const Edge& e : k.edges()) {
    if (!allowed[e.v] || !allowed[e.w]) continue;
    for (std::size_t u : k.neighbors(e.w)) {
      if (u > e.w && allowed[u] && k.adjacent(u, e.v)) return std::array{e.v, e.w, u};
    }
  }
  return std::nullopt;
}

std::optional<std::array<std::size_t, 4>> find_k4(const Graph& k, const std::vector<bool>& use_edge) {
  auto linked = [&](std::size_t a, std::size_t b) {
    auto idx = k.edge_index(a, b);
    return idx && (use_edge.empty() || use_edge[*idx]);
  };
  const std::size_t n = k.vertex_count();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b : k.neighbors(a)) {
      if (b <= a || !linked(a, b)) continue;
      for (std::size_t c : k.neighbors(b)) {
        if (c <= b || !linked(b, c) || !linked(a, c)) continue;
        for (std::size_t d : k.neighbors(c)) {
          if (d <= c || !linked(c, d) || !linked(a, d) || !linked(b, d)) continue;
          return std::array{a, b, c, d};
        }
      }
    }
  return std::nullopt;
}

ShapeReport classify_shape(const Graph& k) {
  ShapeReport r;
  for (auto& comp : connected_components(k)) {
    ComponentShape s;
    const std::size_t n = comp.size();
    for (std::size_t v : comp) s.edge_count += k.degree(v);
    s.edge_count /= 2;
    s.is_tree = s.edge_count + 1 == n;
    s.is_cycle = n >= 3 && s.edge_count == n &&
                 std::all_of(comp.begin(), comp.end(), [&](std::size_t v) { return k.degree(v) == 2; });
    s.is_complete = s.edge_count == n * (n - 1) / 2;
    s.has_3cycle = find_triangle(k, comp).has_value();
    s.vertices = std::move(comp);
    r.components.push_back(std::move(s));
  }
  const auto& cs = r.components;
  const bool connected = cs.size() == 1;
  r.is_tree = connected && cs[0].is_tree;
  r.is_forest = std::all_of(cs.begin(), cs.end(), [](const auto& c) { return c.is_tree; });
  r.is_cycle = connected && cs[0].is_cycle;
  r.is_complete = cs.size() <= 1 && (cs.empty() || cs[0].is_complete);
  r.all_trees_or_cycles =
      std::all_of(cs.begin(), cs.end(), [](const auto& c) { return c.is_tree || c.is_cycle; });
  r.contains_3cycle_in_noncycle_component =
      std::any_of(cs.begin(), cs.end(), [](const auto& c) { return !c.is_cycle && c.has_3cycle; });
  return r;
}

bool droms_shape(const Graph& k) {
  const ShapeReport r = classify_shape(k);
  return std::all_of(r.components.begin(), r.components.end(), [](const ComponentShape& c) {
    return c.is_tree || (c.is_cycle && c.vertices.size() == 3);
  });
}

}  // namespace raagrep
