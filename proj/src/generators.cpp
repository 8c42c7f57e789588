#include "raagrep/generators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace raagrep {

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
  return Graph::with_indexed_names(n, std::move(edges));
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
  return Graph::with_indexed_names(n, std::move(edges));
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = v + 1; w < n; ++w) edges.push_back({v, w});
  return Graph::with_indexed_names(n, std::move(edges));
}

Graph empty_graph(std::size_t n) { return Graph::with_indexed_names(n, {}); }

Graph prism_graph() {
  return Graph({"a1", "a2", "a3", "b1", "b2", "b3"},
               {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
}

Graph stacked_prism(std::size_t n) {
  std::vector<std::string> names;
  std::vector<Edge> edges;
  for (std::size_t t = 0; t <= n; ++t) {
    for (std::size_t i = 0; i < 3; ++i) names.push_back("t" + std::to_string(t) + "_" + std::to_string(i + 1));
    const std::size_t b = 3 * t;
    edges.insert(edges.end(), {{b, b + 1}, {b + 1, b + 2}, {b, b + 2}});
    if (t > 0)
      for (std::size_t i = 0; i < 3; ++i) edges.push_back({b - 3 + i, b + i});
  }
  return Graph(std::move(names), std::move(edges));
}

Graph graph_l() { return Graph({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}); }

namespace {

std::string rooted_form(const Graph& t, std::size_t v, std::size_t parent) {
  std::vector<std::string> kids;
  for (std::size_t u : t.neighbors(v))
    if (u != parent) kids.push_back(rooted_form(t, u, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

std::vector<std::size_t> tree_centers(const Graph& t) {
  const std::size_t n = t.vertex_count();
  if (n <= 2) {
    std::vector<std::size_t> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<std::size_t> degree(n), layer;
  for (std::size_t v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t v : layer) {
      for (std::size_t u : t.neighbors(v))
        if (--degree[u] == 1) next.push_back(u);
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

std::string tree_canonical_form(const Graph& tree) {
  if (tree.vertex_count() == 0) return "";
  if (tree.edge_count() + 1 != tree.vertex_count() || connected_components(tree).size() != 1)
    throw std::invalid_argument("not a tree");
  std::string best;
  for (std::size_t c : tree_centers(tree)) {
    std::string s = rooted_form(tree, c, SIZE_MAX);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

std::vector<Graph> enumerate_trees(std::size_t n) {
  if (n == 0) return {};
  std::vector<Graph> level{Graph::with_indexed_names(1, {})};
  for (std::size_t size = 2; size <= n; ++size) {
    std::set<std::string> seen;
    std::vector<Graph> next;
    for (const Graph& t : level) {
      for (std::size_t v = 0; v < t.vertex_count(); ++v) {
        std::vector<Edge> edges(t.edges().begin(), t.edges().end());
        edges.push_back({v, size - 1});
        Graph grown = Graph::with_indexed_names(size, std::move(edges));
        if (seen.insert(tree_canonical_form(grown)).second) next.push_back(std::move(grown));
      }
    }
    level = std::move(next);
  }
  return level;
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    edges.push_back({pick(rng), v});
  }
  return Graph::with_indexed_names(n, std::move(edges));
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = v + 1; w < n; ++w)
      if (coin(rng)) edges.push_back({v, w});
  return Graph::with_indexed_names(n, std::move(edges));
}

GraphHom random_hom(const Graph& target, std::size_t source_vertices, double p, std::mt19937_64& rng) {
  if (target.vertex_count() == 0) throw std::invalid_argument("target graph has no vertices");
  std::uniform_int_distribution<std::size_t> pick(0, target.vertex_count() - 1);
  std::bernoulli_distribution coin(p);
  std::vector<std::size_t> map(source_vertices);
  for (auto& m : map) m = pick(rng);
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < source_vertices; ++a)
    for (std::size_t b = a + 1; b < source_vertices; ++b)
      if (target.adjacent(map[a], map[b]) && coin(rng)) edges.push_back({a, b});
  GraphHom f{Graph::with_indexed_names(source_vertices, std::move(edges)), target, std::move(map)};
  f.validate(false);
  return f;
}

}  // namespace raagrep
