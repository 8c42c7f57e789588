#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "raagrep/generators.hpp"
#include "raagrep/graph.hpp"
#include "test_support.hpp"

using namespace raagrep;
using testing_support::graph_from_mask;
using testing_support::random_marking;
using testing_support::two_degenerate_oracle;

namespace {

constexpr Sign P = Sign::plus;
constexpr Sign M = Sign::minus;

Graph named(std::vector<std::string> names, const std::vector<std::pair<std::string, std::string>>& edges) {
  std::vector<Edge> es;
  auto idx = [&](const std::string& n) {
    return static_cast<std::size_t>(std::find(names.begin(), names.end(), n) - names.begin());
  };
  for (auto& [a, b] : edges) es.push_back({idx(a), idx(b)});
  return Graph(std::move(names), std::move(es));
}

EdgeMarking marks(const Graph& k, const std::vector<std::tuple<std::string, std::string, Sign>>& ms) {
  EdgeMarking m(k.edge_count(), P);
  for (auto& [a, b, s] : ms) m[k.edge_between(a, b)] = s;
  return m;
}

// The marked graph of the edge-contraction figure: v and w joined by a +1
// edge, each on a -1 edge, sharing the neighbors TM and u.
MarkedGraph contraction_example() {
  Graph k = named({"TL", "TM", "TR", "ML", "v", "w", "BL", "u", "BR"},
                  {{"TL", "v"}, {"TM", "v"}, {"TM", "w"}, {"TR", "w"}, {"ML", "v"}, {"v", "w"},
                   {"BL", "v"}, {"u", "v"}, {"u", "w"}, {"BR", "w"}});
  EdgeMarking m = marks(k, {{"BL", "v", M}, {"u", "w", M}, {"u", "v", M}});
  return MarkedGraph(k, m);
}

}  // namespace

TEST_CASE("graph construction and validation") {
  Graph k = named({"a", "b", "c"}, {{"b", "a"}, {"c", "b"}});
  CHECK(k.edge(0) == Edge{0, 1});
  CHECK(k.edge_label(1) == "b-c");
  CHECK(k.edge_between("c", "b") == 1);
  CHECK_THROWS_AS(k.vertex("z"), std::out_of_range);
  CHECK_THROWS_AS(Graph({"a"}, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph({"a", "b"}, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph({"a", "a"}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Graph({"a", "b"}, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("vertex_delete examples") {
  auto r = vertex_delete(path_graph(3), 1);
  CHECK(r.graph.vertex_count() == 2);
  CHECK(r.graph.edge_count() == 0);
  for (std::size_t v = 0; v < 3; ++v) {
    auto t = vertex_delete(complete_graph(3), v);
    CHECK(t.graph.vertex_count() == 2);
    CHECK(t.graph.edge_count() == 1);
  }
  const Graph l = graph_l();
  auto d = vertex_delete(l, l.vertex("a"));
  CHECK(d.graph.names() == std::vector<std::string>{"b", "c", "d"});
  CHECK(d.graph.edge_count() == 3);
  CHECK(d.inclusion.target == l);
  CHECK_NOTHROW(d.inclusion.validate(false));
  CHECK_THROWS_AS(vertex_delete(l, 9), std::out_of_range);
}

TEST_CASE("edge_contract examples") {
  auto p = edge_contract(path_graph(3), 0);
  CHECK(p.graph.vertex_count() == 2);
  CHECK(p.graph.edge_count() == 1);
  auto t = edge_contract(complete_graph(3), 2);
  CHECK(t.graph.vertex_count() == 2);
  CHECK(t.graph.edge_count() == 1);
  CHECK_NOTHROW(t.quotient.validate(true));
  CHECK(t.quotient.collapses(2));

  const MarkedGraph ex = contraction_example();
  const auto c = edge_contract(ex.graph, ex.graph.edge_between("v", "w"));
  CHECK(c.graph.vertex_count() == 8);
  CHECK(c.graph.edge_count() == 7);
  CHECK(c.graph.name(c.merged_vertex) == "v");
  CHECK(c.graph.degree(c.merged_vertex) == 7);
}

TEST_CASE("pullback_marking examples") {
  const Graph tri = complete_graph(3);
  const EdgeMarking m{P, M, M};
  auto d = vertex_delete(tri, 0);
  CHECK(pullback_marking(d.inclusion, m) == EdgeMarking{M});
  CHECK(pullback_marking(d.inclusion, constant_marking(tri, M)) == EdgeMarking{M});
  auto c = edge_contract(tri, 0);
  CHECK(pullback_marking(c.quotient, EdgeMarking{M}) == EdgeMarking{P, M, M});
}

TEST_CASE("e_reduction examples") {
  const Graph tri = complete_graph(3);  // edges 01, 02, 12
  auto r = e_reduction(MarkedGraph(tri, {P, M, M}), 0);
  REQUIRE(r);
  CHECK(*r == EdgeMarking{M});
  CHECK(!e_reduction(MarkedGraph(tri, {P, M, P}), 0));
  CHECK(e_reduction_obstacle(MarkedGraph(tri, {P, M, P}), 0) == 2);
  CHECK_THROWS_AS(e_reduction(MarkedGraph(tri, {M, M, M}), 0), std::invalid_argument);

  const MarkedGraph ex = contraction_example();
  const std::size_t e = ex.graph.edge_between("v", "w");
  auto red = e_reduction(ex, e);
  REQUIRE(red);
  const auto c = edge_contract(ex.graph, e);
  CHECK(pullback_marking(c.quotient, *red) == ex.marking);
  const std::size_t vv = c.merged_vertex;
  CHECK((*red)[*c.graph.edge_index(vv, c.graph.vertex("u"))] == M);
  CHECK((*red)[*c.graph.edge_index(vv, c.graph.vertex("BL"))] == M);
  CHECK(std::count(red->begin(), red->end(), M) == 2);

  // Marking {u, v} with +1 destroys the e-reduction.
  EdgeMarking bad = ex.marking;
  bad[ex.graph.edge_between("u", "v")] = P;
  CHECK(!e_reduction(MarkedGraph(ex.graph, bad), e));
}

TEST_CASE("e_reduction pullback property on random instances") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 300; ++t) {
    const Graph k = random_graph(6, 0.5, rng);
    if (k.edge_count() == 0) continue;
    EdgeMarking m = random_marking(k, rng);
    std::uniform_int_distribution<std::size_t> pick(0, k.edge_count() - 1);
    const std::size_t e = pick(rng);
    m[e] = P;
    auto r = e_reduction(MarkedGraph(k, m), e);
    const auto c = edge_contract(k, e);
    if (r) CHECK(pullback_marking(c.quotient, *r) == m);
    CHECK(r.has_value() == !e_reduction_obstacle(MarkedGraph(k, m), e).has_value());
  }
}

TEST_CASE("pullback is functorial") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 200; ++t) {
    const Graph target = random_graph(5, 0.6, rng);
    const GraphHom g = random_hom(target, 5, 0.7, rng);
    const GraphHom f = random_hom(g.source, 4, 0.7, rng);
    const EdgeMarking l = random_marking(target, rng);
    CHECK(pullback_marking(compose(g, f), l) == pullback_marking(f, pullback_marking(g, l)));
  }
}

TEST_CASE("degeneracy_ordering examples") {
  std::mt19937_64 rng(13);
  CHECK(degeneracy_ordering(random_tree(9, rng)));
  CHECK(degeneracy_ordering(cycle_graph(7)));
  CHECK(!degeneracy_ordering(complete_graph(4)));
  CHECK(degeneracy_ordering(prism_graph()) == std::nullopt);
}

TEST_CASE("degeneracy_ordering is exact on all graphs with at most 6 vertices") {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    const std::uint64_t graphs = std::uint64_t{1} << (n * (n - 1) / 2);
    for (std::uint64_t mask = 0; mask < graphs; ++mask) {
      const Graph k = graph_from_mask(n, mask);
      const auto order = degeneracy_ordering(k);
      REQUIRE(order.has_value() == two_degenerate_oracle(k));
      if (order) {
        std::vector<std::size_t> pos(n);
        for (std::size_t i = 0; i < n; ++i) pos[(*order)[i]] = i;
        std::vector<std::size_t> sorted = *order;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t i = 0; i < n; ++i) REQUIRE(sorted[i] == i);
        for (std::size_t v = 0; v < n; ++v) {
          std::size_t back = 0;
          for (std::size_t w : k.neighbors(v)) back += pos[w] < pos[v];
          REQUIRE(back <= 2);
        }
      }
      ++checked;
    }
  }
  CHECK(checked == 1 + 2 + 8 + 64 + 1024 + 32768);
}

TEST_CASE("classify_shape examples") {
  const auto p3 = classify_shape(path_graph(3));
  CHECK(p3.is_tree);
  CHECK(p3.is_forest);
  const auto c3 = classify_shape(cycle_graph(3));
  CHECK(c3.is_cycle);
  CHECK(c3.is_complete);
  const auto l = classify_shape(graph_l());
  CHECK(!l.is_cycle);
  CHECK(l.contains_3cycle_in_noncycle_component);
  CHECK(!l.all_trees_or_cycles);
  CHECK(droms_shape(complete_graph(3)));
  CHECK(!droms_shape(graph_l()));
  CHECK(!droms_shape(cycle_graph(4)));
}

TEST_CASE("marking index round trip") {
  CHECK(marking_from_index(3, 0) == EdgeMarking{P, P, P});
  CHECK(marking_from_index(3, 4) == EdgeMarking{M, P, P});
  CHECK(marking_from_index(3, 1) == EdgeMarking{P, P, M});
  for (std::uint64_t i = 0; i < 64; ++i) CHECK(marking_index(marking_from_index(6, i)) == i);
}

TEST_CASE("invariants of delete and contract") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 100; ++t) {
    const Graph k = random_graph(7, 0.4, rng);
    for (std::size_t v = 0; v < k.vertex_count(); ++v) {
      const auto d = vertex_delete(k, v);
      CHECK(d.graph.vertex_count() == k.vertex_count() - 1);
      CHECK(d.graph.edge_count() == k.edge_count() - k.degree(v));
    }
    for (std::size_t e = 0; e < k.edge_count(); ++e) CHECK(edge_contract(k, e).graph.vertex_count() == k.vertex_count() - 1);
  }
}

TEST_CASE("find_triangle and find_k4") {
  CHECK(find_triangle(graph_l()) == std::array<std::size_t, 3>{1, 2, 3});
  CHECK(!find_triangle(cycle_graph(5)));
  CHECK(find_k4(complete_graph(5)) == std::array<std::size_t, 4>{0, 1, 2, 3});
  CHECK(!find_k4(prism_graph()));
}
