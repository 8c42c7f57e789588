#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "raagrep/fiber.hpp"
#include "raagrep/generators.hpp"
#include "raagrep/path.hpp"
#include "test_support.hpp"

using namespace raagrep;
using testing_support::random_marking;

namespace {

constexpr Sign P = Sign::plus;
constexpr Sign M = Sign::minus;

MarkedGraph l_example() {
  const Graph l = graph_l();
  EdgeMarking m(l.edge_count());
  m[l.edge_between("b", "d")] = P;
  m[l.edge_between("d", "c")] = M;
  m[l.edge_between("c", "b")] = P;
  m[l.edge_between("b", "a")] = M;
  return MarkedGraph(l, m);
}

bool all_steps_are_deletions(const ReductionTrace& t) {
  return std::all_of(t.begin(), t.end(),
                     [](const TraceEntry& e) { return std::holds_alternative<step::VertexDeletion>(e.step); });
}

// The same marked graph with vertices permuted by `perm` (new index of each old vertex).
MarkedGraph relabel(const MarkedGraph& m, const std::vector<std::size_t>& perm) {
  std::vector<std::string> names(perm.size());
  for (std::size_t v = 0; v < perm.size(); ++v) names[perm[v]] = m.graph.name(v);
  std::vector<Edge> edges;
  for (const Edge& e : m.graph.edges()) edges.push_back({perm[e.v], perm[e.w]});
  Graph g(names, edges);
  EdgeMarking mk(g.edge_count());
  for (std::size_t e = 0; e < m.graph.edge_count(); ++e) {
    const Edge& old = m.graph.edge(e);
    mk[*g.edge_index(perm[old.v], perm[old.w])] = m.mark(e);
  }
  return MarkedGraph(g, mk);
}

}  // namespace

TEST_CASE("FiberClass helpers") {
  CHECK(FiberClass::components(1) == FiberClass::connected());
  CHECK(FiberClass::components(0) == FiberClass::empty());
  CHECK(FiberClass::components(3).component_count() == 3);
  CHECK(!FiberClass::unknown().component_count());
  CHECK(combine_disjoint(FiberClass::components(2), FiberClass::components(3)) == FiberClass::components(6));
  CHECK(combine_disjoint(FiberClass::empty(), FiberClass::unknown()) == FiberClass::empty());
  CHECK(combine_disjoint(FiberClass::connected(), FiberClass::unknown()) == FiberClass::unknown());
}

TEST_CASE("reduce examples") {
  std::mt19937_64 rng(41);
  const Graph t = random_tree(8, rng);
  const auto r = reduce(MarkedGraph(t, constant_marking(t, P)));
  CHECK(r.residual.graph.vertex_count() == 0);
  CHECK(all_steps_are_deletions(r.trace));
  CHECK(r.trace.size() == 8);

  const auto tri = reduce(MarkedGraph(complete_graph(3), {P, M, M}));
  REQUIRE(tri.trace.size() == 1);
  CHECK(std::holds_alternative<step::EdgeContraction>(tri.trace[0].step));
  CHECK(tri.residual.graph.edge_count() == 1);
  CHECK(tri.residual.marking == EdgeMarking{M});

  const Graph p4({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}});
  const auto pr = reduce(MarkedGraph(p4, {P, M, M}));
  REQUIRE(!pr.trace.empty());
  CHECK(std::get<step::VertexDeletion>(pr.trace[0].step).vertex == "a");
  CHECK(pr.residual.graph.vertex_count() == 3);
  CHECK(pr.residual.marking == EdgeMarking{M, M});
}

TEST_CASE("classify_fiber examples") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 50; ++t) {
    const Graph k = t % 2 ? random_tree(7, rng) : cycle_graph(3 + static_cast<std::size_t>(t) % 6);
    CHECK(classify_fiber(MarkedGraph(k, random_marking(k, rng))).fiber == FiberClass::connected());
  }
  const auto l = classify_fiber(l_example());
  CHECK(l.fiber == FiberClass::empty());
  CHECK(std::holds_alternative<step::EmptyByEdgeContraction2>(l.trace.back().step));

  const Graph k4 = complete_graph(4);
  const auto c = classify_fiber(MarkedGraph(k4, constant_marking(k4, M)));
  CHECK(c.fiber == FiberClass::empty());
  CHECK(std::holds_alternative<step::EmptyByK4Core>(c.trace.back().step));

  const Graph prism = prism_graph();
  const auto pc = classify_fiber(MarkedGraph(prism, constant_marking(prism, M)));
  CHECK(pc.fiber == FiberClass::unknown());
  CHECK(std::holds_alternative<step::Residual>(pc.trace.back().step));
}

TEST_CASE("replay_trace audits traces") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 100; ++t) {
    const Graph k = random_graph(6, 0.5, rng);
    const MarkedGraph m(k, random_marking(k, rng));
    const auto c = classify_fiber(m);
    CHECK(replay_trace(m, c.trace));
  }
  const MarkedGraph tri(complete_graph(3), {P, M, M});
  auto c = classify_fiber(tri);
  REQUIRE(!c.trace.empty());
  auto broken = c.trace;
  broken[0].after.marking[0] = P;
  CHECK(!replay_trace(tri, broken));
}

TEST_CASE("verdict is independent of vertex order on trees and cycles") {
  std::mt19937_64 rng(44);
  for (int t = 0; t < 200; ++t) {
    const Graph k = t % 2 ? random_tree(7, rng) : cycle_graph(3 + static_cast<std::size_t>(t) % 5);
    const MarkedGraph m(k, random_marking(k, rng));
    std::vector<std::size_t> perm(k.vertex_count());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(classify_fiber(relabel(m, perm)).fiber == classify_fiber(m).fiber);
  }
}

TEST_CASE("count_components examples") {
  CHECK(count_components(path_graph(2)) == 2);
  CHECK(count_components(cycle_graph(3)) == 8);
  const Graph two({"a", "b", "c", "d"}, {{0, 1}, {2, 3}});
  CHECK(count_components(two) == 4);
  CHECK(count_components(empty_graph(3)) == 1);
  CHECK(!count_components(prism_graph()).has_value());
  // K4: every marking settles; the count is the number of nonempty fibers.
  const auto k4 = count_components(complete_graph(4));
  REQUIRE(k4);
  CHECK(*k4 < 64);
  CHECK(count_components(complete_graph(4), {.jobs = 2}) == k4);
}

TEST_CASE("count_components multiplies over disjoint unions") {
  // C3 + P3 + isolated vertex.
  const Graph g({"a", "b", "c", "d", "e", "f", "g"}, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}});
  CHECK(count_components(g) == 8 * 4);
  const auto k4 = count_components(complete_graph(4));
  const Graph k4e({"a", "b", "c", "d", "e", "f"}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}});
  CHECK(count_components(k4e) == *k4 * 2);
}

TEST_CASE("obstruction_surjective") {
  std::mt19937_64 rng(45);
  CHECK(obstruction_surjective(random_tree(9, rng)).verdict == Surjectivity::Yes);
  CHECK(obstruction_surjective(empty_graph(2)).verdict == Surjectivity::Yes);

  const auto l = obstruction_surjective(graph_l());
  CHECK(l.verdict == Surjectivity::No);
  REQUIRE(l.witness);
  CHECK(*l.witness == l_example().marking);

  const Graph chord = Graph::with_indexed_names(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 2}});
  const auto c = obstruction_surjective(chord);
  CHECK(c.verdict == Surjectivity::No);
  REQUIRE(c.witness);
  CHECK(classify_fiber(MarkedGraph(chord, *c.witness)).fiber == FiberClass::empty());
}

TEST_CASE("q8_oracle") {
  const Graph tri = complete_graph(3);
  const MarkedGraph t(tri, constant_marking(tri, M));
  const auto w = q8_oracle(t);
  REQUIRE(w.realizable);
  CHECK(obstruction_map(tri, *w.witness) == t.marking);

  const Graph k4 = complete_graph(4);
  CHECK(!q8_oracle(MarkedGraph(k4, constant_marking(k4, M))).realizable);
  CHECK(!q8_oracle(l_example()).realizable);
  const Graph big = path_graph(13);
  CHECK_THROWS_AS(q8_oracle(MarkedGraph(big, constant_marking(big, M))), std::length_error);
}

TEST_CASE("Empty verdicts are never Q8-realizable") {
  std::mt19937_64 rng(46);
  std::size_t empties = 0;
  for (int t = 0; t < 400; ++t) {
    const Graph k = random_graph(6, 0.6, rng);
    const MarkedGraph m(k, random_marking(k, rng));
    const auto c = classify_fiber(m);
    const auto q = q8_oracle(m);
    if (c.fiber.verdict == FiberVerdict::Empty) {
      ++empties;
      CHECK(!q.realizable);
    }
    if (q.realizable) CHECK(obstruction_map(k, *q.witness) == m.marking);
  }
  CHECK(empties > 0);
}

TEST_CASE("gauge_fixed_component_count") {
  const Graph prism = prism_graph();
  const MarkedGraph pm(prism, constant_marking(prism, M));
  const std::vector<std::size_t> frame{prism.vertex("a1"), prism.vertex("a2"), prism.vertex("a3")};
  CHECK(gauge_fixed_component_count(pm, frame) == 2);

  const Graph tri = complete_graph(3);
  CHECK(gauge_fixed_component_count(MarkedGraph(tri, constant_marking(tri, M)), {0, 1, 2}) == 1);

  const Graph s2 = stacked_prism(2);
  const std::vector<std::size_t> f2{s2.vertex("t0_1"), s2.vertex("t0_2"), s2.vertex("t0_3")};
  CHECK(gauge_fixed_component_count(MarkedGraph(s2, constant_marking(s2, M)), f2) == 4);

  const Graph k4 = complete_graph(4);
  CHECK(gauge_fixed_component_count(MarkedGraph(k4, constant_marking(k4, M)), {0, 1, 2}) == 0);

  // A pendant vertex on the triangle turns on a circle of solutions.
  const Graph pend = Graph::with_indexed_names(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(gauge_fixed_component_count(MarkedGraph(pend, constant_marking(pend, M)), {0, 1, 2}),
                  NotRigidError);
  const Graph e2 = path_graph(2);
  CHECK_THROWS_AS(gauge_fixed_component_count(MarkedGraph(e2, constant_marking(e2, M)), {0}), NotRigidError);

  CHECK_THROWS_AS(gauge_fixed_component_count(MarkedGraph(tri, {M, M, P}), {0, 1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(gauge_fixed_component_count(MarkedGraph(path_graph(3), {M, M}), {0, 2}), std::invalid_argument);
}
