#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "raagrep/fiber.hpp"

namespace raagrep {

namespace {

// 0 = identity, 1..3 = rotation by pi about i, j, k.
Rotation q8_value(int label) {
  switch (label) {
    case 1: return Rotation(Quaternion::i());
    case 2: return Rotation(Quaternion::j());
    case 3: return Rotation(Quaternion::k());
    default: return Rotation::identity();
  }
}

bool q8_edge_ok(Sign s, int a, int b) {
  if (s == Sign::minus) return a != 0 && b != 0 && a != b;
  return a == 0 || b == 0 || a == b;
}

bool q8_search(const MarkedGraph& m, std::vector<int>& label, std::size_t v) {
  if (v == label.size()) return true;
  for (int a = 0; a < 4; ++a) {
    bool ok = true;
    for (std::size_t u : m.graph.neighbors(v)) {
      if (u >= v) break;
      ok = q8_edge_ok(m.mark(*m.graph.edge_index(u, v)), label[u], a);
      if (!ok) break;
    }
    if (!ok) continue;
    label[v] = a;
    if (q8_search(m, label, v + 1)) return true;
  }
  return false;
}

Eigen::Vector3d axis_vector(int label) { return Eigen::Vector3d::Unit(label - 1); }

}  // namespace

Q8Result q8_oracle(const MarkedGraph& m) {
  if (m.graph.vertex_count() > kQ8MaxVertices)
    throw std::length_error("q8_oracle is limited to " + std::to_string(kQ8MaxVertices) + " vertices");
  std::vector<int> label(m.graph.vertex_count(), 0);
  if (!q8_search(m, label, 0)) return {false, std::nullopt};
  Representation x;
  for (int a : label) x.values.push_back(q8_value(a));
  return {true, std::move(x)};
}

namespace {

struct GaugeProblem {
  const Graph* graph = nullptr;
  std::vector<int> axis;            // fixed labels for frame vertices, 0 elsewhere
  std::vector<std::size_t> free;    // remaining vertices in BFS order from the frame
  std::vector<std::size_t> column;  // vertex -> index into free, SIZE_MAX for frame
};

void enumerate_axes(const GaugeProblem& p, std::vector<int>& axis, std::size_t t,
                    std::vector<std::vector<int>>& out) {
  if (t == p.free.size()) {
    out.push_back(axis);
    return;
  }
  const std::size_t v = p.free[t];
  for (int a = 1; a <= 3; ++a) {
    const bool ok = std::none_of(p.graph->neighbors(v).begin(), p.graph->neighbors(v).end(),
                                 [&](std::size_t u) { return axis[u] == a; });
    if (!ok) continue;
    axis[v] = a;
    enumerate_axes(p, axis, t + 1, out);
    axis[v] = 0;
  }
}

// Isolated iff the linearized perpendicularity constraints have full rank on
// the tangent space of (S^2)^free.
bool is_isolated(const GaugeProblem& p, const std::vector<int>& axis) {
  const std::size_t cols = 2 * p.free.size();
  if (cols == 0) return true;
  std::vector<Eigen::RowVectorXd> rows;
  for (const Edge& e : p.graph->edges()) {
    Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(static_cast<Eigen::Index>(cols));
    bool any = false;
    for (auto [u, other] : {std::pair{e.v, e.w}, std::pair{e.w, e.v}}) {
      const std::size_t c = p.column[u];
      if (c == SIZE_MAX) continue;
      any = true;
      const Eigen::Vector3d xo = axis_vector(axis[other]);
      int s = 0;
      for (int b = 1; b <= 3; ++b) {
        if (b == axis[u]) continue;
        row(static_cast<Eigen::Index>(2 * c + s)) = axis_vector(b).dot(xo);
        ++s;
      }
    }
    if (any) rows.push_back(row);
  }
  Eigen::MatrixXd jac(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) jac.row(static_cast<Eigen::Index>(r)) = rows[r];
  Eigen::FullPivLU<Eigen::MatrixXd> lu(jac);
  lu.setThreshold(1e-9);
  return static_cast<std::size_t>(lu.rank()) == cols;
}

// Projected gradient descent on sum of <x_u, x_w>^2 from random starts. Returns
// true if some start converges to a solution with a vertex off the coordinate axes.
bool finds_off_axis_solution(const GaugeProblem& p, std::uint64_t seed) {
  if (p.free.empty()) return false;
  const Graph& g = *p.graph;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::vector<Eigen::Vector3d> x(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (p.axis[v] != 0) x[v] = axis_vector(p.axis[v]);

  for (int restart = 0; restart < 64; ++restart) {
    for (std::size_t v : p.free) x[v] = Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng)).normalized();
    double energy = 1;
    for (int it = 0; it < 20000 && energy > 1e-26; ++it) {
      energy = 0;
      for (const Edge& e : g.edges()) energy += std::pow(x[e.v].dot(x[e.w]), 2);
      for (std::size_t v : p.free) {
        Eigen::Vector3d grad = Eigen::Vector3d::Zero();
        for (std::size_t u : g.neighbors(v)) grad += 2 * x[v].dot(x[u]) * x[u];
        grad -= grad.dot(x[v]) * x[v];
        x[v] = (x[v] - 0.2 * grad).normalized();
      }
    }
    if (energy > 1e-20) continue;
    for (std::size_t v : p.free) {
      if (x[v].cwiseAbs().maxCoeff() < 1 - 1e-6) return true;
    }
  }
  return false;
}

}  // namespace

std::size_t gauge_fixed_component_count(const MarkedGraph& m, const std::vector<std::size_t>& frame,
                                        std::uint64_t seed) {
  const Graph& g = m.graph;
  if (std::any_of(m.marking.begin(), m.marking.end(), [](Sign s) { return s != Sign::minus; }))
    throw std::invalid_argument("gauge_fixed_component_count needs an all-(-1) marking");
  if (frame.empty() || frame.size() > 3) throw std::invalid_argument("frame must have 1 to 3 vertices");
  for (std::size_t a = 0; a < frame.size(); ++a) {
    if (frame[a] >= g.vertex_count()) throw std::out_of_range("frame vertex out of range");
    for (std::size_t b = a + 1; b < frame.size(); ++b)
      if (!g.adjacent(frame[a], frame[b])) throw std::invalid_argument("frame vertices must be pairwise adjacent");
  }

  GaugeProblem p;
  p.graph = &g;
  p.axis.assign(g.vertex_count(), 0);
  p.column.assign(g.vertex_count(), SIZE_MAX);
  for (std::size_t t = 0; t < frame.size(); ++t) p.axis[frame[t]] = static_cast<int>(t) + 1;

  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<std::size_t> queue(frame.begin(), frame.end());
  for (std::size_t f : frame) seen[f] = true;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (std::size_t u : g.neighbors(queue[head])) {
      if (seen[u]) continue;
      seen[u] = true;
      queue.push_back(u);
      p.column[u] = p.free.size();
      p.free.push_back(u);
    }
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    if (!seen[v]) throw NotRigidError("vertex " + g.name(v) + " is not connected to the frame; not rigid, use classify_fiber");
  }

  std::vector<std::vector<int>> solutions;
  std::vector<int> axis = p.axis;
  enumerate_axes(p, axis, 0, solutions);
  for (const auto& s : solutions) {
    if (!is_isolated(p, s)) throw NotRigidError("a solution moves in a continuous family; not rigid, use classify_fiber");
  }
  if (finds_off_axis_solution(p, seed))
    throw NotRigidError("a solution lies off the frame axes; not rigid, use classify_fiber");
  return solutions.size();
}

}  // namespace raagrep
