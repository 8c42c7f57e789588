#include <algorithm>
#include <map>
#include <stdexcept>

#include "raagrep/path.hpp"

namespace raagrep {

Representation construct_in_fiber(const MarkedGraph& m) { return construct_in_fiber(m, classify_fiber(m)); }

Representation construct_in_fiber(const MarkedGraph& m, const Classification& c) {
  if (c.fiber.verdict == FiberVerdict::Empty) throw std::domain_error("fiber is empty; nothing to construct");
  if (c.fiber.verdict == FiberVerdict::Unknown)
    throw std::domain_error("fiber verdict is Unknown; no construction available");

  std::vector<const TraceEntry*> moves;
  for (const TraceEntry& e : c.trace) {
    if (std::holds_alternative<step::VertexDeletion>(e.step) || std::holds_alternative<step::EdgeContraction>(e.step))
      moves.push_back(&e);
  }
  const MarkedGraph& residual = moves.empty() ? m : moves.back()->after;
  const Graph& g = residual.graph;
  if (std::any_of(residual.marking.begin(), residual.marking.end(), [](Sign s) { return s == Sign::plus; }))
    throw std::logic_error("reduction residual still carries a +1 edge");
  const auto order = degeneracy_ordering(g);
  if (!order) throw std::logic_error("reduction residual is not 2-degenerate");

  std::vector<std::optional<UnitQuaternion>> placed(g.vertex_count());
  for (std::size_t v : *order) {
    std::vector<UnitQuaternion> back;
    for (std::size_t u : g.neighbors(v))
      if (placed[u]) back.push_back(*placed[u]);
    placed[v] = back.size() == 1 ? perpendicular_extend(back) : *common_perpendicular(back);
  }

  std::map<std::string, Rotation, std::less<>> value;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) value[g.name(v)] = Rotation(*placed[v]);
  for (auto it = moves.rbegin(); it != moves.rend(); ++it) {
    if (const auto* del = std::get_if<step::VertexDeletion>(&(*it)->step)) {
      value[del->vertex] = Rotation::identity();
    } else {
      const auto& con = std::get<step::EdgeContraction>((*it)->step);
      value[con.w] = value.at(con.v);
    }
  }

  Representation x;
  for (const std::string& name : m.graph.names()) x.values.push_back(value.at(name));
  return x;
}

namespace {

std::vector<Quaternion> distinct_axes(const std::vector<Quaternion>& axes) {
  std::vector<Quaternion> out;
  for (const Quaternion& a : axes) {
    if (std::none_of(out.begin(), out.end(), [&](const Quaternion& b) { return cross(a, b).norm() <= kConstructTol; }))
      out.push_back(a);
  }
  return out;
}

Quaternion unit_axis(const UnitQuaternion& q) { return UnitQuaternion::normalized(im(q.value())).value(); }

}  // namespace

LocalMove fiber_local_move(const MarkedGraph& m, const Representation& x, std::size_t v, double step) {
  const Graph& g = m.graph;
  if (v >= g.vertex_count()) throw std::out_of_range("vertex index out of range");
  if (obstruction_map(g, x) != m.marking) throw std::invalid_argument("representation is not in the fiber of the marking");

  std::vector<Quaternion> minus_axes, plus_axes;
  for (std::size_t u : g.neighbors(v)) {
    const Rotation& r = x[u];
    if (m.mark(*g.edge_index(u, v)) == Sign::minus) {
      minus_axes.push_back(unit_axis(r.rep()));
    } else if (!r.is_identity()) {
      plus_axes.push_back(unit_axis(r.rep()));
    }
  }
  minus_axes = distinct_axes(minus_axes);
  plus_axes = distinct_axes(plus_axes);

  LocalMove out{x, false, {}};
  const UnitQuaternion q = x[v].rep();
  if (minus_axes.empty()) {
    if (plus_axes.size() >= 2) {
      out.notice = "value is pinned to the center by two independent commuting neighbors";
    } else {
      const Quaternion axis = plus_axes.empty() ? Quaternion::i() : plus_axes[0];
      out.x.values[v] = Rotation(exp_imaginary(axis, step) * q);
      out.moved = step != 0;
    }
    return out;
  }
  if (!plus_axes.empty()) {
    out.notice = "value is pinned to an axis by a +1 edge to a non-identity neighbor";
    return out;
  }
  if (minus_axes.size() >= 2) {
    out.notice = "value is pinned to two antipodal points by two -1 edges";
    return out;
  }
  const UnitQuaternion half = exp_imaginary(minus_axes[0], step / 2);
  out.x.values[v] = Rotation(half * q * half.inverse());
  out.moved = step != 0;
  return out;
}

}  // namespace raagrep
