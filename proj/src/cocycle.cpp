#include "raagrep/cocycle.hpp"

#include <algorithm>
#include <stdexcept>

namespace raagrep {

LiftFunction::LiftFunction(Graph k, std::vector<UnitQuaternion> generator_lifts)
    : graph_(std::move(k)), lifts_(std::move(generator_lifts)) {
  if (lifts_.size() != graph_.vertex_count()) throw std::invalid_argument("one lift per vertex required");
}

LiftFunction LiftFunction::canonical(const Graph& k, const Representation& x) {
  if (x.values.size() != k.vertex_count()) throw std::invalid_argument("representation does not match the graph");
  std::vector<UnitQuaternion> lifts;
  for (const Rotation& r : x.values) lifts.push_back(r.rep());
  return {k, std::move(lifts)};
}

LiftFunction LiftFunction::with_hook(Hook hook) const {
  LiftFunction out = *this;
  out.hook_ = std::move(hook);
  return out;
}

UnitQuaternion LiftFunction::operator()(const Word& w) const { return eval(normalize(graph_, w)); }

UnitQuaternion LiftFunction::eval(const NormalForm& g) const {
  UnitQuaternion acc;
  for (const Letter& l : g.word()) {
    UnitQuaternion q = l.exponent > 0 ? lifts_[l.vertex] : lifts_[l.vertex].inverse();
    if (hook_) q = hook_(l.vertex, l.exponent, q);
    acc = acc * q;
  }
  return acc;
}

namespace {

Sign round_sign(const UnitQuaternion& q, double tol) {
  const Quaternion& v = q.value();
  if (max_abs_diff(v, Quaternion::one()) <= tol) return Sign::plus;
  if (max_abs_diff(v, -Quaternion::one()) <= tol) return Sign::minus;
  throw std::domain_error("cocycle value is not within tolerance of +1 or -1");
}

}  // namespace

Sign cocycle_eval(const LiftFunction& l, const Word& g1, const Word& g2, double tol) {
  const UnitQuaternion w = l(word_mul(g1, g2)) * l(g2).inverse() * l(g1).inverse();
  return round_sign(w, tol);
}

bool cocycle_closed_check(const LiftFunction& l, const Word& g1, const Word& g2, const Word& g3, double tol) {
  const Sign d = cocycle_eval(l, g2, g3, tol) * cocycle_eval(l, word_mul(g1, g2), g3, tol) *
                 cocycle_eval(l, g1, word_mul(g2, g3), tol) * cocycle_eval(l, g1, g2, tol);
  return d == Sign::plus;
}

std::vector<OswRow> osw_rows(const LiftFunction& l, double tol) {
  const Graph& k = l.graph();
  const EdgeMarking o = obstruction_map_with_lifts(k, l.generator_lifts(), tol);
  std::vector<OswRow> rows;
  for (std::size_t e = 0; e < k.edge_count(); ++e) {
    const Word v{{k.edge(e).v, 1}}, w{{k.edge(e).w, 1}};
    rows.push_back({e, o[e], cocycle_eval(l, v, w, tol), cocycle_eval(l, w, v, tol)});
  }
  return rows;
}

bool osw_bridge_check(const Graph& k, const Representation& x, double tol) {
  const auto rows = osw_rows(LiftFunction::canonical(k, x), tol);
  return std::all_of(rows.begin(), rows.end(), [](const OswRow& r) { return r.holds(); });
}

std::optional<std::vector<UnitQuaternion>> coboundary_trivialize(const LiftFunction& l, double tol) {
  const Graph& k = l.graph();
  const auto& lifts = l.generator_lifts();
  const EdgeMarking o = obstruction_map_with_lifts(k, lifts, tol);
  if (std::any_of(o.begin(), o.end(), [](Sign s) { return s == Sign::minus; })) return std::nullopt;
  for (const Edge& e : k.edges()) {
    if (max_abs_diff(commutator(lifts[e.v], lifts[e.w]).value(), Quaternion::one()) > tol) return std::nullopt;
  }
  return lifts;
}

}  // namespace raagrep
