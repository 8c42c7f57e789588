#include "raagrep/obstruction.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <stdexcept>

namespace raagrep {

std::string to_string(GroupTag g) {
  switch (g) {
    case GroupTag::SU: return "SU";
    case GroupTag::U: return "U";
    case GroupTag::Sp: return "Sp";
  }
  return "?";
}

GroupTag group_tag_from_string(const std::string& s) {
  if (s == "SU") return GroupTag::SU;
  if (s == "U") return GroupTag::U;
  if (s == "Sp") return GroupTag::Sp;
  throw std::invalid_argument("unknown matrix group '" + s + "' (expected SU, U or Sp)");
}

CMatrix symplectic_form(std::size_t n) {
  const auto m = static_cast<Eigen::Index>(n);
  CMatrix j = CMatrix::Zero(2 * m, 2 * m);
  j.topRightCorner(m, m) = CMatrix::Identity(m, m);
  j.bottomLeftCorner(m, m) = -CMatrix::Identity(m, m);
  return j;
}

double membership_residual(const CMatrix& a, GroupTag group) {
  if (a.rows() != a.cols() || a.rows() == 0) return std::numeric_limits<double>::infinity();
  const auto n = a.rows();
  double r = (a.adjoint() * a - CMatrix::Identity(n, n)).norm();
  if (group == GroupTag::SU) r = std::max(r, std::abs(a.determinant() - 1.0));
  if (group == GroupTag::Sp) {
    if (n % 2 != 0) return std::numeric_limits<double>::infinity();
    const CMatrix j = symplectic_form(static_cast<std::size_t>(n / 2));
    r = std::max(r, (a.transpose() * j * a - j).norm());
  }
  return r;
}

RepresentationCheck is_representation(const Graph& k, const Representation& x, double tol) {
  if (x.values.size() != k.vertex_count()) throw std::invalid_argument("assignment is not total");
  RepresentationCheck out{true, 0.0};
  for (const Edge& e : k.edges())
    out.max_residual = std::max(out.max_residual, central_residual(x[e.v].rep(), x[e.w].rep()));
  out.ok = out.max_residual <= tol;
  return out;
}

RepresentationCheck is_representation(const Graph& k, const MatrixRepresentation& x, double tol) {
  if (x.values.size() != k.vertex_count()) throw std::invalid_argument("assignment is not total");
  RepresentationCheck out{true, 0.0};
  for (const Edge& e : k.edges()) {
    const CMatrix& a = x.values[e.v];
    const CMatrix& b = x.values[e.w];
    const CMatrix c = a * b * a.adjoint() * b.adjoint();
    out.max_residual = std::max(out.max_residual, (c - CMatrix::Identity(c.rows(), c.cols())).norm());
  }
  out.ok = out.max_residual <= tol;
  return out;
}

EdgeMarking obstruction_map_with_lifts(const Graph& k, const std::vector<UnitQuaternion>& lifts,
                                       double tol) {
  if (lifts.size() != k.vertex_count()) throw std::invalid_argument("assignment is not total");
  EdgeMarking out(k.edge_count(), Sign::plus);
  for (std::size_t e = 0; e < out.size(); ++e) {
    const Edge& ed = k.edge(e);
    const auto s = is_sign_commutator(lifts[ed.v], lifts[ed.w], tol);
    if (!s) throw std::domain_error("not a representation within tolerance (edge " + k.edge_label(e) + ")");
    out[e] = sign_from_int(*s);
  }
  return out;
}

EdgeMarking obstruction_map(const Graph& k, const Representation& x, double tol) {
  std::vector<UnitQuaternion> lifts;
  lifts.reserve(x.values.size());
  for (const auto& r : x.values) lifts.push_back(r.rep());
  return obstruction_map_with_lifts(k, lifts, tol);
}

bool lift_independence_check(const Graph& k, const Representation& x, std::size_t trials,
                             std::uint64_t seed) {
  const EdgeMarking reference = obstruction_map(k, x);
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution flip(0.5);
  std::vector<UnitQuaternion> lifts(x.values.size());
  for (std::size_t t = 0; t < trials; ++t) {
    for (std::size_t v = 0; v < lifts.size(); ++v) lifts[v] = flip(rng) ? -x[v].rep() : x[v].rep();
    if (obstruction_map_with_lifts(k, lifts) != reference) return false;
  }
  return true;
}

Representation pullback_representation(const GraphHom& f, const Representation& x) {
  if (x.values.size() != f.target.vertex_count()) throw std::invalid_argument("assignment is not total");
  Representation out;
  out.values.reserve(f.source.vertex_count());
  for (std::size_t t : f.vertex_map) out.values.push_back(x[t]);
  return out;
}

MatrixRepresentation pullback_representation(const GraphHom& f, const MatrixRepresentation& x) {
  if (x.values.size() != f.target.vertex_count()) throw std::invalid_argument("assignment is not total");
  MatrixRepresentation out{x.group, {}};
  for (std::size_t t : f.vertex_map) out.values.push_back(x.values[t]);
  return out;
}

bool lifts_to_cover(const Graph& k, const Representation& x, double tol) {
  const EdgeMarking o = obstruction_map(k, x, tol);
  return std::all_of(o.begin(), o.end(), [](Sign s) { return s == Sign::plus; });
}

}  // namespace raagrep
