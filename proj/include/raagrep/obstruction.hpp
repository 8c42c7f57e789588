#pragma once

// Representations of a RAAG as commuting tuples, and the obstruction map
// R(K, SO(3)) -> {+1, -1}^E given by lifting edge commutators to S^3.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "raagrep/graph.hpp"
#include "raagrep/quat.hpp"
#include "raagrep/tolerances.hpp"

namespace raagrep {

/// Vertex values in SO(3), indexed like the graph's vertices.
struct Representation {
  std::vector<Rotation> values;

  static Representation trivial(const Graph& k) { return {std::vector<Rotation>(k.vertex_count())}; }
  const Rotation& operator[](std::size_t v) const { return values.at(v); }
  friend bool operator==(const Representation&, const Representation&) = default;
};

enum class GroupTag { SU, U, Sp };

std::string to_string(GroupTag g);
GroupTag group_tag_from_string(const std::string& s);

using CMatrix = Eigen::MatrixXcd;

/// Vertex values in a unitary matrix group. Sp(n) sits in U(2n) as the
/// matrices with A^T J A = J, J = [[0, I], [-I, 0]].
struct MatrixRepresentation {
  GroupTag group = GroupTag::SU;
  std::vector<CMatrix> values;

  std::size_t dimension() const { return values.empty() ? 0 : static_cast<std::size_t>(values[0].rows()); }
};

/// Standard symplectic form on C^{2n}.
CMatrix symplectic_form(std::size_t n);

/// Largest deviation of `a` from membership in `group` (unitarity, det,
/// symplectic condition).
double membership_residual(const CMatrix& a, GroupTag group);

struct RepresentationCheck {
  bool ok = false;
  double max_residual = 0;
};

/// Every edge commutator within `tol` of the identity. For SO(3) the
/// residual is the distance of the lifted commutator from {+1, -1}; for
/// matrices it is the Frobenius norm of A B A^-1 B^-1 - I.
RepresentationCheck is_representation(const Graph& k, const Representation& x, double tol = kDecideTol);
RepresentationCheck is_representation(const Graph& k, const MatrixRepresentation& x,
                                      double tol = kDecideTol);

/// Per-edge sign of the lifted commutator [x~(v(e)), x~(w(e))]. Throws
/// std::domain_error("not a representation within tolerance") if some edge's
/// lifted commutator is farther than `tol` from both +1 and -1.
EdgeMarking obstruction_map(const Graph& k, const Representation& x, double tol = kDecideTol);

/// Same map evaluated with an explicit lift per vertex.
EdgeMarking obstruction_map_with_lifts(const Graph& k, const std::vector<UnitQuaternion>& lifts,
                                       double tol = kDecideTol);

/// Recomputes the obstruction with random sign choices per vertex lift,
/// `trials` times, and reports whether every result matched.
bool lift_independence_check(const Graph& k, const Representation& x, std::size_t trials,
                             std::uint64_t seed = 0x5eed);

/// (f* x)(v) = x(f(v)).
Representation pullback_representation(const GraphHom& f, const Representation& x);
MatrixRepresentation pullback_representation(const GraphHom& f, const MatrixRepresentation& x);

/// True iff the obstruction is +1 on every edge, i.e. the generator lifts
/// extend to a homomorphism into S^3.
bool lifts_to_cover(const Graph& k, const Representation& x, double tol = kDecideTol);

}  // namespace raagrep
