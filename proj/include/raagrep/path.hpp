#pragma once

// Explicit constructions: a point in a given SO(3) fiber, local moves inside
// a fiber, retraction paths to the trivial representation for SU(n), U(n)
// and Sp(n), and certificates for groups without the centralizer property.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "raagrep/fiber.hpp"
#include "raagrep/graph.hpp"
#include "raagrep/obstruction.hpp"

namespace raagrep {

/// A representation whose obstruction is exactly `m.marking`. The residual
/// all-(-1) graph is filled along its degeneracy ordering (no earlier
/// neighbor: i; one: the perpendicular_extend convention; two: their common
/// perpendicular), then the trace is replayed backwards: a contracted vertex
/// copies the survivor's value and a deleted vertex gets the identity.
/// Throws std::domain_error when the fiber is Empty or Unknown.
Representation construct_in_fiber(const MarkedGraph& m);
Representation construct_in_fiber(const MarkedGraph& m, const Classification& c);

struct LocalMove {
  Representation x;
  bool moved = false;
  std::string notice;  // why nothing moved
};

/// Rotates x(v) by `step` inside the set of values compatible with v's
/// neighbors and marks: all of S^3 when unconstrained, a circle when the
/// constraints pin one axis, a point otherwise (then moved = false).
/// Throws std::invalid_argument if x is not in the fiber of m.
LocalMove fiber_local_move(const MarkedGraph& m, const Representation& x, std::size_t v, double step);

/// One coordinate moving along t |-> left * sum_c exp(i t delta_c) P_c for
/// t in [0, 1], where the P_c are orthogonal projectors summing to I.
struct PathSegment {
  std::size_t vertex = 0;
  CMatrix left;
  std::vector<CMatrix> projectors;
  std::vector<double> deltas;

  CMatrix eval(double t) const;
  bool is_constant() const;
};

/// Path from A to a central element inside the centralizer of S: SU(n) ends
/// at exp(2 pi i k / n) I with det fixed at 1, U(n) at I, Sp(n) at +I or -I.
/// Eigenvalues within 1e-8 share a projector. Throws std::invalid_argument
/// if A does not commute with S or is not in the group, and
/// std::domain_error if no path of this form keeps commuting with S (this
/// happens in Sp(n) when the +1 or -1 eigenspace has no S-invariant complex
/// structure).
PathSegment centralizer_path(const CMatrix& a, std::span<const CMatrix> s, GroupTag group);

/// Path from a central Z to I through diagonal matrices.
PathSegment central_to_identity(const CMatrix& z, GroupTag group);

/// Concatenation of single-coordinate segments, each taking an equal share
/// of [0, 1].
class GroupPath {
 public:
  explicit GroupPath(MatrixRepresentation start);

  void push(PathSegment s);

  MatrixRepresentation eval(double t) const;
  const MatrixRepresentation& start() const { return snapshots_.front(); }
  const MatrixRepresentation& end() const { return snapshots_.back(); }
  std::size_t segment_count() const { return segments_.size(); }
  const std::vector<PathSegment>& segments() const { return segments_; }

 private:
  std::vector<PathSegment> segments_;
  std::vector<MatrixRepresentation> snapshots_;  // value before each segment, plus the end
};

/// Retracts each coordinate in vertex order into the center against its
/// neighbors' current values, then takes each central coordinate to I.
GroupPath path_to_trivial(const Graph& k, const MatrixRepresentation& x);

struct PathCheck {
  double start_error = 0;  // max entry distance of eval(0) from the start
  double end_error = 0;    // max entry distance of eval(1) from the identity
  double max_commutator = 0;
  double max_membership = 0;
  bool ok(double endpoint_tol = kConstructTol, double tol = kDecideTol) const {
    return start_error <= endpoint_tol && end_error <= endpoint_tol && max_commutator <= tol &&
           max_membership <= tol;
  }
};

/// Samples the path at `samples` equispaced times (at least 2).
PathCheck check_path_serial(const Graph& k, const GroupPath& p, const MatrixRepresentation& x,
                            std::size_t samples = 256);
PathCheck check_path_parallel(const Graph& k, const GroupPath& p, const MatrixRepresentation& x,
                              std::size_t samples = 256, int jobs = 0);

/// Lifts g~, h~ in the simply connected cover whose commutator c is central
/// and nontrivial, so g and h commute downstairs but cannot be joined to the
/// center inside their centralizer. SO(3) lifts to S^3 = SU(2) and PSL(n, C)
/// to SL(n, C).
struct PropertyACertificate {
  std::string group;
  CMatrix g_lift, h_lift, c;
};

/// group is "SO3" or "PSL" (n >= 2). Throws std::invalid_argument otherwise.
PropertyACertificate property_a_failure_certificate(std::string_view group, std::size_t n = 2);

struct CertificateCheck {
  bool in_cover = false;          // det g~ = det h~ = 1
  bool commutator_matches = false;
  bool central = false;
  bool nontrivial = false;
  bool ok() const { return in_cover && commutator_matches && central && nontrivial; }
};

CertificateCheck verify_certificate(const PropertyACertificate& cert, double tol = kConstructTol);

/// S^3 as SU(2): 1, i, j, k -> I, diag(i, -i), [[0, 1], [-1, 0]], [[0, i], [i, 0]].
CMatrix quaternion_to_su2(const Quaternion& q);

enum class PropertyA { Has, Lacks, NotListed };

struct PropertyAEntry {
  std::string family;
  PropertyA status;
  std::string basis;
  std::string caveat;
};

std::span<const PropertyAEntry> property_a_table();

/// Looks up names such as "SU(3)", "Sp(2)", "U(1)", "SO(3)", "Spin(5)",
/// "PSL(2,C)", "G2", "abelian", and products joined by "x".
PropertyA property_a_lookup(std::string_view group);

std::string to_string(PropertyA p);

}  // namespace raagrep
