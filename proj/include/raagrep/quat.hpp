#pragma once

// Quaternions, the unit sphere S^3, and SO(3) as S^3 modulo {+1, -1}.

#include <array>
#include <optional>
#include <span>
#include <utility>

#include "raagrep/tolerances.hpp"

namespace raagrep {

/// q = x0 + x1 i + x2 j + x3 k
struct Quaternion {
  double x0 = 0, x1 = 0, x2 = 0, x3 = 0;

  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  bool is_finite() const;
  double norm() const;
  double norm_sq() const { return x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3; }

  friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
  }
  friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
  }
  friend constexpr Quaternion operator-(const Quaternion& a) { return {-a.x0, -a.x1, -a.x2, -a.x3}; }
  friend constexpr Quaternion operator*(double s, const Quaternion& a) {
    return {s * a.x0, s * a.x1, s * a.x2, s * a.x3};
  }
  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Hamilton product.
constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) {
  return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
          a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
          a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
          a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
}
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) { return mul(a, b); }

constexpr Quaternion conj(const Quaternion& q) { return {q.x0, -q.x1, -q.x2, -q.x3}; }
constexpr double re(const Quaternion& q) { return q.x0; }
constexpr Quaternion im(const Quaternion& q) { return {0, q.x1, q.x2, q.x3}; }

/// <a, b> = Re(a b*), the Euclidean inner product on R^4.
constexpr double inner(const Quaternion& a, const Quaternion& b) { return re(mul(a, conj(b))); }

/// Cross product of the imaginary parts, as an imaginary quaternion.
constexpr Quaternion cross(const Quaternion& a, const Quaternion& b) {
  return {0, a.x2 * b.x3 - a.x3 * b.x2, a.x3 * b.x1 - a.x1 * b.x3, a.x1 * b.x2 - a.x2 * b.x1};
}

/// Componentwise max-abs distance.
double max_abs_diff(const Quaternion& a, const Quaternion& b);

/// A point of S^3. Construction checks | |q| - 1 | <= 1e-9 and renormalizes.
class UnitQuaternion {
 public:
  UnitQuaternion() = default;
  explicit UnitQuaternion(const Quaternion& q, double tol = kConstructTol);

  /// Normalizes any finite nonzero quaternion.
  static UnitQuaternion normalized(const Quaternion& q);

  const Quaternion& value() const { return q_; }
  double re() const { return q_.x0; }

  UnitQuaternion inverse() const;
  UnitQuaternion operator-() const;
  friend UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b);
  friend bool operator==(const UnitQuaternion&, const UnitQuaternion&) = default;

  /// Purely imaginary within `tol` (a point of S^2).
  bool is_imaginary(double tol = kConstructTol) const;

 private:
  struct Unchecked {};
  UnitQuaternion(const Quaternion& q, Unchecked) : q_(q) {}
  Quaternion q_ = Quaternion::one();
};

/// An element of SO(3), stored as the canonical lift: the first coordinate
/// (in order x0..x3) with magnitude above 1e-9 is positive.
class Rotation {
 public:
  Rotation() = default;
  explicit Rotation(const UnitQuaternion& q);
  explicit Rotation(const Quaternion& q) : Rotation(UnitQuaternion(q)) {}

  static Rotation identity() { return {}; }

  const UnitQuaternion& rep() const { return rep_; }
  bool is_identity(double tol = kConstructTol) const;

  /// Equal iff canonical representatives agree within 1e-9 componentwise.
  friend bool operator==(const Rotation& a, const Rotation& b);

 private:
  UnitQuaternion rep_;
};

using Matrix3 = std::array<std::array<double, 3>, 3>;

/// Matrix of a |-> q a q^-1 on Im(H) = R^3.
Matrix3 to_matrix(const UnitQuaternion& q);
Matrix3 to_matrix(const Rotation& r);

/// The two points of S^3 over r, {+q, -q}.
std::pair<UnitQuaternion, UnitQuaternion> lifts(const Rotation& r);

/// a b a^-1 b^-1
UnitQuaternion commutator(const UnitQuaternion& a, const UnitQuaternion& b);

/// Distance of [a, b] from the center {+1, -1} of S^3.
double central_residual(const UnitQuaternion& a, const UnitQuaternion& b);

/// +1 if [a,b] is within tol of 1, -1 if within tol of -1, nullopt otherwise.
std::optional<int> is_sign_commutator(const UnitQuaternion& a, const UnitQuaternion& b,
                                      double tol);

/// A point of S^2 orthogonal to up to two mutually orthogonal points of S^2.
/// {} -> i; {a} -> the coordinate axis least aligned with a (ties to the
/// earliest of i, j, k), projected off a; {a, b} -> a x b.
/// Throws std::invalid_argument on non-imaginary, non-unit or non-orthogonal input.
UnitQuaternion perpendicular_extend(std::span<const UnitQuaternion> units);

/// A unit imaginary quaternion orthogonal to every axis in `axes` (imaginary
/// units, not necessarily orthogonal). Parallel axes collapse to one. Returns
/// nullopt if the axes span all of Im(H).
std::optional<UnitQuaternion> common_perpendicular(std::span<const UnitQuaternion> axes,
                                                   double tol = kConstructTol);

/// exp(angle * axis) for an imaginary unit axis.
UnitQuaternion exp_imaginary(const Quaternion& axis, double angle);

}  // namespace raagrep
