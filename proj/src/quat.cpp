#include "raagrep/quat.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace raagrep {

bool Quaternion::is_finite() const {
  return std::isfinite(x0) && std::isfinite(x1) && std::isfinite(x2) && std::isfinite(x3);
}

double Quaternion::norm() const { return std::sqrt(norm_sq()); }

double max_abs_diff(const Quaternion& a, const Quaternion& b) {
  return std::max({std::abs(a.x0 - b.x0), std::abs(a.x1 - b.x1), std::abs(a.x2 - b.x2),
                   std::abs(a.x3 - b.x3)});
}

UnitQuaternion::UnitQuaternion(const Quaternion& q, double tol) {
  if (!q.is_finite()) throw std::invalid_argument("quaternion has non-finite coordinates");
  const double n = q.norm();
  if (std::abs(n - 1.0) > tol)
    throw std::invalid_argument("quaternion norm " + std::to_string(n) + " is not 1");
  q_ = (1.0 / n) * q;
}

UnitQuaternion UnitQuaternion::normalized(const Quaternion& q) {
  if (!q.is_finite()) throw std::invalid_argument("quaternion has non-finite coordinates");
  const double n = q.norm();
  if (n < 1e-300) throw std::invalid_argument("cannot normalize the zero quaternion");
  return {(1.0 / n) * q, Unchecked{}};
}

UnitQuaternion UnitQuaternion::inverse() const { return {conj(q_), Unchecked{}}; }

UnitQuaternion UnitQuaternion::operator-() const { return {-q_, Unchecked{}}; }

UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) {
  // Renormalize to keep drift out of long products.
  return UnitQuaternion::normalized(mul(a.q_, b.q_));
}

bool UnitQuaternion::is_imaginary(double tol) const { return std::abs(q_.x0) <= tol; }

Rotation::Rotation(const UnitQuaternion& q) : rep_(q) {
  const Quaternion& v = q.value();
  for (double c : {v.x0, v.x1, v.x2, v.x3}) {
    if (std::abs(c) > kConstructTol) {
      if (c < 0) rep_ = -q;
      break;
    }
  }
}

bool Rotation::is_identity(double tol) const {
  return max_abs_diff(rep_.value(), Quaternion::one()) <= tol;
}

bool operator==(const Rotation& a, const Rotation& b) {
  return max_abs_diff(a.rep_.value(), b.rep_.value()) <= kConstructTol;
}

Matrix3 to_matrix(const UnitQuaternion& u) {
  const auto& q = u.value();
  const double w = q.x0, x = q.x1, y = q.x2, z = q.x3;
  return {{{1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y)},
           {2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x)},
           {2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y)}}};
}

Matrix3 to_matrix(const Rotation& r) { return to_matrix(r.rep()); }

std::pair<UnitQuaternion, UnitQuaternion> lifts(const Rotation& r) { return {r.rep(), -r.rep()}; }

UnitQuaternion commutator(const UnitQuaternion& a, const UnitQuaternion& b) {
  return a * b * a.inverse() * b.inverse();
}

double central_residual(const UnitQuaternion& a, const UnitQuaternion& b) {
  const Quaternion c = commutator(a, b).value();
  return std::min((c - Quaternion::one()).norm(), (c + Quaternion::one()).norm());
}

std::optional<int> is_sign_commutator(const UnitQuaternion& a, const UnitQuaternion& b,
                                      double tol) {
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  const Quaternion c = commutator(a, b).value();
  if ((c - Quaternion::one()).norm() <= tol) return 1;
  if ((c + Quaternion::one()).norm() <= tol) return -1;
  return std::nullopt;
}

namespace {

UnitQuaternion least_aligned_perpendicular(const Quaternion& a) {
  const Quaternion basis[3] = {Quaternion::i(), Quaternion::j(), Quaternion::k()};
  std::size_t best = 0;
  double best_dot = std::abs(inner(basis[0], a));
  for (std::size_t b = 1; b < 3; ++b) {
    const double d = std::abs(inner(basis[b], a));
    if (d < best_dot) {
      best = b;
      best_dot = d;
    }
  }
  const Quaternion& e = basis[best];
  return UnitQuaternion::normalized(e - inner(e, a) * a);
}

}  // namespace

UnitQuaternion perpendicular_extend(std::span<const UnitQuaternion> units) {
  if (units.size() > 2) throw std::invalid_argument("perpendicular_extend takes at most two points");
  for (const auto& u : units) {
    if (!u.is_imaginary()) throw std::invalid_argument("perpendicular_extend: input is not imaginary");
  }
  if (units.size() == 2 && std::abs(inner(units[0].value(), units[1].value())) > kConstructTol)
    throw std::invalid_argument("perpendicular_extend: inputs are not orthogonal");
  if (units.empty()) return UnitQuaternion(Quaternion::i());
  if (units.size() == 1) return least_aligned_perpendicular(units[0].value());
  return UnitQuaternion::normalized(cross(units[0].value(), units[1].value()));
}

std::optional<UnitQuaternion> common_perpendicular(std::span<const UnitQuaternion> axes,
                                                   double tol) {
  std::vector<Quaternion> distinct;
  for (const auto& a : axes) {
    const Quaternion v = im(a.value());
    const bool seen = std::any_of(distinct.begin(), distinct.end(),
                                  [&](const Quaternion& d) { return cross(d, v).norm() <= tol; });
    if (!seen) distinct.push_back(v);
  }
  if (distinct.empty()) return UnitQuaternion(Quaternion::i());
  if (distinct.size() == 1) return least_aligned_perpendicular(distinct[0]);
  const Quaternion n = cross(distinct[0], distinct[1]);
  const auto normal = UnitQuaternion::normalized(n);
  for (std::size_t t = 2; t < distinct.size(); ++t) {
    if (std::abs(inner(normal.value(), distinct[t])) > tol) return std::nullopt;
  }
  return normal;
}

UnitQuaternion exp_imaginary(const Quaternion& axis, double angle) {
  const Quaternion a = im(axis);
  return UnitQuaternion::normalized(Quaternion{std::cos(angle), 0, 0, 0} + std::sin(angle) * a);
}

}  // namespace raagrep
