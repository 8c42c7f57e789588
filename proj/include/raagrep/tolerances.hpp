#pragma once

namespace raagrep {

/// Two-tier numeric tolerances. `construct` bounds noise allowed in values we
/// build ourselves; `decide` is the threshold for rounding a lifted commutator
/// to +1 or -1.
struct Tolerances {
  double construct = 1e-9;
  double decide = 1e-6;
};

inline constexpr double kConstructTol = 1e-9;
inline constexpr double kDecideTol = 1e-6;
inline constexpr double kEigenClusterTol = 1e-8;

}  // namespace raagrep
