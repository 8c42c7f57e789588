#pragma once

// The algebraic second Stiefel-Whitney cocycle of an SO(3) representation:
// w(g1, g2) = x~(g1 g2) x~(g2)^-1 x~(g1)^-1 for a set-theoretic lift x~.

#include <functional>
#include <optional>
#include <vector>

#include "raagrep/graph.hpp"
#include "raagrep/obstruction.hpp"
#include "raagrep/quat.hpp"
#include "raagrep/words.hpp"

namespace raagrep {

/// x~(g) = product of the chosen generator lifts along the normal form of g.
/// Defined on group elements, not on words.
class LiftFunction {
 public:
  /// Called once per letter with (vertex, exponent, lift of that letter).
  using Hook = std::function<UnitQuaternion(std::size_t, int, const UnitQuaternion&)>;

  LiftFunction(Graph k, std::vector<UnitQuaternion> generator_lifts);
  /// Canonical representatives of x as the generator lifts.
  static LiftFunction canonical(const Graph& k, const Representation& x);

  /// Same lifts, every letter routed through `hook`. Used for fault injection.
  LiftFunction with_hook(Hook hook) const;

  UnitQuaternion operator()(const Word& w) const;
  UnitQuaternion eval(const NormalForm& g) const;

  const Graph& graph() const { return graph_; }
  const std::vector<UnitQuaternion>& generator_lifts() const { return lifts_; }

 private:
  Graph graph_;
  std::vector<UnitQuaternion> lifts_;
  Hook hook_;
};

/// w(g1, g2) rounded to a sign. Throws std::domain_error if the value is not
/// within `tol` of +1 or -1.
Sign cocycle_eval(const LiftFunction& l, const Word& g1, const Word& g2, double tol = kDecideTol);

/// dw(g1, g2, g3) = w(g2, g3) w(g1 g2, g3)^-1 w(g1, g2 g3) w(g1, g2)^-1 == +1.
bool cocycle_closed_check(const LiftFunction& l, const Word& g1, const Word& g2, const Word& g3,
                          double tol = kDecideTol);

struct OswRow {
  std::size_t edge = 0;
  Sign obstruction = Sign::plus;
  Sign w_vw = Sign::plus;
  Sign w_wv = Sign::plus;
  bool holds() const { return obstruction == w_vw * w_wv; }
};

/// Per edge {v, w}: o(x)_e against w(v, w)^-1 w(w, v)^-1.
std::vector<OswRow> osw_rows(const LiftFunction& l, double tol = kDecideTol);
bool osw_bridge_check(const Graph& k, const Representation& x, double tol = kDecideTol);

/// When the obstruction vanishes, the generator lifts themselves satisfy
/// every edge relation in S^3 (checked within tol) and extend to a
/// homomorphism; returns them. nullopt otherwise.
std::optional<std::vector<UnitQuaternion>> coboundary_trivialize(const LiftFunction& l, double tol = kDecideTol);

}  // namespace raagrep
