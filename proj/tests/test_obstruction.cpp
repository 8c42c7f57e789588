#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "raagrep/generators.hpp"
#include "raagrep/obstruction.hpp"
#include "raagrep/path.hpp"
#include "test_support.hpp"

using namespace raagrep;
using testing_support::random_marking;
using testing_support::random_s3;

namespace {

constexpr Sign P = Sign::plus;
constexpr Sign M = Sign::minus;
const double s = 1.0 / std::sqrt(2.0);

Representation rep(std::initializer_list<Quaternion> qs) {
  Representation x;
  for (const auto& q : qs) x.values.emplace_back(q);
  return x;
}

}  // namespace

TEST_CASE("is_representation examples") {
  const Graph e = path_graph(2);
  auto triv = is_representation(e, Representation::trivial(e));
  CHECK(triv.ok);
  CHECK(triv.max_residual == 0);
  CHECK(is_representation(e, rep({Quaternion::i(), Quaternion::j()})).ok);
  auto bad = is_representation(e, rep({Quaternion::i(), Quaternion{0, s, s, 0}}));
  CHECK(!bad.ok);
  CHECK(bad.max_residual > 0.1);
  CHECK_THROWS_AS(is_representation(e, rep({Quaternion::i()})), std::invalid_argument);
}

TEST_CASE("obstruction_map examples") {
  const Graph e = path_graph(2);
  CHECK(obstruction_map(e, Representation::trivial(e)) == EdgeMarking{P});
  CHECK(obstruction_map(e, rep({Quaternion::i(), Quaternion::j()})) == EdgeMarking{M});
  const Graph tri = complete_graph(3);
  CHECK(obstruction_map(tri, rep({Quaternion::i(), Quaternion::j(), Quaternion::k()})) == EdgeMarking{M, M, M});
  CHECK_THROWS_AS(obstruction_map(e, rep({Quaternion::i(), Quaternion{0, s, s, 0}})), std::domain_error);
}

TEST_CASE("lift independence") {
  const Graph e = path_graph(2);
  const Representation x = rep({Quaternion::i(), Quaternion::j()});
  CHECK(lift_independence_check(e, x, 100));
  const std::vector<UnitQuaternion> flips[] = {
      {UnitQuaternion(Quaternion::i()), UnitQuaternion(Quaternion::j())},
      {UnitQuaternion(-Quaternion::i()), UnitQuaternion(Quaternion::j())},
      {UnitQuaternion(Quaternion::i()), UnitQuaternion(-Quaternion::j())},
      {UnitQuaternion(-Quaternion::i()), UnitQuaternion(-Quaternion::j())}};
  for (const auto& l : flips) CHECK(obstruction_map_with_lifts(e, l) == EdgeMarking{M});

  std::mt19937_64 rng(31);
  for (int t = 0; t < 100; ++t) {
    const Graph k = random_tree(6, rng);
    const Representation y = construct_in_fiber(MarkedGraph(k, random_marking(k, rng)));
    CHECK(lift_independence_check(k, y, 10, rng()));
  }
}

TEST_CASE("pullback_representation naturality") {
  const Graph tri = complete_graph(3);
  const Representation x = rep({Quaternion::i(), Quaternion::j(), Quaternion::k()});
  const GraphHom id = identity_hom(tri);
  CHECK(pullback_representation(id, x) == x);

  const GraphHom inc{path_graph(2), tri, {1, 2}};
  inc.validate(false);
  const Representation r = pullback_representation(inc, x);
  CHECK(r.values == std::vector<Rotation>{x[1], x[2]});
  CHECK(obstruction_map(inc.source, r) == EdgeMarking{M});

  std::mt19937_64 rng(32);
  for (int t = 0; t < 200; ++t) {
    const Graph target = random_tree(5, rng);
    const Representation y = construct_in_fiber(MarkedGraph(target, random_marking(target, rng)));
    const GraphHom f = random_hom(target, 6, 0.6, rng);
    CHECK(obstruction_map(f.source, pullback_representation(f, y)) ==
          pullback_marking(f, obstruction_map(target, y)));
  }
}

TEST_CASE("lifts_to_cover") {
  const Graph e = path_graph(2);
  CHECK(lifts_to_cover(e, Representation::trivial(e)));
  CHECK(!lifts_to_cover(e, rep({Quaternion::i(), Quaternion::j()})));
  std::mt19937_64 rng(33);
  const Graph t = random_tree(7, rng);
  CHECK(lifts_to_cover(t, construct_in_fiber(MarkedGraph(t, constant_marking(t, P)))));
}

TEST_CASE("fiber decomposition: every representation gets one marking") {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 200; ++t) {
    // Axis-valued and central values always commute in SO(3).
    const Graph k = random_graph(5, 0.5, rng);
    std::uniform_int_distribution<int> pick(0, 3);
    const Quaternion axes[] = {Quaternion::one(), Quaternion::i(), Quaternion::j(), Quaternion::k()};
    Representation x;
    for (std::size_t v = 0; v < k.vertex_count(); ++v) x.values.emplace_back(axes[pick(rng)]);
    const EdgeMarking m = obstruction_map(k, x);
    CHECK(m.size() == k.edge_count());
    for (std::size_t e = 0; e < k.edge_count(); ++e) {
      const auto a = x[k.edge(e).v].rep(), b = x[k.edge(e).w].rep();
      const bool anti = a.is_imaginary() && b.is_imaginary() && !(Rotation(a) == Rotation(b));
      CHECK((m[e] == M) == anti);
    }
  }
}

TEST_CASE("matrix membership residuals") {
  const CMatrix j = symplectic_form(1);
  CHECK(membership_residual(CMatrix::Identity(2, 2), GroupTag::SU) < 1e-15);
  CHECK(membership_residual(j, GroupTag::Sp) < 1e-15);
  CMatrix phase = CMatrix::Identity(2, 2);
  phase(0, 0) = std::complex<double>(0, 1);
  CHECK(membership_residual(phase, GroupTag::U) < 1e-15);
  CHECK(membership_residual(phase, GroupTag::SU) > 0.5);
  CHECK(membership_residual(2.0 * CMatrix::Identity(2, 2), GroupTag::U) > 0.5);
  CHECK(to_string(GroupTag::Sp) == "Sp");
  CHECK(group_tag_from_string("U") == GroupTag::U);
  CHECK_THROWS_AS(group_tag_from_string("SO"), std::invalid_argument);

  MatrixRepresentation x{GroupTag::SU, {quaternion_to_su2(Quaternion::i()), quaternion_to_su2(Quaternion::j())}};
  CHECK(!is_representation(path_graph(2), x).ok);
  CHECK(is_representation(empty_graph(2), x).ok);
}
