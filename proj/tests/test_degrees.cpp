// Degree invariants: polar multidegrees of plane curves, the signed degree
// of a curve's conormal variety by two independent routes, singularity
// profiles, Gauss-map degrees of trivialized families, and per-component
// degree reports for Lagrangian cycles.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "conormal/cycles.hpp"
#include "conormal/degrees.hpp"
#include "conormal/geometry.hpp"
#include "conormal/ideal_ops.hpp"
#include "conormal/parser.hpp"
#include "conormal/rng.hpp"

using namespace conormal;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_polynomial(r, s);
}

Polynomial plane(const std::string& f) {
  return P(make_ring({"x", "y"}), f);
}

long long polar_route(const std::string& f, unsigned long long seed = 17) {
  Rng rng(seed);
  return conormal_degree_plane_curve(plane(f), rng);
}

long long euler_route(const std::string& f, unsigned long long seed = 17) {
  Rng rng(seed);
  return euler_obstruction_degree_curve(plane(f), rng);
}

} // namespace

TEST_CASE("polar multidegrees of the classical curves") {
  struct Row {
    const char* f;
    long long delta0, delta1;
  };
  const Row rows[] = {
      {"x", 1, 0},                    // a line has no polar locus
      {"x^2 + y^2 - 1", 2, 2},        // smooth conic
      {"y^2 - x^3", 3, 3},            // cuspidal cubic
      {"y^2 - x^3 - x^2", 3, 4},      // nodal cubic
      {"x^4 + y^4 - 1", 4, 12},       // smooth quartic
  };
  for (const auto& row : rows) {
    CAPTURE(row.f);
    Rng rng(17);
    PolarMultidegrees pd = polar_multidegrees(plane(row.f), rng);
    CHECK(pd.delta0 == row.delta0);
    CHECK(pd.delta1 == row.delta1);
  }

  // a homogeneous presentation of the cusp gives the same answer
  RingPtr R3 = make_ring({"x", "y", "z"});
  Rng rng(17);
  PolarMultidegrees pd = polar_multidegrees(P(R3, "y^2*z - x^3"), rng);
  CHECK(pd.delta0 == 3);
  CHECK(pd.delta1 == 3);
}

TEST_CASE("both degree routes agree on the classical curves") {
  struct Row {
    const char* f;
    long long degree;
  };
  const Row rows[] = {
      {"x", -2},
      {"x^2 + y^2 - 1", -2},
      {"y^2 - x^3", -3},
      {"y^2 - x^3 - x^2", -2},
      {"x^4 + y^4 - 1", 4},
  };
  for (const auto& row : rows) {
    CAPTURE(row.f);
    CHECK(polar_route(row.f) == row.degree);
    CHECK(euler_route(row.f) == row.degree);
  }

  // the answer is seed-independent
  CHECK(polar_route("y^2 - x^3 - x^2", 101) == -2);
  CHECK(polar_route("y^2 - x^3 - x^2", 424242) == -2);
}

TEST_CASE("smooth curves follow the degree arithmetic exactly") {
  // for a smooth plane curve of degree d the invariant is d^2 - 3d
  CHECK(euler_route("y^2 - x^3 + x") == 0);
  Rng rng(17);
  PolarMultidegrees pd = polar_multidegrees(plane("y^2 - x^3 + x"), rng);
  CHECK(pd.delta0 == 3);
  CHECK(pd.delta1 == 6);
  CHECK(polar_route("y^2 - x^3 + x") == 0);
}

TEST_CASE("singularity profiles classify nodes and cusps") {
  Rng r1(17);
  CurveSingularityProfile nodal =
      curve_singularity_profile(plane("y^2 - x^3 - x^2"), r1);
  REQUIRE(nodal.orbits.size() == 1);
  CHECK(nodal.orbits[0].orbit_size == 1);
  CHECK(nodal.orbits[0].mu == 1);
  CHECK(nodal.orbits[0].classification == "node");
  CHECK(nodal.orbits[0].curve_multiplicity == 2);
  CHECK(nodal.supported());

  Rng r2(17);
  CurveSingularityProfile cuspidal =
      curve_singularity_profile(plane("y^2 - x^3"), r2);
  REQUIRE(cuspidal.orbits.size() == 1);
  CHECK(cuspidal.orbits[0].orbit_size == 1);
  CHECK(cuspidal.orbits[0].mu == 2);
  CHECK(cuspidal.orbits[0].classification == "cusp");
  CHECK(cuspidal.supported());

  Rng r3(17);
  CurveSingularityProfile smooth =
      curve_singularity_profile(plane("x^2 + y^2 - 1"), r3);
  CHECK(smooth.orbits.empty());
  CHECK(smooth.supported());
}

TEST_CASE("conjugate singular points group into one rational orbit") {
  // a line meeting a circle in two conjugate points: the two nodes are not
  // separately definable over the rationals, so they travel together
  Rng rng(17);
  CurveSingularityProfile prof =
      curve_singularity_profile(plane("x*(x^2 + y^2 - 2)"), rng);
  REQUIRE(prof.orbits.size() == 1);
  CHECK(prof.orbits[0].orbit_size == 2);
  CHECK(prof.orbits[0].mu == 1);
  CHECK(prof.orbits[0].classification == "node");

  // the polar route still answers for this reducible curve
  CHECK(polar_route("x*(x^2 + y^2 - 2)") == -4);

  // the obstruction route needs an irreducible curve here and says so
  Rng r2(17);
  CHECK_THROWS_AS(
      euler_obstruction_degree_curve(plane("x*(x^2 + y^2 - 2)"), r2),
      DomainError);
}

TEST_CASE("worse singularities refuse the obstruction route but not polar") {
  // tacnode: two smooth branches meeting to second order
  Rng r1(17);
  PolarMultidegrees pd = polar_multidegrees(plane("y^2 - x^4"), r1);
  CHECK(pd.delta0 == 4);
  CHECK(pd.delta1 == 4);
  CHECK(polar_route("y^2 - x^4") == -4);

  Rng r2(17);
  CHECK_THROWS_WITH_AS(euler_obstruction_degree_curve(plane("y^2 - x^4"), r2),
                       doctest::Contains("unsupported singularity"),
                       DomainError);
}

TEST_CASE("degenerate curve inputs are rejected up front") {
  Rng rng(17);
  // not squarefree: the doubled line is a scheme, not a reduced curve
  CHECK_THROWS_AS(polar_multidegrees(plane("x^2"), rng), DomainError);
  // constants define no curve
  RingPtr R = make_ring({"x", "y"});
  CHECK_THROWS_AS(polar_multidegrees(Polynomial::constant(R, 1), rng),
                  DomainError);
  // three-variable input must be homogeneous
  RingPtr R3 = make_ring({"x", "y", "z"});
  CHECK_THROWS_AS(polar_multidegrees(P(R3, "x^2 + y - 1"), rng), DomainError);
}

TEST_CASE("gauss degrees of trivialized hypersurfaces and curves") {
  auto gauss = [](const std::vector<std::string>& pos, const std::string& f,
                  unsigned long long seed) {
    auto a = make_trivialized_ambient(pos);
    auto F = make_family(a, {P(a.base_ring, f)});
    Rng rng(seed);
    return gauss_degree_trivialized(F, rng);
  };

  CHECK(gauss({"x", "y"}, "x^2 + y^2 - 1", 23) == 2);
  CHECK(gauss({"x", "y"}, "y^2 - x^3", 23) == 1);
  // a line's covector never moves, so the map cannot dominate
  CHECK(gauss({"x", "y"}, "x + y - 1", 23) == 0);

  // seed robustness
  CHECK(gauss({"x", "y"}, "x^2 + y^2 - 1", 777) == 2);
  CHECK(gauss({"x", "y"}, "y^2 - x^3", 777) == 1);

  // a surface quadric in three variables
  CHECK(gauss({"x", "y", "z"}, "x^2 + y^2 + z^2 - 1", 23) == 2);
}

TEST_CASE("codimension-two families route through the incidence cover") {
  auto a = make_trivialized_ambient({"x", "y", "z"});
  auto circle = make_family(
      a, {P(a.base_ring, "x^2 + y^2 + z^2 - 1"), P(a.base_ring, "z")});
  Rng r1(23);
  CHECK(gauss_degree_trivialized(circle, r1) == 2);

  auto twisted = make_family(
      a, {P(a.base_ring, "y - x^2"), P(a.base_ring, "z - x*y")});
  Rng r2(23);
  CHECK(gauss_degree_trivialized(twisted, r2) == 2);
}

TEST_CASE("component degree reports split a specialized cycle") {
  auto amb = make_trivialized_ambient({"x", "y"}, std::string("s"));
  auto F = make_family(amb, {P(amb.base_ring, "y^2 - x^3 - s*x")});
  Rng r1(11);
  LagrangianCycle cyc = specialize_cycle(F, 0, r1);

  Rng r2(13);
  DegreeReport rep = component_degree(cyc, r2);
  CHECK(rep.route == "polar");
  CHECK(rep.total == 0);
  REQUIRE(rep.components.size() == 2);
  long long recomputed = 0;
  for (const auto& e : rep.components) {
    CHECK((e.degree == -3 || e.degree == 1));
    CHECK(e.multiplicity == (e.degree == 1 ? 3 : 1));
    recomputed += e.multiplicity * e.degree;
  }
  CHECK(recomputed == rep.total);
  CHECK(rep.warnings.empty());
}

TEST_CASE("plane reports carry the published-value warning for one curve") {
  Rng r1(31);
  DegreeReport rep = plane_degree_report(plane("y^2 - x^3 - x^2"), "polar", r1);
  CHECK(rep.route == "polar");
  CHECK(rep.total == -2);
  REQUIRE(rep.components.size() == 1);
  CHECK(rep.components[0].multiplicity == 1);
  REQUIRE(rep.warnings.size() == 1);
  CHECK(rep.warnings[0] ==
        "nodal cubic: both internal routes compute -2; a published "
        "reference states -3 for this case");

  // the other route reports the same number and the same caveat
  Rng r2(31);
  DegreeReport other =
      plane_degree_report(plane("y^2 - x^3 - x^2"), "euler-obstruction", r2);
  CHECK(other.route == "euler-obstruction");
  CHECK(other.total == -2);
  CHECK(other.warnings.size() == 1);

  // curves off that special case carry no warning
  Rng r3(31);
  DegreeReport conic = plane_degree_report(plane("x^2 + y^2 - 1"), "polar", r3);
  CHECK(conic.total == -2);
  CHECK(conic.warnings.empty());

  Rng r4(31);
  CHECK_THROWS_AS(plane_degree_report(plane("x"), "fastest", r4), DomainError);
}

TEST_CASE("unrecognized support shapes are refused with a clear message") {
  // a curve crossed with a point of the covector space projects to a locus
  // of intermediate dimension that no route covers
  auto a = make_trivialized_ambient({"x", "y", "z"});
  const RingPtr& R = a.full_ring;
  LagrangianCycle fake;
  fake.ambient = a;
  fake.ring = R;
  fake.components.push_back(
      {IdealHandle(R, {P(R, "x"), P(R, "y"), P(R, "xi1"), P(R, "xi2")}), 1});
  Rng rng(41);
  CHECK_THROWS_AS(component_degree(fake, rng), DomainError);
}
