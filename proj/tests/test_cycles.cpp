// Conic Lagrangian cycles of one-parameter families: specialization of the
// relative conormal variety at a base point, decomposition into components
// with multiplicities, degree conservation across the base, and the
// singular-fiber jump criterion.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
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

IdealHandle I(const RingPtr& r, const std::vector<std::string>& ss) {
  std::vector<Polynomial> gens;
  for (const auto& s : ss) gens.push_back(P(r, s));
  return IdealHandle(r, std::move(gens));
}

FamilySpec pencil(const std::vector<std::string>& pos, const std::string& f) {
  auto a = make_trivialized_ambient(pos, std::string("s"));
  return make_family(a, {P(a.base_ring, f)});
}

// find the unique component whose support equals the named ideal
const CycleComponent& component_at(const LagrangianCycle& c,
                                   const std::vector<std::string>& gens) {
  IdealHandle target = I(c.ring, gens);
  for (const auto& comp : c.components)
    if (comp.support.same_ideal_as(target)) return comp;
  REQUIRE_MESSAGE(false, "no component with the requested support");
  return c.components.front();  // unreachable
}

} // namespace

TEST_CASE("a node degeneration specializes to two lines and a doubled point") {
  auto F = pencil({"x", "y"}, "x*y - s");
  Rng rng(11);
  LagrangianCycle c = specialize_cycle(F, 0, rng);

  // conormals of the two branches, each reduced, plus the conormal of the
  // intersection point carrying the local intersection length
  REQUIRE(c.components.size() == 3);
  CHECK(component_at(c, {"y", "xi1"}).multiplicity == 1);
  CHECK(component_at(c, {"x", "xi2"}).multiplicity == 1);
  CHECK(component_at(c, {"x", "y"}).multiplicity == 2);

  // components arrive canonically ordered and never share a support
  for (size_t i = 0; i + 1 < c.components.size(); ++i)
    CHECK(c.components[i].support.canonical_key() <
          c.components[i + 1].support.canonical_key());
}

TEST_CASE("a smooth fiber specializes to its own conormal, once") {
  auto F = pencil({"x", "y"}, "x*y - s");
  Rng rng(11);
  LagrangianCycle c = specialize_cycle(F, 1, rng);
  REQUIRE(c.components.size() == 1);
  CHECK(c.components[0].multiplicity == 1);

  // the support is exactly the conormal of the hyperbola x*y = 1
  auto fa = make_trivialized_ambient({"x", "y"});
  auto hyperbola = make_family(fa, {P(fa.base_ring, "x*y - 1")});
  CHECK(c.components[0].support.same_ideal_as(conormal_ideal(hyperbola)));
}

TEST_CASE("a cusp degeneration carries the point with multiplicity three") {
  auto F = pencil({"x", "y"}, "y^2 - x^3 - s*x");
  Rng rng(11);
  LagrangianCycle c = specialize_cycle(F, 0, rng);
  REQUIRE(c.components.size() == 2);

  const CycleComponent& point = component_at(c, {"x", "y"});
  CHECK(point.multiplicity == 3);

  // the other component is the conormal of the cuspidal cubic itself
  for (const auto& comp : c.components) {
    if (comp.support.same_ideal_as(point.support)) continue;
    CHECK(comp.multiplicity == 1);
    CHECK(comp.support.contains(P(c.ring, "x^3 - y^2")));
    CHECK(comp.support.contains(P(c.ring, "x*xi1 + 3/2*y*xi2")));
  }

  // away from the special value the fiber is smooth again
  Rng rng2(11);
  LagrangianCycle smooth = specialize_cycle(F, 1, rng2);
  REQUIRE(smooth.components.size() == 1);
  CHECK(smooth.components[0].multiplicity == 1);
}

TEST_CASE("a quadric cone vertex in three variables appears doubled") {
  auto F = pencil({"x", "y", "z"}, "x^2 + y^2 + z^2 - s");
  Rng rng(11);
  LagrangianCycle c = specialize_cycle(F, 0, rng);
  REQUIRE(c.components.size() == 2);

  const CycleComponent& vertex = component_at(c, {"x", "y", "z"});
  CHECK(vertex.multiplicity == 2);
  for (const auto& comp : c.components) {
    if (comp.support.same_ideal_as(vertex.support)) continue;
    // the cone is self-dual: its conormal satisfies both quadric equations
    CHECK(comp.multiplicity == 1);
    CHECK(comp.support.contains(P(c.ring, "x^2 + y^2 + z^2")));
    CHECK(comp.support.contains(P(c.ring, "xi1^2 + xi2^2 + xi3^2")));
  }
}

TEST_CASE("decomposing a raw fiber ideal matches the specialization") {
  auto a = make_trivialized_ambient({"x", "y"});
  const RingPtr& R = a.full_ring;
  IdealHandle fiber(R, {P(R, "x*y"), P(R, "x*xi1 - y*xi2")});
  Rng rng(9);
  LagrangianCycle c = decompose_cycle(fiber, a, rng);
  REQUIRE(c.components.size() == 3);
  CHECK(component_at(c, {"y", "xi1"}).multiplicity == 1);
  CHECK(component_at(c, {"x", "xi2"}).multiplicity == 1);
  CHECK(component_at(c, {"x", "y"}).multiplicity == 2);
}

TEST_CASE("decomposition rejects inputs outside its contract") {
  auto a = make_trivialized_ambient({"x", "y"});
  const RingPtr& R = a.full_ring;
  Rng rng(7);

  // not conic in the covectors
  CHECK_THROWS_AS(
      decompose_cycle(IdealHandle(R, {P(R, "x*xi1 - 1"), P(R, "y")}), a, rng),
      DomainError);
  // wrong dimension: a hypersurface of the cotangent space is not a cycle
  CHECK_THROWS_AS(decompose_cycle(IdealHandle(R, {P(R, "x")}), a, rng),
                  DomainError);
  // the empty fiber carries no cycle at all
  CHECK_THROWS_AS(
      decompose_cycle(IdealHandle(R, {Polynomial::constant(R, 1)}), a, rng),
      DomainError);

  // specialization needs a parameter to substitute
  auto constant = make_family(a, {P(a.base_ring, "x*y - 1")});
  CHECK_THROWS_AS(specialize_cycle(constant, 0, rng), DomainError);
}

TEST_CASE("support splitting separates branches and absorption prunes") {
  RingPtr R = make_ring({"x", "y"});
  auto leaves = absorb_support_leaves(
      isolate_support_components(I(R, {"x*y"}), {{0}, {1}}), 1);
  REQUIRE(leaves.size() == 2);
  CHECK(leaves[0].same_ideal_as(I(R, {"x"})));
  CHECK(leaves[1].same_ideal_as(I(R, {"y"})));

  // a leaf strictly inside another's variety is absorbed by the bigger one
  auto pruned = absorb_support_leaves({I(R, {"x"}), I(R, {"x*y"})}, 1);
  REQUIRE(pruned.size() == 1);
  CHECK(pruned[0].same_ideal_as(I(R, {"x*y"})));

  // same-variety duplicates collapse; off-dimension leaves drop out
  auto collapsed = absorb_support_leaves(
      {I(R, {"x"}), I(R, {"x^2"}), I(R, {"x", "y"})}, 1);
  REQUIRE(collapsed.size() == 1);
  CHECK(radical_membership(P(R, "x"), collapsed[0]));
}

TEST_CASE("degree totals are conserved across a node degeneration") {
  auto F = pencil({"x", "y"}, "x*y - s");
  Rng rng(5);
  ConservationReport rep = check_degree_conservation(F, {0, 1, -1}, rng);
  CHECK(rep.conserved);
  CHECK(rep.degree_route == "polar");
  REQUIRE(rep.samples.size() == 3);
  for (const auto& s : rep.samples) CHECK(s.total == -2);

  // the singular sample splits its total as (-2) + (-2) + 2 * (+1)
  const ConservationSample& at0 = rep.samples[0];
  REQUIRE(at0.parameter == 0);
  REQUIRE(at0.cycle.components.size() == 3);
  long long recomputed = 0;
  for (size_t i = 0; i < at0.cycle.components.size(); ++i)
    recomputed +=
        at0.cycle.components[i].multiplicity * at0.component_degrees[i];
  CHECK(recomputed == at0.total);
  CHECK(component_at(at0.cycle, {"x", "y"}).multiplicity == 2);
  for (size_t i = 0; i < at0.cycle.components.size(); ++i) {
    bool is_point = at0.cycle.components[i].support.same_ideal_as(
        I(at0.cycle.ring, {"x", "y"}));
    CHECK(at0.component_degrees[i] == (is_point ? 1 : -2));
  }
}

TEST_CASE("degree totals are conserved across a cusp degeneration") {
  auto F = pencil({"x", "y"}, "y^2 - x^3 - s*x");
  Rng rng(5);
  ConservationReport rep = check_degree_conservation(F, {0, 1, -1}, rng);
  CHECK(rep.conserved);
  CHECK(rep.degree_route == "polar");
  REQUIRE(rep.samples.size() == 3);
  for (const auto& s : rep.samples) CHECK(s.total == 0);

  // the cuspidal fiber balances the cubic's -3 against three point units
  const ConservationSample& at0 = rep.samples[0];
  REQUIRE(at0.cycle.components.size() == 2);
  for (size_t i = 0; i < at0.cycle.components.size(); ++i) {
    bool is_point = at0.cycle.components[i].support.same_ideal_as(
        I(at0.cycle.ring, {"x", "y"}));
    CHECK(at0.component_degrees[i] == (is_point ? 1 : -3));
    CHECK(at0.cycle.components[i].multiplicity == (is_point ? 3 : 1));
  }
}

TEST_CASE("degree totals are conserved for a cone family of surfaces") {
  auto F = pencil({"x", "y", "z"}, "x^2 + y^2 + z^2 - s");
  Rng rng(5);
  ConservationReport rep = check_degree_conservation(F, {0, 1, 4}, rng);
  CHECK(rep.conserved);
  CHECK(rep.degree_route == "gauss-fiber");
  REQUIRE(rep.samples.size() == 3);
  for (const auto& s : rep.samples) CHECK(s.total == 2);
}

TEST_CASE("the jump criterion detects the node and measures its weight") {
  auto F = pencil({"x", "y"}, "x*y - s");
  Rng rng(3);
  JumpReport rep = check_jump_criterion(F, 0, rng);
  REQUIRE(rep.applicable);
  CHECK(rep.holds);

  RingPtr pos = make_ring({"x", "y"});
  REQUIRE(rep.detected_locus.has_value());
  CHECK(rep.detected_locus->same_ideal_as(I(pos, {"x", "y"})));

  REQUIRE(rep.matches.size() == 1);
  CHECK(rep.matches[0].multiplicity == 2);
  REQUIRE(rep.cycle.has_value());
  CHECK(rep.cycle->components.size() == 3);

  // the verdict does not depend on the draw
  Rng other(99);
  JumpReport again = check_jump_criterion(F, 0, other);
  CHECK(again.applicable);
  CHECK(again.holds);
  REQUIRE(again.matches.size() == 1);
  CHECK(again.matches[0].multiplicity == 2);
}

TEST_CASE("the jump criterion steps aside for a constantly singular family") {
  // the nodal cubic does not move with the parameter, so its singular locus
  // dominates the base and no fiber is special
  auto F = pencil({"x", "y"}, "y^2 - x^3 - x^2");
  Rng rng(3);
  JumpReport rep = check_jump_criterion(F, 0, rng);
  CHECK_FALSE(rep.applicable);
  CHECK_FALSE(rep.holds);
  CHECK(rep.note ==
        "criterion not applicable: the relative singular locus dominates "
        "the base");
  CHECK_FALSE(rep.detected_locus.has_value());
}

TEST_CASE("the jump criterion weighs the cusp at three") {
  auto F = pencil({"x", "y"}, "y^2 - x^3 - s*x");
  Rng rng(3);
  JumpReport rep = check_jump_criterion(F, 0, rng);
  REQUIRE(rep.applicable);
  CHECK(rep.holds);
  REQUIRE(rep.matches.size() == 1);
  CHECK(rep.matches[0].multiplicity == 3);
}

TEST_CASE("jump applicability survives critical points over other values") {
  // the relative singular locus of this family has components over several
  // base values; only the part lying over s = 0 decides applicability
  auto F = pencil({"x", "y"}, "x*y + 3*x^3 + 3*y^3 - s*(1 - 2*x)");
  Rng rng(3);
  JumpReport rep = check_jump_criterion(F, 0, rng);
  REQUIRE(rep.applicable);
  CHECK(rep.holds);
  REQUIRE(rep.detected_locus.has_value());
  RingPtr pos = make_ring({"x", "y"});
  CHECK(rep.detected_locus->contains(P(pos, "x")));
  CHECK(rep.detected_locus->contains(P(pos, "y")));
}

TEST_CASE("a seeded corpus of singular divisor families behaves") {
  Rng corpus(20260815);
  int jump_checked = 0;
  for (int k = 0; k < 20; ++k) {
    CAPTURE(k);
    Rng it = corpus.fork(1000 + k);
    bool three = (k % 4 == 3);
    std::vector<std::string> pos =
        three ? std::vector<std::string>{"x", "y", "z"}
              : std::vector<std::string>{"x", "y"};
    auto a = make_trivialized_ambient(pos, std::string("s"));
    const RingPtr& B = a.base_ring;

    // central fiber singular at the origin: a quadratic cone part plus one
    // bounded noise term; the parameter part is a unit at the origin
    Polynomial f0 = three ? P(B, "x*y + z^2") : P(B, "x*y");
    if (three) {
      if (it.range(0, 1) == 0)
        f0 = f0 + Polynomial::constant(B, it.nonzero(3)) * P(B, "x^3");
      else
        f0 = f0 + Polynomial::constant(B, it.nonzero(2)) * P(B, "x*z");
    } else {
      long long c1 = it.nonzero(5), c2 = it.nonzero(5);
      f0 = f0 + Polynomial::constant(B, c1) * P(B, "x^3") +
           Polynomial::constant(B, c2) * P(B, "y^3");
    }
    Polynomial h = Polynomial::constant(B, 1) +
                   Polynomial::constant(B, it.nonzero(3)) * P(B, "x");
    auto F = make_family(a, {f0 - P(B, "s") * h});

    Rng r1 = it.fork(1);
    LagrangianCycle cyc = specialize_cycle(F, 0, r1);

    // the cycle is effective
    for (const auto& c : cyc.components) CHECK(c.multiplicity >= 1);

    // it contains the conormal of the central fiber: every generator of the
    // intersection of the supports vanishes on that conormal variety
    auto fa = make_trivialized_ambient(pos);
    Polynomial f0_at0 = f0.substitute(
        fa.base_ring, std::map<int, Polynomial>{
                          {B->index_of("s"),
                           Polynomial::constant(fa.base_ring, 0)}});
    auto central = make_family(fa, {f0_at0});
    IdealHandle C = conormal_ideal(central);
    IdealHandle meet = cyc.components[0].support;
    for (size_t i = 1; i < cyc.components.size(); ++i)
      meet = intersect(meet, cyc.components[i].support);
    for (const auto& g : meet.groebner())
      CHECK(radical_membership(g.substitute(C.ring(), {}), C));

    // every component beyond that conormal projects into the singular
    // locus of the central fiber
    IdealHandle sing = singular_locus(central, false);
    for (const auto& c : cyc.components) {
      bool in_conormal = true;
      for (const auto& g : C.groebner())
        if (!radical_membership(g.substitute(cyc.ring, {}), c.support)) {
          in_conormal = false;
          break;
        }
      if (in_conormal) continue;
      for (const auto& g : sing.gens())
        CHECK(radical_membership(g.substitute(cyc.ring, {}), c.support));
    }

    // the jump criterion holds whenever its hypothesis does
    Rng r2 = it.fork(2);
    JumpReport jr = check_jump_criterion(F, 0, r2);
    if (jr.applicable) {
      ++jump_checked;
      CHECK(jr.holds);
    }
  }
  // every corpus member degenerates at the origin, so all twenty apply
  CHECK(jump_checked == 20);
}

TEST_CASE("smooth parameter values always give a single reduced component") {
  auto a = make_trivialized_ambient({"x", "y"}, std::string("s"));
  auto F = make_family(a, {P(a.base_ring, "x*y - s")});
  Rng pick(77);
  for (int i = 0; i < 10; ++i) {
    mpq_class c(pick.nonzero(40), 1 + (i % 3));
    c.canonicalize();
    CAPTURE(i);
    Rng r = pick.fork(i);
    LagrangianCycle cyc = specialize_cycle(F, c, r);
    REQUIRE(cyc.components.size() == 1);
    CHECK(cyc.components[0].multiplicity == 1);
  }
}
