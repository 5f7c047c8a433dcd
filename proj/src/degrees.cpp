// Degree invariants: trivialized Gauss-map degrees by generic fiber
// counting, polar multidegrees of plane-curve conormals in the biprojective
// plane, the signed plane-curve degree through the polar and the
// Euler-obstruction routes, and per-component reports for Lagrangian
// cycles.

#include "conormal/degrees.hpp"

#include <algorithm>
#include <sstream>

#include "conormal/factor.hpp"
#include "conormal/slicing.hpp"

namespace conormal {

namespace {

std::vector<int> named_indices(const RingPtr& ring,
                               const std::vector<std::string>& names) {
  std::vector<int> idx;
  for (const auto& n : names) idx.push_back(ring->index_of(n));
  return idx;
}

// A plane curve normalized to a homogeneous equation in three variables.
struct PlaneCurve {
  RingPtr ring;      // (x, y, z)-style homogeneous coordinate ring
  Polynomial F;      // homogeneous, squarefree, positive degree
  int degree;
};

bool is_homogeneous_poly(const Polynomial& f) {
  bool first = true;
  int expected = 0;
  for (const auto& t : f.terms()) {
    if (first) {
      expected = t.mono.degree();
      first = false;
    } else if (t.mono.degree() != expected) {
      return false;
    }
  }
  return true;
}

PlaneCurve normalize_plane_curve(const Polynomial& f) {
  const RingPtr& r0 = f.ring();
  if (f.is_zero() || f.is_constant())
    throw DomainError("a plane curve needs an equation of positive degree");

  PlaneCurve curve;
  if (r0->nvars() == 2) {
    std::string zname = fresh_variable_name(*r0, "z");
    curve.ring = make_ring({r0->vars[0], r0->vars[1], zname});
    const int D = f.degree();
    std::vector<Term> terms;
    for (const auto& t : f.terms()) {
      Monomial m(std::vector<int>{t.mono.exponent(0), t.mono.exponent(1),
                                  D - t.mono.degree()});
      terms.push_back({t.coeff, m});
    }
    curve.F = Polynomial::from_terms(curve.ring, std::move(terms));
  } else if (r0->nvars() == 3) {
    if (!is_homogeneous_poly(f))
      throw DomainError("a three-variable plane curve must be homogeneous");
    curve.ring = r0;
    curve.F = f;
  } else {
    throw DomainError("plane-curve routes need two or three variables");
  }
  curve.degree = curve.F.degree();

  if (squarefree_part(curve.F).degree() != curve.degree)
    throw DomainError("plane-curve routes need a squarefree equation");
  return curve;
}

// Conormal of the projective plane curve, as an ideal in the coordinates of
// both the point plane and the dual plane: the incidence relations force
// the dual coordinates into the gradient line, and saturating by the
// gradient ideal prunes the junk over the singular points.
struct BiprojectiveConormal {
  RingPtr ring;
  IdealHandle ideal;
  std::vector<int> point_vars;
  std::vector<int> dual_vars;
};

BiprojectiveConormal biprojective_conormal(const PlaneCurve& curve) {
  std::vector<std::string> duals;
  std::vector<std::string> taken = curve.ring->vars;
  for (int i = 1; i <= 3; ++i) {
    std::string name = "u" + std::to_string(i);
    while (std::find(taken.begin(), taken.end(), name) != taken.end())
      name += "_";
    duals.push_back(name);
    taken.push_back(name);
  }
  RingPtr ring = extend_ring(curve.ring, duals);

  std::vector<Polynomial> grads;
  for (int v = 0; v < 3; ++v)
    grads.push_back(curve.F.differentiate(v).substitute(ring, {}));

  std::vector<Polynomial> gens{curve.F.substitute(ring, {})};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      gens.push_back(
          Polynomial::variable(ring, ring->index_of(duals[i])) * grads[j] -
          Polynomial::variable(ring, ring->index_of(duals[j])) * grads[i]);

  BiprojectiveConormal out;
  out.ring = ring;
  out.ideal = saturate(IdealHandle(ring, gens), IdealHandle(ring, grads)).ideal;
  out.point_vars = {0, 1, 2};
  out.dual_vars = named_indices(ring, duals);
  return out;
}

// generic fiber count of the projectivized cone `Lambda` over the
// projectivized covector space: pin the covector direction, prune the cone
// vertex, slice with a chart and count; two agreeing draws required
long long gauss_fiber_degree(const IdealHandle& Lambda,
                             const std::vector<int>& xvars,
                             const std::vector<int>& xivars, Rng& rng) {
  const RingPtr& ring = Lambda.ring();

  // dominance, decided independently of the counting below
  std::vector<std::string> xi_names;
  for (int v : xivars) xi_names.push_back(ring->vars[v]);
  RingPtr xi_ring = make_ring(xi_names);
  IdealHandle shadow = eliminate(Lambda, xvars);
  std::vector<Polynomial> image_gens;
  for (const auto& g : shadow.groebner())
    image_gens.push_back(g.substitute(xi_ring, {}));
  bool dominant = affine_dimension(IdealHandle(xi_ring, image_gens)) ==
                  static_cast<int>(xivars.size());
  if (!dominant) return 0;

  std::vector<Polynomial> irrelevant;
  for (int v : xivars) irrelevant.push_back(Polynomial::variable(ring, v));
  IdealHandle vertex(ring, irrelevant);

  std::optional<long long> previous;
  for (int attempt = 0; attempt < 5; ++attempt) {
    Rng draw = rng.fork(0x6761757373 + attempt);
    std::vector<mpq_class> direction;
    for (size_t i = 0; i < xivars.size(); ++i)
      direction.push_back(mpq_class(draw.nonzero(20)));

    std::vector<Polynomial> gens = Lambda.gens();
    for (size_t i = 0; i < xivars.size(); ++i)
      for (size_t j = i + 1; j < xivars.size(); ++j)
        gens.push_back(
            Polynomial::variable(ring, xivars[i]) *
                Polynomial::constant(ring, Scalar::rational(direction[j])) -
            Polynomial::variable(ring, xivars[j]) *
                Polynomial::constant(ring, Scalar::rational(direction[i])));
    IdealHandle pinned = saturate(IdealHandle(ring, gens), vertex).ideal;

    auto count = sliced_colength(pinned, {random_chart(ring, xivars, draw)});
    if (!count || *count == 0) continue;  // degenerate draw
    if (previous && *previous == *count) return *count;
    previous = count;
  }
  throw DomainError(
      "no two agreeing generic Gauss fibers within the retry bound");
}

void append_nodal_cubic_warning(const PlaneCurve& curve,
                                const CurveSingularityProfile& profile,
                                std::vector<std::string>& warnings) {
  if (curve.degree != 3) return;
  if (profile.orbits.size() != 1) return;
  const SingularOrbit& o = profile.orbits.front();
  if (o.classification != "node" || o.orbit_size != 1) return;
  warnings.push_back(
      "nodal cubic: both internal routes compute -2; a published reference "
      "states -3 for this case");
}

} // namespace

long long gauss_degree_trivialized(const FamilySpec& F, Rng& rng) {
  if (F.has_parameter())
    throw DomainError(
        "the trivialized Gauss degree takes a parameter-free family");
  if (F.ambient.mode != AmbientMode::AffineTrivialized)
    throw DomainError("the trivialized Gauss degree needs the affine mode");

  if (F.codimension() == 1) {
    IdealHandle Lambda = conormal_ideal(F);
    const RingPtr& ring = Lambda.ring();
    return gauss_fiber_degree(Lambda, named_indices(ring, F.ambient.position),
                              named_indices(ring, F.ambient.covector), rng);
  }

  // higher codimension runs through the Pluecker incidence cover; the
  // agreement discipline is the same, two independent draws must match
  auto G = gauss_map_plucker(F);
  std::optional<long long> previous;
  for (int attempt = 0; attempt < 5; ++attempt) {
    Rng draw = rng.fork(0x696e636964 + attempt);
    long long count = incidence_cover(G, draw).generic_degree;
    if (previous && *previous == count) return count;
    previous = count;
  }
  throw DomainError(
      "no two agreeing incidence fiber counts within the retry bound");
}

PolarMultidegrees polar_multidegrees(const Polynomial& f, Rng& rng) {
  PlaneCurve curve = normalize_plane_curve(f);
  BiprojectiveConormal conormal = biprojective_conormal(curve);
  const RingPtr& ring = conormal.ring;

  for (int attempt = 0; attempt < 5; ++attempt) {
    Rng draw = rng.fork(0x706f6c6172 + attempt);
    Polynomial chart_x = random_chart(ring, conormal.point_vars, draw);
    Polynomial chart_u = random_chart(ring, conormal.dual_vars, draw);

    auto d0 = sliced_colength(
        conormal.ideal,
        {random_form(ring, conormal.point_vars, draw, false), chart_x, chart_u});
    auto d1 = sliced_colength(
        conormal.ideal,
        {random_form(ring, conormal.dual_vars, draw, false), chart_x, chart_u});
    if (!d0 || !d1) continue;
    // the point-plane multidegree of the conormal curve is the curve degree;
    // a mismatch means the slice was not generic
    if (*d0 != curve.degree) continue;
    return {*d0, *d1};
  }
  throw DomainError(
      "no generic biprojective slice found within the retry bound");
}

long long conormal_degree_plane_curve(const Polynomial& f, Rng& rng) {
  PolarMultidegrees degs = polar_multidegrees(f, rng);
  return degs.delta1 - 2 * degs.delta0;
}

CurveSingularityProfile curve_singularity_profile(const Polynomial& f,
                                                  Rng& rng) {
  PlaneCurve curve = normalize_plane_curve(f);
  const RingPtr& R3 = curve.ring;

  for (int attempt = 0; attempt < 5; ++attempt) {
    long long ax = attempt == 0 ? 0 : rng.nonzero(9);
    long long ay = attempt == 0 ? 0 : rng.nonzero(9);
    // shear the line at infinity: z -> z + ax*x + ay*y
    std::map<int, Polynomial> shear;
    shear[2] = Polynomial::variable(R3, 2) +
               Polynomial::constant(R3, ax) * Polynomial::variable(R3, 0) +
               Polynomial::constant(R3, ay) * Polynomial::variable(R3, 1);
    Polynomial G = curve.F.substitute(R3, shear);

    // all singular points must sit inside the affine chart z != 0
    std::vector<Polynomial> jac{G};
    for (int v = 0; v < 3; ++v) jac.push_back(G.differentiate(v));
    std::vector<Polynomial> at_infinity = jac;
    at_infinity.push_back(Polynomial::variable(R3, 2));
    if (dimension_degree(IdealHandle(R3, at_infinity)).dimension >= 0)
      continue;

    RingPtr R2 = make_ring({R3->vars[0], R3->vars[1]});
    std::map<int, Polynomial> chart;
    chart[2] = Polynomial::constant(R2, 1);
    Polynomial g = G.substitute(R2, chart);
    IdealHandle milnor(R2, {g, g.differentiate(0), g.differentiate(1)});

    CurveSingularityProfile profile;
    profile.shear_x = ax;
    profile.shear_y = ay;
    if (milnor.is_unit_ideal()) return profile;  // smooth curve
    if (affine_dimension(milnor) != 0)
      throw DomainError(
          "the singular locus is not isolated; is the curve squarefree?");

    long long total = zero_dim_colength(milnor);
    auto leaves = isolate_support_components(milnor, {{0}, {1}});
    auto orbits = absorb_support_leaves(std::move(leaves), 0);
    long long accounted = 0;
    for (const auto& orbit : orbits) {
      long long rest = zero_dim_colength(saturate(milnor, orbit).ideal);
      long long local = total - rest;
      long long size = zero_dim_colength(orbit);
      if (local <= 0 || size <= 0 || local % size != 0)
        throw DomainError("inconsistent local colength at a singular orbit");
      long long mu = local / size;
      SingularOrbit entry;
      entry.point = orbit.canonical_key();
      entry.orbit_size = static_cast<int>(size);
      entry.mu = mu;
      entry.classification =
          mu == 1 ? "node" : (mu == 2 ? "cusp" : "unsupported");
      entry.curve_multiplicity = mu <= 2 ? 2 : 0;
      profile.orbits.push_back(std::move(entry));
      accounted += local;
    }
    if (accounted != total)
      throw DomainError("singular orbits do not account for the whole locus");
    return profile;
  }
  throw DomainError(
      "no shear moved every singular point into one affine chart");
}

long long euler_obstruction_degree_curve(const Polynomial& f, Rng& rng) {
  PlaneCurve curve = normalize_plane_curve(f);
  CurveSingularityProfile profile = curve_singularity_profile(f, rng);
  for (const auto& orbit : profile.orbits)
    if (orbit.classification == "unsupported") {
      std::ostringstream msg;
      msg << "unsupported singularity (local colength " << orbit.mu
          << ") at " << orbit.point
          << "; this route handles nodes and cusps only";
      throw DomainError(msg.str());
    }

  const long long d = curve.degree;
  long long points = 0;   // geometric singular points, each with delta 1
  long long branches = 0; // local branches through them
  long long obstruction = 0;
  for (const auto& orbit : profile.orbits) {
    points += orbit.orbit_size;
    branches += orbit.orbit_size * (orbit.classification == "node" ? 2 : 1);
    obstruction += orbit.orbit_size * orbit.curve_multiplicity;
  }

  long long genus2 = (d - 1) * (d - 2) - 2 * points;  // twice the genus
  if (genus2 < 0)
    throw DomainError(
        "negative normalization genus; this route needs an irreducible curve "
        "with nodes and cusps only");
  long long chi_smooth = (2 - genus2) - branches;
  return -(chi_smooth + obstruction);
}

DegreeReport component_degree(const LagrangianCycle& cycle, Rng& rng) {
  const RingPtr& ring = cycle.ring;
  const int n = cycle.ambient.dimension();
  std::vector<int> xvars = named_indices(ring, cycle.ambient.position);
  std::vector<int> xivars = named_indices(ring, cycle.ambient.covector);
  RingPtr pos_ring = make_ring(cycle.ambient.position);

  DegreeReport report;
  report.route = n == 2 ? "polar" : "gauss-fiber";
  report.seed = rng.seed();
  report.total = 0;

  for (size_t i = 0; i < cycle.components.size(); ++i) {
    const CycleComponent& comp = cycle.components[i];
    IdealHandle shadow = eliminate(comp.support, xivars);
    std::vector<Polynomial> gens;
    for (const auto& g : shadow.groebner())
      gens.push_back(g.substitute(pos_ring, {}));
    IdealHandle projection(pos_ring, std::move(gens));
    int dim = affine_dimension(projection);

    long long degree;
    if (dim == 0) {
      degree = zero_dim_colength(projection);
    } else if (n == 2 && dim == 1) {
      const auto& gb = projection.groebner();
      if (gb.size() != 1)
        throw DomainError(
            "unrecognized support: a plane-curve component must project to a "
            "principal ideal");
      Rng local = rng.fork(0x706c616e65 + i);
      degree = conormal_degree_plane_curve(gb[0], local);
      PlaneCurve curve = normalize_plane_curve(gb[0]);
      Rng prof = rng.fork(0x70726f66 + i);
      append_nodal_cubic_warning(curve, curve_singularity_profile(gb[0], prof),
                                 report.warnings);
    } else if (n >= 3 && dim == n - 1) {
      Rng local = rng.fork(0x646976 + i);
      degree = gauss_fiber_degree(comp.support, xvars, xivars, local);
    } else {
      std::ostringstream msg;
      msg << "unrecognized support type: projection dimension " << dim
          << " in ambient dimension " << n;
      throw DomainError(msg.str());
    }

    report.components.push_back(
        {comp.support.canonical_key(), comp.multiplicity, degree});
    report.total += comp.multiplicity * degree;
  }
  return report;
}

DegreeReport plane_degree_report(const Polynomial& f, const std::string& route,
                                 Rng& rng) {
  PlaneCurve curve = normalize_plane_curve(f);
  DegreeReport report;
  report.route = route;
  report.seed = rng.seed();

  long long degree;
  Rng local = rng.fork(0x726f757465);
  if (route == "polar") {
    degree = conormal_degree_plane_curve(f, local);
  } else if (route == "euler-obstruction") {
    degree = euler_obstruction_degree_curve(f, local);
  } else {
    throw DomainError("unknown degree route '" + route +
                      "' (use polar or euler-obstruction)");
  }

  Rng prof = rng.fork(0x70726f66696c);
  append_nodal_cubic_warning(curve, curve_singularity_profile(f, prof),
                             report.warnings);

  report.components.push_back(
      {IdealHandle(curve.ring, {curve.F}).canonical_key(), 1, degree});
  report.total = degree;
  return report;
}

} // namespace conormal
