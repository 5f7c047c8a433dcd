// degrees.hpp -- numeric degree invariants of conormal geometry: the
// Gauss-map degree in the trivialized affine mode, polar multidegrees of
// plane-curve conormals in the biprojective plane, the signed plane-curve
// conormal degree by two independent routes, and per-component degree
// reports for Lagrangian cycles.

#ifndef CONORMAL_DEGREES_HPP
#define CONORMAL_DEGREES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "conormal/cycles.hpp"
#include "conormal/geometry.hpp"
#include "conormal/rng.hpp"

namespace conormal {

// Degree of the Gauss map of a parameter-free family in the trivialized
// mode: the generic fiber count of the projectivized conormal variety over
// the projectivized covector space, and 0 when that projection is not
// dominant.  Hypersurfaces are counted directly on the conormal ideal;
// higher codimension goes through the Pluecker incidence cover.  Two
// independent random fibers must agree.
long long gauss_degree_trivialized(const FamilySpec& F, Rng& rng);

// The two multidegrees of the biprojective conormal curve of a plane curve:
// delta0 counts a slice by a generic hyperplane pulled back from the point
// plane (it equals the curve degree), delta1 one pulled back from the dual
// plane (the classical class).  Affine input is homogenized first; the
// input must be squarefree.
struct PolarMultidegrees {
  long long delta0;
  long long delta1;
};
PolarMultidegrees polar_multidegrees(const Polynomial& f, Rng& rng);

// Signed degree of the conormal cycle of a plane curve, evaluated through
// the polar route as delta1 - 2*d.  Negative for low-degree curves,
// positive from the smooth quartic on.
long long conormal_degree_plane_curve(const Polynomial& f, Rng& rng);

// Isolated singular points of a plane curve, grouped by rational orbit.
struct SingularOrbit {
  std::string point;          // canonical generators of the orbit ideal
  int orbit_size;             // number of geometric points in the orbit
  long long mu;               // local colength of (f, df/dx, df/dy) per point
  std::string classification; // "node" (mu=1), "cusp" (mu=2) or "unsupported"
  long long curve_multiplicity;  // multiplicity of the curve at the point
};

struct CurveSingularityProfile {
  std::vector<SingularOrbit> orbits;
  // all singular points were moved into one affine chart by this shear of
  // the line at infinity: z -> z + shear_x*x + shear_y*y (identity when 0,0)
  long long shear_x = 0;
  long long shear_y = 0;
  bool supported() const {
    for (const auto& o : orbits)
      if (o.classification == "unsupported") return false;
    return true;
  }
};

CurveSingularityProfile curve_singularity_profile(const Polynomial& f,
                                                  Rng& rng);

// Signed degree of the conormal cycle through constructible-function
// counting: the weighted Euler characteristic of the curve with the local
// obstruction values (1 on the smooth part, the point multiplicity at nodes
// and cusps), negated for the odd dimension.  Refuses curves with any
// unsupported singularity and inconsistent (negative) normalization genus.
long long euler_obstruction_degree_curve(const Polynomial& f, Rng& rng);

// Degree bookkeeping for a whole Lagrangian cycle.
struct DegreeReport {
  struct Entry {
    std::string support;      // canonical generators of the component
    long long multiplicity;
    long long degree;
  };
  long long total;            // sum of multiplicity * degree
  std::vector<Entry> components;
  std::string route;          // "gauss-fiber", "polar" or "euler-obstruction"
  std::uint64_t seed;
  std::vector<std::string> warnings;
};

// Evaluate every component of the cycle: point supports contribute +1,
// plane-curve supports go through the signed plane route, and divisor
// supports in three or more variables through the Gauss fiber count.
// Unrecognized support types are an error, never a guess.
DegreeReport component_degree(const LagrangianCycle& cycle, Rng& rng);

// Full single-curve report for the requested route ("polar" or
// "euler-obstruction"), including the documented-discrepancy warning for
// the degree-3 one-node case.
DegreeReport plane_degree_report(const Polynomial& f, const std::string& route,
                                 Rng& rng);

} // namespace conormal

#endif
