// geometry.hpp -- conormal varieties as ideals.
//
// The ambient space is a trivialised cotangent bundle: position variables
// x_1..x_n, covector variables xi_1..xi_n spanning the dual fiber V, and
// optionally one parameter variable for a family over the affine line.
// On top of that sit the four geometric constructions:
//
//   * singular loci via maximal Jacobian minors (scheme structure kept);
//   * conormal ideals by Lagrange multipliers: adjoin lambda_1..lambda_d,
//     impose xi_j = sum_i lambda_i d f_i/d x_j, eliminate the multipliers
//     and saturate away the junk supported on the singular locus;
//   * Gauss maps in Pluecker coordinates: one graph variable per maximal
//     minor, rank-one conditions tying the coordinates to the minors,
//     saturated by the base locus;
//   * the flag-incidence cover: covector variables v_1..v_n, with
//     "v lies in the conormal space" written as the signed wedge
//     conditions, and a generic-fiber degree count over the projective
//     covector space.

#ifndef CONORMAL_GEOMETRY_HPP
#define CONORMAL_GEOMETRY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conormal/ideal.hpp"
#include "conormal/ideal_ops.hpp"
#include "conormal/rng.hpp"

namespace conormal {

enum class AmbientMode { AffineTrivialized, BiprojectivePlane };

struct AmbientSpec {
  AmbientMode mode = AmbientMode::AffineTrivialized;
  RingPtr base_ring; // positions (+ parameter): where families live
  RingPtr full_ring; // positions, covectors (+ parameter last)
  std::vector<std::string> position;
  std::vector<std::string> covector; // same length as position
  std::optional<std::string> parameter;

  int dimension() const { return static_cast<int>(position.size()); } // n

  // variable indices in full_ring
  std::vector<int> position_indices() const;
  std::vector<int> covector_indices() const;
  int parameter_index() const; // -1 when absent
};

// Builds the two rings; covector names are xi1..xin (suffixed further on a
// clash with user names).
AmbientSpec make_trivialized_ambient(
    const std::vector<std::string>& position,
    const std::optional<std::string>& parameter = std::nullopt);

struct FamilySpec {
  AmbientSpec ambient;
  std::vector<Polynomial> generators; // over ambient.base_ring

  int codimension() const { return static_cast<int>(generators.size()); }
  bool has_parameter() const { return ambient.parameter.has_value(); }
};

// Validates the regular-sequence input contract: as many generators as the
// declared codimension, d <= n, and the Jacobian has rank d at a seeded
// random probe point (a cheap proxy for generic reducedness; a family that
// fails it cannot be a generically smooth complete intersection).
FamilySpec make_family(AmbientSpec ambient, std::vector<Polynomial> gens);

// Jacobian of the generators: rows = generators, columns = positions, plus
// the parameter column unless `relative` (or no parameter is declared).
std::vector<std::vector<Polynomial>> family_jacobian(const FamilySpec& F,
                                                     bool relative);

// The d x d maximal minors of the (relative) Jacobian, indexed by
// lexicographic column tuples, determinant signs as written.
std::vector<Polynomial> jacobian_minors(const FamilySpec& F, bool relative);

// Generators plus all maximal Jacobian minors, over the base ring; no
// radical is taken, so scheme structure (embedded fat points) survives.
IdealHandle singular_locus(const FamilySpec& F, bool relative);

// Ideal of the conormal variety in (x, xi); parameter-free families only.
// Errors when the input is singular everywhere (saturation empties it).
IdealHandle conormal_ideal(const FamilySpec& F);

// Ideal of the relative conormal variety in (x, xi, s): the fiberwise
// construction, saturated by the relative singular locus, checked to be
// (n+1)-dimensional and dominant over the parameter line.
IdealHandle relative_conormal_ideal(const FamilySpec& F);

struct GaussMapSpec {
  FamilySpec family;
  RingPtr graph_ring;                     // base ring + Pluecker variables
  std::vector<std::string> pluecker_names; // lex tuple order
  std::vector<std::vector<int>> tuples;    // the column tuples themselves
  std::vector<Polynomial> coordinate_forms; // minors, over the base ring
  IdealHandle graph; // family + rank-one conditions, saturated by the forms
};

// Errors when every coordinate form vanishes identically on the family
// (the map is undefined everywhere).
GaussMapSpec gauss_map_plucker(const FamilySpec& F);

struct IncidenceCover {
  RingPtr cover_ring; // graph ring + incidence covector variables
  std::vector<std::string> covector_names;
  IdealHandle cover;        // graph + signed wedge conditions
  long long generic_degree; // fiber count over a generic projective covector
  std::uint64_t seed;
};

// Builds the cover and counts its generic fiber over the projective
// covector space; 0 when the projection is not dominant.  Degenerate probe
// points are retried a bounded number of times, then it is an error.
IncidenceCover incidence_cover(const GaussMapSpec& G, Rng& rng);

// Generic fiber degree of the incidence cover restricted over one point of
// the base (all position and parameter values pinned); used for the
// exceptional fiber of a degenerating family.  0 when not dominant.
long long incidence_degree_over_point(
    const GaussMapSpec& G, const std::map<std::string, mpq_class>& point,
    Rng& rng);

// dim(source) - source_cone_count == dim(image) - image_cone_count, the
// image obtained from the graph by eliminating everything outside
// `image_vars`.  Cone counts discount affine-cone directions so that the
// comparison happens between honest projective dimensions.
bool generic_finiteness_check(const IdealHandle& graph,
                              const IdealHandle& source,
                              const std::vector<int>& image_vars,
                              int source_cone_count = 0,
                              int image_cone_count = 0);

// True when every term of f has the same total degree in the given
// variables (used for the conic-in-xi invariant).
bool homogeneous_in(const Polynomial& f, const std::vector<int>& vars);

} // namespace conormal

#endif
