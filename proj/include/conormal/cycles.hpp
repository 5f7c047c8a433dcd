// cycles.hpp -- conic Lagrangian cycles attached to one-parameter families:
// the cycle of the schematic fiber of a relative conormal variety, its
// decomposition into conormal components with multiplicities, and the two
// structural checks built on it (degree conservation across the base and
// the singular-fiber jump criterion).

#ifndef CONORMAL_CYCLES_HPP
#define CONORMAL_CYCLES_HPP

#include <optional>
#include <string>
#include <vector>

#include "conormal/geometry.hpp"
#include "conormal/ideal_ops.hpp"
#include "conormal/rng.hpp"

namespace conormal {

// One irreducible conormal variety with its multiplicity in a cycle.
struct CycleComponent {
  IdealHandle support;       // conic ideal in the fiber's (x, xi) ring
  long long multiplicity;    // >= 1
};

// An effective conic Lagrangian cycle in a trivialized cotangent space.
// Components are pairwise distinct, conic in the covectors and of pure
// dimension equal to the ambient dimension.
struct LagrangianCycle {
  AmbientSpec ambient;                    // parameter-free fiber ambient
  RingPtr ring;                           // the (x, xi) ring of all supports
  std::vector<CycleComponent> components; // canonically ordered
};

// Decomposition failure: the splitting stalled before every component
// support was isolated over the rationals.  The unresolved part is carried
// verbatim so the caller can surface it; a wrong cycle would be worse than
// no cycle.
class UndecomposedRemainder : public DomainError {
public:
  UndecomposedRemainder(std::string message, IdealHandle remainder_ideal,
                        LagrangianCycle partial_cycle)
      : DomainError(std::move(message)),
        remainder(std::move(remainder_ideal)),
        partial(std::move(partial_cycle)) {}

  IdealHandle remainder;
  LagrangianCycle partial;
};

// The cycle of the schematic fiber of the relative conormal variety at the
// base point s0: substitute the parameter, split the support into conormal
// components and read multiplicities off generic slice counts.  The family
// must carry a parameter and the fiber must be nonempty.
LagrangianCycle specialize_cycle(const FamilySpec& F, const mpq_class& s0,
                                 Rng& rng);

// Decompose a fiber ideal (conic, dimension n) into distinct component
// supports and solve for their multiplicities: slice the fiber and every
// candidate support with matching counts of generic position and covector
// hyperplanes, and equate the resulting count vectors.  The linear system
// must have a unique solution in positive integers.
LagrangianCycle decompose_cycle(const IdealHandle& fiber,
                                const AmbientSpec& fiber_ambient, Rng& rng);

// The support-splitting engine behind decompose_cycle, also used to group
// zero-dimensional loci into rational orbits: branch on generators that
// factor over the rationals, and on saturation separators harvested from
// the elimination shadows onto each listed variable block.  Returns ideals
// that resist further splitting; their union of varieties is the input's.
std::vector<IdealHandle> isolate_support_components(
    const IdealHandle& I, const std::vector<std::vector<int>>& shadows);

// Keep the leaves of the given dimension, drop leaves whose variety sits
// strictly inside another leaf's, collapse same-variety duplicates onto one
// canonical representative, and order the survivors canonically.
std::vector<IdealHandle> absorb_support_leaves(std::vector<IdealHandle> leaves,
                                               int dimension);

// One evaluated base point of a conservation check.
struct ConservationSample {
  mpq_class parameter;
  LagrangianCycle cycle;
  std::vector<long long> component_degrees;  // aligned with cycle.components
  long long total;                           // sum of multiplicity * degree
};

struct ConservationReport {
  std::vector<ConservationSample> samples;
  bool conserved;                 // all totals equal
  std::string degree_route;       // which per-component degree was used
};

// Evaluate the total degree of the specialized cycle at every sample point
// and compare.  Plane families (two positions) use the signed plane-curve
// degree; higher-dimensional trivialized families use the Gauss fiber
// count.
ConservationReport check_degree_conservation(const FamilySpec& F,
                                             const std::vector<mpq_class>& samples,
                                             Rng& rng);

// A component of the specialized cycle matching the detected singular-locus
// piece, with its multiplicity.
struct JumpMatch {
  IdealHandle support;
  long long multiplicity;
};

struct JumpReport {
  bool applicable;                        // hypothesis satisfied at s0?
  std::string note;                       // why not, when not applicable
  std::optional<IdealHandle> detected_locus;  // Z in the position ring
  std::vector<JumpMatch> matches;         // cycle components lying over Z
  bool holds;                             // some match has multiplicity >= 1
  std::optional<LagrangianCycle> cycle;   // the full specialization at s0
};

// For a divisor family: if the relative singular locus has a component
// inside the fiber at s0 (decided by whether saturating the locus by the
// parameter offset removes part of its variety), the conormal of that
// component must appear in the specialized cycle.  When the hypothesis
// fails the report says so; that is not an error.
JumpReport check_jump_criterion(const FamilySpec& F, const mpq_class& s0,
                                Rng& rng);

} // namespace conormal

#endif
