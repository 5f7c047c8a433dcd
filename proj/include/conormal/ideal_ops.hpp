// ideal_ops.hpp -- the ideal-theoretic toolbox built on the Groebner engine:
// elimination, quotients, saturation, intersection, radical membership and
// dimension/degree readings.

#ifndef CONORMAL_IDEAL_OPS_HPP
#define CONORMAL_IDEAL_OPS_HPP

#include <vector>

#include "conormal/ideal.hpp"

namespace conormal {

// Generators of I with the given variables eliminated (the contraction to
// the subring on the remaining variables, represented in the same ring).
// Computed with a two-block elimination order.
IdealHandle eliminate(const IdealHandle& I, const std::vector<int>& drop);

// (I : g). With g == 0 this is the unit ideal.
IdealHandle ideal_quotient(const IdealHandle& I, const Polynomial& g);

// (I : J) as the intersection of the single-element quotients.
IdealHandle ideal_quotient(const IdealHandle& I, const IdealHandle& J);

IdealHandle intersect(const IdealHandle& I, const IdealHandle& J);

struct SaturationResult {
  IdealHandle ideal;  // (I : f^inf) resp. (I : J^inf)
  int exponent;       // least k with (I : f^k) equal to the saturation
};

// Element form, via one auxiliary-variable elimination; the stabilising
// exponent is then recovered by comparing the quotient chain against the
// result.
SaturationResult saturate(const IdealHandle& I, const Polynomial& f);

// Ideal form, by iterating (. : J) until the chain stalls.
SaturationResult saturate(const IdealHandle& I, const IdealHandle& J);

// f in rad(I)?  Decided by the auxiliary-variable trick: 1 - t*f joins the
// generators and the answer is whether the extended ideal is the unit one.
bool radical_membership(const Polynomial& f, const IdealHandle& I);

// Exact division h / g, valid when h lies in (g); anything else throws.
Polynomial exact_divide(const Polynomial& h, const Polynomial& g);

struct DimensionDegree {
  int dimension;        // projective dimension; -1 for the empty scheme
  long long degree;     // 0 when the scheme is empty
};

// Dimension and degree of Proj(R/I) for a homogeneous ideal, via the
// independent-set reading of the leading-term ideal and the Hilbert-series
// numerator.
DimensionDegree dimension_degree(const IdealHandle& I);

// Krull dimension of R/I for arbitrary (not necessarily homogeneous) I;
// -1 for the unit ideal.
int affine_dimension(const IdealHandle& I);

// Vector-space dimension of R/I for a zero-dimensional I.  The unit ideal
// (empty scheme) counts 0; positive dimension is an error.
long long zero_dim_colength(const IdealHandle& I);

// All generators homogeneous?
bool is_homogeneous_ideal(const IdealHandle& I);

// A variable name built from `base` that does not clash with `ring`.
std::string fresh_variable_name(const Ring& ring, const std::string& base);

// Image of an ideal under Polynomial::substitute, generator by generator.
IdealHandle substituted_ideal(const IdealHandle& I, const RingPtr& target,
                              const std::map<int, Polynomial>& images);

} // namespace conormal

#endif
