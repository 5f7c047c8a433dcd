// slicing.hpp -- generic hyperplane slicing, shared by the cycle
// multiplicity solver and the degree invariants: seeded random linear
// forms, affine charts through cone directions, and the colength of a
// sliced ideal with degeneracy detection.

#ifndef CONORMAL_SLICING_HPP
#define CONORMAL_SLICING_HPP

#include <optional>
#include <vector>

#include "conormal/ideal_ops.hpp"
#include "conormal/rng.hpp"

namespace conormal {

// A random linear form in the given variables, with small nonzero integer
// coefficients; with affine_part also a nonzero constant term.
Polynomial random_form(const RingPtr& ring, const std::vector<int>& vars,
                       Rng& rng, bool affine_part);

// An affine chart through a cone: sum c_i v_i = 1 with nonzero random c.
Polynomial random_chart(const RingPtr& ring, const std::vector<int>& vars,
                        Rng& rng);

// Colength of I + slices when that is zero-dimensional; the empty scheme
// counts 0 and a positive-dimensional (degenerate) slice yields nullopt so
// the caller can redraw.
std::optional<long long> sliced_colength(const IdealHandle& I,
                                         const std::vector<Polynomial>& slices);

} // namespace conormal

#endif
