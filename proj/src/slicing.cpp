#include "conormal/slicing.hpp"

namespace conormal {

Polynomial random_form(const RingPtr& ring, const std::vector<int>& vars,
                       Rng& rng, bool affine_part) {
  Polynomial p =
      affine_part
          ? Polynomial::constant(ring, Scalar::rational(mpq_class(rng.nonzero(20))))
          : Polynomial::zero(ring);
  for (int v : vars)
    p = p + Polynomial::constant(ring,
                                 Scalar::rational(mpq_class(rng.nonzero(20)))) *
                Polynomial::variable(ring, v);
  return p;
}

Polynomial random_chart(const RingPtr& ring, const std::vector<int>& vars,
                        Rng& rng) {
  return random_form(ring, vars, rng, /*affine_part=*/false) -
         Polynomial::constant(ring, 1);
}

std::optional<long long> sliced_colength(const IdealHandle& I,
                                         const std::vector<Polynomial>& slices) {
  std::vector<Polynomial> gens = I.gens();
  gens.insert(gens.end(), slices.begin(), slices.end());
  IdealHandle cut(I.ring(), std::move(gens));
  int dim = affine_dimension(cut);
  if (dim == -1) return 0;
  if (dim != 0) return std::nullopt;
  return zero_dim_colength(cut);
}

} // namespace conormal
