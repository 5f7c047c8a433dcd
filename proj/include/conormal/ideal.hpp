// ideal.hpp -- ideal handles with cached Groebner bases.
//
// An IdealHandle is a cheap copyable reference to an immutable generator
// list.  Reduced Groebner bases are computed lazily per monomial order and
// memoised behind a mutex; since reduced bases are canonical, concurrent
// recomputation is harmless (last writer stores the identical value).

#ifndef CONORMAL_IDEAL_HPP
#define CONORMAL_IDEAL_HPP

#include <memory>
#include <vector>

#include "conormal/polynomial.hpp"

namespace conormal {

struct GroebnerStats {
  std::int64_t pairs_considered = 0;
  std::int64_t pairs_reduced = 0;
  std::int64_t reduction_steps = 0;
  int basis_size = 0;
};

// Buchberger with the coprime-leading-term and chain (lcm) pair filters,
// normal selection strategy, full tail reduction.  Returns the unique
// reduced basis, monic, sorted ascending by leading monomial.  Charges the
// budget one unit per elementary reduction step.
std::vector<Polynomial> groebner_basis(const RingPtr& ring,
                                       std::vector<Polynomial> gens,
                                       const MonomialOrder& order,
                                       Budget* budget = nullptr,
                                       GroebnerStats* stats = nullptr);

// Remainder of f on full division by `basis`; the canonical normal form
// whenever `basis` is a Groebner basis for `order`.
Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis,
                       const MonomialOrder& order, Budget* budget = nullptr);

class IdealHandle {
public:
  IdealHandle() = default;
  IdealHandle(RingPtr ring, std::vector<Polynomial> gens);

  static IdealHandle zero(const RingPtr& ring) { return IdealHandle(ring, {}); }
  static IdealHandle unit(const RingPtr& ring) {
    return IdealHandle(ring, {Polynomial::constant(ring, 1)});
  }

  bool valid() const { return impl_ != nullptr; }
  const RingPtr& ring() const;
  // Normalised generators: zeros dropped, duplicates merged, sorted.
  const std::vector<Polynomial>& gens() const;

  const std::vector<Polynomial>& groebner(const MonomialOrder& order) const;
  const std::vector<Polynomial>& groebner() const; // ring-canonical grevlex

  Polynomial reduce(const Polynomial& f) const; // normal form, grevlex
  bool contains(const Polynomial& f) const { return reduce(f).is_zero(); }
  bool contains_all(const IdealHandle& other) const;
  bool is_zero_ideal() const { return gens().empty(); }
  bool is_unit_ideal() const;
  // Equality as ideals (identical reduced grevlex bases).
  bool same_ideal_as(const IdealHandle& o) const;

  // Canonical one-line rendering of the grevlex basis, usable as a map key.
  std::string canonical_key() const;

private:
  struct Impl;
  std::shared_ptr<Impl> impl_;
};

} // namespace conormal

#endif
