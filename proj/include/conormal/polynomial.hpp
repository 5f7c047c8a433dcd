// polynomial.hpp -- sparse multivariate polynomials with exact coefficients.
//
// Terms are kept strictly descending under the ring's canonical order
// (degree reverse lexicographic) with no zero coefficients, so structural
// equality, hashing-by-string and printing are all canonical for free.
// Leading-term queries for other orders are answered on demand; the
// Groebner engine keeps its own order-sorted views internally.

#ifndef CONORMAL_POLYNOMIAL_HPP
#define CONORMAL_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <vector>

#include "conormal/monomial.hpp"
#include "conormal/ring.hpp"
#include "conormal/scalar.hpp"

namespace conormal {

struct Term {
  Scalar coeff;
  Monomial mono;
};

class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial zero(const RingPtr& ring) { return Polynomial(ring); }
  static Polynomial constant(const RingPtr& ring, const Scalar& c);
  static Polynomial constant(const RingPtr& ring, long value);
  static Polynomial variable(const RingPtr& ring, int var);
  static Polynomial variable(const RingPtr& ring, const std::string& name);
  static Polynomial from_term(const RingPtr& ring, const Scalar& c,
                              const Monomial& m);
  // Normalises an arbitrary term soup into canonical form.
  static Polynomial from_terms(const RingPtr& ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
  }
  int nterms() const { return static_cast<int>(terms_.size()); }

  // Total degree; -1 for the zero polynomial.
  int degree() const;
  int degree_in(int var) const;
  bool is_homogeneous() const;
  bool uses_variable(int var) const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_term(const Scalar& c, const Monomial& m) const;
  Polynomial pow(int n) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  // Leading data under an arbitrary global order.
  const Term& leading_term(const MonomialOrder& order) const;
  // Divides every coefficient by the leading one.
  Polynomial monic(const MonomialOrder& order) const;

  Polynomial differentiate(int var) const;

  // Ring-aware substitution: every variable of this polynomial either has
  // an image in `images` (by source index) or must exist under the same
  // name in `target`.  Covers evaluation, parameter pinning, renaming and
  // transport between rings.
  Polynomial substitute(const RingPtr& target,
                        const std::map<int, Polynomial>& images) const;
  // Transport by name into another ring with the same coefficient domain.
  Polynomial transported(const RingPtr& target) const;

  std::string to_string() const;

private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

// f made homogeneous of its total degree using the variable `hvar` of
// `target`; all other variables of f must exist in `target` by name.
Polynomial homogenize(const Polynomial& f, const RingPtr& target, int hvar);

// Inverse chart map: set `hvar` to one (the result lives in `target`).
Polynomial dehomogenize(const Polynomial& f, const RingPtr& target, int hvar);

} // namespace conormal

#endif
