// factor.hpp -- exact factorisation over the rationals.
//
// Multivariate gcds ride on the Groebner engine (the intersection of two
// principal ideals is generated by the lcm); irreducible factorisation
// reduces to the univariate case by Kronecker substitution, and the
// univariate case is classical Zassenhaus: factor modulo a wordsized
// prime, Hensel-lift, recombine subsets below the coefficient bound.
// Every factorisation is verified by multiplying back before it is
// returned.

#ifndef CONORMAL_FACTOR_HPP
#define CONORMAL_FACTOR_HPP

#include <optional>
#include <utility>
#include <vector>

#include "conormal/polynomial.hpp"

namespace conormal {

struct Factorization {
  RingPtr ring;
  Scalar content; // rational content, carries the sign
  // primitive irreducible factors with positive leading coefficient,
  // sorted canonically, paired with their exponents
  std::vector<std::pair<Polynomial, int>> factors;

  Polynomial expanded() const; // content * prod f_i^{e_i}
};

// Complete factorisation into rational content and irreducible primitive
// integer polynomials.  Rational coefficients only; zero is an error.
Factorization factor_polynomial(const Polynomial& f);

// Primitive gcd with positive leading coefficient; gcd(0, b) = normalise(b).
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

// Product of the distinct irreducible factors: f / gcd(f, all partials).
Polynomial squarefree_part(const Polynomial& f);

// (content, primitive integer polynomial with positive leading coefficient)
std::pair<Scalar, Polynomial> split_rational_content(const Polynomial& f);

// Quotient if g divides h exactly, nothing otherwise.
std::optional<Polynomial> try_exact_divide(const Polynomial& h,
                                           const Polynomial& g);

bool is_irreducible(const Polynomial& f);

} // namespace conormal

#endif
