// scalar.hpp -- exact coefficient arithmetic.
//
// A Scalar is either an arbitrary-precision rational (the authoritative
// mode; GMP underneath, never floating point) or an element of a prime
// field F_p with p > 2^15.  The prime mode exists purely as an optional
// probabilistic cross-check for expensive runs: results computed there are
// never reported as exact answers.  Mixing scalars from different domains
// is a DomainError, not a silent coercion.

#ifndef CONORMAL_SCALAR_HPP
#define CONORMAL_SCALAR_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "conormal/errors.hpp"

namespace conormal {

class Scalar {
public:
  // Zero of Q.  Domain-carrying constructions below are preferred wherever
  // an operand is in scope.
  Scalar() : q_(0), p_(0), r_(0) {}

  static Scalar rational(const mpq_class& q) {
    Scalar s;
    s.q_ = q;
    s.q_.canonicalize();
    return s;
  }
  static Scalar rational(long num, long den = 1);
  static Scalar mod_p(std::uint64_t residue, std::uint64_t p);

  // Zero/one in the same domain as a model operand.
  static Scalar zero_like(const Scalar& model);
  static Scalar one_like(const Scalar& model);

  bool is_rational() const { return p_ == 0; }
  std::uint64_t modulus() const { return p_; }

  bool is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
  bool is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

  // -1 / 0 / +1.  Prime-field elements have no order; asking is an error.
  int sign() const;

  const mpq_class& rational_value() const;
  std::uint64_t residue() const { return r_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inverse() const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Total order used only for canonical printing/sorting of rationals.
  bool operator<(const Scalar& o) const;

  std::string to_string() const;

private:
  void require_same_domain(const Scalar& o) const;

  mpq_class q_;       // value when p_ == 0
  std::uint64_t p_;   // 0 = rational mode, otherwise the prime
  std::uint64_t r_;   // residue in [0, p) when p_ != 0
};

// Reduction of a rational into F_p.  Fails if the denominator is divisible
// by p (an "unlucky prime" event the caller should handle by repicking).
Scalar project_mod_p(const Scalar& rational, std::uint64_t p);

} // namespace conormal

#endif
