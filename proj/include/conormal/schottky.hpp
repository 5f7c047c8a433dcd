// schottky.hpp -- closed-form invariants of theta-divisor Gauss maps on
// principally polarized abelian varieties: degrees along the classical
// loci (Jacobians, hyperelliptic Jacobians, Pryms), the degree of the
// rank-bounded symmetric determinantal locus feeding the Prym count, and
// intersection-cohomology Euler characteristics of mildly nodal theta
// divisors together with the threshold they induce.
//
// Everything here is exact integer arithmetic on published closed forms;
// no geometry is constructed.  The determinantal degree is the one place
// where a formula choice was needed, and it is validated against the
// Groebner degree of the corresponding minor ideals in the tests.

#ifndef CONORMAL_SCHOTTKY_HPP
#define CONORMAL_SCHOTTKY_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace conormal {

// Gauss-map degree of the theta divisor of a Jacobian of a non-hyperelliptic
// genus-g curve: the central binomial C(2g-2, g-1).  Requires g >= 2.
mpz_class jacobian_gauss_degree(int g);

// Gauss-map degree for a hyperelliptic Jacobian: 2^(g-1).  Requires g >= 2.
mpz_class hyperelliptic_gauss_degree(int g);

// Degree of the locus of symmetric m x m forms of rank at most r, by the
// classical product formula
//
//   prod_{a=0}^{m-r-1}  C(m+a, m-r-a) / C(2a+1, a),
//
// an integer for every 1 <= r <= m (the whole space for r = m).  The
// division is performed exactly and checked.
mpz_class symmetric_determinantal_degree(int m, int r);

// Gauss-map degree for the theta divisor of a Prym variety of dimension g:
// the rank <= 3 determinantal degree in g variables plus 2^(g-3).
// Requires g >= 3.
mpz_class prym_gauss_degree(int g);

// Intersection-cohomology Euler characteristic of a theta divisor whose
// only singularities are k ordinary double points:
//
//   g! - 2k   (g even),        g! - k   (g odd),
//
// and in particular g! for the smooth case k = 0.  Requires g >= 2 and
// k >= 0.  At genus two the one-node value is already 0 (the divisor is a
// curve whose normalization is elliptic), so callers must not assume
// positivity.
mpz_class nodal_theta_chi_ic(int g, int k);

// The threshold at which the stratification of the moduli space by the
// Euler characteristic first detects a nodal theta divisor: g! - 2 for
// even g, g! - 1 for odd g.  Coincides with nodal_theta_chi_ic(g, 1).
mpz_class n0_threshold(int g);

// Euler characteristic reference values for quadric surfaces, indexed by
// type: "smooth" (a doubled ruling), "cone" (over a smooth rational
// curve), or "two-planes" (a reducible union).
mpz_class quadric_chi_ic(const std::string& type);

// One genus row of the invariant table.  The determinantal and Prym
// entries need g >= 3 and are absent for g = 2.
struct SchottkyRow {
  int genus;
  mpz_class jacobian_degree;
  mpz_class hyperelliptic_degree;
  std::optional<mpz_class> determinantal_degree;
  std::optional<mpz_class> prym_degree;
  mpz_class n0;
  mpz_class chi_ic_smooth;     // k = 0, equals g!
  mpz_class chi_ic_one_node;   // k = 1
  mpz_class chi_ic_two_nodes;  // k = 2
};

// Rows for every genus from 2 to g_max inclusive.  Requires g_max >= 2.
std::vector<SchottkyRow> schottky_table(int g_max);

} // namespace conormal

#endif
