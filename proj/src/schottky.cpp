// Closed-form invariant tables: exact binomials, factorials and the
// rank-bounded symmetric determinantal product formula.

#include "conormal/schottky.hpp"

#include <stdexcept>

#include "conormal/errors.hpp"

namespace conormal {

namespace {

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

mpz_class factorial(unsigned long n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

mpz_class power_of_two(unsigned long e) { return mpz_class(1) << e; }

} // namespace

mpz_class jacobian_gauss_degree(int g) {
  if (g < 2)
    throw DomainError("jacobian Gauss degree needs genus >= 2, got " +
                      std::to_string(g));
  return binomial(2 * static_cast<unsigned long>(g) - 2,
                  static_cast<unsigned long>(g) - 1);
}

mpz_class hyperelliptic_gauss_degree(int g) {
  if (g < 2)
    throw DomainError("hyperelliptic Gauss degree needs genus >= 2, got " +
                      std::to_string(g));
  return power_of_two(static_cast<unsigned long>(g) - 1);
}

mpz_class symmetric_determinantal_degree(int m, int r) {
  if (r < 1 || r > m)
    throw DomainError("rank bound must satisfy 1 <= r <= m, got r = " +
                      std::to_string(r) + ", m = " + std::to_string(m));
  mpz_class numerator = 1, denominator = 1;
  for (int a = 0; a <= m - r - 1; ++a) {
    numerator *= binomial(static_cast<unsigned long>(m + a),
                          static_cast<unsigned long>(m - r - a));
    denominator *= binomial(2 * static_cast<unsigned long>(a) + 1,
                            static_cast<unsigned long>(a));
  }
  mpz_class degree;
  mpz_class remainder;
  mpz_fdiv_qr(degree.get_mpz_t(), remainder.get_mpz_t(),
              numerator.get_mpz_t(), denominator.get_mpz_t());
  if (remainder != 0)
    throw std::logic_error(
        "determinantal degree product failed to divide exactly");
  return degree;
}

mpz_class prym_gauss_degree(int g) {
  if (g < 3)
    throw DomainError("Prym Gauss degree needs dimension >= 3, got " +
                      std::to_string(g));
  return symmetric_determinantal_degree(g, 3) +
         power_of_two(static_cast<unsigned long>(g) - 3);
}

mpz_class nodal_theta_chi_ic(int g, int k) {
  if (g < 2)
    throw DomainError("nodal theta divisors need genus >= 2, got " +
                      std::to_string(g));
  if (k < 0)
    throw DomainError("node count must be nonnegative, got " +
                      std::to_string(k));
  mpz_class value = factorial(static_cast<unsigned long>(g));
  value -= (g % 2 == 0) ? 2 * mpz_class(k) : mpz_class(k);
  return value;
}

mpz_class n0_threshold(int g) { return nodal_theta_chi_ic(g, 1); }

mpz_class quadric_chi_ic(const std::string& type) {
  if (type == "smooth") return 4;
  if (type == "cone") return 3;
  if (type == "two-planes") return 6;
  throw DomainError("unknown quadric type \"" + type +
                    "\"; expected smooth, cone or two-planes");
}

std::vector<SchottkyRow> schottky_table(int g_max) {
  if (g_max < 2)
    throw DomainError("the invariant table starts at genus 2, got g_max = " +
                      std::to_string(g_max));
  std::vector<SchottkyRow> rows;
  rows.reserve(static_cast<size_t>(g_max) - 1);
  for (int g = 2; g <= g_max; ++g) {
    SchottkyRow row;
    row.genus = g;
    row.jacobian_degree = jacobian_gauss_degree(g);
    row.hyperelliptic_degree = hyperelliptic_gauss_degree(g);
    if (g >= 3) {
      row.determinantal_degree = symmetric_determinantal_degree(g, 3);
      row.prym_degree = prym_gauss_degree(g);
    }
    row.n0 = n0_threshold(g);
    row.chi_ic_smooth = nodal_theta_chi_ic(g, 0);
    row.chi_ic_one_node = nodal_theta_chi_ic(g, 1);
    row.chi_ic_two_nodes = nodal_theta_chi_ic(g, 2);
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace conormal
