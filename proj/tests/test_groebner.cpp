// The Buchberger engine: reduced bases, the S-pair certificate, normal
// forms, determinism and resource budgets.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "conormal/ideal.hpp"
#include "conormal/parser.hpp"
#include "conormal/rng.hpp"

using namespace conormal;

namespace {

Polynomial P(const RingPtr& r, const std::string& s) {
  return parse_polynomial(r, s);
}

std::vector<Polynomial> PS(const RingPtr& r,
                           const std::vector<std::string>& ss) {
  std::vector<Polynomial> out;
  for (const auto& s : ss) out.push_back(P(r, s));
  return out;
}

// every leading monomial is minimal, every tail term irreducible, monic
bool is_reduced_basis(const std::vector<Polynomial>& gb,
                      const MonomialOrder& ord) {
  for (size_t i = 0; i < gb.size(); ++i) {
    if (!gb[i].leading_term(ord).coeff.is_one()) return false;
    for (size_t j = 0; j < gb.size(); ++j) {
      if (i == j) continue;
      const Monomial& ltj = gb[j].leading_term(ord).mono;
      for (const auto& t : gb[i].terms())
        if (ltj.divides(t.mono)) return false;
    }
  }
  return true;
}

// Buchberger's criterion, checked from scratch: all S-polynomials reduce
// to zero against the basis.
bool spairs_vanish(const std::vector<Polynomial>& gb,
                   const MonomialOrder& ord) {
  for (size_t i = 0; i < gb.size(); ++i)
    for (size_t j = i + 1; j < gb.size(); ++j) {
      const Term& a = gb[i].leading_term(ord);
      const Term& b = gb[j].leading_term(ord);
      Monomial l = a.mono.lcm(b.mono);
      Polynomial s =
          gb[i].times_term(a.coeff.inverse(), *l.divided_by(a.mono)) -
          gb[j].times_term(b.coeff.inverse(), *l.divided_by(b.mono));
      if (!normal_form(s, gb, ord).is_zero()) return false;
    }
  return true;
}

Polynomial random_poly(const RingPtr& ring, Rng& rng, int max_terms,
                       int max_deg) {
  std::vector<Term> terms;
  int nt = static_cast<int>(rng.range(1, max_terms));
  for (int t = 0; t < nt; ++t) {
    std::vector<int> e(ring->nvars());
    int budget = static_cast<int>(rng.range(0, max_deg));
    for (int v = 0; v < ring->nvars() && budget > 0; ++v) {
      e[v] = static_cast<int>(rng.range(0, budget));
      budget -= e[v];
    }
    terms.push_back({Scalar::rational(rng.nonzero(5)), Monomial(e)});
  }
  return Polynomial::from_terms(ring, terms);
}

} // namespace

TEST_CASE("lex basis of a curve parametrised by powers") {
  auto r = make_ring({"x", "y", "z"});
  auto lex = MonomialOrder::lex();
  auto gb = groebner_basis(r, PS(r, {"x^2-y", "x^3-z"}), lex);

  // the eliminant in (y, z) must appear
  CHECK(std::count(gb.begin(), gb.end(), P(r, "y^3-z^2")) == 1);
  CHECK(is_reduced_basis(gb, lex));
  CHECK(spairs_vanish(gb, lex));
  for (const auto& g : PS(r, {"x^2-y", "x^3-z"}))
    CHECK(normal_form(g, gb, lex).is_zero());

  // frozen full basis (verified by the properties above)
  auto expected = PS(r, {"x^2-y", "x*y-z", "x*z-y^2", "y^3-z^2"});
  std::sort(expected.begin(), expected.end(),
            [&](const Polynomial& a, const Polynomial& b) {
              return lex.compare(a.leading_term(lex).mono,
                                 b.leading_term(lex).mono) < 0;
            });
  CHECK(gb == expected);
}

TEST_CASE("buchberger certificate holds on seeded random ideals") {
  auto r = make_ring({"x", "y", "z"});
  Rng rng(7111);
  auto grev = MonomialOrder::grevlex();
  auto lex = MonomialOrder::lex();
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Polynomial> gens;
    int ng = static_cast<int>(rng.range(2, 3));
    for (int i = 0; i < ng; ++i) gens.push_back(random_poly(r, rng, 4, 3));
    for (const auto& ord : {grev, lex}) {
      auto gb = groebner_basis(r, gens, ord);
      CHECK(is_reduced_basis(gb, ord));
      CHECK(spairs_vanish(gb, ord));
      for (const auto& g : gens) CHECK(normal_form(g, gb, ord).is_zero());
    }
  }
}

TEST_CASE("basis is canonical: generator order cannot matter") {
  auto r = make_ring({"x", "y", "z"});
  auto gens = PS(r, {"x^2+y*z", "y^2-z^2+x", "x*y*z-1"});
  auto grev = MonomialOrder::grevlex();
  auto gb1 = groebner_basis(r, gens, grev);
  std::reverse(gens.begin(), gens.end());
  auto gb2 = groebner_basis(r, gens, grev);
  CHECK(gb1 == gb2);
  auto gb3 = groebner_basis(r, gens, grev);
  CHECK(gb2 == gb3);
}

TEST_CASE("homogeneous input gives a homogeneous basis") {
  auto r = make_ring({"x", "y", "z", "w"});
  auto gb = groebner_basis(
      r, PS(r, {"x*z-y^2", "x*w-y*z", "y*w-z^2"}), MonomialOrder::grevlex());
  for (const auto& g : gb) CHECK(g.is_homogeneous());
}

TEST_CASE("normal form is a canonical representative") {
  auto r = make_ring({"x", "y", "z"});
  IdealHandle I(r, PS(r, {"x^2-y"}));
  CHECK(I.reduce(P(r, "x^2+y^2")) == P(r, "y^2+y"));
  Rng rng(500);
  for (int trial = 0; trial < 20; ++trial) {
    Polynomial f = random_poly(r, rng, 5, 4);
    Polynomial g = random_poly(r, rng, 5, 4);
    Polynomial nf = I.reduce(f);
    CHECK(I.reduce(nf) == nf);                       // idempotent
    CHECK(I.contains(f - nf));                       // representative
    CHECK(I.reduce(f + g) == I.reduce(nf + I.reduce(g)));
  }
}

TEST_CASE("ideal handles cache per order and compare as ideals") {
  auto r = make_ring({"x", "y"});
  IdealHandle I(r, PS(r, {"x^2", "x*y"}));
  const auto& a = I.groebner();
  const auto& b = I.groebner();
  CHECK(&a == &b); // cached, not recomputed
  const auto& c = I.groebner(MonomialOrder::lex());
  CHECK(&a != &c);

  IdealHandle J(r, PS(r, {"x^2", "x*y", "x^2+3*x*y"}));
  CHECK(I.same_ideal_as(J));
  CHECK(I.contains_all(J));
  IdealHandle K(r, PS(r, {"x"}));
  CHECK(!I.same_ideal_as(K));
  CHECK(K.contains_all(I));
  CHECK(!I.contains_all(K));

  IdealHandle U(r, PS(r, {"x", "x+1"}));
  CHECK(U.is_unit_ideal());
  CHECK(IdealHandle::unit(r).same_ideal_as(U));
}

TEST_CASE("budgets abort runaway computations, not results") {
  auto r = make_ring({"x", "y", "z"});
  auto gens = PS(r, {"x^2-y", "x^3-z"});
  Budget tiny(1, 200);
  CHECK_THROWS_AS(groebner_basis(r, gens, MonomialOrder::lex(), &tiny),
                  BudgetError);
  Budget degree_capped(1'000'000, 2);
  CHECK_THROWS_AS(
      groebner_basis(r, gens, MonomialOrder::lex(), &degree_capped),
      BudgetError);
  // an adequate budget succeeds and reports its spend
  Budget fine(1'000'000, 200);
  GroebnerStats stats;
  auto gb = groebner_basis(r, gens, MonomialOrder::lex(), &fine, &stats);
  CHECK(stats.basis_size == 4);
  CHECK(stats.reduction_steps > 0);
  CHECK(stats.reduction_steps <= 1'000'000);
}

TEST_CASE("degenerate inputs") {
  auto r = make_ring({"x", "y"});
  CHECK(groebner_basis(r, {}, MonomialOrder::grevlex()).empty());
  CHECK(groebner_basis(r, {Polynomial::zero(r)}, MonomialOrder::grevlex())
            .empty());
  auto unit = groebner_basis(r, PS(r, {"3"}), MonomialOrder::grevlex());
  REQUIRE(unit.size() == 1);
  CHECK(unit[0] == P(r, "1"));
}
