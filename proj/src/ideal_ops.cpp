#include "conormal/ideal_ops.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "conormal/errors.hpp"

namespace conormal {

namespace {

constexpr int kMaxQuotientChain = 256;

// transport generators free of the auxiliary variables back to `base`
IdealHandle contract(const std::vector<Polynomial>& gens, const RingPtr& base) {
  std::vector<Polynomial> out;
  for (const auto& g : gens) out.push_back(g.transported(base));
  return IdealHandle(base, std::move(out));
}

std::vector<int> tail_indices(const RingPtr& ext, int from) {
  std::vector<int> idx;
  for (int i = from; i < ext->nvars(); ++i) idx.push_back(i);
  return idx;
}

} // namespace

std::string fresh_variable_name(const Ring& ring, const std::string& base) {
  if (ring.index_of(base) < 0) return base;
  for (int i = 2;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (ring.index_of(candidate) < 0) return candidate;
  }
}

IdealHandle substituted_ideal(const IdealHandle& I, const RingPtr& target,
                              const std::map<int, Polynomial>& images) {
  std::vector<Polynomial> out;
  for (const auto& g : I.gens()) out.push_back(g.substitute(target, images));
  return IdealHandle(target, std::move(out));
}

IdealHandle eliminate(const IdealHandle& I, const std::vector<int>& drop) {
  if (drop.empty()) return I;
  const RingPtr& ring = I.ring();
  std::vector<bool> dropped(ring->nvars(), false);
  for (int v : drop) {
    if (v < 0 || v >= ring->nvars())
      throw DomainError("eliminate: variable index out of range");
    dropped[v] = true;
  }
  int kept = 0;
  for (bool d : dropped)
    if (!d) ++kept;
  if (kept == 0) throw DomainError("eliminate: cannot drop every variable");

  MonomialOrder order = MonomialOrder::elimination(drop, ring->nvars());
  const auto& gb = I.groebner(order);
  std::vector<Polynomial> out;
  for (const auto& g : gb) {
    bool free = true;
    for (int v : drop)
      if (g.uses_variable(v)) {
        free = false;
        break;
      }
    if (free) out.push_back(g);
  }
  return IdealHandle(ring, std::move(out));
}

IdealHandle intersect(const IdealHandle& I, const IdealHandle& J) {
  const RingPtr& ring = I.ring();
  if (!ring->same_as(*J.ring()))
    throw DomainError("intersect: mismatched rings");
  if (I.is_zero_ideal() || J.is_zero_ideal()) return IdealHandle::zero(ring);
  RingPtr ext = extend_ring(ring, {fresh_variable_name(*ring, "t")});
  int tv = ext->nvars() - 1;
  Polynomial t = Polynomial::variable(ext, tv);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens()) gens.push_back(t * f.transported(ext));
  for (const auto& g : J.gens())
    gens.push_back(one_minus_t * g.transported(ext));
  IdealHandle graph(ext, std::move(gens));
  IdealHandle elim = eliminate(graph, tail_indices(ext, tv));
  return contract(elim.gens(), ring);
}

Polynomial exact_divide(const Polynomial& h, const Polynomial& g) {
  if (g.is_zero()) throw DomainError("exact division by zero");
  if (h.is_zero()) return h;
  MonomialOrder ord = MonomialOrder::grevlex();
  Polynomial rest = h;
  Polynomial quotient = Polynomial::zero(h.ring());
  const Term& glt = g.leading_term(ord);
  while (!rest.is_zero()) {
    const Term& rlt = rest.leading_term(ord);
    auto q = rlt.mono.divided_by(glt.mono);
    if (!q) throw DomainError("inexact polynomial division");
    Scalar c = rlt.coeff / glt.coeff;
    Polynomial piece = Polynomial::from_term(h.ring(), c, *q);
    quotient = quotient + piece;
    rest = rest - piece * g;
  }
  return quotient;
}

IdealHandle ideal_quotient(const IdealHandle& I, const Polynomial& g) {
  const RingPtr& ring = I.ring();
  if (g.is_zero()) return IdealHandle::unit(ring);
  if (I.is_zero_ideal()) return I;
  IdealHandle gid(ring, {g});
  IdealHandle meet = intersect(I, gid);
  std::vector<Polynomial> out;
  for (const auto& h : meet.gens()) out.push_back(exact_divide(h, g));
  return IdealHandle(ring, std::move(out));
}

IdealHandle ideal_quotient(const IdealHandle& I, const IdealHandle& J) {
  const RingPtr& ring = I.ring();
  if (!ring->same_as(*J.ring()))
    throw DomainError("ideal quotient: mismatched rings");
  if (J.is_zero_ideal()) return IdealHandle::unit(ring);
  IdealHandle acc;
  bool first = true;
  for (const auto& g : J.gens()) {
    IdealHandle q = ideal_quotient(I, g);
    acc = first ? q : intersect(acc, q);
    first = false;
  }
  return acc;
}

namespace {

SaturationResult saturation_exponent_against(const IdealHandle& I,
                                             const IdealHandle& target,
                                             const Polynomial& f) {
  IdealHandle chain = I;
  int k = 0;
  while (!chain.same_ideal_as(target)) {
    chain = ideal_quotient(chain, f);
    if (++k > kMaxQuotientChain)
      throw DomainError("saturation chain failed to stabilise");
  }
  return {target, k};
}

} // namespace

SaturationResult saturate(const IdealHandle& I, const Polynomial& f) {
  const RingPtr& ring = I.ring();
  if (f.is_zero()) throw DomainError("saturation by the zero element");
  if (f.is_constant()) return {I, 0};
  RingPtr ext = extend_ring(ring, {fresh_variable_name(*ring, "t")});
  int tv = ext->nvars() - 1;
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g.transported(ext));
  gens.push_back(Polynomial::constant(ext, 1) -
                 Polynomial::variable(ext, tv) * f.transported(ext));
  IdealHandle extended(ext, std::move(gens));
  IdealHandle elim = eliminate(extended, tail_indices(ext, tv));
  IdealHandle sat = contract(elim.gens(), ring);
  return saturation_exponent_against(I, sat, f);
}

SaturationResult saturate(const IdealHandle& I, const IdealHandle& J) {
  const RingPtr& ring = I.ring();
  if (!ring->same_as(*J.ring()))
    throw DomainError("saturate: mismatched rings");
  if (J.is_zero_ideal()) throw DomainError("saturation by the zero ideal");
  IdealHandle chain = I;
  int k = 0;
  for (;;) {
    IdealHandle next = ideal_quotient(chain, J);
    if (next.same_ideal_as(chain)) return {chain, k};
    chain = next;
    if (++k > kMaxQuotientChain)
      throw DomainError("saturation chain failed to stabilise");
  }
}

bool radical_membership(const Polynomial& f, const IdealHandle& I) {
  const RingPtr& ring = I.ring();
  RingPtr ext = extend_ring(ring, {fresh_variable_name(*ring, "t")});
  int tv = ext->nvars() - 1;
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g.transported(ext));
  gens.push_back(Polynomial::constant(ext, 1) -
                 Polynomial::variable(ext, tv) * f.transported(ext));
  IdealHandle extended(ext, std::move(gens));
  return extended.is_unit_ideal();
}

bool is_homogeneous_ideal(const IdealHandle& I) {
  for (const auto& g : I.gens())
    if (!g.is_homogeneous()) return false;
  return true;
}

// ===========================================================================
// dimension and degree
// ===========================================================================

namespace {

std::vector<Monomial> minimal_monomial_gens(std::vector<Monomial> gens) {
  std::vector<Monomial> out;
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return grevlex_compare(a, b) < 0;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& kept : out)
      if (kept.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

std::vector<Monomial> leading_monomials(const IdealHandle& I) {
  std::vector<Monomial> lts;
  for (const auto& g : I.groebner())
    lts.push_back(g.leading_term(MonomialOrder::grevlex()).mono);
  return minimal_monomial_gens(std::move(lts));
}

int dimension_of_leading_terms(const std::vector<Monomial>& lts, int nvars) {
  if (nvars > 24)
    throw DomainError("dimension search supports at most 24 variables");
  for (const auto& m : lts)
    if (m.is_constant()) return -1; // unit ideal
  std::vector<std::uint32_t> supports;
  for (const auto& m : lts) {
    std::uint32_t mask = 0;
    for (int v = 0; v < nvars; ++v)
      if (m.exponent(v) > 0) mask |= (1u << v);
    supports.push_back(mask);
  }
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << nvars); ++s) {
    bool independent = true;
    for (std::uint32_t m : supports)
      if ((m & ~s) == 0) {
        independent = false;
        break;
      }
    if (independent) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

using ZPoly = std::vector<long long>; // dense coefficients, index = t-degree

ZPoly zp_add_shifted(const ZPoly& a, const ZPoly& b, int shift) {
  ZPoly out(std::max(a.size(), b.size() + shift), 0);
  for (size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) out[i + shift] += b[i];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

ZPoly zp_mul_one_minus_power(const ZPoly& a, int d) {
  ZPoly out(a.size() + d, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    out[i] += a[i];
    out[i + d] -= a[i];
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::string monomial_set_key(const std::vector<Monomial>& gens) {
  std::ostringstream out;
  for (const auto& m : gens) {
    for (int v = 0; v < m.nvars(); ++v) out << m.exponent(v) << ',';
    out << ';';
  }
  return out.str();
}

// Numerator of the Hilbert series of R/M over (1-t)^nvars, by pivoting on
// the most shared variable:  N(M) = N(M + (p)) + t^deg(p) * N(M : p).
ZPoly hilbert_numerator(std::vector<Monomial> gens, int nvars,
                        std::map<std::string, ZPoly>& memo) {
  gens = minimal_monomial_gens(std::move(gens));
  if (gens.empty()) return {1};
  for (const auto& m : gens)
    if (m.is_constant()) return {};
  // pairwise coprime generators: complete-intersection closed form
  bool coprime = true;
  for (size_t a = 0; a < gens.size() && coprime; ++a)
    for (size_t b = a + 1; b < gens.size() && coprime; ++b)
      if (!gens[a].coprime_with(gens[b])) coprime = false;
  if (coprime) {
    ZPoly acc = {1};
    for (const auto& m : gens) acc = zp_mul_one_minus_power(acc, m.degree());
    return acc;
  }

  std::string key = monomial_set_key(gens);
  auto hit = memo.find(key);
  if (hit != memo.end()) return hit->second;

  // pivot: the variable used by the most generators, smallest min-exponent
  int best_var = -1, best_count = 0;
  for (int v = 0; v < nvars; ++v) {
    int count = 0;
    for (const auto& m : gens)
      if (m.exponent(v) > 0) ++count;
    if (count > best_count) {
      best_count = count;
      best_var = v;
    }
  }
  int e = 0;
  for (const auto& m : gens)
    if (m.exponent(best_var) > 0)
      e = e == 0 ? m.exponent(best_var) : std::min(e, m.exponent(best_var));

  std::vector<Monomial> plus = gens;
  plus.push_back(Monomial(std::vector<int>(nvars, 0)).with_exponent(best_var, e));
  std::vector<Monomial> colon;
  for (const auto& m : gens) {
    int cur = m.exponent(best_var);
    colon.push_back(m.with_exponent(best_var, std::max(0, cur - e)));
  }
  ZPoly result = zp_add_shifted(hilbert_numerator(std::move(plus), nvars, memo),
                                hilbert_numerator(std::move(colon), nvars, memo),
                                e);
  memo.emplace(std::move(key), result);
  return result;
}

} // namespace

int affine_dimension(const IdealHandle& I) {
  if (I.is_zero_ideal()) return I.ring()->nvars();
  return dimension_of_leading_terms(leading_monomials(I), I.ring()->nvars());
}

DimensionDegree dimension_degree(const IdealHandle& I) {
  if (!is_homogeneous_ideal(I))
    throw DomainError("dimension_degree requires homogeneous generators");
  int n = I.ring()->nvars();
  if (I.is_zero_ideal()) {
    // the whole projective space
    return {n - 1, 1};
  }
  std::vector<Monomial> lts = leading_monomials(I);
  int affine_dim = dimension_of_leading_terms(lts, n);
  if (affine_dim <= 0) return {-1, 0};

  std::map<std::string, ZPoly> memo;
  ZPoly numerator = hilbert_numerator(lts, n, memo);
  int codim = n - affine_dim;
  // divide by (1-t)^codim: repeated prefix sums, each requiring N(1) == 0
  ZPoly q = numerator;
  for (int step = 0; step < codim; ++step) {
    long long running = 0;
    ZPoly next(q.size(), 0);
    for (size_t i = 0; i < q.size(); ++i) {
      running += q[i];
      next[i] = running;
    }
    if (running != 0)
      throw DomainError("Hilbert numerator not divisible by (1-t)^codim");
    while (!next.empty() && next.back() == 0) next.pop_back();
    q = std::move(next);
  }
  long long degree = 0;
  for (long long c : q) degree += c;
  if (degree <= 0) throw DomainError("nonpositive degree from Hilbert data");
  return {affine_dim - 1, degree};
}

long long zero_dim_colength(const IdealHandle& I) {
  int n = I.ring()->nvars();
  const auto& gb = I.groebner();
  if (I.is_unit_ideal()) return 0; // empty scheme
  if (gb.empty()) throw DomainError("colength of the zero ideal");

  std::vector<Monomial> lts = leading_monomials(I);
  std::vector<int> bound(n, -1);
  for (const auto& m : lts) {
    for (int v = 0; v < n; ++v) {
      if (m.exponent(v) == m.degree() && m.exponent(v) > 0) {
        // pure power of v
        bound[v] = bound[v] < 0 ? m.exponent(v) : std::min(bound[v], m.exponent(v));
      }
    }
  }
  long long cells = 1;
  for (int v = 0; v < n; ++v) {
    if (bound[v] < 0)
      throw DomainError("zero_dim_colength on a positive-dimensional ideal");
    cells *= bound[v];
    if (cells > 20'000'000)
      throw DomainError("staircase too large to enumerate");
  }

  // walk the box under the pure-power bounds, counting standard monomials
  long long count = 0;
  std::vector<int> e(n, 0);
  for (;;) {
    Monomial m(e);
    bool standard = true;
    for (const auto& lt : lts)
      if (lt.divides(m)) {
        standard = false;
        break;
      }
    if (standard) ++count;
    int v = 0;
    while (v < n) {
      if (++e[v] < bound[v]) break;
      e[v] = 0;
      ++v;
    }
    if (v == n) break;
  }
  return count;
}

} // namespace conormal
