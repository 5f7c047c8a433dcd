#include "conormal/ideal.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "conormal/errors.hpp"

namespace conormal {

// ===========================================================================
// order-sorted working representation
//
// Inside the engine a polynomial is a term vector sorted strictly
// descending under the *active* order, so the leading term is front() and
// reduction merges stay linear.  Conversion happens only at the API edge.
// ===========================================================================

namespace {

struct OrdPoly {
  std::vector<Term> t;

  bool zero() const { return t.empty(); }
  const Term& lt() const { return t.front(); }
  int degree() const {
    int d = -1;
    for (const auto& term : t) d = std::max(d, term.mono.degree());
    return d;
  }
};

OrdPoly to_ordered(const Polynomial& p, const MonomialOrder& ord) {
  OrdPoly out;
  out.t = p.terms();
  std::sort(out.t.begin(), out.t.end(), [&](const Term& a, const Term& b) {
    return ord.compare(a.mono, b.mono) > 0;
  });
  return out;
}

Polynomial from_ordered(const RingPtr& ring, const OrdPoly& p) {
  return Polynomial::from_terms(ring, p.t);
}

// out = a - c * x^m * b, all descending; the workhorse of reduction.
OrdPoly subtract_multiple(const OrdPoly& a, const Scalar& c, const Monomial& m,
                          const OrdPoly& b, const MonomialOrder& ord) {
  OrdPoly out;
  out.t.reserve(a.t.size() + b.t.size());
  size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    Monomial bm = b.t[j].mono.times(m);
    int cmp = ord.compare(a.t[i].mono, bm);
    if (cmp > 0) {
      out.t.push_back(a.t[i++]);
    } else if (cmp < 0) {
      out.t.push_back({-(c * b.t[j].coeff), bm});
      ++j;
    } else {
      Scalar s = a.t[i].coeff - c * b.t[j].coeff;
      if (!s.is_zero()) out.t.push_back({s, a.t[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.t.size(); ++i) out.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j)
    out.t.push_back({-(c * b.t[j].coeff), b.t[j].mono.times(m)});
  return out;
}

// Full normal form: every term of the result is irreducible.
OrdPoly reduce_full(OrdPoly f, const std::vector<OrdPoly>& basis,
                    const MonomialOrder& ord, Budget& budget) {
  OrdPoly done; // accumulated irreducible head terms, descending
  while (!f.zero()) {
    const Term& head = f.lt();
    bool hit = false;
    for (const auto& g : basis) {
      auto q = head.mono.divided_by(g.lt().mono);
      if (!q) continue;
      budget.charge();
      budget.check_degree(f.degree());
      Scalar c = head.coeff / g.lt().coeff;
      f = subtract_multiple(f, c, *q, g, ord);
      hit = true;
      break;
    }
    if (!hit) {
      done.t.push_back(head);
      f.t.erase(f.t.begin());
    }
  }
  return done;
}

struct Pair {
  int i, j;
  Monomial lcm;
  int degree;
};

// normal strategy: smallest lcm under the active order first
struct PairWorse {
  const MonomialOrder& ord;
  bool operator()(const Pair& a, const Pair& b) const {
    int c = ord.compare(a.lcm, b.lcm);
    if (c != 0) return c > 0;
    if (a.i != b.i) return a.i > b.i;
    return a.j > b.j;
  }
};

} // namespace

std::vector<Polynomial> groebner_basis(const RingPtr& ring,
                                       std::vector<Polynomial> gens,
                                       const MonomialOrder& order,
                                       Budget* budget_in,
                                       GroebnerStats* stats) {
  Budget& budget = budget_in ? *budget_in : global_budget();

  // normalise the input deterministically
  std::vector<OrdPoly> input;
  for (auto& g : gens)
    if (!g.is_zero()) input.push_back(to_ordered(g, order));
  std::sort(input.begin(), input.end(), [&](const OrdPoly& a, const OrdPoly& b) {
    int c = order.compare(a.lt().mono, b.lt().mono);
    if (c != 0) return c < 0;
    return from_ordered(ring, a).to_string() < from_ordered(ring, b).to_string();
  });

  std::vector<OrdPoly> basis;
  std::vector<Pair> pairs;

  // Gebauer-Moeller bookkeeping on pair insertion
  auto add_to_basis = [&](OrdPoly h) {
    int t = static_cast<int>(basis.size());
    basis.push_back(std::move(h));
    const Monomial& lt_t = basis[t].lt().mono;

    // chain criterion, first half: discard old pairs whose lcm is a proper
    // multiple of both new lcms
    std::vector<Pair> kept;
    kept.reserve(pairs.size());
    for (auto& p : pairs) {
      bool drop = lt_t.divides(p.lcm) &&
                  basis[p.i].lt().mono.lcm(lt_t) != p.lcm &&
                  basis[p.j].lt().mono.lcm(lt_t) != p.lcm;
      if (!drop) kept.push_back(std::move(p));
    }
    pairs.swap(kept);

    // candidate new pairs (i, t)
    std::vector<Pair> fresh;
    for (int i = 0; i < t; ++i) {
      Pair p;
      p.i = i;
      p.j = t;
      p.lcm = basis[i].lt().mono.lcm(lt_t);
      p.degree = p.lcm.degree();
      fresh.push_back(std::move(p));
    }
    // chain criterion, second half: within the new pairs keep only minimal
    // lcms (a pair whose lcm strictly divides another's supersedes it, and
    // among equal lcms one representative survives)
    std::vector<bool> dead(fresh.size(), false);
    for (size_t a = 0; a < fresh.size(); ++a) {
      if (dead[a]) continue;
      for (size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || dead[a] || dead[b]) continue;
        if (fresh[a].lcm == fresh[b].lcm) {
          if (a < b) dead[b] = true;
        } else if (fresh[a].lcm.divides(fresh[b].lcm)) {
          dead[b] = true;
        }
      }
    }
    // coprime criterion last: coprime pairs are discarded *after* they have
    // pruned the others
    for (size_t a = 0; a < fresh.size(); ++a) {
      if (dead[a]) continue;
      if (basis[fresh[a].i].lt().mono.coprime_with(lt_t)) dead[a] = true;
    }
    for (size_t a = 0; a < fresh.size(); ++a)
      if (!dead[a]) pairs.push_back(std::move(fresh[a]));
  };

  for (auto& f : input) {
    OrdPoly h = reduce_full(std::move(f), basis, order, budget);
    if (!h.zero()) add_to_basis(std::move(h));
  }

  PairWorse worse{order};
  while (!pairs.empty()) {
    auto best = std::min_element(pairs.begin(), pairs.end(),
                                 [&](const Pair& a, const Pair& b) {
                                   return worse(b, a); // a better than b
                                 });
    Pair p = *best;
    pairs.erase(best);
    if (stats) ++stats->pairs_considered;

    const OrdPoly& gi = basis[p.i];
    const OrdPoly& gj = basis[p.j];
    Monomial mi = *p.lcm.divided_by(gi.lt().mono);
    Monomial mj = *p.lcm.divided_by(gj.lt().mono);
    // s-polynomial: lcm/lt(gi) * gi / lc(gi)  -  lcm/lt(gj) * gj / lc(gj)
    OrdPoly spoly;
    {
      OrdPoly left;
      left.t.reserve(gi.t.size());
      Scalar inv = gi.lt().coeff.inverse();
      for (const auto& term : gi.t)
        left.t.push_back({term.coeff * inv, term.mono.times(mi)});
      spoly = subtract_multiple(left, gj.lt().coeff.inverse(), mj, gj, order);
    }
    OrdPoly h = reduce_full(std::move(spoly), basis, order, budget);
    if (!h.zero()) {
      if (stats) ++stats->pairs_reduced;
      add_to_basis(std::move(h));
    }
  }

  // minimalise: drop members whose leading monomial another one divides
  std::vector<bool> keep(basis.size(), true);
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = 0; b < basis.size(); ++b) {
      if (a == b || !keep[a] || !keep[b]) continue;
      if (basis[b].lt().mono.divides(basis[a].lt().mono) &&
          !(a < b && basis[a].lt().mono == basis[b].lt().mono))
        keep[a] = false;
    }
  std::vector<OrdPoly> minimal;
  for (size_t a = 0; a < basis.size(); ++a)
    if (keep[a]) minimal.push_back(std::move(basis[a]));

  // tail-reduce each member against the others and normalise to monic
  std::vector<Polynomial> out;
  for (size_t a = 0; a < minimal.size(); ++a) {
    std::vector<OrdPoly> others;
    for (size_t b = 0; b < minimal.size(); ++b)
      if (b != a) others.push_back(minimal[b]);
    OrdPoly r = reduce_full(minimal[a], others, order, budget);
    if (r.zero()) continue; // fully redundant member
    Scalar inv = r.lt().coeff.inverse();
    for (auto& term : r.t) term.coeff *= inv;
    out.push_back(from_ordered(ring, r));
  }
  std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) {
    return order.compare(a.leading_term(order).mono,
                         b.leading_term(order).mono) < 0;
  });
  if (stats) stats->basis_size = static_cast<int>(out.size());
  if (stats) stats->reduction_steps = budget.used();
  return out;
}

Polynomial normal_form(const Polynomial& f,
                       const std::vector<Polynomial>& basis,
                       const MonomialOrder& order, Budget* budget_in) {
  Budget& budget = budget_in ? *budget_in : global_budget();
  std::vector<OrdPoly> b;
  for (const auto& g : basis)
    if (!g.is_zero()) b.push_back(to_ordered(g, order));
  OrdPoly r = reduce_full(to_ordered(f, order), b, order, budget);
  return from_ordered(f.ring(), r);
}

// ===========================================================================
// IdealHandle
// ===========================================================================

struct IdealHandle::Impl {
  RingPtr ring;
  std::vector<Polynomial> gens;
  std::mutex mu;
  std::map<std::string, std::vector<Polynomial>> gb_cache;
};

IdealHandle::IdealHandle(RingPtr ring, std::vector<Polynomial> gens) {
  impl_ = std::make_shared<Impl>();
  impl_->ring = std::move(ring);
  std::vector<Polynomial> clean;
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.ring()->same_as(*impl_->ring))
      throw DomainError("ideal generator lives in a different ring");
    clean.push_back(std::move(g));
  }
  std::sort(clean.begin(), clean.end(),
            [](const Polynomial& a, const Polynomial& b) {
              if (a.degree() != b.degree()) return a.degree() < b.degree();
              return a.to_string() < b.to_string();
            });
  clean.erase(std::unique(clean.begin(), clean.end()), clean.end());
  impl_->gens = std::move(clean);
}

const RingPtr& IdealHandle::ring() const {
  if (!impl_) throw DomainError("empty ideal handle");
  return impl_->ring;
}

const std::vector<Polynomial>& IdealHandle::gens() const {
  if (!impl_) throw DomainError("empty ideal handle");
  return impl_->gens;
}

const std::vector<Polynomial>& IdealHandle::groebner(
    const MonomialOrder& order) const {
  if (!impl_) throw DomainError("empty ideal handle");
  {
    std::lock_guard<std::mutex> lock(impl_->mu);
    auto it = impl_->gb_cache.find(order.key());
    if (it != impl_->gb_cache.end()) return it->second;
  }
  std::vector<Polynomial> gb =
      groebner_basis(impl_->ring, impl_->gens, order);
  std::lock_guard<std::mutex> lock(impl_->mu);
  auto [it, inserted] = impl_->gb_cache.emplace(order.key(), std::move(gb));
  (void)inserted; // a concurrent writer stored the identical basis
  return it->second;
}

const std::vector<Polynomial>& IdealHandle::groebner() const {
  return groebner(MonomialOrder::grevlex());
}

Polynomial IdealHandle::reduce(const Polynomial& f) const {
  return normal_form(f, groebner(), MonomialOrder::grevlex());
}

bool IdealHandle::contains_all(const IdealHandle& other) const {
  for (const auto& g : other.gens())
    if (!contains(g)) return false;
  return true;
}

bool IdealHandle::is_unit_ideal() const {
  const auto& gb = groebner();
  return gb.size() == 1 && gb[0].is_constant() && !gb[0].is_zero();
}

bool IdealHandle::same_ideal_as(const IdealHandle& o) const {
  if (!ring()->same_as(*o.ring())) return false;
  return groebner() == o.groebner();
}

std::string IdealHandle::canonical_key() const {
  std::ostringstream out;
  const auto& gb = groebner();
  for (size_t i = 0; i < gb.size(); ++i)
    out << (i ? ", " : "") << gb[i].to_string();
  return out.str();
}

} // namespace conormal
