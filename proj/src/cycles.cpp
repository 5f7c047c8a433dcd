// Lagrangian specialization: fibers of relative conormal ideals as effective
// conic cycles.  Component supports are isolated by recursive splitting
// (factor branches and saturation splits fed by elimination shadows), and
// multiplicities by equating generic slice counts of the fiber against the
// candidate supports.

#include "conormal/cycles.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "conormal/degrees.hpp"
#include "conormal/factor.hpp"
#include "conormal/slicing.hpp"

namespace conormal {

namespace {

// how many ideals the splitting worklist may touch before we declare a stall
constexpr int kSplitBudget = 512;

IdealHandle with_generator(const IdealHandle& I, const Polynomial& f) {
  std::vector<Polynomial> gens = I.gens();
  gens.push_back(f);
  return IdealHandle(I.ring(), std::move(gens));
}

// V(I) is contained in V(J) iff every element of J vanishes on V(I)
bool variety_contained(const IdealHandle& inner, const IdealHandle& outer) {
  for (const auto& g : outer.groebner())
    if (!radical_membership(g, inner)) return false;
  return true;
}

std::vector<int> named_indices(const RingPtr& ring,
                               const std::vector<std::string>& names) {
  std::vector<int> idx;
  for (const auto& n : names) idx.push_back(ring->index_of(n));
  return idx;
}

// Factoring runs through a Kronecker substitution whose degree grows with
// the product of per-variable degrees, so oversized generators are not
// worth attempting: branching on them is optional (shadow separators cover
// the geometry), while a runaway factorization stalls the whole split.
bool factor_affordable(const Polynomial& g) {
  long long cost = 1;
  for (int v = 0; v < g.ring()->nvars(); ++v) {
    int dv = 0;
    for (const auto& t : g.terms()) dv = std::max(dv, t.mono.exponent(v));
    cost *= 2 * dv + 1;
    if (cost > 200) return false;
  }
  return true;
}

} // namespace

std::vector<IdealHandle> isolate_support_components(
    const IdealHandle& I, const std::vector<std::vector<int>>& shadows) {
  const RingPtr& ring = I.ring();
  std::vector<IdealHandle> worklist{I};
  std::vector<IdealHandle> terminals;
  std::set<std::string> seen;
  int touched = 0;

  while (!worklist.empty()) {
    IdealHandle L = worklist.back();
    worklist.pop_back();
    if (L.is_unit_ideal()) continue;
    if (!seen.insert(L.canonical_key()).second) continue;
    if (++touched > kSplitBudget)
      throw DomainError("support splitting exceeded its worklist budget");

    // factor branches: a generator that splits over the rationals splits
    // the variety; a pure power tightens the ideal toward its radical
    bool branched = false;
    for (const auto& g : L.groebner()) {
      if (!factor_affordable(g)) continue;
      Factorization fac = factor_polynomial(g);
      if (fac.factors.size() == 1 && fac.factors[0].second == 1) continue;
      if (fac.factors.size() == 1) {
        worklist.push_back(with_generator(L, fac.factors[0].first));
      } else {
        for (const auto& part : fac.factors)
          worklist.push_back(with_generator(L, part.first));
      }
      branched = true;
      break;
    }
    if (branched) continue;

    // saturation splits: factors of the elimination shadows — and of their
    // partial derivatives, since components hiding over a singular point of
    // a shadow sit where every partial vanishes — are candidate separators
    // f; when some component lies inside V(f) and some does not, the
    // variety is the union of the saturation and the section by f
    bool split = false;
    for (const auto& keep : shadows) {
      std::vector<int> drop;
      for (int v = 0; v < ring->nvars(); ++v)
        if (std::find(keep.begin(), keep.end(), v) == keep.end())
          drop.push_back(v);
      IdealHandle shadow = eliminate(L, drop);
      std::vector<Polynomial> sources;
      for (const auto& g : shadow.groebner()) {
        sources.push_back(g);
        for (int v : keep) sources.push_back(g.differentiate(v));
      }
      for (const auto& g : sources) {
        if (g.is_zero() || g.is_constant()) continue;
        if (!factor_affordable(g)) continue;
        Factorization fac = factor_polynomial(g);
        for (const auto& part : fac.factors) {
          const Polynomial& f = part.first;
          if (f.is_constant()) continue;
          if (radical_membership(f, L)) continue;
          IdealHandle cut = saturate(L, f).ideal;
          if (cut.same_ideal_as(L)) continue;
          worklist.push_back(cut);
          worklist.push_back(with_generator(L, f));
          split = true;
          break;
        }
        if (split) break;
      }
      if (split) break;
    }
    if (split) continue;

    terminals.push_back(L);
  }
  return terminals;
}

// drop leaves of the wrong dimension, absorb varieties contained in other
// leaves, and collapse duplicates of the same variety onto one canonical
// representative
std::vector<IdealHandle> absorb_support_leaves(std::vector<IdealHandle> leaves,
                                               int dimension) {
  std::vector<IdealHandle> sized;
  for (auto& L : leaves)
    if (affine_dimension(L) == dimension) sized.push_back(std::move(L));

  std::vector<IdealHandle> kept;
  for (size_t i = 0; i < sized.size(); ++i) {
    bool drop = false;
    for (size_t j = 0; j < sized.size() && !drop; ++j) {
      if (i == j) continue;
      if (!variety_contained(sized[i], sized[j])) continue;
      if (variety_contained(sized[j], sized[i])) {
        // same variety: keep the lexicographically smallest presentation
        drop = sized[j].canonical_key() < sized[i].canonical_key() ||
               (sized[j].canonical_key() == sized[i].canonical_key() && j < i);
      } else {
        drop = true;  // strictly inside another leaf
      }
    }
    if (!drop) kept.push_back(sized[i]);
  }
  std::sort(kept.begin(), kept.end(),
            [](const IdealHandle& a, const IdealHandle& b) {
              return a.canonical_key() < b.canonical_key();
            });
  return kept;
}

namespace {

struct SlicePattern {
  std::vector<Polynomial> forms;  // position slices, covector slices, chart
};

std::vector<SlicePattern> draw_patterns(const RingPtr& ring,
                                        const std::vector<int>& xvars,
                                        const std::vector<int>& xivars,
                                        Rng& rng) {
  const int n = static_cast<int>(xvars.size());
  std::vector<SlicePattern> patterns;
  for (int a = 0; a < n; ++a) {
    SlicePattern pat;
    for (int i = 0; i < a; ++i)
      pat.forms.push_back(random_form(ring, xvars, rng, /*affine_part=*/true));
    for (int i = 0; i < n - 1 - a; ++i)
      pat.forms.push_back(random_form(ring, xivars, rng, /*affine_part=*/false));
    pat.forms.push_back(random_chart(ring, xivars, rng));
    patterns.push_back(std::move(pat));
  }
  return patterns;
}

// multiplicity of each support in the fiber cycle: localize by saturating
// the support away and divide the count drop by the support's own count,
// then confirm the full weighted system
std::vector<long long> solve_multiplicities(
    const IdealHandle& fiber, const std::vector<IdealHandle>& supports,
    const std::vector<int>& xvars, const std::vector<int>& xivars, Rng& rng) {
  const RingPtr& ring = fiber.ring();
  std::vector<IdealHandle> localized;
  for (const auto& Z : supports)
    localized.push_back(saturate(fiber, Z).ideal);

  for (int attempt = 0; attempt < 5; ++attempt) {
    Rng draw = rng.fork(0x736c696365 + attempt);
    auto patterns = draw_patterns(ring, xvars, xivars, draw);
    const size_t P = patterns.size();

    std::vector<long long> fiber_vec(P);
    std::vector<std::vector<long long>> support_vec(supports.size(),
                                                    std::vector<long long>(P));
    std::vector<std::vector<long long>> rest_vec(supports.size(),
                                                 std::vector<long long>(P));
    bool degenerate = false;
    for (size_t p = 0; p < P && !degenerate; ++p) {
      auto fv = sliced_colength(fiber, patterns[p].forms);
      if (!fv) { degenerate = true; break; }
      fiber_vec[p] = *fv;
      for (size_t i = 0; i < supports.size(); ++i) {
        auto sv = sliced_colength(supports[i], patterns[p].forms);
        auto rv = sliced_colength(localized[i], patterns[p].forms);
        if (!sv || !rv) { degenerate = true; break; }
        support_vec[i][p] = *sv;
        rest_vec[i][p] = *rv;
      }
    }
    if (degenerate) continue;

    std::vector<long long> mult(supports.size(), 0);
    bool solved = true;
    for (size_t i = 0; i < supports.size() && solved; ++i) {
      size_t pick = P;
      for (size_t p = 0; p < P; ++p)
        if (support_vec[i][p] > 0) { pick = p; break; }
      if (pick == P) { solved = false; break; }
      long long drop = fiber_vec[pick] - rest_vec[i][pick];
      if (drop <= 0 || drop % support_vec[i][pick] != 0) {
        solved = false;
        break;
      }
      mult[i] = drop / support_vec[i][pick];
    }
    if (!solved) continue;

    // the weighted sum must reproduce the fiber counts in every pattern
    for (size_t p = 0; p < P && solved; ++p) {
      long long sum = 0;
      for (size_t i = 0; i < supports.size(); ++i)
        sum += mult[i] * support_vec[i][p];
      if (sum != fiber_vec[p]) solved = false;
    }
    if (solved) return mult;
  }
  throw DomainError(
      "the multiplicity system has no unique positive solution under "
      "repeated generic slicing");
}

} // namespace

LagrangianCycle decompose_cycle(const IdealHandle& fiber,
                                const AmbientSpec& fiber_ambient, Rng& rng) {
  const RingPtr& ring = fiber.ring();
  const int n = fiber_ambient.dimension();
  if (fiber.is_unit_ideal())
    throw DomainError("an empty fiber has no Lagrangian cycle");
  int dim = affine_dimension(fiber);
  if (dim != n) {
    std::ostringstream msg;
    msg << "fiber ideal has dimension " << dim << ", expected " << n;
    throw DomainError(msg.str());
  }

  std::vector<int> xvars = named_indices(ring, fiber_ambient.position);
  std::vector<int> xivars = named_indices(ring, fiber_ambient.covector);

  auto leaves = isolate_support_components(fiber, {xvars, xivars});
  auto supports = absorb_support_leaves(std::move(leaves), n);
  if (supports.empty())
    throw DomainError("support splitting found no components of the fiber");

  // peel junk riding along a leaf: an irreducible piece of one support that
  // lies inside another support is not part of the first one's cycle, so
  // saturating it away sharpens the support without changing the union
  if (supports.size() > 1) {
    for (size_t i = 0; i < supports.size(); ++i)
      for (size_t j = 0; j < supports.size(); ++j) {
        if (i == j) continue;
        IdealHandle cut = saturate(supports[i], supports[j]).ideal;
        if (!cut.is_unit_ideal() && affine_dimension(cut) == n)
          supports[i] = cut;
      }
    supports = absorb_support_leaves(std::move(supports), n);
    if (supports.empty())
      throw DomainError("support splitting found no components of the fiber");
  }

  for (const auto& Z : supports)
    for (const auto& g : Z.groebner())
      if (!homogeneous_in(g, xivars))
        throw DomainError("a component support is not conic in the covectors");

  std::vector<long long> mult =
      solve_multiplicities(fiber, supports, xvars, xivars, rng);

  LagrangianCycle cycle;
  cycle.ambient = fiber_ambient;
  cycle.ring = ring;
  for (size_t i = 0; i < supports.size(); ++i)
    cycle.components.push_back({supports[i], mult[i]});

  // completeness: the components must exhaust the fiber's variety
  IdealHandle meet = supports[0];
  for (size_t i = 1; i < supports.size(); ++i)
    meet = intersect(meet, supports[i]);
  for (const auto& g : meet.groebner()) {
    if (radical_membership(g, fiber)) continue;
    IdealHandle remainder = saturate(fiber, meet).ideal;
    throw UndecomposedRemainder(
        "undecomposed remainder: a component support could not be isolated "
        "over the rationals; unresolved part: " + remainder.canonical_key(),
        remainder, cycle);
  }
  return cycle;
}

LagrangianCycle specialize_cycle(const FamilySpec& F, const mpq_class& s0,
                                 Rng& rng) {
  if (!F.has_parameter())
    throw DomainError("specialization needs a one-parameter family");
  IdealHandle relative = relative_conormal_ideal(F);

  AmbientSpec fiber_ambient = make_trivialized_ambient(F.ambient.position);
  if (fiber_ambient.covector != F.ambient.covector)
    throw DomainError("fiber covector names diverge from the family's");
  const RingPtr& ring = fiber_ambient.full_ring;

  std::map<int, Polynomial> images;
  images[F.ambient.parameter_index()] =
      Polynomial::constant(ring, Scalar::rational(s0));
  IdealHandle fiber = substituted_ideal(relative, ring, images);
  if (fiber.is_unit_ideal())
    throw DomainError("the fiber over the requested base point is empty");
  return decompose_cycle(fiber, fiber_ambient, rng);
}

ConservationReport check_degree_conservation(const FamilySpec& F,
                                             const std::vector<mpq_class>& samples,
                                             Rng& rng) {
  if (samples.empty())
    throw DomainError("degree conservation needs at least one sample point");
  ConservationReport report;
  report.conserved = true;
  for (size_t i = 0; i < samples.size(); ++i) {
    Rng local = rng.fork(0x636f6e73 + i);
    ConservationSample sample;
    sample.parameter = samples[i];
    sample.cycle = specialize_cycle(F, samples[i], local);
    DegreeReport degrees = component_degree(sample.cycle, local);
    report.degree_route = degrees.route;
    for (const auto& entry : degrees.components)
      sample.component_degrees.push_back(entry.degree);
    sample.total = degrees.total;
    report.samples.push_back(std::move(sample));
  }
  for (const auto& sample : report.samples)
    if (sample.total != report.samples.front().total) report.conserved = false;
  return report;
}

JumpReport check_jump_criterion(const FamilySpec& F, const mpq_class& s0,
                                Rng& rng) {
  if (F.codimension() != 1)
    throw DomainError("the jump criterion applies to divisor families");
  if (!F.has_parameter())
    throw DomainError("the jump criterion needs a one-parameter family");

  JumpReport report;
  report.applicable = false;
  report.holds = false;

  IdealHandle sing = singular_locus(F, /*relative=*/true);
  if (sing.is_unit_ideal()) {
    report.note = "criterion not applicable: the relative singular locus is empty";
    return report;
  }
  const RingPtr& base = sing.ring();
  Polynomial at_point =
      Polynomial::variable(base, base->index_of(*F.ambient.parameter)) -
      Polynomial::constant(base, Scalar::rational(s0));
  // a component of the relative singular locus lies inside the fiber
  // exactly when saturating by (s - s0) removes part of the variety
  IdealHandle away = saturate(sing, at_point).ideal;
  if (variety_contained(sing, away)) {
    IdealHandle shadow =
        eliminate(sing, named_indices(base, F.ambient.position));
    report.note =
        shadow.is_zero_ideal()
            ? "criterion not applicable: the relative singular locus "
              "dominates the base"
            : "criterion not applicable: no singular-locus component over "
              "the base point";
    return report;
  }
  report.applicable = true;

  // the detected locus Z: the singular-locus components inside the fiber
  // (saturating away the part that survives off the fiber), read in the
  // position ring
  IdealHandle vertical = saturate(sing, away).ideal;
  RingPtr pos_ring = make_ring(F.ambient.position);
  std::map<int, Polynomial> images;
  images[base->index_of(*F.ambient.parameter)] =
      Polynomial::constant(pos_ring, Scalar::rational(s0));
  IdealHandle detected = substituted_ideal(vertical, pos_ring, images);
  report.detected_locus = detected;

  LagrangianCycle cycle = specialize_cycle(F, s0, rng);
  const RingPtr& ring = cycle.ring;
  std::vector<int> xivars = named_indices(ring, cycle.ambient.covector);
  for (const auto& comp : cycle.components) {
    // position shadow of the component, moved into the position ring
    IdealHandle proj = eliminate(comp.support, xivars);
    std::vector<Polynomial> gens;
    for (const auto& g : proj.groebner())
      gens.push_back(g.substitute(pos_ring, {}));
    IdealHandle xproj(pos_ring, std::move(gens));
    if (!variety_contained(xproj, detected)) continue;
    report.matches.push_back({comp.support, comp.multiplicity});
    if (comp.multiplicity >= 1) report.holds = true;
  }
  report.cycle = std::move(cycle);
  return report;
}

} // namespace conormal
