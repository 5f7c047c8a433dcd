#include "conormal/geometry.hpp"

#include <algorithm>

#include "conormal/errors.hpp"

namespace conormal {

namespace {

// lexicographic k-subsets of {0, .., n-1}
std::vector<std::vector<int>> index_tuples(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(k);
  for (int i = 0; i < k; ++i) cur[i] = i;
  for (;;) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[i] == i + n - k) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

Polynomial determinant(const RingPtr& ring,
                        const std::vector<std::vector<Polynomial>>& m) {
  size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n == 1) return m[0][0];
  // Laplace expansion along the first row; the sizes here are tiny
  Polynomial acc = Polynomial::zero(ring);
  for (size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    for (size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * determinant(ring, sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

std::string unclashed(std::string candidate,
                      const std::vector<std::string>& taken) {
  while (std::find(taken.begin(), taken.end(), candidate) != taken.end())
    candidate += "_";
  return candidate;
}

std::string tuple_name(const std::string& stem, const std::vector<int>& t) {
  std::string name = stem;
  for (int i : t) name += std::to_string(i + 1);
  return name;
}

mpq_class random_rational(Rng& rng) { return mpq_class(rng.nonzero(30)); }

// generators of I that survive elimination, moved to `target` by name
std::vector<Polynomial> eliminated_generators(const IdealHandle& I,
                                              const std::vector<int>& drop,
                                              const RingPtr& target) {
  IdealHandle eliminated = eliminate(I, drop);
  std::vector<Polynomial> out;
  for (const auto& g : eliminated.groebner())
    out.push_back(g.transported(target));
  return out;
}

} // namespace

std::vector<int> AmbientSpec::position_indices() const {
  std::vector<int> out;
  for (const auto& name : position) out.push_back(full_ring->index_of(name));
  return out;
}

std::vector<int> AmbientSpec::covector_indices() const {
  std::vector<int> out;
  for (const auto& name : covector) out.push_back(full_ring->index_of(name));
  return out;
}

int AmbientSpec::parameter_index() const {
  return parameter ? full_ring->index_of(*parameter) : -1;
}

AmbientSpec make_trivialized_ambient(
    const std::vector<std::string>& position,
    const std::optional<std::string>& parameter) {
  if (position.empty()) throw DomainError("no position variables");
  AmbientSpec a;
  a.mode = AmbientMode::AffineTrivialized;
  a.position = position;
  a.parameter = parameter;

  std::vector<std::string> taken = position;
  if (parameter) taken.push_back(*parameter);
  for (size_t i = 0; i < position.size(); ++i) {
    std::string name = unclashed("xi" + std::to_string(i + 1), taken);
    a.covector.push_back(name);
    taken.push_back(name);
  }

  std::vector<std::string> base = position;
  if (parameter) base.push_back(*parameter);
  a.base_ring = make_ring(base); // also validates names and duplicates

  std::vector<std::string> full = position;
  full.insert(full.end(), a.covector.begin(), a.covector.end());
  if (parameter) full.push_back(*parameter);
  a.full_ring = make_ring(full);
  return a;
}

FamilySpec make_family(AmbientSpec ambient, std::vector<Polynomial> gens) {
  const int n = ambient.dimension();
  if (gens.empty()) throw DomainError("a family needs at least one generator");
  if (static_cast<int>(gens.size()) > n)
    throw DomainError("more generators than the ambient dimension");
  for (auto& g : gens) {
    if (g.is_zero()) throw DomainError("zero generator in a family");
    g = g.transported(ambient.base_ring);
  }

  FamilySpec F;
  F.ambient = std::move(ambient);
  F.generators = std::move(gens);

  // regular-sequence proxy: the position Jacobian must reach full rank d at
  // a random probe point (three attempts before giving up)
  auto jac = family_jacobian(F, /*relative=*/true);
  const RingPtr& ring = F.ambient.base_ring;
  Rng rng(0x67656f6d65747279ull);
  bool full_rank = false;
  for (int attempt = 0; attempt < 3 && !full_rank; ++attempt) {
    std::map<int, Polynomial> probe;
    for (const auto& name : F.ambient.position)
      probe[ring->index_of(name)] =
          Polynomial::constant(ring, Scalar::rational(random_rational(rng)));
    std::vector<std::vector<Polynomial>> at_point;
    for (const auto& row : jac) {
      std::vector<Polynomial> r;
      for (const auto& entry : row) r.push_back(entry.substitute(ring, probe));
      at_point.push_back(std::move(r));
    }
    for (const auto& cols :
         index_tuples(n, F.codimension())) {
      std::vector<std::vector<Polynomial>> sub;
      for (const auto& row : at_point) {
        std::vector<Polynomial> r;
        for (int c : cols) r.push_back(row[c]);
        sub.push_back(std::move(r));
      }
      if (!determinant(ring, sub).is_zero()) {
        full_rank = true;
        break;
      }
    }
  }
  if (!full_rank)
    throw DomainError(
        "family generators are not a regular sequence at a generic point "
        "(Jacobian rank deficient)");
  return F;
}

std::vector<std::vector<Polynomial>> family_jacobian(const FamilySpec& F,
                                                     bool relative) {
  const RingPtr& ring = F.ambient.base_ring;
  std::vector<int> cols;
  for (const auto& name : F.ambient.position)
    cols.push_back(ring->index_of(name));
  if (!relative && F.ambient.parameter)
    cols.push_back(ring->index_of(*F.ambient.parameter));
  std::vector<std::vector<Polynomial>> jac;
  for (const auto& f : F.generators) {
    std::vector<Polynomial> row;
    for (int c : cols) row.push_back(f.differentiate(c));
    jac.push_back(std::move(row));
  }
  return jac;
}

std::vector<Polynomial> jacobian_minors(const FamilySpec& F, bool relative) {
  const RingPtr& ring = F.ambient.base_ring;
  auto jac = family_jacobian(F, relative);
  const int d = F.codimension();
  const int ncols = jac.empty() ? 0 : static_cast<int>(jac[0].size());
  std::vector<Polynomial> minors;
  for (const auto& cols : index_tuples(ncols, d)) {
    std::vector<std::vector<Polynomial>> sub;
    for (const auto& row : jac) {
      std::vector<Polynomial> r;
      for (int c : cols) r.push_back(row[c]);
      sub.push_back(std::move(r));
    }
    minors.push_back(determinant(ring, sub));
  }
  return minors;
}

IdealHandle singular_locus(const FamilySpec& F, bool relative) {
  std::vector<Polynomial> gens = F.generators;
  for (auto& m : jacobian_minors(F, relative))
    if (!m.is_zero()) gens.push_back(std::move(m));
  return IdealHandle(F.ambient.base_ring, gens);
}

namespace {

// multiplier construction + saturation, shared by the absolute and
// relative conormal ideals; returns the ideal in the full ring
IdealHandle conormal_core(const FamilySpec& F) {
  const AmbientSpec& a = F.ambient;
  const RingPtr& R = a.full_ring;
  const int d = F.codimension();

  // adjoin one multiplier per generator
  std::vector<std::string> lam_names;
  {
    std::vector<std::string> taken = R->vars;
    for (int i = 0; i < d; ++i) {
      std::string name = unclashed("lam" + std::to_string(i + 1), taken);
      lam_names.push_back(name);
      taken.push_back(name);
    }
  }
  RingPtr Rlam = extend_ring(R, lam_names);

  std::vector<Polynomial> gens;
  for (const auto& f : F.generators) gens.push_back(f.transported(Rlam));

  // xi_j - sum_i lambda_i * d f_i / d x_j,  one relation per position
  for (size_t j = 0; j < a.position.size(); ++j) {
    Polynomial rel =
        Polynomial::variable(Rlam, Rlam->index_of(a.covector[j]));
    for (int i = 0; i < d; ++i) {
      Polynomial df = F.generators[i]
                          .differentiate(a.base_ring->index_of(a.position[j]))
                          .transported(Rlam);
      rel = rel - Polynomial::variable(Rlam, Rlam->index_of(lam_names[i])) * df;
    }
    gens.push_back(rel);
  }

  std::vector<int> lam_idx;
  for (const auto& name : lam_names) lam_idx.push_back(Rlam->index_of(name));
  std::vector<Polynomial> eliminated =
      eliminated_generators(IdealHandle(Rlam, gens), lam_idx, R);

  // saturate by the singular-locus minors (position Jacobian only)
  std::vector<Polynomial> minor_gens;
  for (auto& m : jacobian_minors(F, /*relative=*/true))
    if (!m.is_zero()) minor_gens.push_back(m.transported(R));
  if (minor_gens.empty())
    throw DomainError("every Jacobian minor vanishes identically");
  IdealHandle M(R, minor_gens);

  IdealHandle sat = saturate(IdealHandle(R, eliminated), M).ideal;
  if (sat.is_unit_ideal())
    throw DomainError(
        "the family is singular everywhere; its conormal variety is empty");
  return sat;
}

} // namespace

IdealHandle conormal_ideal(const FamilySpec& F) {
  if (F.ambient.mode != AmbientMode::AffineTrivialized)
    throw DomainError("conormal ideals require the trivialised ambient mode");
  if (F.has_parameter())
    throw DomainError(
        "conormal_ideal is for parameter-free inputs; use the relative form");
  IdealHandle C = conormal_core(F);

  const int n = F.ambient.dimension();
  if (affine_dimension(C) != n)
    throw DomainError("conormal ideal has unexpected dimension");
  std::vector<int> xi = F.ambient.covector_indices();
  for (const auto& g : C.groebner())
    if (!homogeneous_in(g, xi))
      throw DomainError("conormal ideal lost its conic structure");
  return C;
}

IdealHandle relative_conormal_ideal(const FamilySpec& F) {
  if (F.ambient.mode != AmbientMode::AffineTrivialized)
    throw DomainError("conormal ideals require the trivialised ambient mode");
  if (!F.has_parameter())
    throw DomainError("relative_conormal_ideal needs a parameter variable");
  IdealHandle C = conormal_core(F);

  const int n = F.ambient.dimension();
  if (affine_dimension(C) != n + 1)
    throw DomainError("relative conormal ideal has unexpected dimension");
  std::vector<int> xi = F.ambient.covector_indices();
  for (const auto& g : C.groebner())
    if (!homogeneous_in(g, xi))
      throw DomainError("relative conormal ideal lost its conic structure");

  // dominance over the parameter line: eliminating everything else must
  // leave the zero ideal
  std::vector<int> drop = F.ambient.position_indices();
  for (int v : xi) drop.push_back(v);
  if (!eliminate(C, drop).is_zero_ideal())
    throw DomainError("relative conormal variety is not flat over the line");
  return C;
}

GaussMapSpec gauss_map_plucker(const FamilySpec& F) {
  const AmbientSpec& a = F.ambient;
  const int n = a.dimension();
  const int d = F.codimension();

  GaussMapSpec G;
  G.family = F;
  G.tuples = index_tuples(n, d);
  G.coordinate_forms = jacobian_minors(F, /*relative=*/true);

  // undefined everywhere <=> every minor vanishes on the family
  IdealHandle IX(a.base_ring, F.generators);
  bool any_alive = false;
  for (const auto& m : G.coordinate_forms)
    if (!m.is_zero() && !radical_membership(m, IX)) any_alive = true;
  if (!any_alive)
    throw DomainError("the Gauss map is undefined on every point");

  std::vector<std::string> taken = a.base_ring->vars;
  for (const auto& t : G.tuples) {
    std::string name = unclashed(tuple_name("w", t), taken);
    G.pluecker_names.push_back(name);
    taken.push_back(name);
  }
  G.graph_ring = extend_ring(a.base_ring, G.pluecker_names);

  std::vector<Polynomial> gens;
  for (const auto& f : F.generators) gens.push_back(f.transported(G.graph_ring));
  const size_t N = G.tuples.size();
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i + 1; j < N; ++j) {
      Polynomial wi =
          Polynomial::variable(G.graph_ring, G.graph_ring->index_of(G.pluecker_names[i]));
      Polynomial wj =
          Polynomial::variable(G.graph_ring, G.graph_ring->index_of(G.pluecker_names[j]));
      Polynomial rel = wi * G.coordinate_forms[j].transported(G.graph_ring) -
                       wj * G.coordinate_forms[i].transported(G.graph_ring);
      if (!rel.is_zero()) gens.push_back(rel);
    }

  std::vector<Polynomial> minor_gens;
  for (const auto& m : G.coordinate_forms)
    if (!m.is_zero()) minor_gens.push_back(m.transported(G.graph_ring));
  IdealHandle sat =
      saturate(IdealHandle(G.graph_ring, gens), IdealHandle(G.graph_ring, minor_gens))
          .ideal;
  if (sat.is_unit_ideal())
    throw DomainError("the Gauss map is undefined on every point");
  G.graph = sat;
  return G;
}

namespace {

struct CoverParts {
  RingPtr ring;
  std::vector<std::string> vnames;
  std::vector<Polynomial> gens; // graph generators + wedge conditions
};

// graph generators plus the signed wedge conditions "v lies in the row
// space": for every (d+1)-tuple T of positions,
//   sum_j (-1)^j  v_{T[j]} * w_{T minus T[j]}  =  0.
CoverParts build_cover(const GaussMapSpec& G) {
  const AmbientSpec& a = G.family.ambient;
  const int n = a.dimension();
  const int d = G.family.codimension();

  CoverParts parts;
  std::vector<std::string> taken = G.graph_ring->vars;
  for (int i = 0; i < n; ++i) {
    std::string name = unclashed("v" + std::to_string(i + 1), taken);
    parts.vnames.push_back(name);
    taken.push_back(name);
  }
  parts.ring = extend_ring(G.graph_ring, parts.vnames);

  for (const auto& g : G.graph.groebner())
    parts.gens.push_back(g.transported(parts.ring));

  auto w_index_of = [&](const std::vector<int>& t) {
    for (size_t i = 0; i < G.tuples.size(); ++i)
      if (G.tuples[i] == t) return static_cast<int>(i);
    throw DomainError("missing Pluecker tuple");
  };

  for (const auto& T : index_tuples(n, d + 1)) {
    Polynomial form = Polynomial::zero(parts.ring);
    for (size_t j = 0; j < T.size(); ++j) {
      std::vector<int> rest;
      for (size_t k = 0; k < T.size(); ++k)
        if (k != j) rest.push_back(T[k]);
      Polynomial vw =
          Polynomial::variable(parts.ring,
                               parts.ring->index_of(parts.vnames[T[j]])) *
          Polynomial::variable(
              parts.ring,
              parts.ring->index_of(G.pluecker_names[w_index_of(rest)]));
      form = (j % 2 == 0) ? form + vw : form - vw;
    }
    if (!form.is_zero()) parts.gens.push_back(form);
  }
  return parts;
}

// prune the vertex section w = 0 of the cover cone: the flag condition is
// vacuous there, and the junk it carries would make every projection look
// dominant.  Saturating by the irrelevant ideal of the Pluecker variables
// keeps exactly the closure of the locus with a genuine conormal direction.
IdealHandle prune_cover_vertex(const GaussMapSpec& G, const RingPtr& ring,
                               const std::vector<Polynomial>& gens) {
  std::vector<Polynomial> irrelevant;
  for (const auto& wn : G.pluecker_names)
    irrelevant.push_back(Polynomial::variable(ring, ring->index_of(wn)));
  return saturate(IdealHandle(ring, gens), IdealHandle(ring, irrelevant))
      .ideal;
}

// count the fiber of `cover` over a generic projective covector point:
// pin the v variables at random values, expect a curve (the cone in w),
// slice with a random affine chart in w, take the colength
long long generic_fiber_count(const IdealHandle& cover, const RingPtr& ring,
                              const std::vector<std::string>& vnames,
                              const std::vector<std::string>& wnames,
                              Rng& rng) {
  for (int attempt = 0; attempt < 5; ++attempt) {
    std::vector<Polynomial> gens = cover.groebner();
    for (const auto& vn : vnames) {
      Polynomial pin =
          Polynomial::variable(ring, ring->index_of(vn)) -
          Polynomial::constant(ring, Scalar::rational(random_rational(rng)));
      gens.push_back(pin);
    }
    IdealHandle fiber(ring, gens);
    if (affine_dimension(fiber) != 1) continue; // degenerate probe
    Polynomial chart = Polynomial::constant(ring, -1);
    for (const auto& wn : wnames)
      chart = chart + Polynomial::constant(
                          ring, Scalar::rational(random_rational(rng))) *
                          Polynomial::variable(ring, ring->index_of(wn));
    gens.push_back(chart);
    long long count = zero_dim_colength(IdealHandle(ring, gens));
    if (count > 0) return count;
  }
  throw DomainError(
      "no generic probe point found for the incidence fiber count");
}

} // namespace

IncidenceCover incidence_cover(const GaussMapSpec& G, Rng& rng) {
  CoverParts parts = build_cover(G);

  IncidenceCover out;
  out.cover_ring = parts.ring;
  out.covector_names = parts.vnames;
  out.cover = prune_cover_vertex(G, parts.ring, parts.gens);
  out.seed = rng.seed();

  // dominance over the projective covector space: eliminate x, s, w
  std::vector<int> drop;
  for (const auto& name : parts.ring->vars) {
    bool is_v = std::find(parts.vnames.begin(), parts.vnames.end(), name) !=
                parts.vnames.end();
    if (!is_v) drop.push_back(parts.ring->index_of(name));
  }
  if (!eliminate(out.cover, drop).is_zero_ideal()) {
    out.generic_degree = 0;
    return out;
  }
  out.generic_degree = generic_fiber_count(out.cover, parts.ring,
                                           parts.vnames, G.pluecker_names, rng);
  return out;
}

long long incidence_degree_over_point(
    const GaussMapSpec& G, const std::map<std::string, mpq_class>& point,
    Rng& rng) {
  const AmbientSpec& a = G.family.ambient;
  CoverParts parts = build_cover(G);

  std::vector<std::string> pinned = a.position;
  if (a.parameter) pinned.push_back(*a.parameter);
  for (const auto& name : pinned) {
    auto it = point.find(name);
    if (it == point.end())
      throw DomainError("incidence restriction misses a value for " + name);
    parts.gens.push_back(
        Polynomial::variable(parts.ring, parts.ring->index_of(name)) -
        Polynomial::constant(parts.ring, Scalar::rational(it->second)));
  }
  IdealHandle restricted = prune_cover_vertex(G, parts.ring, parts.gens);

  std::vector<int> drop;
  for (const auto& name : parts.ring->vars) {
    bool is_v = std::find(parts.vnames.begin(), parts.vnames.end(), name) !=
                parts.vnames.end();
    if (!is_v) drop.push_back(parts.ring->index_of(name));
  }
  if (!eliminate(restricted, drop).is_zero_ideal()) return 0;

  return generic_fiber_count(restricted, parts.ring, parts.vnames,
                             G.pluecker_names, rng);
}

bool generic_finiteness_check(const IdealHandle& graph,
                              const IdealHandle& source,
                              const std::vector<int>& image_vars,
                              int source_cone_count, int image_cone_count) {
  const RingPtr& R = graph.ring();
  std::vector<int> drop;
  for (int i = 0; i < R->nvars(); ++i)
    if (std::find(image_vars.begin(), image_vars.end(), i) ==
        image_vars.end())
      drop.push_back(i);

  std::vector<std::string> image_names;
  for (int v : image_vars) image_names.push_back(R->vars[v]);
  RingPtr image_ring = make_ring(image_names);
  std::vector<Polynomial> image_gens =
      eliminated_generators(graph, drop, image_ring);

  int dim_image = affine_dimension(IdealHandle(image_ring, image_gens));
  int dim_source = affine_dimension(source);
  return dim_source - source_cone_count == dim_image - image_cone_count;
}

bool homogeneous_in(const Polynomial& f, const std::vector<int>& vars) {
  bool first = true;
  int expected = 0;
  for (const auto& t : f.terms()) {
    int deg = 0;
    for (int v : vars) deg += t.mono.exponent(v);
    if (first) {
      expected = deg;
      first = false;
    } else if (deg != expected) {
      return false;
    }
  }
  return true;
}

} // namespace conormal
