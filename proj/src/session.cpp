// Command dispatch: each CLI command delegates to the library operation of
// the same purpose and packs the answer into a Report document with stable
// key names and canonical ordering.

#include "conormal/session.hpp"

#include <stdexcept>

#include "conormal/cycles.hpp"
#include "conormal/degrees.hpp"
#include "conormal/errors.hpp"
#include "conormal/ideal_ops.hpp"
#include "conormal/schottky.hpp"

namespace conormal {

namespace {

using nlohmann::json;

json ideal_generators(const IdealHandle& I) {
  json arr = json::array();
  for (const auto& g : I.groebner()) arr.push_back(g.to_string());
  return arr;
}

json cycle_components(const LagrangianCycle& c) {
  json arr = json::array();
  for (const auto& comp : c.components)
    arr.push_back({{"multiplicity", comp.multiplicity},
                   {"support", ideal_generators(comp.support)}});
  return arr;
}

json ring_names(const RingPtr& r) {
  json arr = json::array();
  for (const auto& v : r->vars) arr.push_back(v);
  return arr;
}

std::string join_rationals(const std::vector<mpq_class>& qs) {
  std::string out;
  for (size_t i = 0; i < qs.size(); ++i) {
    if (i) out += ',';
    out += qs[i].get_str();
  }
  return out;
}

json schottky_rows(int g_max) {
  json rows = json::array();
  for (const auto& row : schottky_table(g_max)) {
    json r;
    r["genus"] = row.genus;
    r["jacobian-degree"] = row.jacobian_degree.get_str();
    r["hyperelliptic-degree"] = row.hyperelliptic_degree.get_str();
    r["determinantal-degree"] = row.determinantal_degree
                                    ? json(row.determinantal_degree->get_str())
                                    : json(nullptr);
    r["prym-degree"] =
        row.prym_degree ? json(row.prym_degree->get_str()) : json(nullptr);
    r["n0-threshold"] = row.n0.get_str();
    r["chi-ic"] = {{"smooth", row.chi_ic_smooth.get_str()},
                   {"one-node", row.chi_ic_one_node.get_str()},
                   {"two-nodes", row.chi_ic_two_nodes.get_str()}};
    rows.push_back(std::move(r));
  }
  return rows;
}

} // namespace

mpq_class parse_rational(const std::string& text) {
  if (text.empty())
    throw DomainError("empty string where a rational number was expected");
  try {
    mpq_class q(text);
    if (q.get_den() == 0)
      throw DomainError("zero denominator in \"" + text + "\"");
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational number: \"" + text + "\"");
  }
}

std::vector<mpq_class> parse_rational_list(const std::string& text) {
  std::vector<mpq_class> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    if (comma == std::string::npos) comma = text.size();
    out.push_back(parse_rational(text.substr(start, comma - start)));
    start = comma + 1;
  }
  if (out.empty())
    throw DomainError("expected at least one sample value");
  return out;
}

FamilySpec family_from_session(const SessionInput& in,
                               const std::optional<std::string>& name) {
  if (!in.ring)
    throw DomainError("this command needs a session with a ring declaration");
  const FamilyDecl& decl = name ? in.family(*name) : in.only_family();

  std::vector<std::string> positions;
  for (const auto& v : in.ring->vars)
    if (!in.parameter || v != *in.parameter) positions.push_back(v);
  if (positions.empty())
    throw DomainError("the ring declares no position variables");

  AmbientSpec ambient = make_trivialized_ambient(positions, in.parameter);
  std::vector<Polynomial> gens;
  gens.reserve(decl.gens.size());
  for (const auto& g : decl.gens)
    gens.push_back(g.substitute(ambient.base_ring, {}));
  return make_family(std::move(ambient), std::move(gens));
}

Report run_command(const SessionInput& in, const RunOptions& opts) {
  Report rep;
  rep.seed = opts.seed;
  Rng rng(opts.seed);
  const std::string& cmd = opts.command;

  if (cmd == "schottky") {
    rep.command = "schottky --gmax " + std::to_string(opts.gmax);
    rep.results["rows"] = schottky_rows(opts.gmax);
    return rep;
  }

  FamilySpec F = family_from_session(in, opts.family);
  const FamilyDecl& decl =
      opts.family ? in.family(*opts.family) : in.only_family();
  rep.results["family"] = decl.name;

  if (cmd == "conormal") {
    rep.command = "conormal";
    bool relative = F.has_parameter();
    IdealHandle C = relative ? relative_conormal_ideal(F) : conormal_ideal(F);
    rep.results["relative"] = relative;
    rep.results["ring"] = ring_names(C.ring());
    rep.results["generators"] = ideal_generators(C);
    return rep;
  }

  if (cmd == "singular-locus") {
    rep.command = "singular-locus";
    bool relative = F.has_parameter();
    IdealHandle S = singular_locus(F, relative);
    rep.results["relative"] = relative;
    rep.results["ring"] = ring_names(S.ring());
    rep.results["generators"] = ideal_generators(S);
    return rep;
  }

  if (cmd == "gauss-map") {
    rep.command = "gauss-map";
    GaussMapSpec G = gauss_map_plucker(F);
    json forms = json::array();
    for (size_t i = 0; i < G.pluecker_names.size(); ++i)
      forms.push_back({{"name", G.pluecker_names[i]},
                       {"form", G.coordinate_forms[i].to_string()}});
    rep.results["coordinate-forms"] = forms;
    rep.results["graph-generators"] = ideal_generators(G.graph);
    return rep;
  }

  if (cmd == "incidence-degree") {
    rep.command = "incidence-degree";
    GaussMapSpec G = gauss_map_plucker(F);
    IncidenceCover cover = incidence_cover(G, rng);
    rep.results["generic-degree"] = cover.generic_degree;
    return rep;
  }

  if (cmd == "specialize") {
    if (!opts.at) throw DomainError("specialize needs --at <rational>");
    rep.command = "specialize --at " + opts.at->get_str();
    LagrangianCycle c = specialize_cycle(F, *opts.at, rng);
    rep.results["at"] = opts.at->get_str();
    rep.results["components"] = cycle_components(c);
    return rep;
  }

  if (cmd == "conserve") {
    if (opts.samples.empty())
      throw DomainError("conserve needs --samples <q1,q2,...>");
    rep.command = "conserve --samples " + join_rationals(opts.samples);
    ConservationReport r = check_degree_conservation(F, opts.samples, rng);
    rep.results["conserved"] = r.conserved;
    rep.results["route"] = r.degree_route;
    json samples = json::array();
    for (const auto& s : r.samples) {
      json comps = json::array();
      for (size_t i = 0; i < s.cycle.components.size(); ++i)
        comps.push_back(
            {{"multiplicity", s.cycle.components[i].multiplicity},
             {"degree", s.component_degrees[i]},
             {"support", ideal_generators(s.cycle.components[i].support)}});
      samples.push_back({{"at", s.parameter.get_str()},
                         {"total", s.total},
                         {"components", comps}});
    }
    rep.results["samples"] = samples;
    return rep;
  }

  if (cmd == "jump") {
    if (!opts.at) throw DomainError("jump needs --at <rational>");
    rep.command = "jump --at " + opts.at->get_str();
    JumpReport r = check_jump_criterion(F, *opts.at, rng);
    rep.results["applicable"] = r.applicable;
    rep.results["holds"] = r.holds;
    rep.results["note"] = r.note;
    rep.results["detected-locus"] =
        r.detected_locus ? ideal_generators(*r.detected_locus) : json(nullptr);
    json matches = json::array();
    for (const auto& m : r.matches)
      matches.push_back({{"multiplicity", m.multiplicity},
                         {"support", ideal_generators(m.support)}});
    rep.results["matches"] = matches;
    if (r.cycle) rep.results["components"] = cycle_components(*r.cycle);
    return rep;
  }

  if (cmd == "degree") {
    rep.command = "degree --route " + opts.route;
    if (F.has_parameter())
      throw DomainError(
          "degree expects a parameter-free plane curve; specialize first");
    if (F.codimension() != 1 || F.ambient.dimension() != 2)
      throw DomainError("degree expects one equation in two variables");
    DegreeReport r = plane_degree_report(F.generators[0], opts.route, rng);
    rep.results["route"] = r.route;
    rep.results["total"] = r.total;
    json comps = json::array();
    for (const auto& e : r.components)
      comps.push_back({{"multiplicity", e.multiplicity},
                       {"degree", e.degree},
                       {"support", e.support}});
    rep.results["components"] = comps;
    rep.warnings = r.warnings;
    return rep;
  }

  throw DomainError("unknown command \"" + cmd + "\"");
}

} // namespace conormal
