// conormal -- command line frontend.
//
//   conormal <command> [flags] [input-file]
//
// The input file (or standard input, "-") holds the declarative session
// language: a ring declaration, an optional parameter designation and one
// or more named families.  Every command emits one deterministic report to
// standard output; --format picks the rendering.  Exit codes: 0 success,
// 2 parse/domain errors, 3 exhausted computation budget.

#include <cerrno>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "conormal/errors.hpp"
#include "conormal/parser.hpp"
#include "conormal/session.hpp"

using namespace conormal;

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream f(path);
    if (!f) throw DomainError("cannot open input file \"" + path + "\"");
    ss << f.rdbuf();
  }
  return ss.str();
}

// flag beats environment beats the fixed default
std::uint64_t resolve_seed(bool flag_given, std::uint64_t flag_value) {
  if (flag_given) return flag_value;
  if (const char* env = std::getenv("CONORMAL_SEED")) {
    std::string s(env);
    if (!s.empty()) {
      char* end = nullptr;
      errno = 0;
      unsigned long long v = std::strtoull(s.c_str(), &end, 10);
      if (errno != 0 || end == s.c_str() || *end != '\0')
        throw DomainError("CONORMAL_SEED is not an unsigned integer: \"" + s +
                          "\"");
      return v;
    }
  }
  return kDefaultSeed;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact toolkit for conormal varieties of families: conormal and "
      "singular-locus ideals, Pluecker Gauss maps, incidence degrees, "
      "Lagrangian specialization, degree conservation, the singular-fiber "
      "jump criterion, signed plane-curve degrees and closed-form "
      "invariant tables"};
  app.require_subcommand(1);

  std::string format = "text";
  app.add_option("--format", format, "output rendering: json or text")
      ->check(CLI::IsMember({"json", "text"}));
  std::uint64_t seed_flag = 0;
  auto* seed_opt = app.add_option(
      "--seed", seed_flag,
      "seed for all random choices (default: CONORMAL_SEED env var, then " +
          std::to_string(kDefaultSeed) + ")");
  long long budget = 0;
  auto* budget_opt =
      app.add_option("--budget", budget,
                     "abort with exit code 3 after this many elementary "
                     "reduction steps")
          ->check(CLI::PositiveNumber);

  RunOptions opts;
  std::string input_path = "-";
  std::string family_name, at_text, samples_text;

  auto add_session_args = [&](CLI::App* sub) {
    sub->add_option("--family", family_name,
                    "named family (default: the session's only one)");
    sub->add_option("input", input_path,
                    "session file; '-' (default) reads standard input");
    sub->fallthrough();
  };

  add_session_args(app.add_subcommand(
      "conormal", "ideal of the (relative) conormal variety"));
  add_session_args(app.add_subcommand(
      "singular-locus", "ideal of the (relative) singular locus"));
  add_session_args(app.add_subcommand(
      "gauss-map", "Pluecker coordinate forms and the graph ideal"));
  add_session_args(app.add_subcommand(
      "incidence-degree", "generic degree of the incidence cover"));

  auto* c_specialize = app.add_subcommand(
      "specialize", "decompose the conormal fiber cycle at a base point");
  c_specialize->add_option("--at", at_text, "base point (rational)")
      ->required();
  add_session_args(c_specialize);

  auto* c_conserve = app.add_subcommand(
      "conserve", "compare total cycle degrees across base points");
  c_conserve
      ->add_option("--samples", samples_text,
                   "comma-separated rational base points")
      ->required();
  add_session_args(c_conserve);

  auto* c_jump = app.add_subcommand(
      "jump", "singular-fiber jump criterion at a base point");
  c_jump->add_option("--at", at_text, "base point (rational)")->required();
  add_session_args(c_jump);

  auto* c_degree = app.add_subcommand(
      "degree", "signed conormal degree of a plane curve");
  c_degree->add_option("--route", opts.route,
                       "polar or euler-obstruction (default: polar)");
  add_session_args(c_degree);

  auto* c_schottky = app.add_subcommand(
      "schottky", "closed-form invariant table (no session input)");
  c_schottky->add_option("--gmax", opts.gmax,
                         "last genus row (default: 4)");
  c_schottky->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    opts.command = app.get_subcommands().front()->get_name();
    opts.seed = resolve_seed(seed_opt->count() > 0, seed_flag);
    if (budget_opt->count() > 0) global_budget().set_limit(budget);
    if (!family_name.empty()) opts.family = family_name;
    if (!at_text.empty()) opts.at = parse_rational(at_text);
    if (!samples_text.empty()) opts.samples = parse_rational_list(samples_text);

    SessionInput session;
    if (opts.command != "schottky") {
      std::string text = read_input(input_path);
      try {
        session = parse_session(text);
      } catch (const ParseError& pe) {
        std::cerr << format_parse_error(pe, text) << "\n";
        return 2;
      }
    }

    Report rep = run_command(session, opts);
    std::cout << rep.render(format);
    return 0;
  } catch (const BudgetError& e) {
    std::cerr << "budget error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
