// session.hpp -- command dispatch: turn a parsed session plus resolved
// flags into a Report.  One seed governs all random choices in a run; the
// caller resolves it (flag beats environment beats the fixed default) and
// passes the final value here.

#ifndef CONORMAL_SESSION_HPP
#define CONORMAL_SESSION_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "conormal/geometry.hpp"
#include "conormal/parser.hpp"
#include "conormal/report.hpp"

namespace conormal {

// The seed used when neither the flag nor the environment provides one.
inline constexpr std::uint64_t kDefaultSeed = 20260815ull;

struct RunOptions {
  std::string command;                // conormal, singular-locus, gauss-map,
                                      // incidence-degree, specialize,
                                      // conserve, jump, degree, schottky
  std::optional<std::string> family;  // named family; default: the only one
  std::optional<mpq_class> at;        // specialize/jump base point
  std::vector<mpq_class> samples;     // conserve base points
  std::string route = "polar";        // degree route tag
  int gmax = 4;                       // last table row
  std::uint64_t seed = kDefaultSeed;
};

// "3", "-1", "2/5" -> exact rational; anything else is a domain error.
mpq_class parse_rational(const std::string& text);

// Comma-separated rationals, at least one.
std::vector<mpq_class> parse_rational_list(const std::string& text);

// Builds the geometric family a session names (or its only one): positions
// are the declared ring variables minus the parameter, in declared order.
FamilySpec family_from_session(const SessionInput& in,
                               const std::optional<std::string>& name);

// Runs one command against a parsed session.  The schottky command ignores
// the session entirely and may be given an empty one.
Report run_command(const SessionInput& in, const RunOptions& opts);

} // namespace conormal

#endif
