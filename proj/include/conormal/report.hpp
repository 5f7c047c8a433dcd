// report.hpp -- deterministic run reports.  Every command produces one
// Report: a command echo, the seed that governed all random choices, a
// structured result document and a list of warnings.  Both renderings are
// pure functions of those fields, so identical (input, command, seed)
// runs emit identical bytes.

#ifndef CONORMAL_REPORT_HPP
#define CONORMAL_REPORT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

namespace conormal {

struct Report {
  std::string command;             // command echo, flags included
  std::uint64_t seed = 0;
  nlohmann::json results;          // command-specific document
  std::vector<std::string> warnings;

  // One JSON document: {"command", "results", "seed", "warnings"}, keys
  // sorted, two-space indentation, trailing newline.
  std::string render_json() const;

  // Aligned plain text: header lines, the results tree with two-space
  // nesting, then the warnings.  Carries exactly the same information.
  std::string render_text() const;

  // Dispatch on "json" / "text"; anything else is a domain error.
  std::string render(const std::string& format) const;
};

} // namespace conormal

#endif
