// parser.hpp -- the declarative input language.
//
//   ring x y z s;
//   param s;
//   family X = x^2 + y^2 + s, x^2 + z^2 - s;
//
// Statements are ';'-terminated, '#' starts a line comment.  Polynomial
// expressions use +, -, *, ^ and parentheses; multiplication is always
// explicit ("2*x", never "2x") and '/' is only allowed between integer
// literals, forming a rational coefficient.  Errors carry line/column and
// render with a caret snippet.

#ifndef CONORMAL_PARSER_HPP
#define CONORMAL_PARSER_HPP

#include <optional>
#include <string>
#include <vector>

#include "conormal/polynomial.hpp"
#include "conormal/ring.hpp"

namespace conormal {

struct FamilyDecl {
  std::string name;
  std::vector<Polynomial> gens;
};

struct SessionInput {
  RingPtr ring;                  // declared variables, declared order
  std::optional<std::string> parameter;
  std::vector<FamilyDecl> families;

  const FamilyDecl& family(const std::string& name) const;
  const FamilyDecl& only_family() const;
};

// Parses a full session description (throws ParseError).
SessionInput parse_session(const std::string& text);

// Parses one polynomial expression over a known ring (throws ParseError).
Polynomial parse_polynomial(const RingPtr& ring, const std::string& text);

// Human-readable rendering of a ParseError against its source text:
// message, offending line, caret column.
std::string format_parse_error(const ParseError& err, const std::string& text);

} // namespace conormal

#endif
