// errors.hpp -- exception hierarchy and resource budgets for the engine.
//
// Every failure the library can produce falls into one of three buckets:
//
//   * ParseError   -- the input text is not well formed (position attached),
//   * DomainError  -- the input is well formed but violates a mathematical
//                     precondition (non-homogeneous where required, wrong
//                     codimension, everywhere-singular family, ...),
//   * BudgetError  -- an exact computation was abandoned because it hit the
//                     configured reduction-step or degree ceiling.
//
// The command line tool maps these to exit codes 2, 2 and 3 respectively.

#ifndef CONORMAL_ERRORS_HPP
#define CONORMAL_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace conormal {

class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

private:
  int line_;
  int column_;
};

class BudgetError : public std::runtime_error {
public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

// Shared resource meter.  A Budget is charged one unit per elementary
// reduction step inside the Groebner engine; intermediate polynomials are
// also checked against a total-degree ceiling.  Both limits raise
// BudgetError so callers can distinguish "ran out of steam" from "the
// answer is mathematically undefined".
class Budget {
public:
  Budget() = default;
  Budget(std::int64_t max_steps, int max_degree)
      : max_steps_(max_steps), max_degree_(max_degree) {}

  void charge(std::int64_t units = 1) {
    used_ += units;
    if (used_ > max_steps_)
      throw BudgetError("reduction budget exhausted after " +
                        std::to_string(used_) + " steps (limit " +
                        std::to_string(max_steps_) + ")");
  }

  void check_degree(int degree) const {
    if (degree > max_degree_)
      throw BudgetError("intermediate degree " + std::to_string(degree) +
                        " exceeds ceiling " + std::to_string(max_degree_));
  }

  std::int64_t used() const { return used_; }
  std::int64_t limit() const { return max_steps_; }
  void set_limit(std::int64_t max_steps) { max_steps_ = max_steps; }
  void reset() { used_ = 0; }

private:
  std::int64_t max_steps_ = 200'000'000;
  int max_degree_ = 200;
  std::int64_t used_ = 0;
};

// Process-wide budget used by every operation that does not receive an
// explicit one.  The CLI rewires the limit from --budget before running.
Budget& global_budget();

} // namespace conormal

#endif
