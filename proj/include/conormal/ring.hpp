// ring.hpp -- named polynomial rings.
//
// A Ring is a value object: a list of distinct variable names plus a
// coefficient domain (0 = Q, otherwise a prime p for the cross-check
// mode).  Rings are shared immutably; polynomials hold a RingPtr and two
// polynomials interoperate exactly when their rings compare equal by
// value.  Terms are always *stored* sorted under the ring's canonical
// order (degree reverse lexicographic); other orders enter only as query
// parameters of the Groebner layer.

#ifndef CONORMAL_RING_HPP
#define CONORMAL_RING_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace conormal {

struct Ring {
  std::vector<std::string> vars;
  std::uint64_t modulus = 0; // 0 = rationals

  int nvars() const { return static_cast<int>(vars.size()); }

  // Index of a variable name, -1 if absent.
  int index_of(const std::string& name) const {
    for (int i = 0; i < nvars(); ++i)
      if (vars[i] == name) return i;
    return -1;
  }

  bool same_as(const Ring& o) const {
    return modulus == o.modulus && vars == o.vars;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

// Validates names (distinct, /[a-zA-Z][a-zA-Z0-9_]*/) and builds the ring.
RingPtr make_ring(std::vector<std::string> names, std::uint64_t modulus = 0);

// Same domain, extra variables appended on the right.
RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra);

bool is_valid_variable_name(const std::string& name);

} // namespace conormal

#endif
