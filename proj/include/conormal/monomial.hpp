// monomial.hpp -- exponent vectors and monomial orders.

#ifndef CONORMAL_MONOMIAL_HPP
#define CONORMAL_MONOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "conormal/ring.hpp"

namespace conormal {

// Dense exponent vector with a cached total degree.  Monomials carry no
// ring pointer; they are only combined by code that already agrees on the
// ambient ring, and their length is checked there.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(int nvars) : e_(nvars, 0), deg_(0) {}
  explicit Monomial(std::vector<int> exponents);

  int nvars() const { return static_cast<int>(e_.size()); }
  int degree() const { return deg_; }
  int exponent(int var) const { return e_[var]; }
  const std::vector<int>& exponents() const { return e_; }
  bool is_constant() const { return deg_ == 0; }

  Monomial times(const Monomial& o) const;
  bool divides(const Monomial& o) const;          // this | o
  std::optional<Monomial> divided_by(const Monomial& o) const;
  Monomial lcm(const Monomial& o) const;
  Monomial gcd(const Monomial& o) const;
  bool coprime_with(const Monomial& o) const;

  Monomial with_exponent(int var, int value) const;

  bool operator==(const Monomial& o) const { return e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  std::string to_string(const Ring& ring) const;

private:
  std::vector<int> e_;
  int deg_ = 0;
};

// Canonical storage comparison: degree reverse lexicographic.  Returns
// -1, 0, +1 for a < b, a == b, a > b.
int grevlex_compare(const Monomial& a, const Monomial& b);

// The four order families the engine understands.  Block orders compare
// block by block (total degree within the block, then reverse-lex within
// the block), which gives elimination orders when the variables to be
// eliminated form the leading block.  Weighted orders compare the weighted
// degree first and fall back to degree reverse lexicographic.
class MonomialOrder {
public:
  enum class Kind { Lex, GrevLex, Block, Weighted };

  static MonomialOrder lex();
  static MonomialOrder grevlex();
  static MonomialOrder block(std::vector<std::vector<int>> blocks);
  static MonomialOrder elimination(const std::vector<int>& front, int nvars);
  static MonomialOrder weighted(std::vector<long> weights);

  Kind kind() const { return kind_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<long>& weights() const { return weights_; }

  // -1, 0, +1 with a < b meaning "a comes later in a polynomial".
  int compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const {
    return compare(a, b) < 0;
  }

  // Stable serialisation, used as a cache key for per-order Groebner bases.
  std::string key() const;

private:
  Kind kind_ = Kind::GrevLex;
  std::vector<std::vector<int>> blocks_;
  std::vector<long> weights_;
};

} // namespace conormal

#endif
