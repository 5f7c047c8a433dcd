#include "conormal/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "conormal/errors.hpp"

namespace conormal {

// ===========================================================================
// ring construction
// ===========================================================================

bool is_valid_variable_name(const std::string& name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

RingPtr make_ring(std::vector<std::string> names, std::uint64_t modulus) {
  for (const auto& n : names)
    if (!is_valid_variable_name(n))
      throw DomainError("invalid variable name '" + n + "'");
  for (size_t i = 0; i < names.size(); ++i)
    for (size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw DomainError("duplicate variable name '" + names[i] + "'");
  auto ring = std::make_shared<Ring>();
  ring->vars = std::move(names);
  ring->modulus = modulus;
  return ring;
}

RingPtr extend_ring(const RingPtr& base, const std::vector<std::string>& extra) {
  std::vector<std::string> names = base->vars;
  for (const auto& n : extra) names.push_back(n);
  return make_ring(std::move(names), base->modulus);
}

// ===========================================================================
// monomials
// ===========================================================================

Monomial::Monomial(std::vector<int> exponents) : e_(std::move(exponents)) {
  for (int x : e_) {
    if (x < 0) throw DomainError("negative exponent in monomial");
    deg_ += x;
  }
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r(*this);
  for (int i = 0; i < nvars(); ++i) r.e_[i] += o.e_[i];
  r.deg_ = deg_ + o.deg_;
  return r;
}

bool Monomial::divides(const Monomial& o) const {
  for (int i = 0; i < nvars(); ++i)
    if (e_[i] > o.e_[i]) return false;
  return true;
}

std::optional<Monomial> Monomial::divided_by(const Monomial& o) const {
  Monomial r(*this);
  for (int i = 0; i < nvars(); ++i) {
    r.e_[i] -= o.e_[i];
    if (r.e_[i] < 0) return std::nullopt;
  }
  r.deg_ = deg_ - o.deg_;
  return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
  Monomial r(*this);
  r.deg_ = 0;
  for (int i = 0; i < nvars(); ++i) {
    r.e_[i] = std::max(e_[i], o.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& o) const {
  Monomial r(*this);
  r.deg_ = 0;
  for (int i = 0; i < nvars(); ++i) {
    r.e_[i] = std::min(e_[i], o.e_[i]);
    r.deg_ += r.e_[i];
  }
  return r;
}

bool Monomial::coprime_with(const Monomial& o) const {
  for (int i = 0; i < nvars(); ++i)
    if (e_[i] > 0 && o.e_[i] > 0) return false;
  return true;
}

Monomial Monomial::with_exponent(int var, int value) const {
  if (value < 0) throw DomainError("negative exponent in monomial");
  Monomial r(*this);
  r.deg_ += value - r.e_[var];
  r.e_[var] = value;
  return r;
}

std::string Monomial::to_string(const Ring& ring) const {
  if (is_constant()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < nvars(); ++i) {
    if (e_[i] == 0) continue;
    if (!first) out << "*";
    first = false;
    out << ring.vars[i];
    if (e_[i] > 1) out << "^" << e_[i];
  }
  return out.str();
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  // equal degree: the monomial with the *larger* exponent in the last
  // differing position is the smaller one
  for (int i = a.nvars() - 1; i >= 0; --i) {
    int d = a.exponent(i) - b.exponent(i);
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

// ===========================================================================
// orders
// ===========================================================================

MonomialOrder MonomialOrder::lex() {
  MonomialOrder o;
  o.kind_ = Kind::Lex;
  return o;
}

MonomialOrder MonomialOrder::grevlex() {
  MonomialOrder o;
  o.kind_ = Kind::GrevLex;
  return o;
}

MonomialOrder MonomialOrder::block(std::vector<std::vector<int>> blocks) {
  if (blocks.empty()) throw DomainError("block order needs at least one block");
  MonomialOrder o;
  o.kind_ = Kind::Block;
  o.blocks_ = std::move(blocks);
  return o;
}

MonomialOrder MonomialOrder::elimination(const std::vector<int>& front,
                                         int nvars) {
  std::vector<bool> in_front(nvars, false);
  for (int i : front) {
    if (i < 0 || i >= nvars) throw DomainError("elimination index out of range");
    in_front[i] = true;
  }
  std::vector<int> back;
  for (int i = 0; i < nvars; ++i)
    if (!in_front[i]) back.push_back(i);
  if (front.empty() || back.empty())
    throw DomainError("elimination order needs a proper split of variables");
  return block({front, back});
}

MonomialOrder MonomialOrder::weighted(std::vector<long> weights) {
  for (long w : weights)
    if (w <= 0) throw DomainError("weight vector must be strictly positive");
  MonomialOrder o;
  o.kind_ = Kind::Weighted;
  o.weights_ = std::move(weights);
  return o;
}

namespace {

// grevlex restricted to a subset of the variables
int grevlex_compare_on(const std::vector<int>& vars, const Monomial& a,
                       const Monomial& b) {
  long da = 0, db = 0;
  for (int v : vars) {
    da += a.exponent(v);
    db += b.exponent(v);
  }
  if (da != db) return da < db ? -1 : 1;
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
    int d = a.exponent(*it) - b.exponent(*it);
    if (d != 0) return d > 0 ? -1 : 1;
  }
  return 0;
}

} // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::Lex:
      for (int i = 0; i < a.nvars(); ++i) {
        int d = a.exponent(i) - b.exponent(i);
        if (d != 0) return d < 0 ? -1 : 1;
      }
      return 0;
    case Kind::GrevLex:
      return grevlex_compare(a, b);
    case Kind::Block:
      for (const auto& blk : blocks_) {
        int c = grevlex_compare_on(blk, a, b);
        if (c != 0) return c;
      }
      return 0;
    case Kind::Weighted: {
      long wa = 0, wb = 0;
      for (int i = 0; i < a.nvars(); ++i) {
        wa += weights_[i] * a.exponent(i);
        wb += weights_[i] * b.exponent(i);
      }
      if (wa != wb) return wa < wb ? -1 : 1;
      return grevlex_compare(a, b);
    }
  }
  return 0;
}

std::string MonomialOrder::key() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::GrevLex:
      return "grevlex";
    case Kind::Block: {
      std::ostringstream out;
      out << "block";
      for (const auto& blk : blocks_) {
        out << "[";
        for (size_t i = 0; i < blk.size(); ++i)
          out << (i ? "," : "") << blk[i];
        out << "]";
      }
      return out.str();
    }
    case Kind::Weighted: {
      std::ostringstream out;
      out << "weighted[";
      for (size_t i = 0; i < weights_.size(); ++i)
        out << (i ? "," : "") << weights_[i];
      out << "]";
      return out.str();
    }
  }
  return "?";
}

} // namespace conormal
