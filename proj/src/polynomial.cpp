#include "conormal/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "conormal/errors.hpp"

namespace conormal {

namespace {

struct GrevlexLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return grevlex_compare(a, b) < 0;
  }
};

using TermMap = std::map<Monomial, Scalar, GrevlexLess>;

void add_into(TermMap& acc, const Monomial& m, const Scalar& c) {
  auto it = acc.find(m);
  if (it == acc.end()) {
    acc.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (!a || !b || !a->same_as(*b))
    throw DomainError("polynomials live in different rings");
}

} // namespace

Polynomial Polynomial::constant(const RingPtr& ring, const Scalar& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({c, Monomial(ring->nvars())});
  return p;
}

Polynomial Polynomial::constant(const RingPtr& ring, long value) {
  if (ring->modulus == 0) return constant(ring, Scalar::rational(value));
  long m = static_cast<long>(ring->modulus);
  long r = value % m;
  if (r < 0) r += m;
  return constant(ring, Scalar::mod_p(static_cast<std::uint64_t>(r),
                                      ring->modulus));
}

Polynomial Polynomial::variable(const RingPtr& ring, int var) {
  if (var < 0 || var >= ring->nvars())
    throw DomainError("variable index out of range");
  Polynomial p(ring);
  Scalar one = ring->modulus == 0 ? Scalar::rational(1)
                                  : Scalar::mod_p(1, ring->modulus);
  p.terms_.push_back({one, Monomial(ring->nvars()).with_exponent(var, 1)});
  return p;
}

Polynomial Polynomial::variable(const RingPtr& ring, const std::string& name) {
  int idx = ring->index_of(name);
  if (idx < 0) throw DomainError("unknown variable '" + name + "'");
  return variable(ring, idx);
}

Polynomial Polynomial::from_term(const RingPtr& ring, const Scalar& c,
                                 const Monomial& m) {
  if (m.nvars() != ring->nvars())
    throw DomainError("monomial arity does not match ring");
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::from_terms(const RingPtr& ring, std::vector<Term> terms) {
  TermMap acc;
  for (auto& t : terms) {
    if (t.mono.nvars() != ring->nvars())
      throw DomainError("monomial arity does not match ring");
    if (!t.coeff.is_zero()) add_into(acc, t.mono, t.coeff);
  }
  Polynomial p(ring);
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    p.terms_.push_back({it->second, it->first});
  return p;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

int Polynomial::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(var));
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_[0].mono.degree()) return false;
  return true;
}

bool Polynomial::uses_variable(int var) const {
  for (const auto& t : terms_)
    if (t.mono.exponent(var) > 0) return true;
  return false;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  // merge two descending term lists
  Polynomial out(ring_);
  out.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = grevlex_compare(terms_[i].mono, o.terms_[j].mono);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) out.terms_.push_back({s, terms_[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.terms_.push_back(o.terms_[j]);
  return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  return *this + (-o);
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  TermMap acc;
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      add_into(acc, a.mono.times(b.mono), a.coeff * b.coeff);
  Polynomial out(ring_);
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    out.terms_.push_back({it->second, it->first});
  return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial p(*this);
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

Polynomial Polynomial::times_term(const Scalar& c, const Monomial& m) const {
  if (c.is_zero()) return Polynomial(ring_);
  Polynomial p(*this);
  for (auto& t : p.terms_) {
    t.coeff *= c;
    t.mono = t.mono.times(m);
  }
  return p;
}

Polynomial Polynomial::pow(int n) const {
  if (n < 0) throw DomainError("negative polynomial power");
  Polynomial acc = constant(ring_, 1);
  Polynomial base(*this);
  while (n > 0) {
    if (n & 1) acc = acc * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_ || !o.ring_) return is_zero() && o.is_zero();
  if (!ring_->same_as(*o.ring_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono ||
        terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

const Term& Polynomial::leading_term(const MonomialOrder& order) const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  size_t best = 0;
  for (size_t i = 1; i < terms_.size(); ++i)
    if (order.compare(terms_[i].mono, terms_[best].mono) > 0) best = i;
  return terms_[best];
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
  if (is_zero()) return *this;
  Scalar lc = leading_term(order).coeff;
  return scaled(lc.inverse());
}

Polynomial Polynomial::differentiate(int var) const {
  if (var < 0 || var >= ring_->nvars())
    throw DomainError("variable index out of range");
  Polynomial out(ring_);
  for (const auto& t : terms_) {
    int e = t.mono.exponent(var);
    if (e == 0) continue;
    Scalar c = t.coeff * (ring_->modulus == 0
                              ? Scalar::rational(e)
                              : Scalar::mod_p(e, ring_->modulus));
    if (c.is_zero()) continue;
    out.terms_.push_back({c, t.mono.with_exponent(var, e - 1)});
  }
  // derivative preserves descending grevlex only per-degree; re-normalise
  return from_terms(ring_, std::move(out.terms_));
}

Polynomial Polynomial::substitute(const RingPtr& target,
                                  const std::map<int, Polynomial>& images) const {
  for (const auto& [var, img] : images) {
    if (var < 0 || var >= ring_->nvars())
      throw DomainError("substitution index out of range");
    require_same_ring(target, img.ring());
  }
  // variables without an explicit image map to their namesake in target
  std::vector<Polynomial> image_of(ring_->nvars());
  for (int v = 0; v < ring_->nvars(); ++v) {
    auto it = images.find(v);
    if (it != images.end()) {
      image_of[v] = it->second;
    } else if (uses_variable(v)) {
      int tv = target->index_of(ring_->vars[v]);
      if (tv < 0)
        throw DomainError("variable '" + ring_->vars[v] +
                          "' has no image in the target ring");
      image_of[v] = variable(target, tv);
    }
  }
  Polynomial out = zero(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coeff);
    for (int v = 0; v < ring_->nvars(); ++v) {
      int e = t.mono.exponent(v);
      if (e > 0) term = term * image_of[v].pow(e);
    }
    out = out + term;
  }
  return out;
}

Polynomial Polynomial::transported(const RingPtr& target) const {
  return substitute(target, {});
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_string();
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c = c.substr(1);
    if (first) {
      if (negative) out << "-";
      first = false;
    } else {
      out << (negative ? " - " : " + ");
    }
    if (t.mono.is_constant()) {
      out << c;
    } else if (c == "1") {
      out << t.mono.to_string(*ring_);
    } else {
      out << c << "*" << t.mono.to_string(*ring_);
    }
  }
  return out.str();
}

Polynomial homogenize(const Polynomial& f, const RingPtr& target, int hvar) {
  if (hvar < 0 || hvar >= target->nvars())
    throw DomainError("homogenising variable index out of range");
  if (f.is_zero()) return Polynomial::zero(target);
  int src_h = f.ring()->index_of(target->vars[hvar]);
  if (src_h >= 0 && f.uses_variable(src_h))
    throw DomainError("homogenising variable already occurs in the input");
  int d = f.degree();
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    std::vector<int> e(target->nvars(), 0);
    for (int v = 0; v < f.ring()->nvars(); ++v) {
      if (t.mono.exponent(v) == 0) continue;
      int tv = target->index_of(f.ring()->vars[v]);
      if (tv < 0)
        throw DomainError("variable '" + f.ring()->vars[v] +
                          "' has no image in the target ring");
      e[tv] = t.mono.exponent(v);
    }
    e[hvar] += d - t.mono.degree();
    terms.push_back({t.coeff, Monomial(std::move(e))});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial dehomogenize(const Polynomial& f, const RingPtr& target, int hvar) {
  if (hvar < 0 || hvar >= f.ring()->nvars())
    throw DomainError("chart variable index out of range");
  std::map<int, Polynomial> images;
  images.emplace(hvar, Polynomial::constant(target, 1));
  return f.substitute(target, images);
}

} // namespace conormal
