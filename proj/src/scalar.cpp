#include "conormal/scalar.hpp"

namespace conormal {

namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw DomainError("division by zero in F_p");
  // extended Euclid on signed 128-bit intermediates
  __int128 t = 0, new_t = 1;
  __int128 r = static_cast<__int128>(p), new_r = static_cast<__int128>(a);
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw DomainError("non-invertible residue: modulus not prime?");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

} // namespace

Budget& global_budget() {
  static Budget budget;
  return budget;
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Scalar s;
  s.q_ = mpq_class(num, den);
  s.q_.canonicalize();
  return s;
}

Scalar Scalar::mod_p(std::uint64_t residue, std::uint64_t p) {
  if (p <= (1ull << 15))
    throw DomainError("prime-field modulus must exceed 2^15");
  if (p >= (1ull << 31))
    throw DomainError("prime-field modulus must stay below 2^31");
  Scalar s;
  s.p_ = p;
  s.r_ = residue % p;
  return s;
}

Scalar Scalar::zero_like(const Scalar& model) {
  return model.p_ == 0 ? Scalar() : mod_p(0, model.p_);
}

Scalar Scalar::one_like(const Scalar& model) {
  return model.p_ == 0 ? rational(1) : mod_p(1, model.p_);
}

int Scalar::sign() const {
  if (p_ != 0)
    throw DomainError("sign() is undefined for prime-field scalars");
  return sgn(q_);
}

const mpq_class& Scalar::rational_value() const {
  if (p_ != 0)
    throw DomainError("rational_value() called on a prime-field scalar");
  return q_;
}

void Scalar::require_same_domain(const Scalar& o) const {
  if (p_ != o.p_)
    throw DomainError("mixed coefficient domains (Q vs F_p, or distinct p)");
}

Scalar Scalar::operator-() const {
  Scalar s(*this);
  if (p_ == 0)
    s.q_ = -q_;
  else
    s.r_ = r_ == 0 ? 0 : p_ - r_;
  return s;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_domain(o);
  Scalar s(*this);
  if (p_ == 0) {
    s.q_ = q_ + o.q_;
  } else {
    s.r_ = r_ + o.r_;
    if (s.r_ >= p_) s.r_ -= p_;
  }
  return s;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_domain(o);
  Scalar s(*this);
  if (p_ == 0)
    s.q_ = q_ * o.q_;
  else
    s.r_ = mul_mod(r_, o.r_, p_);
  return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same_domain(o);
  if (o.is_zero()) throw DomainError("scalar division by zero");
  if (p_ == 0) {
    Scalar s(*this);
    s.q_ = q_ / o.q_;
    return s;
  }
  return *this * o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (p_ == 0) {
    Scalar s(*this);
    s.q_ = 1 / q_;
    return s;
  }
  Scalar s(*this);
  s.r_ = inv_mod(r_, p_);
  return s;
}

bool Scalar::operator==(const Scalar& o) const {
  if (p_ != o.p_) return false;
  return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

bool Scalar::operator<(const Scalar& o) const {
  require_same_domain(o);
  return p_ == 0 ? q_ < o.q_ : r_ < o.r_;
}

std::string Scalar::to_string() const {
  if (p_ == 0) return q_.get_str();
  return std::to_string(r_);
}

Scalar project_mod_p(const Scalar& rational, std::uint64_t p) {
  if (!rational.is_rational())
    throw DomainError("project_mod_p expects a rational scalar");
  const mpq_class& q = rational.rational_value();
  mpz_class den_mod = q.get_den() % static_cast<unsigned long>(p);
  if (den_mod == 0)
    throw DomainError("denominator vanishes mod p: pick another prime");
  mpz_class num_mod = q.get_num() % static_cast<unsigned long>(p);
  if (num_mod < 0) num_mod += static_cast<unsigned long>(p);
  std::uint64_t n = num_mod.get_ui();
  std::uint64_t d = den_mod.get_ui();
  Scalar nn = Scalar::mod_p(n, p);
  Scalar dd = Scalar::mod_p(d, p);
  return nn / dd;
}

} // namespace conormal
