#include "conormal/factor.hpp"

#include <algorithm>
#include <map>

#include "conormal/errors.hpp"
#include "conormal/ideal_ops.hpp"
#include "conormal/rng.hpp"

namespace conormal {

// ===========================================================================
// content, gcd, squarefree part
// ===========================================================================

std::pair<Scalar, Polynomial> split_rational_content(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("content of the zero polynomial");
  if (f.ring()->modulus != 0)
    throw DomainError("factorisation works over the rationals only");
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const auto& t : f.terms()) {
    const mpq_class& q = t.coeff.rational_value();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  }
  mpq_class content(num_gcd, den_lcm);
  content.canonicalize();
  // sign convention: the grevlex-leading coefficient of the primitive part
  // is positive
  if (f.leading_term(MonomialOrder::grevlex()).coeff.sign() < 0)
    content = -content;
  Scalar c = Scalar::rational(content);
  return {c, f.scaled(c.inverse())};
}

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero())
    throw DomainError("gcd of two zero polynomials");
  if (a.is_zero()) return split_rational_content(b).second;
  if (b.is_zero()) return split_rational_content(a).second;
  if (a.is_constant() || b.is_constant())
    return Polynomial::constant(a.ring(), 1);
  const RingPtr& ring = a.ring();
  // (a) meet (b) = (lcm); gcd = a*b / lcm
  IdealHandle meet = intersect(IdealHandle(ring, {a}), IdealHandle(ring, {b}));
  const auto& gens = meet.groebner();
  if (gens.size() != 1)
    throw DomainError("intersection of principal ideals not principal");
  Polynomial lcm = gens[0];
  Polynomial g = exact_divide(a * b, lcm);
  return split_rational_content(g).second;
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("squarefree part of zero");
  if (f.is_constant()) return Polynomial::constant(f.ring(), 1);
  Polynomial d = f;
  for (int v = 0; v < f.ring()->nvars(); ++v) {
    if (!f.uses_variable(v)) continue;
    d = poly_gcd(d, f.differentiate(v));
    if (d.is_constant()) break;
  }
  if (d.is_constant()) return split_rational_content(f).second;
  return split_rational_content(exact_divide(f, d)).second;
}

std::optional<Polynomial> try_exact_divide(const Polynomial& h,
                                           const Polynomial& g) {
  if (g.is_zero()) return std::nullopt;
  if (h.is_zero()) return h;
  MonomialOrder ord = MonomialOrder::grevlex();
  Polynomial rest = h;
  Polynomial quotient = Polynomial::zero(h.ring());
  const Term& glt = g.leading_term(ord);
  while (!rest.is_zero()) {
    const Term& rlt = rest.leading_term(ord);
    auto q = rlt.mono.divided_by(glt.mono);
    if (!q) return std::nullopt;
    Polynomial piece =
        Polynomial::from_term(h.ring(), rlt.coeff / glt.coeff, *q);
    quotient = quotient + piece;
    rest = rest - piece * g;
  }
  return quotient;
}

// ===========================================================================
// univariate layer
//
// ZPoly: dense integer coefficients, index = degree.  The Zassenhaus core
// factors a squarefree primitive integer polynomial: reduce modulo a cheap
// prime > 2^15 keeping the input squarefree, split with Cantor-Zassenhaus,
// Hensel-lift the modular factors above the coefficient bound, then
// recombine subsets by trial division.
// ===========================================================================

namespace {

using ZPoly = std::vector<mpz_class>;

void z_trim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int z_deg(const ZPoly& f) { return static_cast<int>(f.size()) - 1; }

ZPoly z_mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  z_trim(out);
  return out;
}

mpz_class z_content(const ZPoly& f) {
  mpz_class g = 0;
  for (const auto& c : f) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

// primitive part with positive leading coefficient
ZPoly z_primitive(ZPoly f) {
  z_trim(f);
  if (f.empty()) return f;
  mpz_class c = z_content(f);
  if (f.back() < 0) c = -c;
  for (auto& x : f) x /= c;
  return f;
}

ZPoly z_derivative(const ZPoly& f) {
  ZPoly out;
  for (size_t i = 1; i < f.size(); ++i) out.push_back(f[i] * (long)i);
  z_trim(out);
  return out;
}

// exact division over Q with integrality not required; nothing if inexact
std::optional<ZPoly> z_try_divide(const ZPoly& f, const ZPoly& g) {
  if (g.empty()) return std::nullopt;
  std::vector<mpq_class> rest(f.begin(), f.end());
  auto trim_q = [](std::vector<mpq_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim_q(rest);
  std::vector<mpq_class> quot(
      rest.size() >= g.size() ? rest.size() - g.size() + 1 : 0, 0);
  while (rest.size() >= g.size() && !rest.empty()) {
    mpq_class c = mpq_class(rest.back()) / mpq_class(g.back());
    size_t shift = rest.size() - g.size();
    quot[shift] = c;
    for (size_t i = 0; i < g.size(); ++i) rest[shift + i] -= c * g[i];
    trim_q(rest);
  }
  if (!rest.empty()) return std::nullopt;
  ZPoly out;
  for (const auto& q : quot) {
    if (q.get_den() != 1) return std::nullopt;
    out.push_back(q.get_num());
  }
  z_trim(out);
  return out;
}

// gcd via the rational Euclid sequence, returned primitive
ZPoly z_gcd(ZPoly a, ZPoly b) {
  z_trim(a);
  z_trim(b);
  if (a.empty()) return z_primitive(b);
  if (b.empty()) return z_primitive(a);
  std::vector<mpq_class> f(a.begin(), a.end()), g(b.begin(), b.end());
  auto trim_q = [](std::vector<mpq_class>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  while (!g.empty()) {
    // f mod g
    while (f.size() >= g.size() && !f.empty()) {
      mpq_class c = f.back() / g.back();
      size_t shift = f.size() - g.size();
      for (size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
      trim_q(f);
    }
    std::swap(f, g);
  }
  // clear denominators
  mpz_class den = 1;
  for (const auto& c : f) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(),
                                  mpq_class(c).get_den_mpz_t());
  ZPoly out;
  for (const auto& c : f) out.push_back(mpq_class(c * den).get_num());
  return z_primitive(std::move(out));
}

// --- F_p arithmetic ---------------------------------------------------------

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t next_prime_after(std::uint64_t n) {
  for (std::uint64_t c = n + 1;; ++c)
    if (is_prime_u64(c)) return c;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod_u64(std::uint64_t a, std::uint64_t p) {
  return powmod_u64(a % p, p - 2, p);
}

using FpPoly = std::vector<std::uint64_t>;

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fp_from_z(const ZPoly& f, std::uint64_t p) {
  FpPoly out;
  for (const auto& c : f) {
    mpz_class r = c % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    out.push_back(r.get_ui());
  }
  fp_trim(out);
  return out;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly out(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  fp_trim(out);
  return out;
}

FpPoly fp_sub(FpPoly a, const FpPoly& b, std::uint64_t p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  fp_trim(a);
  return a;
}

void fp_divmod(const FpPoly& f, const FpPoly& g, std::uint64_t p, FpPoly& q,
               FpPoly& r) {
  q.assign(f.size() >= g.size() ? f.size() - g.size() + 1 : 1, 0);
  r = f;
  fp_trim(r);
  std::uint64_t inv = invmod_u64(g.back(), p);
  while (r.size() >= g.size() && !r.empty()) {
    std::uint64_t c = mulmod(r.back(), inv, p);
    size_t shift = r.size() - g.size();
    q[shift] = c;
    for (size_t i = 0; i < g.size(); ++i)
      r[shift + i] = (r[shift + i] + p - mulmod(c, g[i], p)) % p;
    fp_trim(r);
  }
  fp_trim(q);
}

FpPoly fp_rem(const FpPoly& f, const FpPoly& g, std::uint64_t p) {
  FpPoly q, r;
  fp_divmod(f, g, p, q, r);
  return r;
}

FpPoly fp_monic(FpPoly f, std::uint64_t p) {
  fp_trim(f);
  if (f.empty()) return f;
  std::uint64_t inv = invmod_u64(f.back(), p);
  for (auto& c : f) c = mulmod(c, inv, p);
  return f;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(std::move(a), p);
}

FpPoly fp_powmod(FpPoly base, mpz_class e, const FpPoly& mod,
                 std::uint64_t p) {
  FpPoly result = {1};
  base = fp_rem(base, mod, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t()))
      result = fp_rem(fp_mul(result, base, p), mod, p);
    base = fp_rem(fp_mul(base, base, p), mod, p);
    e >>= 1;
  }
  return result;
}

// extended Euclid, monic gcd: s*a + t*b = g
void fp_ext_euclid(const FpPoly& a, const FpPoly& b, std::uint64_t p,
                   FpPoly& s, FpPoly& t, FpPoly& g) {
  FpPoly r0 = a, r1 = b;
  FpPoly s0 = {1}, s1 = {};
  FpPoly t0 = {}, t1 = {1};
  fp_trim(r0);
  fp_trim(r1);
  while (!r1.empty()) {
    FpPoly q, r;
    fp_divmod(r0, r1, p, q, r);
    FpPoly s2 = fp_sub(s0, fp_mul(q, s1, p), p);
    FpPoly t2 = fp_sub(t0, fp_mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) throw DomainError("extended euclid of zero polynomials");
  std::uint64_t inv = invmod_u64(r0.back(), p);
  for (auto& c : r0) c = mulmod(c, inv, p);
  for (auto& c : s0) c = mulmod(c, inv, p);
  for (auto& c : t0) c = mulmod(c, inv, p);
  g = std::move(r0);
  s = std::move(s0);
  t = std::move(t0);
}

// --- Cantor-Zassenhaus over F_p ---------------------------------------------

void equal_degree_split(const FpPoly& f, int d, std::uint64_t p, Rng& rng,
                        std::vector<FpPoly>& out) {
  if (fp_deg(f) == d) {
    out.push_back(f);
    return;
  }
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(d));
  mpz_class half = (pd - 1) / 2;
  for (;;) {
    FpPoly r(static_cast<size_t>(fp_deg(f)), 0);
    for (auto& c : r) c = rng.next() % p;
    fp_trim(r);
    if (fp_deg(r) < 1) continue;
    FpPoly s = fp_powmod(r, half, f, p);
    if (s.empty()) continue;
    s[0] = (s[0] + p - 1) % p; // s - 1
    fp_trim(s);
    FpPoly g = fp_gcd(s, f, p);
    if (fp_deg(g) > 0 && fp_deg(g) < fp_deg(f)) {
      FpPoly q, rem;
      fp_divmod(f, g, p, q, rem);
      equal_degree_split(g, d, p, rng, out);
      equal_degree_split(fp_monic(q, p), d, p, rng, out);
      return;
    }
  }
}

// monic squarefree input; irreducible monic factors out
std::vector<FpPoly> fp_factor_squarefree(FpPoly f, std::uint64_t p, Rng& rng) {
  std::vector<FpPoly> out;
  FpPoly x = {0, 1};
  FpPoly h = x;
  int i = 1;
  while (fp_deg(f) >= 2 * i) {
    h = fp_powmod(h, mpz_class(static_cast<unsigned long>(p)), f, p);
    FpPoly hx = fp_sub(h, x, p);
    FpPoly g = fp_gcd(hx, f, p);
    if (fp_deg(g) > 0) {
      equal_degree_split(g, i, p, rng, out);
      FpPoly q, r;
      fp_divmod(f, g, p, q, r);
      f = fp_monic(q, p);
      h = fp_rem(h, f, p);
    }
    ++i;
  }
  if (fp_deg(f) > 0) out.push_back(f);
  return out;
}

// --- Hensel lifting ---------------------------------------------------------

// coefficients reduced into [0, m)
ZPoly zm_reduce(ZPoly f, const mpz_class& m) {
  for (auto& c : f) {
    c %= m;
    if (c < 0) c += m;
  }
  z_trim(f);
  return f;
}

ZPoly zm_mul(const ZPoly& a, const ZPoly& b, const mpz_class& m) {
  return zm_reduce(z_mul(a, b), m);
}

ZPoly zm_sub(ZPoly a, const ZPoly& b, const mpz_class& m) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return zm_reduce(std::move(a), m);
}

ZPoly z_from_fp(const FpPoly& f) {
  ZPoly out;
  for (auto c : f) out.push_back(mpz_class(static_cast<unsigned long>(c)));
  return out;
}

// linear Hensel lift: F monic over Z, F = A0*B0 mod p, t the Bezout
// cofactor of B0; returns (A, B) monic with F = A*B mod p^K
std::pair<ZPoly, ZPoly> hensel_lift_pair(const ZPoly& F, const FpPoly& A0,
                                         const FpPoly& B0, const FpPoly& t,
                                         std::uint64_t p, int K) {
  ZPoly A = z_from_fp(A0);
  ZPoly B = z_from_fp(B0);
  mpz_class m(static_cast<unsigned long>(p));
  mpz_class P(static_cast<unsigned long>(p));
  for (int j = 1; j < K; ++j) {
    mpz_class m_next = m * P;
    // defect c = (F - A*B) / m  (mod p)
    ZPoly diff = zm_sub(zm_reduce(F, m_next), zm_mul(A, B, m_next), m_next);
    FpPoly c;
    for (const auto& coeff : diff) {
      mpz_class q = coeff / m;
      mpz_class r = coeff % m;
      if (r != 0) throw DomainError("Hensel defect not divisible");
      mpz_class qm = q % P;
      if (qm < 0) qm += P;
      c.push_back(qm.get_ui());
    }
    fp_trim(c);
    // solve u*B0 + v*A0 = c (mod p), deg u < deg A0
    FpPoly tc = fp_mul(t, c, p);
    FpPoly q, u;
    fp_divmod(tc, A0, p, q, u);
    // v = (c - u*B0) / A0 (exact in F_p[x])
    FpPoly numer = fp_sub(c, fp_mul(u, B0, p), p);
    FpPoly v, rem;
    if (numer.empty()) {
      v = {};
    } else {
      fp_divmod(numer, A0, p, v, rem);
      if (!rem.empty()) throw DomainError("Hensel correction not exact");
    }
    // A += m*u, B += m*v
    ZPoly mu = z_from_fp(u);
    for (auto& c2 : mu) c2 *= m;
    ZPoly mv = z_from_fp(v);
    for (auto& c2 : mv) c2 *= m;
    if (mu.size() > A.size()) A.resize(mu.size(), 0);
    for (size_t i = 0; i < mu.size(); ++i) A[i] += mu[i];
    if (mv.size() > B.size()) B.resize(mv.size(), 0);
    for (size_t i = 0; i < mv.size(); ++i) B[i] += mv[i];
    m = m_next;
  }
  return {zm_reduce(std::move(A), m), zm_reduce(std::move(B), m)};
}

// lift every modular factor of monic F to Z/p^K via a product tree
std::vector<ZPoly> hensel_lift_tree(const ZPoly& F,
                                    const std::vector<FpPoly>& factors,
                                    std::uint64_t p, int K,
                                    const mpz_class& M) {
  if (factors.size() == 1) return {zm_reduce(F, M)};
  size_t half = factors.size() / 2;
  FpPoly A0 = {1}, B0 = {1};
  for (size_t i = 0; i < half; ++i) A0 = fp_mul(A0, factors[i], p);
  for (size_t i = half; i < factors.size(); ++i)
    B0 = fp_mul(B0, factors[i], p);
  FpPoly s, t, g;
  fp_ext_euclid(A0, B0, p, s, t, g);
  if (fp_deg(g) != 0)
    throw DomainError("modular factors not coprime in Hensel tree");
  auto [A, B] = hensel_lift_pair(F, A0, B0, t, p, K);
  std::vector<FpPoly> left(factors.begin(), factors.begin() + half);
  std::vector<FpPoly> right(factors.begin() + half, factors.end());
  std::vector<ZPoly> out = hensel_lift_tree(A, left, p, K, M);
  std::vector<ZPoly> more = hensel_lift_tree(B, right, p, K, M);
  out.insert(out.end(), more.begin(), more.end());
  return out;
}

// --- Zassenhaus -------------------------------------------------------------

mpz_class symmetric_lift(mpz_class c, const mpz_class& m) {
  if (c * 2 > m) c -= m;
  return c;
}

// irreducible factors of a monic squarefree integer polynomial
std::vector<ZPoly> z_factor_monic_squarefree(const ZPoly& F, Rng& rng) {
  int n = z_deg(F);
  if (n <= 1) return {F};

  // prime choice: wordsized, above 2^15, input stays squarefree
  std::uint64_t p = 32768;
  FpPoly fp;
  for (;;) {
    p = next_prime_after(p);
    fp = fp_from_z(F, p);
    if (fp_deg(fp) != n) continue; // leading coefficient vanished
    FpPoly d = fp_from_z(z_derivative(F), p);
    if (fp_deg(fp_gcd(fp, d, p)) == 0) break;
  }

  std::vector<FpPoly> modular = fp_factor_squarefree(fp_monic(fp, p), p, rng);
  std::sort(modular.begin(), modular.end());
  if (modular.size() == 1) return {F};
  if (modular.size() > 24)
    throw DomainError("too many modular factors to recombine");

  // coefficient bound: factors of F have coefficients below 2^n * height
  mpz_class height = 0;
  for (const auto& c : F) {
    mpz_class a = abs(c);
    if (a > height) height = a;
  }
  mpz_class bound = height * (n + 1);
  mpz_class two_n;
  mpz_ui_pow_ui(two_n.get_mpz_t(), 2, static_cast<unsigned long>(n));
  bound *= two_n;
  int K = 1;
  mpz_class M(static_cast<unsigned long>(p));
  while (M <= 2 * bound) {
    M *= static_cast<unsigned long>(p);
    ++K;
  }

  std::vector<ZPoly> lifted = hensel_lift_tree(zm_reduce(F, M), modular, p, K, M);

  // subset recombination
  std::vector<ZPoly> out;
  std::vector<int> alive(lifted.size());
  for (size_t i = 0; i < alive.size(); ++i) alive[i] = static_cast<int>(i);
  ZPoly rest = F;

  auto candidate_for = [&](const std::vector<int>& subset) {
    ZPoly cand = {1};
    for (int i : subset) cand = zm_mul(cand, lifted[i], M);
    for (auto& c : cand) c = symmetric_lift(c, M);
    z_trim(cand);
    return cand;
  };

  size_t size = 1;
  while (2 * size <= alive.size()) {
    bool found = false;
    // enumerate subsets of `alive` of cardinality `size`
    std::vector<int> pick(size);
    std::vector<size_t> idx(size);
    for (size_t i = 0; i < size; ++i) idx[i] = i;
    for (;;) {
      for (size_t i = 0; i < size; ++i) pick[i] = alive[idx[i]];
      ZPoly cand = candidate_for(pick);
      auto quot = z_try_divide(rest, cand);
      if (quot) {
        out.push_back(cand);
        rest = *quot;
        std::vector<int> next_alive;
        for (int a : alive)
          if (std::find(pick.begin(), pick.end(), a) == pick.end())
            next_alive.push_back(a);
        alive = std::move(next_alive);
        found = true;
        break;
      }
      // next combination
      size_t i = size;
      for (;;) {
        if (i == 0) break;
        --i;
        if (idx[i] != i + alive.size() - size) {
          ++idx[i];
          for (size_t j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
          break;
        }
        if (i == 0) {
          i = size + 1; // exhausted
          break;
        }
      }
      if (i == size + 1 || size == 0) break;
    }
    if (!found) ++size;
  }
  if (z_deg(rest) > 0) out.push_back(rest);
  return out;
}

// irreducible primitive factors of a squarefree primitive integer poly
std::vector<ZPoly> z_factor_squarefree(const ZPoly& f, Rng& rng) {
  int n = z_deg(f);
  if (n <= 0) return {};
  if (n == 1) return {z_primitive(f)};
  const mpz_class& lc = f.back();
  if (lc == 1) return z_factor_monic_squarefree(f, rng);
  // monicise: G(u) = lc^(n-1) * f(u / lc), factor, substitute back
  ZPoly G(f.size());
  mpz_class power = 1;
  for (int i = n; i >= 0; --i) {
    G[i] = f[i] * power;
    if (i > 0) power *= lc;
  }
  // G[i] = f[i] * lc^(n-1-i), adjust: above loop gives f[n]*1 = lc at top;
  // we need monic, i.e. divide everything by lc
  for (auto& c : G) {
    if (c % lc != 0) throw DomainError("monicisation failed");
    c /= lc;
  }
  std::vector<ZPoly> monic_factors = z_factor_monic_squarefree(G, rng);
  std::vector<ZPoly> out;
  for (const auto& Fm : monic_factors) {
    ZPoly h(Fm.size());
    mpz_class pw = 1;
    for (size_t i = 0; i < Fm.size(); ++i) {
      h[i] = Fm[i] * pw;
      pw *= lc;
    }
    out.push_back(z_primitive(std::move(h)));
  }
  return out;
}

// full univariate factorisation with multiplicities (primitive input)
std::vector<std::pair<ZPoly, int>> z_factor_full(ZPoly f, Rng& rng) {
  std::vector<std::pair<ZPoly, int>> out;
  f = z_primitive(std::move(f));
  while (z_deg(f) > 0) {
    ZPoly d = z_gcd(f, z_derivative(f));
    ZPoly sqf = z_primitive(*z_try_divide(f, d));
    for (auto& q : z_factor_squarefree(sqf, rng)) {
      int e = 0;
      for (;;) {
        auto quot = z_try_divide(f, q);
        if (!quot) break;
        f = z_primitive(std::move(*quot));
        ++e;
      }
      out.emplace_back(std::move(q), e);
    }
  }
  return out;
}

} // namespace

// ===========================================================================
// multivariate factorisation via Kronecker substitution
// ===========================================================================

namespace {

std::vector<int> used_variables(const Polynomial& f) {
  std::vector<int> used;
  for (int v = 0; v < f.ring()->nvars(); ++v)
    if (f.uses_variable(v)) used.push_back(v);
  return used;
}

ZPoly univariate_image(const Polynomial& f, int var) {
  ZPoly out(static_cast<size_t>(f.degree_in(var)) + 1, 0);
  for (const auto& t : f.terms()) {
    const mpq_class& q = t.coeff.rational_value();
    if (q.get_den() != 1)
      throw DomainError("expected integer coefficients");
    out[t.mono.exponent(var)] += q.get_num();
  }
  z_trim(out);
  return out;
}

Polynomial from_univariate(const RingPtr& ring, const ZPoly& f, int var) {
  std::vector<Term> terms;
  for (size_t i = 0; i < f.size(); ++i) {
    if (f[i] == 0) continue;
    terms.push_back({Scalar::rational(mpq_class(f[i])),
                     Monomial(ring->nvars()).with_exponent(var, (int)i)});
  }
  return Polynomial::from_terms(ring, terms);
}

// deterministic seed derived from the input's canonical rendering
Rng seeded_for(const Polynomial& f) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : f.to_string()) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return Rng(h);
}

// irreducible factors of a squarefree primitive input, any number of vars
std::vector<Polynomial> factor_squarefree_primitive(const Polynomial& g);

std::vector<Polynomial> kronecker_factor(const Polynomial& g) {
  const RingPtr& ring = g.ring();
  std::vector<int> used = used_variables(g);
  Rng rng = seeded_for(g);

  // substitution degrees and mixed-radix weights
  std::map<int, long> weight;
  std::vector<long> radix(used.size());
  long w = 1;
  for (size_t i = 0; i < used.size(); ++i) {
    radix[i] = g.degree_in(used[i]) + 1;
    weight[used[i]] = w;
    if (w > 2'000'000L / radix[i])
      throw DomainError("Kronecker image degree too large");
    w *= radix[i];
  }

  // univariate image: x_v -> t^{weight[v]}  (injective below the radices)
  ZPoly image;
  for (const auto& t : g.terms()) {
    long e = 0;
    for (size_t i = 0; i < used.size(); ++i)
      e += weight[used[i]] * t.mono.exponent(used[i]);
    if (static_cast<long>(image.size()) <= e) image.resize(e + 1, 0);
    const mpq_class& q = t.coeff.rational_value();
    image[e] += q.get_num();
  }
  z_trim(image);

  std::vector<std::pair<ZPoly, int>> ufactors = z_factor_full(image, rng);
  std::sort(ufactors.begin(), ufactors.end());
  if (ufactors.size() == 1 && ufactors[0].second == 1)
    return {g}; // image irreducible forces g irreducible

  long combos = 1;
  for (const auto& [q, e] : ufactors) {
    combos *= (e + 1);
    if (combos > 200'000)
      throw DomainError("too many Kronecker divisor candidates");
  }

  // walk proper divisors of the image in mixed-radix order; map each back
  // and trial-divide
  std::vector<int> exps(ufactors.size(), 0);
  for (long code = 1; code + 1 < combos; ++code) {
    // increment exponent vector
    size_t i = 0;
    for (;;) {
      if (++exps[i] <= ufactors[i].second) break;
      exps[i] = 0;
      ++i;
    }
    ZPoly div = {1};
    for (size_t j = 0; j < ufactors.size(); ++j)
      for (int k = 0; k < exps[j]; ++k) div = z_mul(div, ufactors[j].first);

    // map exponents back through the mixed radix
    std::vector<Term> terms;
    bool valid = true;
    for (size_t e = 0; e < div.size() && valid; ++e) {
      if (div[e] == 0) continue;
      long rest = static_cast<long>(e);
      std::vector<int> expo(ring->nvars(), 0);
      for (size_t i2 = 0; i2 < used.size(); ++i2) {
        expo[used[i2]] = static_cast<int>(rest % radix[i2]);
        rest /= radix[i2];
      }
      if (rest != 0) {
        valid = false;
        break;
      }
      terms.push_back({Scalar::rational(mpq_class(div[e])),
                       Monomial(std::move(expo))});
    }
    if (!valid) continue;
    Polynomial candidate = Polynomial::from_terms(ring, terms);
    if (candidate.is_constant()) continue;
    candidate = split_rational_content(candidate).second;
    auto quot = try_exact_divide(g, candidate);
    if (!quot || quot->is_constant()) continue;
    // proper split: recurse on both halves
    std::vector<Polynomial> out = factor_squarefree_primitive(candidate);
    std::vector<Polynomial> more = factor_squarefree_primitive(
        split_rational_content(*quot).second);
    out.insert(out.end(), more.begin(), more.end());
    return out;
  }
  return {g}; // no proper divisor: irreducible
}

std::vector<Polynomial> factor_squarefree_primitive(const Polynomial& g) {
  std::vector<int> used = used_variables(g);
  if (used.empty()) return {};
  if (used.size() == 1) {
    int var = used[0];
    Rng rng = seeded_for(g);
    std::vector<Polynomial> out;
    for (auto& zf : z_factor_squarefree(univariate_image(g, var), rng))
      out.push_back(from_univariate(g.ring(), zf, var));
    return out;
  }
  return kronecker_factor(g);
}

} // namespace

Polynomial Factorization::expanded() const {
  Polynomial acc = Polynomial::constant(ring, 1);
  for (const auto& [f, e] : factors) acc = acc * f.pow(e);
  return acc.scaled(content);
}

Factorization factor_polynomial(const Polynomial& f) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  auto [content, g] = split_rational_content(f);
  Factorization result;
  result.ring = f.ring();
  result.content = content;

  // monomial content: one linear factor per variable
  const RingPtr& ring = f.ring();
  std::vector<int> min_exp(ring->nvars(), -1);
  for (const auto& t : g.terms())
    for (int v = 0; v < ring->nvars(); ++v) {
      int e = t.mono.exponent(v);
      min_exp[v] = min_exp[v] < 0 ? e : std::min(min_exp[v], e);
    }
  for (int v = 0; v < ring->nvars(); ++v) {
    if (min_exp[v] <= 0) continue;
    std::vector<Term> shifted;
    for (const auto& t : g.terms())
      shifted.push_back(
          {t.coeff,
           t.mono.with_exponent(v, t.mono.exponent(v) - min_exp[v])});
    g = Polynomial::from_terms(ring, shifted);
    result.factors.emplace_back(Polynomial::variable(ring, v), min_exp[v]);
  }

  if (!g.is_constant()) {
    Polynomial sqf = squarefree_part(g);
    for (const auto& q : factor_squarefree_primitive(sqf)) {
      int e = 0;
      Polynomial rest = g;
      for (;;) {
        auto quot = try_exact_divide(rest, q);
        if (!quot) break;
        rest = *quot;
        ++e;
      }
      if (e == 0) throw DomainError("factor lost during multiplicity count");
      result.factors.emplace_back(q, e);
    }
  }

  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              return a.first.to_string() < b.first.to_string();
            });

  // verify by expansion
  Polynomial check = Polynomial::constant(ring, 1);
  for (const auto& [q, e] : result.factors) check = check * q.pow(e);
  check = check.scaled(result.content);
  if (!(check == f))
    throw DomainError("internal factorisation verification failed");
  return result;
}

bool is_irreducible(const Polynomial& f) {
  if (f.is_zero() || f.is_constant()) return false;
  Factorization fac = factor_polynomial(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

} // namespace conormal
