#include "chowkit/univariate.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace chowkit {

// ---------------------------------------------------------------------------
// dense polynomials over a Field

namespace dense {

int deg(const Poly& a) { return static_cast<int>(a.size()) - 1; }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly from_polynomial(const Polynomial& p, int var) {
  Poly a;
  for (auto& t : p.terms()) {
    int e = t.m[var];
    if (t.m.degree() != e) throw std::invalid_argument("polynomial is not univariate");
    if (static_cast<int>(a.size()) <= e) a.resize(e + 1, Scalar(0));
    a[e] = t.c;
  }
  trim(a);
  return a;
}

Polynomial to_polynomial(const Poly& a, const RingPtr& r, int var) {
  std::vector<Term> terms;
  for (int i = deg(a); i >= 0; --i)
    if (a[i] != 0) terms.push_back({Monomial::var(var, i), a[i]});
  return Polynomial::from_terms(r, std::move(terms));
}

Poly add(const Field& f, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), Scalar(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = f.add(c[i], b[i]);
  trim(c);
  return c;
}

Poly sub(const Field& f, const Poly& a, const Poly& b) {
  Poly c(std::max(a.size(), b.size()), Scalar(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = f.sub(c[i], b[i]);
  trim(c);
  return c;
}

Poly mul(const Field& f, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, Scalar(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  trim(c);
  return c;
}

void divmod(const Field& f, const Poly& a, const Poly& b, Poly& q, Poly& r) {
  if (b.empty()) throw std::domain_error("division by zero polynomial");
  r = a;
  int db = deg(b);
  q.assign(std::max(0, deg(a) - db + 1), Scalar(0));
  Scalar inv = f.inv(b.back());
  while (deg(r) >= db) {
    int s = deg(r) - db;
    Scalar c = f.mul(r.back(), inv);
    q[s] = c;
    for (int j = 0; j <= db; ++j) r[s + j] = f.sub(r[s + j], f.mul(c, b[j]));
    trim(r);
  }
  trim(q);
}

Poly rem(const Field& f, const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(f, a, b, q, r);
  return r;
}

Poly quo(const Field& f, const Poly& a, const Poly& b) {
  Poly q, r;
  divmod(f, a, b, q, r);
  return q;
}

Poly monic(const Field& f, const Poly& a) {
  if (a.empty()) return a;
  Scalar inv = f.inv(a.back());
  Poly c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = f.mul(a[i], inv);
  return c;
}

Poly derivative(const Field& f, const Poly& a) {
  Poly c;
  for (size_t i = 1; i < a.size(); ++i) c.push_back(f.mul(a[i], f.from_int(static_cast<long>(i))));
  trim(c);
  return c;
}

Poly gcd(const Field& f, Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = rem(f, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(f, a);
}

Poly xgcd(const Field& f, const Poly& a, const Poly& b, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b, s0{f.from_int(1)}, s1, t0, t1{f.from_int(1)};
  while (!r1.empty()) {
    Poly q, r;
    divmod(f, r0, r1, q, r);
    Poly s2 = sub(f, s0, mul(f, q, s1)), t2 = sub(f, t0, mul(f, q, t1));
    r0 = std::move(r1), r1 = std::move(r);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  if (r0.empty()) {
    s.clear(), t.clear();
    return r0;
  }
  Scalar inv = f.inv(r0.back());
  s = mul(f, s0, {inv});
  t = mul(f, t0, {inv});
  return monic(f, r0);
}

bool is_squarefree(const Field& f, const Poly& a) {
  if (deg(a) <= 0) return true;
  return deg(gcd(f, a, derivative(f, a))) == 0;
}

}  // namespace dense

namespace {

// ---------------------------------------------------------------------------
// F_p arithmetic on machine words

using u64 = uint64_t;
using FP = std::vector<u64>;

struct Zp {
  u64 p;
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 mul(u64 a, u64 b) const { return a * b % p; }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  u64 inv(u64 a) const {
    if (a == 0) throw std::domain_error("inverse of zero mod p");
    return pow(a, p - 2);
  }
};

void ftrim(FP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int fdeg(const FP& a) { return static_cast<int>(a.size()) - 1; }

FP fmul(const Zp& z, const FP& a, const FP& b) {
  if (a.empty() || b.empty()) return {};
  FP c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = z.add(c[i + j], z.mul(a[i], b[j]));
  }
  ftrim(c);
  return c;
}

FP fsub(const Zp& z, const FP& a, const FP& b) {
  FP c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = z.sub(c[i], b[i]);
  ftrim(c);
  return c;
}

void fdivmod(const Zp& z, const FP& a, const FP& b, FP& q, FP& r) {
  r = a;
  int db = fdeg(b);
  q.assign(std::max(0, fdeg(a) - db + 1), 0);
  u64 inv = z.inv(b.back());
  while (fdeg(r) >= db) {
    int s = fdeg(r) - db;
    u64 c = z.mul(r.back(), inv);
    q[s] = c;
    for (int j = 0; j <= db; ++j) r[s + j] = z.sub(r[s + j], z.mul(c, b[j]));
    ftrim(r);
  }
  ftrim(q);
}

FP frem(const Zp& z, const FP& a, const FP& b) {
  FP q, r;
  fdivmod(z, a, b, q, r);
  return r;
}

FP fquo(const Zp& z, const FP& a, const FP& b) {
  FP q, r;
  fdivmod(z, a, b, q, r);
  return q;
}

FP fmonic(const Zp& z, FP a) {
  if (a.empty()) return a;
  u64 inv = z.inv(a.back());
  for (auto& c : a) c = z.mul(c, inv);
  return a;
}

FP fgcd(const Zp& z, FP a, FP b) {
  while (!b.empty()) {
    FP r = frem(z, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return fmonic(z, a);
}

FP fxgcd(const Zp& z, const FP& a, const FP& b, FP& s, FP& t) {
  FP r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    FP q, r;
    fdivmod(z, r0, r1, q, r);
    FP s2 = fsub(z, s0, fmul(z, q, s1)), t2 = fsub(z, t0, fmul(z, q, t1));
    r0 = std::move(r1), r1 = std::move(r);
    s0 = std::move(s1), s1 = std::move(s2);
    t0 = std::move(t1), t1 = std::move(t2);
  }
  u64 inv = z.inv(r0.back());
  for (auto& c : s0) c = z.mul(c, inv);
  for (auto& c : t0) c = z.mul(c, inv);
  s = s0, t = t0;
  return fmonic(z, r0);
}

FP fderiv(const Zp& z, const FP& a) {
  FP c;
  for (size_t i = 1; i < a.size(); ++i) c.push_back(z.mul(a[i], i % z.p));
  ftrim(c);
  return c;
}

FP fpowmod(const Zp& z, FP base, const mpz_class& e, const FP& m) {
  FP r{1};
  base = frem(z, base, m);
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = frem(z, fmul(z, r, r), m);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = frem(z, fmul(z, r, base), m);
  }
  return r;
}

// Equal-degree splitting of a squarefree monic product of degree-d irreducibles.
void fp_edf(const Zp& z, const FP& g, int d, std::mt19937_64& rng, std::vector<FP>& out) {
  if (fdeg(g) == d) {
    out.push_back(g);
    return;
  }
  std::uniform_int_distribution<u64> coef(0, z.p - 1);
  mpz_class e;
  if (z.p != 2) {
    mpz_ui_pow_ui(e.get_mpz_t(), z.p, d);
    e = (e - 1) / 2;
  }
  for (;;) {
    FP a(fdeg(g), 0);
    for (auto& c : a) c = coef(rng);
    ftrim(a);
    if (fdeg(a) < 1) continue;
    FP b;
    if (z.p != 2) {
      b = fpowmod(z, a, e, g);
      b = fsub(z, b, FP{1});
    } else {
      FP acc = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        acc = frem(z, fmul(z, acc, acc), g);
        FP s(std::max(b.size(), acc.size()), 0);
        for (size_t k = 0; k < b.size(); ++k) s[k] = b[k];
        for (size_t k = 0; k < acc.size(); ++k) s[k] = z.add(s[k], acc[k]);
        ftrim(s);
        b = s;
      }
    }
    FP c = fgcd(z, b, g);
    if (fdeg(c) > 0 && fdeg(c) < fdeg(g)) {
      fp_edf(z, c, d, rng, out);
      fp_edf(z, fquo(z, g, c), d, rng, out);
      return;
    }
  }
}

// Monic squarefree f of degree >= 1.
std::vector<FP> fp_factor_squarefree(const Zp& z, FP f) {
  std::vector<FP> out;
  std::mt19937_64 rng(0x5eed + z.p);
  FP x{0, 1};
  FP h = frem(z, x, f);
  for (int d = 1; 2 * d <= fdeg(f); ++d) {
    h = fpowmod(z, h, mpz_class(static_cast<unsigned long>(z.p)), f);
    FP g = fgcd(z, fsub(z, h, x), f);
    if (fdeg(g) > 0) {
      fp_edf(z, g, d, rng, out);
      f = fquo(z, f, g);
      h = frem(z, h, f);
    }
  }
  if (fdeg(f) > 0) out.push_back(f);
  return out;
}

// Squarefree factorization over F_p of a monic polynomial.
std::vector<std::pair<FP, int>> fp_sff(const Zp& z, const FP& f) {
  std::vector<std::pair<FP, int>> out;
  FP c = fgcd(z, f, fderiv(z, f));
  FP w = fquo(z, f, c);
  int i = 1;
  while (fdeg(w) > 0) {
    FP y = fgcd(z, w, c);
    FP fac = fquo(z, w, y);
    if (fdeg(fac) > 0) out.push_back({fac, i});
    ++i;
    w = y;
    c = fquo(z, c, y);
  }
  if (fdeg(c) > 0) {
    FP root;
    for (size_t k = 0; k < c.size(); k += z.p) root.push_back(c[k]);
    for (auto& [g, e] : fp_sff(z, root)) out.push_back({g, e * static_cast<int>(z.p)});
  }
  return out;
}

std::vector<std::pair<FP, int>> fp_factor(const Zp& z, const FP& f) {
  std::vector<std::pair<FP, int>> out;
  for (auto& [g, e] : fp_sff(z, fmonic(z, f)))
    for (auto& h : fp_factor_squarefree(z, g)) out.push_back({h, e});
  return out;
}

// ---------------------------------------------------------------------------
// integer polynomials, Hensel lifting, recombination

using ZP = std::vector<mpz_class>;

void ztrim(ZP& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}
int zdeg(const ZP& a) { return static_cast<int>(a.size()) - 1; }

ZP zmul(const ZP& a, const ZP& b) {
  if (a.empty() || b.empty()) return {};
  ZP c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  ztrim(c);
  return c;
}

ZP zaddsub(const ZP& a, const ZP& b, int sign) {
  ZP c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += sign * b[i];
  ztrim(c);
  return c;
}

mpz_class zmod1(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

ZP zmod(ZP a, const mpz_class& m) {
  for (auto& c : a) c = zmod1(c, m);
  ztrim(a);
  return a;
}

ZP zsym(ZP a, const mpz_class& m) {
  mpz_class half = m / 2;
  for (auto& c : a) {
    c = zmod1(c, m);
    if (c > half) c -= m;
  }
  ztrim(a);
  return a;
}

// a = q*h + r mod m with h monic.
void zdivmod_monic(const ZP& a, const ZP& h, const mpz_class& m, ZP& q, ZP& r) {
  r = zmod(a, m);
  int dh = zdeg(h);
  q.assign(std::max(0, zdeg(r) - dh + 1), 0);
  while (zdeg(r) >= dh) {
    int s = zdeg(r) - dh;
    mpz_class c = r.back();
    q[s] = c;
    for (int j = 0; j <= dh; ++j) r[s + j] = zmod1(r[s + j] - c * h[j], m);
    ztrim(r);
  }
  ztrim(q);
}

std::optional<ZP> zdiv_exact(const ZP& a, const ZP& b) {
  ZP r = a;
  int db = zdeg(b);
  if (zdeg(a) < db) return std::nullopt;
  ZP q(zdeg(a) - db + 1, 0);
  while (!r.empty() && zdeg(r) >= db) {
    int s = zdeg(r) - db;
    if (!mpz_divisible_p(r.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_class c = r.back() / b.back();
    q[s] = c;
    for (int j = 0; j <= db; ++j) r[s + j] -= c * b[j];
    ztrim(r);
  }
  if (!r.empty()) return std::nullopt;
  return q;
}

ZP zprimitive(ZP a) {
  mpz_class g = 0;
  for (auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return a;
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  return a;
}

FP ztofp(const ZP& a, u64 p) {
  FP f;
  for (auto& c : a) f.push_back(zmod1(c, mpz_class(static_cast<unsigned long>(p))).get_ui());
  ftrim(f);
  return f;
}

ZP fptoz(const FP& a) {
  ZP z;
  for (auto c : a) z.push_back(mpz_class(static_cast<unsigned long>(c)));
  return z;
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic; result mod m^2.
void hensel_step(const ZP& f, ZP& g, ZP& h, ZP& s, ZP& t, const mpz_class& m) {
  mpz_class m2 = m * m;
  ZP e = zmod(zaddsub(f, zmul(g, h), -1), m2);
  ZP q, r;
  zdivmod_monic(zmul(s, e), h, m2, q, r);
  ZP g2 = zmod(zaddsub(zaddsub(g, zmul(t, e), 1), zmul(q, g), 1), m2);
  ZP h2 = zmod(zaddsub(h, r, 1), m2);
  ZP b = zmod(zaddsub(zaddsub(zmul(s, g2), zmul(t, h2), 1), ZP{1}, -1), m2);
  ZP c, d;
  zdivmod_monic(zmul(s, b), h2, m2, c, d);
  ZP s2 = zmod(zaddsub(s, d, -1), m2);
  ZP t2 = zmod(zaddsub(zaddsub(t, zmul(t, b), -1), zmul(c, g2), -1), m2);
  g = g2, h = h2, s = s2, t = t2;
}

// Lift a factorization f = lc * prod facs (mod p) to monic factors mod p^(2^steps).
std::vector<ZP> multilift(const ZP& f, const std::vector<FP>& facs, const Zp& z, int steps) {
  mpz_class M = z.p;
  for (int i = 0; i < steps; ++i) M *= M;
  if (facs.size() == 1) {
    mpz_class inv, lc = zmod1(f.back(), M);
    mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), M.get_mpz_t());
    ZP r = f;
    for (auto& c : r) c = zmod1(c * inv, M);
    return {r};
  }
  size_t k = facs.size() / 2;
  std::vector<FP> left(facs.begin(), facs.begin() + k), right(facs.begin() + k, facs.end());
  FP g0{zmod1(f.back(), mpz_class(static_cast<unsigned long>(z.p))).get_ui()}, h0{1};
  for (auto& a : left) g0 = fmul(z, g0, a);
  for (auto& a : right) h0 = fmul(z, h0, a);
  FP s0, t0;
  fxgcd(z, g0, h0, s0, t0);
  ZP g = fptoz(g0), h = fptoz(h0), s = fptoz(s0), t = fptoz(t0);
  mpz_class m = z.p;
  for (int i = 0; i < steps; ++i) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  auto a = multilift(g, left, z, steps);
  auto b = multilift(h, right, z, steps);
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

u64 next_prime(u64 n) {
  for (;;) {
    ++n;
    if (is_prime_u32(static_cast<uint32_t>(n))) return n;
  }
}

// g primitive, squarefree, positive leading coefficient.
std::vector<ZP> zassenhaus(const ZP& g) {
  int n = zdeg(g);
  if (n <= 1) return {g};
  // choose among a few good primes the one with fewest modular factors
  Zp best{0};
  std::vector<FP> best_facs;
  u64 p = 2;
  int good = 0;
  while (good < 4) {
    p = next_prime(p);
    if (zmod1(g.back(), mpz_class(static_cast<unsigned long>(p))) == 0) continue;
    Zp z{p};
    FP gp = ztofp(g, p);
    if (fdeg(fgcd(z, gp, fderiv(z, gp))) > 0) continue;
    ++good;
    auto facs = fp_factor_squarefree(z, fmonic(z, gp));
    if (best.p == 0 || facs.size() < best_facs.size()) best = z, best_facs = facs;
    if (best_facs.size() == 1) break;
  }
  if (best_facs.size() == 1) return {g};
  std::sort(best_facs.begin(), best_facs.end());

  mpz_class norm2 = 0;
  for (auto& c : g) norm2 += c * c;
  mpz_class root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  mpz_class bound = (root + 1) * abs(g.back()) * 2;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  int steps = 0;
  mpz_class M = best.p;
  while (M <= bound) M *= M, ++steps;

  std::vector<ZP> lifted = multilift(g, best_facs, best, steps);
  std::vector<ZP> result;
  ZP G = g;
  std::vector<int> idx(lifted.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  size_t s = 1;
  while (2 * s <= idx.size()) {
    bool found = false;
    std::vector<int> pick(s);
    for (size_t i = 0; i < s; ++i) pick[i] = static_cast<int>(i);
    for (;;) {
      ZP cand{G.back()};
      for (int i : pick) cand = zmod(zmul(cand, lifted[idx[i]]), M);
      cand = zprimitive(zsym(cand, M));
      if (auto q = zdiv_exact(G, cand)) {
        result.push_back(cand);
        G = *q;
        std::vector<int> rest;
        for (int i = 0; i < static_cast<int>(idx.size()); ++i)
          if (std::find(pick.begin(), pick.end(), i) == pick.end()) rest.push_back(idx[i]);
        idx = rest;
        found = true;
        break;
      }
      // next combination
      int i = static_cast<int>(s) - 1;
      while (i >= 0 && pick[i] == static_cast<int>(idx.size() - s) + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (size_t j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (zdeg(G) > 0) result.push_back(zprimitive(G));
  return result;
}

ZP to_primitive_z(const dense::Poly& a) {
  mpz_class l = 1;
  for (auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZP z;
  for (auto& c : a) z.push_back(c.get_num() * (l / c.get_den()));
  return zprimitive(z);
}

// Yun's squarefree decomposition over Q; parts are monic.
std::vector<std::pair<dense::Poly, int>> yun(const Field& f, const dense::Poly& a) {
  using namespace dense;
  std::vector<std::pair<Poly, int>> out;
  Poly b = derivative(f, a);
  Poly c = gcd(f, a, b);
  Poly w = quo(f, a, c), y = quo(f, b, c);
  Poly z = sub(f, y, derivative(f, w));
  int i = 1;
  while (deg(w) > 0) {
    Poly g = gcd(f, w, z);
    if (deg(g) > 0) out.push_back({g, i});
    w = quo(f, w, g);
    y = quo(f, z, g);
    z = sub(f, y, derivative(f, w));
    ++i;
  }
  return out;
}

}  // namespace

namespace dense {

std::vector<std::pair<Poly, int>> factor(const Field& f, const Poly& a) {
  if (a.empty()) throw std::invalid_argument("factor of zero polynomial");
  std::vector<std::pair<Poly, int>> out;
  if (deg(a) == 0) return out;
  if (f.is_rational()) {
    for (auto& [part, e] : yun(f, monic(f, a)))
      for (auto& z : zassenhaus(to_primitive_z(part))) {
        Poly q;
        for (auto& c : z) q.push_back(Scalar(c));
        out.push_back({monic(f, q), e});
      }
  } else {
    Zp z{f.characteristic()};
    FP fa;
    for (auto& c : a) fa.push_back(c.get_num().get_ui());
    for (auto& [g, e] : fp_factor(z, fa)) {
      Poly q;
      for (auto c : g) q.push_back(Scalar(mpz_class(static_cast<unsigned long>(c))));
      out.push_back({q, e});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    if (x.first.size() != y.first.size()) return x.first.size() < y.first.size();
    return x.first < y.first;
  });
  return out;
}

}  // namespace dense

UnivariateFactorization factor_univariate(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_univariate: zero polynomial");
  auto sup = p.support();
  if (sup.size() > 1) throw std::invalid_argument("factor_univariate: polynomial is not univariate");
  UnivariateFactorization res;
  if (sup.empty()) {
    res.unit = p.lc();
    return res;
  }
  int v = sup[0];
  const Field& f = p.field();
  auto facs = dense::factor(f, dense::from_polynomial(p, v));
  Polynomial prod = Polynomial::constant(p.ring(), 1);
  for (auto& [q, e] : facs) {
    Polynomial fq = dense::to_polynomial(q, p.ring(), v);
    if (f.is_rational()) fq = normalize_content(fq);
    prod = prod * fq.pow(e);
    res.factors.push_back({fq, e});
  }
  res.unit = f.div(p.lc(), prod.lc());
  return res;
}

}  // namespace chowkit
