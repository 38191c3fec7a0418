#include "chowkit/factor.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "chowkit/ideal.hpp"
#include "chowkit/univariate.hpp"

namespace chowkit {

namespace {

Polynomial one(const RingPtr& r) { return Polynomial::constant(r, 1); }

// Coefficients of p as a polynomial in x: result[k] multiplies x^k.
std::vector<Polynomial> coeffs_in(const Polynomial& p, int x) {
  int d = p.degree_in(x);
  std::vector<std::vector<Term>> buckets(d + 1);
  for (auto& t : p.terms()) {
    Monomial m = t.m;
    int k = m[x];
    m.set(x, 0);
    buckets[k].push_back({m, t.c});
  }
  std::vector<Polynomial> out;
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(p.ring(), std::move(b)));
  return out;
}

Polynomial content_in(const Polynomial& p, int x) {
  auto cs = coeffs_in(p, x);
  std::vector<Polynomial> nz;
  for (auto& c : cs)
    if (!c.is_zero()) nz.push_back(c);
  std::sort(nz.begin(), nz.end(), [](const Polynomial& a, const Polynomial& b) { return a.size() < b.size(); });
  Polynomial g = nz.front();
  for (size_t i = 1; i < nz.size() && !g.is_constant(); ++i) g = poly_gcd(g, nz[i]);
  return g.is_constant() ? one(p.ring()) : g;
}

int u_degree(const Monomial& m, int x) { return m.degree() - m[x]; }

int u_degree(const Polynomial& p, int x) {
  int d = 0;
  for (auto& t : p.terms()) d = std::max(d, u_degree(t.m, x));
  return d;
}

Polynomial truncate_u(const Polynomial& p, int x, int D) {
  std::vector<Term> keep;
  for (auto& t : p.terms())
    if (u_degree(t.m, x) <= D) keep.push_back(t);
  return Polynomial::from_sorted(p.ring(), std::move(keep));
}

Polynomial truncated_product(const std::vector<Polynomial>& fs, int x, int D) {
  Polynomial acc = one(fs.front().ring());
  for (auto& f : fs) acc = truncate_u(acc * f, x, D);
  return acc;
}

Polynomial shift(const Polynomial& p, const std::vector<int>& us, const std::vector<Scalar>& a, int sign) {
  std::vector<std::pair<int, Polynomial>> subs;
  for (size_t j = 0; j < us.size(); ++j) {
    Scalar v = sign > 0 ? a[j] : Scalar(-a[j]);
    subs.push_back({us[j], Polynomial::variable(p.ring(), us[j]) + Polynomial::constant(p.ring(), v)});
  }
  return substitute_vars(p, subs);
}

// F monic in x and squarefree: irreducible monic factors via a univariate
// specialization and ideal-adic Hensel lifting.
std::vector<Polynomial> monic_factor(const Polynomial& F, int x) {
  const RingPtr& R = F.ring();
  const Field& fl = F.field();
  std::vector<int> us;
  for (int v : F.support())
    if (v != x) us.push_back(v);
  if (us.empty()) {
    std::vector<Polynomial> out;
    for (auto& [q, m] : dense::factor(fl, dense::from_polynomial(F, x))) out.push_back(dense::to_polynomial(q, R, x));
    return out;
  }

  std::mt19937_64 rng(0x5eedfac7ULL + F.size() * 131 + F.total_degree());
  std::vector<Scalar> a(us.size());
  dense::Poly Fa;
  bool found = false;
  for (int attempt = 0; attempt < 60 && !found; ++attempt) {
    long range = 2 + attempt / 4;
    for (auto& v : a) {
      long r = static_cast<long>(rng() % (2 * range + 1)) - range;
      v = fl.from_int(r);
    }
    std::vector<std::pair<int, Polynomial>> subs;
    for (size_t j = 0; j < us.size(); ++j) subs.push_back({us[j], Polynomial::constant(R, a[j])});
    Fa = dense::from_polynomial(substitute_vars(F, subs), x);
    found = dense::deg(Fa) == F.degree_in(x) && dense::is_squarefree(fl, Fa);
  }
  if (!found) throw std::runtime_error("factorization: no squarefree specialization found");

  auto ufac = dense::factor(fl, Fa);
  if (ufac.size() == 1) return {F};
  std::vector<dense::Poly> g;
  for (auto& [q, m] : ufac) g.push_back(q);
  size_t r = g.size();

  // t[i] * prod_{j != i} g_j == 1 mod g_i
  std::vector<dense::Poly> t(r);
  for (size_t i = 0; i < r; ++i) {
    dense::Poly P{fl.from_int(1)};
    for (size_t j = 0; j < r; ++j)
      if (j != i) P = dense::mul(fl, P, g[j]);
    dense::Poly s, tt;
    dense::xgcd(fl, g[i], P, s, tt);
    t[i] = tt;
  }

  Polynomial Fs = shift(F, us, a, +1);
  int D = u_degree(Fs, x);
  std::vector<Polynomial> lifted;
  for (auto& q : g) lifted.push_back(dense::to_polynomial(q, R, x));

  for (int k = 1; k <= D; ++k) {
    Polynomial e = Fs - truncated_product(lifted, x, k);
    std::map<std::vector<uint16_t>, std::pair<Monomial, dense::Poly>> groups;
    for (auto& term : e.terms()) {
      if (u_degree(term.m, x) != k) continue;
      Monomial alpha = term.m;
      int ex = alpha[x];
      alpha.set(x, 0);
      std::vector<uint16_t> key(R->nvars());
      for (int v = 0; v < R->nvars(); ++v) key[v] = alpha[v];
      auto& slot = groups[key];
      slot.first = alpha;
      if (static_cast<int>(slot.second.size()) <= ex) slot.second.resize(ex + 1, Scalar(0));
      slot.second[ex] = term.c;
    }
    if (groups.empty()) continue;
    std::vector<std::vector<Term>> corr(r);
    for (auto& [key, slot] : groups) {
      dense::Poly c = slot.second;
      dense::trim(c);
      for (size_t i = 0; i < r; ++i) {
        dense::Poly sigma = dense::rem(fl, dense::mul(fl, c, t[i]), g[i]);
        for (size_t j = 0; j < sigma.size(); ++j) {
          if (sgn(sigma[j]) == 0) continue;
          Monomial m = slot.first;
          m.set(x, static_cast<int>(j));
          corr[i].push_back({m, sigma[j]});
        }
      }
    }
    for (size_t i = 0; i < r; ++i)
      if (!corr[i].empty()) lifted[i] += Polynomial::from_terms(R, std::move(corr[i]));
  }

  // Recombination: true factors are truncated products of subsets.
  std::vector<Polynomial> out;
  std::vector<size_t> avail(r);
  for (size_t i = 0; i < r; ++i) avail[i] = i;
  Polynomial remaining = Fs;
  size_t s = 1;
  while (2 * s <= avail.size()) {
    bool hit = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      std::vector<Polynomial> sub;
      for (size_t i : idx) sub.push_back(lifted[avail[i]]);
      Polynomial cand = truncated_product(sub, x, D);
      if (auto q = divide_exact(remaining, cand)) {
        out.push_back(cand);
        remaining = *q;
        std::vector<size_t> rest;
        for (size_t i = 0; i < avail.size(); ++i)
          if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(avail[i]);
        avail = rest;
        hit = true;
        break;
      }
      int pos = static_cast<int>(s) - 1;
      while (pos >= 0 && idx[pos] == avail.size() - s + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (size_t i = pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
    if (!hit) ++s;
  }
  if (!remaining.is_constant()) out.push_back(remaining);
  for (auto& f : out) f = shift(f, us, a, -1);
  return out;
}

// s squarefree, primitive in x, every factor involves x.
std::vector<Polynomial> squarefree_factor(const Polynomial& s, int x) {
  auto cs = coeffs_in(s, x);
  int d = static_cast<int>(cs.size()) - 1;
  const Polynomial& lc = cs[d];
  std::vector<Polynomial> out;
  if (lc.is_constant()) {
    for (auto& f : monic_factor(s.scale(s.field().inv(lc.constant_term())), x)) out.push_back(normalize_content(f));
    return out;
  }
  // F(y) = lc^(d-1) s(y/lc) is monic in y.
  const RingPtr& R = s.ring();
  Polynomial X = Polynomial::variable(R, x);
  Polynomial F = X.pow(d);
  Polynomial lcp = one(R);
  for (int k = d - 1; k >= 0; --k) {
    F += cs[k] * lcp * X.pow(k);
    lcp *= lc;
  }
  for (auto& G : monic_factor(F, x)) {
    Polynomial H = substitute_vars(G, {{x, lc * X}});
    Polynomial c = content_in(H, x);
    out.push_back(normalize_content(*divide_exact(H, c)));
  }
  return out;
}

struct Collector {
  std::map<std::string, FactorPower> acc;
  void add(const Polynomial& f, int m) {
    Polynomial n = normalize_content(f);
    auto key = n.to_string();
    auto it = acc.find(key);
    if (it == acc.end())
      acc.emplace(key, FactorPower{n, m});
    else
      it->second.multiplicity += m;
  }
};

void factor_rec(Polynomial f, int mult, Collector& col) {
  if (f.is_constant()) return;
  const RingPtr& R = f.ring();
  int n = R->nvars();
  // monomial content
  Monomial mc = f.terms().front().m;
  for (auto& t : f.terms()) mc = mc.gcd(t.m);
  if (!mc.is_one()) {
    for (int v = 0; v < n; ++v)
      if (mc[v] > 0) col.add(Polynomial::variable(R, v), mult * mc[v]);
    f = *divide_exact(f, Polynomial::monomial(R, mc));
    if (f.is_constant()) return;
  }
  auto sup = f.support();
  if (sup.size() == 1) {
    for (auto& uf : factor_univariate(f).factors) col.add(uf.factor, mult * uf.multiplicity);
    return;
  }
  // pick x: nonzero derivative, prefer constant leading coefficient, then low degree
  int x = -1;
  int best = 1 << 30;
  for (int v : sup) {
    if (derivative(f, v).is_zero()) continue;
    auto cs = coeffs_in(f, v);
    int score = (cs.back().is_constant() ? 0 : 1000) + static_cast<int>(cs.size());
    if (score < best) best = score, x = v;
  }
  if (x < 0) {
    // every partial derivative vanishes: f is a p-th power over F_p
    unsigned long p = f.field().characteristic();
    std::vector<Term> root;
    for (auto& t : f.terms()) {
      Monomial m;
      for (int v = 0; v < n; ++v) m.set(v, t.m[v] / static_cast<int>(p));
      root.push_back({m, t.c});
    }
    factor_rec(Polynomial::from_terms(R, std::move(root)), mult * static_cast<int>(p), col);
    return;
  }
  Polynomial c = content_in(f, x);
  if (!c.is_constant()) {
    factor_rec(c, mult, col);
    f = *divide_exact(f, c);
  }
  Polynomial g = poly_gcd(f, derivative(f, x));
  Polynomial s = *divide_exact(f, g);
  for (auto& q : squarefree_factor(s, x)) {
    int m = 0;
    while (auto quo = divide_exact(f, q)) {
      f = *quo;
      ++m;
    }
    col.add(q, mult * m);
  }
  if (!f.is_constant()) factor_rec(f, mult, col);
}

}  // namespace

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.is_zero() ? b : normalize_content(b);
  if (b.is_zero()) return normalize_content(a);
  const RingPtr& R = a.ring();
  if (a.is_constant() || b.is_constant()) return one(R);
  auto sa = a.support(), sb = b.support();
  if (sa.size() == 1 && sb.size() == 1 && sa[0] == sb[0]) {
    const Field& fl = a.field();
    auto g = dense::gcd(fl, dense::from_polynomial(a, sa[0]), dense::from_polynomial(b, sa[0]));
    return normalize_content(dense::to_polynomial(g, R, sa[0]));
  }
  if (auto q = divide_exact(b, a)) return normalize_content(a);
  if (auto q = divide_exact(a, b)) return normalize_content(b);
  Ideal L = ideal_intersection(Ideal(R, {a}), Ideal(R, {b}));
  const auto& gb = L.groebner();
  if (gb.size() != 1) throw std::logic_error("poly_gcd: intersection of principal ideals is not principal");
  Polynomial l = gb[0].to_ring(R);
  auto g = divide_exact(a * b, l);
  if (!g) throw std::logic_error("poly_gcd: lcm does not divide the product");
  return normalize_content(*g);
}

Factorization factor_polynomial(const Polynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("factor_polynomial: zero polynomial");
  Collector col;
  factor_rec(p, 1, col);
  Factorization out;
  Polynomial prod = one(p.ring());
  for (auto& [key, fp] : col.acc) {
    out.factors.push_back(fp);
    prod *= fp.factor.pow(fp.multiplicity);
  }
  out.unit = p.field().div(p.lc(), prod.lc());
  return out;
}

Polynomial squarefree_part(const Polynomial& p) {
  Polynomial out = one(p.ring());
  for (auto& f : factor_polynomial(p).factors) out *= f.factor;
  return out;
}

bool is_irreducible(const Polynomial& p) {
  if (p.is_constant()) return false;
  auto f = factor_polynomial(p);
  return f.factors.size() == 1 && f.factors[0].multiplicity == 1;
}

}  // namespace chowkit
