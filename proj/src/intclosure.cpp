#include "chowkit/intclosure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>

namespace chowkit {

namespace {

using Matrix = std::vector<std::vector<Scalar>>;

struct LpResult {
  bool feasible = false;
  std::vector<Scalar> x;
  Scalar value = 0;
};

// min c.x subject to A x = b, x >= 0, by the two-phase tableau method with
// Bland's rule. The objective must be bounded below on the feasible set.
LpResult simplex(Matrix A, std::vector<Scalar> b, const std::vector<Scalar>& c) {
  size_t m = A.size(), n = c.size();
  for (size_t i = 0; i < m; ++i)
    if (b[i] < 0) {
      for (auto& a : A[i]) a = -a;
      b[i] = -b[i];
    }
  size_t N = n + m;
  Matrix T(m, std::vector<Scalar>(N + 1, Scalar(0)));
  std::vector<size_t> basis(m);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = 0; j < n; ++j) T[i][j] = A[i][j];
    T[i][n + i] = 1;
    T[i][N] = b[i];
    basis[i] = n + i;
  }
  auto pivot = [&](size_t r, size_t col) {
    Scalar p = T[r][col];
    for (auto& v : T[r]) v /= p;
    for (size_t i = 0; i < T.size(); ++i) {
      if (i == r || sgn(T[i][col]) == 0) continue;
      Scalar k = T[i][col];
      for (size_t j = 0; j <= N; ++j) T[i][j] -= k * T[r][j];
    }
    basis[r] = col;
  };
  auto run = [&](const std::vector<Scalar>& cost, size_t ncols) {
    while (true) {
      size_t enter = ncols;
      for (size_t j = 0; j < ncols && enter == ncols; ++j) {
        Scalar r = cost[j];
        for (size_t i = 0; i < T.size(); ++i) r -= cost[basis[i]] * T[i][j];
        if (r < 0) enter = j;
      }
      if (enter == ncols) return;
      size_t leave = T.size();
      Scalar best;
      for (size_t i = 0; i < T.size(); ++i) {
        if (T[i][enter] <= 0) continue;
        Scalar ratio = T[i][N] / T[i][enter];
        if (leave == T.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == T.size()) throw std::logic_error("simplex: unbounded objective");
      pivot(leave, enter);
    }
  };
  std::vector<Scalar> phase1(N, Scalar(0));
  for (size_t i = n; i < N; ++i) phase1[i] = 1;
  run(phase1, N);
  LpResult res;
  Scalar infeas = 0;
  for (size_t i = 0; i < T.size(); ++i)
    if (basis[i] >= n) infeas += T[i][N];
  if (infeas > 0) return res;
  for (size_t i = 0; i < T.size();) {
    if (basis[i] < n) {
      ++i;
      continue;
    }
    size_t j = 0;
    while (j < n && sgn(T[i][j]) == 0) ++j;
    if (j < n) {
      pivot(i, j);
      ++i;
    } else {
      T.erase(T.begin() + static_cast<long>(i));
      basis.erase(basis.begin() + static_cast<long>(i));
    }
  }
  std::vector<Scalar> phase2(N, Scalar(0));
  for (size_t j = 0; j < n; ++j) phase2[j] = c[j];
  run(phase2, n);
  res.feasible = true;
  res.x.assign(n, Scalar(0));
  for (size_t i = 0; i < T.size(); ++i)
    if (basis[i] < n) res.x[basis[i]] = T[i][N];
  for (size_t j = 0; j < n; ++j) res.value += c[j] * res.x[j];
  return res;
}

using Exps = std::vector<std::vector<long>>;

std::vector<long> exps_of(const Monomial& m, int n) {
  std::vector<long> e(n);
  for (int i = 0; i < n; ++i) e[i] = m[i];
  return e;
}

// Convex weights lambda with sum lambda_i a_i <= e, or nullopt when e lies
// outside the Newton polyhedron.
std::optional<std::vector<Scalar>> newton_weights(const std::vector<long>& e, const Exps& a) {
  size_t r = a.size(), n = e.size();
  for (size_t i = 0; i < r; ++i) {
    bool below = true;
    for (size_t v = 0; v < n; ++v) below = below && a[i][v] <= e[v];
    if (below) {
      std::vector<Scalar> lam(r, Scalar(0));
      lam[i] = 1;
      return lam;
    }
  }
  Matrix A(n + 1, std::vector<Scalar>(r + n, Scalar(0)));
  std::vector<Scalar> b(n + 1);
  for (size_t v = 0; v < n; ++v) {
    for (size_t i = 0; i < r; ++i) A[v][i] = a[i][v];
    A[v][r + v] = 1;
    b[v] = e[v];
  }
  for (size_t i = 0; i < r; ++i) A[n][i] = 1;
  b[n] = 1;
  auto res = simplex(A, b, std::vector<Scalar>(r + n, Scalar(0)));
  if (!res.feasible) return std::nullopt;
  res.x.resize(r);
  return res.x;
}

// Integer weights w >= 0 with w.e < min_i w.a_i.
std::optional<std::vector<long>> separating_weights(const std::vector<long>& e, const Exps& a) {
  size_t r = a.size(), n = e.size();
  Matrix A(r, std::vector<Scalar>(n + r, Scalar(0)));
  std::vector<Scalar> b(r, Scalar(1)), c(n + r, Scalar(0));
  for (size_t i = 0; i < r; ++i) {
    for (size_t v = 0; v < n; ++v) A[i][v] = a[i][v];
    A[i][n + i] = -1;
  }
  for (size_t v = 0; v < n; ++v) c[v] = e[v];
  auto res = simplex(A, b, c);
  if (!res.feasible || res.value >= 1) return std::nullopt;
  mpz_class l = 1;
  for (size_t v = 0; v < n; ++v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), res.x[v].get_den_mpz_t());
  std::vector<long> w(n);
  for (size_t v = 0; v < n; ++v) {
    mpz_class q = res.x[v].get_num() * (l / res.x[v].get_den());
    w[v] = q.get_si();
  }
  return w;
}

Exps monomial_exponents(const std::vector<Polynomial>& gens, int n) {
  Exps a;
  for (auto& g : gens) a.push_back(exps_of(g.lm(), n));
  return a;
}

Polynomial product_of(const std::vector<Polynomial>& gens, const std::vector<int>& factors, const RingPtr& R) {
  Polynomial p = Polynomial::constant(R, 1);
  for (int i : factors) p *= gens[i];
  return p;
}

// Certificate for a single term c*x^e over a monomial ideal with monic monomial generators.
DependenceCertificate monomial_certificate(const Term& t, const std::vector<Polynomial>& gens,
                                           const std::vector<Scalar>& lam, const RingPtr& R) {
  int n = R->nvars();
  mpz_class l = 1;
  for (auto& x : lam) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  int k = static_cast<int>(l.get_si());
  DependenceCertificate cert;
  cert.element = Polynomial::monomial(R, t.m, t.c);
  cert.generators = gens;
  cert.degree = k;
  cert.coefficients.assign(k, {});
  std::vector<int> factors;
  std::vector<long> used(n, 0);
  for (size_t i = 0; i < lam.size(); ++i) {
    long copies = Scalar(lam[i] * k).get_num().get_si();
    for (long c = 0; c < copies; ++c) {
      factors.push_back(static_cast<int>(i));
      for (int v = 0; v < n; ++v) used[v] += gens[i].lm()[v];
    }
  }
  Monomial rest;
  for (int v = 0; v < n; ++v) rest.set(v, static_cast<int>(static_cast<long>(t.m[v]) * k - used[v]));
  const Field& F = R->field();
  cert.coefficients[k - 1].push_back({factors, Polynomial::monomial(R, rest, F.neg(F.pow(t.c, k)))});
  return cert;
}

std::vector<Polynomial> canonical_generators(const Ideal& I) {
  std::vector<Polynomial> g;
  for (auto& p : I.groebner()) g.push_back(p.to_ring(I.ring()));
  return g;
}

std::vector<Scalar> ones(const RingPtr& R) { return std::vector<Scalar>(R->nvars(), Scalar(1)); }

bool order_less(const std::optional<long>& a, const std::optional<long>& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

std::optional<long> ideal_order(const std::vector<Polynomial>& gens, const std::vector<long>& w,
                                const std::vector<Scalar>& c, const std::optional<long>& stop_at = std::nullopt) {
  std::optional<long> best;
  for (auto& g : gens) {
    auto o = valuation_order(g, w, c);
    if (order_less(o, best)) best = o;
    if (stop_at && best && *best <= *stop_at) break;
  }
  return best;
}

ClosureVerdict monomial_tier(const Polynomial& f, const std::vector<Polynomial>& gens, const RingPtr& R) {
  int n = R->nvars();
  Exps a = monomial_exponents(gens, n);
  ClosureVerdict out;
  for (auto& t : f.terms()) {
    auto e = exps_of(t.m, n);
    auto lam = newton_weights(e, a);
    if (lam) {
      out.certificates.push_back(monomial_certificate(t, gens, *lam, R));
      continue;
    }
    auto w = separating_weights(e, a);
    if (!w) throw std::logic_error("monomial closure: no separating weight for an outside point");
    // scalars 1 first; other scalars avoid cancellation between terms of equal weight
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> co(1, 97);
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::vector<Scalar> c = ones(R);
      if (attempt > 0)
        for (auto& x : c) {
          do x = R->field().from_int(co(rng));
          while (sgn(x) == 0);
        }
      ValuationWitness vw{*w, c, valuation_order(f, *w, c), ideal_order(gens, *w, c)};
      if (order_less(vw.order_element, vw.order_ideal)) {
        out.verdict = Verdict::Out;
        out.certificates.clear();
        out.witness = vw;
        out.note = "monomial ideal: exact";
        return out;
      }
    }
    out.verdict = Verdict::Unknown;
    out.certificates.clear();
    out.note = "monomial ideal: outside term, witness cancelled";
    return out;
  }
  out.verdict = Verdict::In;
  out.note = "monomial ideal: exact";
  return out;
}

void multisets(int m, int j, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == j) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < m; ++i) {
    cur.push_back(i);
    multisets(m, j, i, cur, out);
    cur.pop_back();
  }
}

constexpr size_t kMaxDependenceGenerators = 600;
constexpr long kMaxWeightVectors = 20000;

// f^k in sum_j f^{k-j} I^j, with the certificate read off a tracked lift.
std::optional<DependenceCertificate> dependence_search(const Polynomial& f, const std::vector<Polynomial>& gens,
                                                       int k, const RingPtr& R, bool& skipped) {
  int m = static_cast<int>(gens.size());
  std::vector<std::pair<int, std::vector<int>>> labels;
  std::vector<Polynomial> J;
  for (int j = 1; j <= k; ++j) {
    std::vector<std::vector<int>> ms;
    std::vector<int> cur;
    multisets(m, j, 0, cur, ms);
    Polynomial fp = f.pow(static_cast<unsigned>(k - j));
    for (auto& P : ms) {
      labels.push_back({j, P});
      J.push_back(fp * product_of(gens, P, R));
      if (J.size() > kMaxDependenceGenerators) {
        skipped = true;
        return std::nullopt;
      }
    }
  }
  Polynomial fk = f.pow(static_cast<unsigned>(k));
  if (!Ideal(R, J).contains(fk)) return std::nullopt;
  auto tb = groebner_basis_tracked(J, R);
  auto q = lift(fk, tb);
  if (!q) throw std::logic_error("dependence search: lift failed for a member");
  DependenceCertificate cert;
  cert.element = f;
  cert.generators = gens;
  cert.degree = k;
  cert.coefficients.assign(k, {});
  for (size_t i = 0; i < J.size(); ++i) {
    if ((*q)[i].is_zero()) continue;
    cert.coefficients[labels[i].first - 1].push_back({labels[i].second, -(*q)[i].to_ring(R)});
  }
  return cert;
}

// Weight vectors with entries in [0, bound], ordered by total weight then lexicographically.
template <class Visit>
bool for_each_weight(int n, int bound, Visit visit) {
  long count = 0;
  std::vector<long> w(n, 0);
  for (int total = 1; total <= n * bound; ++total) {
    // enumerate compositions of total with parts <= bound
    std::function<bool(int, int)> rec = [&](int i, int left) -> bool {
      if (i == n - 1) {
        if (left > bound) return false;
        w[i] = left;
        if (++count > kMaxWeightVectors) return true;
        return visit(w);
      }
      for (int v = std::min(left, bound); v >= 0; --v) {
        w[i] = v;
        if (rec(i + 1, left - v)) return true;
      }
      return false;
    };
    if (rec(0, total)) return true;
  }
  return false;
}

std::optional<ValuationWitness> witness_search(const Polynomial& f, const std::vector<Polynomial>& gens,
                                               const RingPtr& R, const ClosureBounds& bounds) {
  int n = R->nvars();
  std::mt19937_64 rng(bounds.seed);
  std::uniform_int_distribution<long> co(-9, 9);
  std::vector<std::vector<Scalar>> pool{ones(R)};
  for (int s = 0; s < 2; ++s) {
    std::vector<Scalar> c;
    for (int i = 0; i < n; ++i) {
      Scalar x;
      do x = R->field().from_int(co(rng));
      while (sgn(x) == 0);
      c.push_back(x);
    }
    pool.push_back(c);
  }
  std::optional<ValuationWitness> found;
  for_each_weight(n, bounds.witness_weight_bound, [&](const std::vector<long>& w) {
    for (auto& c : pool) {
      auto of = valuation_order(f, w, c);
      if (!of) continue;
      auto oi = ideal_order(gens, w, c, of);
      if (order_less(of, oi)) {
        found = ValuationWitness{w, c, of, oi};
        return true;
      }
    }
    return false;
  });
  return found;
}

}  // namespace

Polynomial DependenceCertificate::coefficient(int j) const {
  const RingPtr& R = element.ring();
  Polynomial s(R);
  for (auto& t : coefficients.at(j - 1)) s += t.cofactor * product_of(generators, t.factors, R);
  return s;
}

std::optional<long> valuation_order(const Polynomial& f, const std::vector<long>& weights,
                                    const std::vector<Scalar>& scalars) {
  const Field& F = f.field();
  int n = f.ring()->nvars();
  std::map<long, Scalar> acc;
  for (auto& t : f.terms()) {
    long deg = 0;
    Scalar c = t.c;
    for (int i = 0; i < n; ++i) {
      if (!t.m[i]) continue;
      deg += weights[i] * t.m[i];
      c = F.mul(c, F.pow(scalars[i], t.m[i]));
    }
    auto it = acc.find(deg);
    if (it == acc.end())
      acc.emplace(deg, c);
    else
      it->second = F.add(it->second, c);
  }
  for (auto& [d, c] : acc)
    if (sgn(c) != 0) return d;
  return std::nullopt;
}

Ideal monomial_closure(const Ideal& I) {
  const RingPtr& R = I.ring();
  if (!I.is_monomial()) throw std::invalid_argument("monomial_closure: ideal is not monomial");
  if (I.is_zero() || I.is_unit()) return I;
  int n = R->nvars();
  auto gens = canonical_generators(I);
  Exps a = monomial_exponents(gens, n);
  std::vector<long> hi(n, 0);
  for (auto& e : a)
    for (int v = 0; v < n; ++v) hi[v] = std::max(hi[v], e[v]);
  std::vector<Monomial> pts;
  std::vector<long> e(n, 0);
  while (true) {
    if (newton_weights(e, a)) {
      Monomial m;
      for (int v = 0; v < n; ++v) m.set(v, static_cast<int>(e[v]));
      pts.push_back(m);
    }
    int v = 0;
    while (v < n && e[v] == hi[v]) e[v++] = 0;
    if (v == n) break;
    ++e[v];
  }
  std::vector<Polynomial> out;
  for (auto& p : pts) {
    bool minimal = true;
    for (auto& q : pts)
      if (q != p && q.divides(p)) minimal = false;
    if (minimal) out.push_back(Polynomial::monomial(R, p));
  }
  return Ideal(R, out);
}

ClosureVerdict closure_membership(const Polynomial& f_in, const Ideal& I, const ClosureBounds& bounds) {
  const RingPtr& R = I.ring();
  Polynomial f = f_in.to_ring(R);
  if (I.is_zero() || I.is_unit()) throw std::invalid_argument("closure_membership: ideal must be nonzero and proper");
  if (f.is_zero()) {
    ClosureVerdict v;
    v.verdict = Verdict::In;
    v.certificates.push_back({f, canonical_generators(I), 1, {{}}});
    return v;
  }
  auto gens = canonical_generators(I);
  if (I.is_monomial()) return monomial_tier(f, gens, R);
  bool skipped = false;
  ClosureVerdict v;
  if (auto c = dependence_search(f, gens, 1, R, skipped)) {
    v.verdict = Verdict::In;
    v.certificates.push_back(*c);
    return v;
  }
  if (auto w = witness_search(f, gens, R, bounds)) {
    v.verdict = Verdict::Out;
    v.witness = *w;
    return v;
  }
  for (int k = 2; k <= bounds.max_k; ++k) {
    if (auto c = dependence_search(f, gens, k, R, skipped)) {
      v.verdict = Verdict::In;
      v.certificates.push_back(*c);
      return v;
    }
  }
  v.note = "no dependence equation with k <= " + std::to_string(bounds.max_k) +
           (skipped ? " (some k skipped: too many generator products)" : "") +
           " and no monomial valuation with weights <= " + std::to_string(bounds.witness_weight_bound);
  return v;
}

bool verify_certificate(const DependenceCertificate& cert, const Ideal& I) {
  if (cert.degree < 1 || static_cast<int>(cert.coefficients.size()) != cert.degree) return false;
  for (auto& g : cert.generators)
    if (!I.contains(g)) return false;
  int m = static_cast<int>(cert.generators.size());
  Polynomial total = cert.element.pow(static_cast<unsigned>(cert.degree));
  for (int j = 1; j <= cert.degree; ++j) {
    for (auto& t : cert.coefficients[j - 1]) {
      if (static_cast<int>(t.factors.size()) != j) return false;
      for (int i : t.factors)
        if (i < 0 || i >= m) return false;
    }
    total += cert.coefficient(j) * cert.element.pow(static_cast<unsigned>(cert.degree - j));
  }
  return total.is_zero();
}

bool verify_witness(const ValuationWitness& w, const Polynomial& f, const Ideal& I) {
  int n = f.ring()->nvars();
  if (static_cast<int>(w.weights.size()) != n || static_cast<int>(w.scalars.size()) != n) return false;
  for (int i = 0; i < n; ++i)
    if (w.weights[i] < 0 || sgn(w.scalars[i]) == 0) return false;
  auto of = valuation_order(f, w.weights, w.scalars);
  auto oi = ideal_order(I.generators(), w.weights, w.scalars);
  return of == w.order_element && oi == w.order_ideal && order_less(of, oi);
}

bool verify_verdict(const ClosureVerdict& v, const Polynomial& f, const Ideal& I) {
  switch (v.verdict) {
    case Verdict::In: {
      if (v.certificates.empty()) return false;
      Polynomial sum(f.ring());
      for (auto& c : v.certificates) {
        if (!verify_certificate(c, I)) return false;
        sum += c.element;
      }
      return sum == f;
    }
    case Verdict::Out:
      return v.witness && verify_witness(*v.witness, f, I);
    case Verdict::Unknown:
      return true;
  }
  return false;
}

BrianconSkodaReport brianconskoda_check(const Ideal& I, int n, const std::vector<Polynomial>& candidates,
                                        const ClosureBounds& bounds) {
  BrianconSkodaReport rep;
  bool vacuous = I.is_unit();
  Ideal In = vacuous ? I : ideal_power(I, n);
  for (auto& f : candidates) {
    BrianconSkodaEntry e{f, Verdict::In, I.contains(f)};
    if (!vacuous && !In.is_zero()) e.closure_verdict = closure_membership(f, In, bounds).verdict;
    if (In.is_zero()) e.closure_verdict = f.is_zero() ? Verdict::In : Verdict::Out;
    if (e.closure_verdict == Verdict::In && !e.member) rep.violations.push_back(static_cast<int>(rep.entries.size()));
    rep.entries.push_back(e);
  }
  return rep;
}

namespace {

Verdict side_verdict(const Polynomial& c, const Ideal& J, const ClosureBounds& bounds) {
  if (J.is_unit()) return Verdict::In;
  if (J.is_zero()) return c.is_zero() ? Verdict::In : Verdict::Out;
  return closure_membership(c, J, bounds).verdict;
}

}  // namespace

RestrictionReport restriction_commutes_check(const Ideal& I, int var, const ClosureBounds& bounds) {
  const RingPtr& R = I.ring();
  if (var < 0 || var >= R->nvars()) throw std::invalid_argument("restriction check: not a ring variable");
  std::vector<std::string> names;
  std::vector<int> index_map;
  for (int i = 0; i < R->nvars(); ++i)
    if (i != var) {
      names.push_back(R->var(i));
      index_map.push_back(i);
    }
  RingPtr S = make_ring(names, R->field());
  std::vector<int> back(R->nvars(), 0);
  for (size_t i = 0; i < index_map.size(); ++i) back[index_map[i]] = static_cast<int>(i);
  auto down = [&](const Polynomial& p) {
    return relabel(substitute_vars(p, {{var, Polynomial(R)}}), S, back);
  };
  Ideal big = ideal_sum(I, {Polynomial::variable(R, var)});
  std::vector<Polynomial> small_gens;
  for (auto& g : I.generators()) small_gens.push_back(down(g));
  Ideal small(S, small_gens);
  RestrictionReport rep;
  if (big.is_monomial()) {
    Ideal cb = monomial_closure(big);
    std::vector<Polynomial> image;
    for (auto& g : canonical_generators(cb))
      if (!g.uses_var(var)) image.push_back(down(g));
    Ideal cs = small.is_zero() ? small : monomial_closure(small);
    rep.status = ideal_equal(Ideal(S, image), cs) ? RestrictionStatus::Equal : RestrictionStatus::Different;
    return rep;
  }
  int D = 1;
  for (auto& g : small.generators()) D = std::max(D, g.total_degree());
  std::vector<Monomial> mons;
  std::vector<int> e(S->nvars(), 0);
  for (int d = 1; d <= D && mons.size() < 40; ++d) {
    std::function<void(int, int)> rec = [&](int i, int left) {
      if (mons.size() >= 40) return;
      if (i == S->nvars() - 1) {
        e[i] = left;
        Monomial m;
        for (int v = 0; v < S->nvars(); ++v) m.set(v, e[v]);
        mons.push_back(m);
        return;
      }
      for (int v = left; v >= 0; --v) {
        e[i] = v;
        rec(i + 1, left - v);
      }
    };
    if (S->nvars() > 0) rec(0, d);
  }
  for (auto& m : mons) {
    Polynomial c = Polynomial::monomial(S, m);
    Verdict b = side_verdict(relabel(c, R, index_map), big, bounds);
    Verdict s = side_verdict(c, small, bounds);
    rep.candidates.push_back(c);
    rep.big_side.push_back(b);
    rep.small_side.push_back(s);
    if (b == Verdict::Unknown || s == Verdict::Unknown) {
      if (rep.status == RestrictionStatus::Equal) rep.status = RestrictionStatus::Consistent;
    } else if (b != s) {
      rep.status = RestrictionStatus::Different;
    }
  }
  return rep;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::In:
      return "IN";
    case Verdict::Out:
      return "OUT";
    case Verdict::Unknown:
      return "UNKNOWN";
  }
  return "?";
}

}  // namespace chowkit
