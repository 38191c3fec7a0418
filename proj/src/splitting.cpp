#include "chowkit/splitting.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "chowkit/factor.hpp"

namespace chowkit {

namespace {

constexpr int kMaxBranches = 4000;

Ideal canonical(const Ideal& I) {
  std::vector<Polynomial> g;
  for (auto& p : I.groebner()) g.push_back(p.to_ring(I.ring()));
  return Ideal(I.ring(), g);
}

std::vector<Monomial> lead_monomials(const Ideal& I) {
  std::vector<Monomial> out;
  for (auto& g : I.groebner()) out.push_back(g.lm());
  return out;
}

// Largest set of variables containing the support of no leading monomial.
std::vector<int> max_independent_set(const Ideal& I, int d) {
  int n = I.ring()->nvars();
  auto lms = lead_monomials(I);
  std::vector<unsigned> masks;
  for (auto& m : lms) {
    unsigned mask = 0;
    for (int v = 0; v < n; ++v)
      if (m[v] > 0) mask |= 1u << v;
    masks.push_back(mask);
  }
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  if (d == 0) return {};
  while (true) {
    unsigned s = 0;
    for (int i : idx) s |= 1u << i;
    bool ok = true;
    for (unsigned m : masks)
      if ((m & ~s) == 0) {
        ok = false;
        break;
      }
    if (ok) return idx;
    int pos = d - 1;
    while (pos >= 0 && idx[pos] == n - d + pos) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < d; ++i) idx[i] = idx[i - 1] + 1;
  }
  throw std::logic_error("max_independent_set: none of the expected size");
}

// Minimal transversals of the supports of a monomial ideal.
std::vector<Ideal> monomial_minimal_primes(const Ideal& J) {
  const RingPtr& R = J.ring();
  int n = R->nvars();
  std::vector<unsigned> supports;
  for (auto& g : J.groebner()) {
    unsigned mask = 0;
    for (int v = 0; v < n; ++v)
      if (g.lm()[v] > 0) mask |= 1u << v;
    supports.push_back(mask);
  }
  std::set<unsigned> covers;
  std::function<void(size_t, unsigned)> rec = [&](size_t i, unsigned chosen) {
    while (i < supports.size() && (supports[i] & chosen)) ++i;
    if (i == supports.size()) {
      covers.insert(chosen);
      return;
    }
    for (int v = 0; v < n; ++v)
      if (supports[i] & (1u << v)) rec(i + 1, chosen | (1u << v));
  };
  rec(0, 0);
  std::vector<unsigned> minimal;
  for (unsigned c : covers) {
    bool redundant = false;
    for (unsigned o : covers)
      if (o != c && (o & c) == o) redundant = true;
    if (!redundant) minimal.push_back(c);
  }
  std::vector<Ideal> out;
  for (unsigned c : minimal) {
    std::vector<Polynomial> g;
    for (int v = 0; v < n; ++v)
      if (c & (1u << v)) g.push_back(Polynomial::variable(R, v));
    out.push_back(Ideal(R, g));
  }
  return out;
}

// A basis element c*x + (terms free of x) with c constant.
bool find_linear(const std::vector<Polynomial>& gb, int& var, Polynomial& expr) {
  for (auto& g : gb) {
    for (int v : g.support()) {
      if (g.degree_in(v) != 1) continue;
      Scalar c = 0;
      bool clean = true;
      for (auto& t : g.terms()) {
        if (t.m[v] == 0) continue;
        if (t.m.degree() != 1) {
          clean = false;
          break;
        }
        c = t.c;
      }
      if (!clean) continue;
      const Field& fl = g.field();
      Polynomial X = Polynomial::variable(g.ring(), v);
      expr = (X.scale(c) - g).scale(fl.inv(c));
      var = v;
      return true;
    }
  }
  return false;
}

enum class Verdict { Prime, Split, Unknown };

struct Certification {
  Verdict verdict = Verdict::Unknown;
  std::vector<Ideal> pieces;
};

Polynomial lc_in_u(const Polynomial& g, const std::vector<int>& xs, const RingPtr& R) {
  auto xpart = [&](const Monomial& m) {
    Monomial o;
    for (int v : xs) o.set(v, m[v]);
    return o;
  };
  Monomial lead = xpart(g.lm());
  std::vector<Term> terms;
  for (auto& t : g.terms())
    if (xpart(t.m) == lead) terms.push_back({t.m / lead, t.c});
  return Polynomial::from_terms(R, std::move(terms));
}

// Try to prove J prime, or split it into pieces with the same radical union.
Certification certify(const Ideal& J, std::mt19937_64& rng) {
  const RingPtr& R = J.ring();
  int n = R->nvars();
  const auto& gb = J.groebner();
  Certification out;
  if (gb.size() == 1) {
    out.verdict = is_irreducible(gb[0].to_ring(R)) ? Verdict::Prime : Verdict::Unknown;
    if (out.verdict == Verdict::Prime) return out;
  }
  int d = dimension(J);
  std::vector<int> us = max_independent_set(J, d), xs;
  for (int v = 0; v < n; ++v)
    if (std::find(us.begin(), us.end(), v) == us.end()) xs.push_back(v);

  std::vector<int> perm = xs;
  perm.insert(perm.end(), us.begin(), us.end());
  const auto& bgb = J.groebner(MonomialOrder::block(static_cast<int>(xs.size()), perm));
  Polynomial h = Polynomial::constant(R, 1);
  std::vector<Monomial> xlead;
  for (auto& g : bgb) {
    Polynomial c = lc_in_u(g.to_ring(R), xs, R);
    if (!c.is_constant()) h = h * c;
    Monomial m;
    for (int v : xs) m.set(v, g.lm()[v]);
    xlead.push_back(m);
  }
  if (!h.is_constant()) {
    h = squarefree_part(h);
    Ideal S = saturation(J, h);
    if (!ideal_equal(S, J)) {
      out.verdict = Verdict::Split;
      out.pieces = {S, ideal_sum(J, {h})};
      return out;
    }
  }
  // rank of J over K(u)
  long r = 0;
  {
    std::vector<Polynomial> mons;
    for (auto& m : xlead) mons.push_back(Polynomial::monomial(R, m));
    for (int v : us) mons.push_back(Polynomial::variable(R, v));
    r = vdim(Ideal(R, mons));
  }

  auto ext = extend_ring(R, {}, {fresh_name(R, "T")});
  const RingPtr& E = ext.ring;
  int T = n;
  std::vector<int> back(E->nvars(), 0);
  for (int i = 0; i < n; ++i) back[ext.embedding[i]] = i;
  std::vector<Polynomial> base;
  for (auto& g : gb) base.push_back(relabel(g, E, ext.embedding));
  std::vector<int> xe;
  for (int v : xs) xe.push_back(ext.embedding[v]);

  bool radicalized = false;
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::uniform_int_distribution<int> co(-9, 9);
    Polynomial t(E);
    for (int v : xs) {
      int c = co(rng);
      if (c == 0) c = 1;
      t = t + Polynomial::variable(E, ext.embedding[v]).scale(c);
    }
    auto gens = base;
    gens.push_back(Polynomial::variable(E, T) - t);
    Ideal el = eliminate(Ideal(E, gens), xe);
    const auto& egb = el.groebner();
    if (egb.size() != 1) return out;
    Polynomial m = egb[0].to_ring(E);
    auto fac = factor_polynomial(m);
    std::vector<Polynomial> tfactors;
    for (auto& f : fac.factors)
      if (f.factor.uses_var(T)) tfactors.push_back(f.factor);
    if (tfactors.size() >= 2) {
      out.verdict = Verdict::Split;
      for (auto& f : tfactors) {
        Polynomial g = relabel(substitute_vars(f, {{T, t}}), R, back);
        out.pieces.push_back(ideal_sum(J, {g}));
      }
      return out;
    }
    if (tfactors.size() == 1 && fac.factors.size() == 1 && fac.factors[0].multiplicity == 1 &&
        m.degree_in(T) == r) {
      out.verdict = Verdict::Prime;
      return out;
    }
    if (!radicalized) {
      // Seidenberg: add squarefree parts of the eliminants in each x variable
      std::vector<Polynomial> extra;
      for (int v : xs) {
        std::vector<int> others;
        for (int w : xs)
          if (w != v) others.push_back(w);
        Ideal ev = eliminate(J, others);
        const auto& vgb = ev.groebner();
        if (vgb.size() != 1) return out;
        Polynomial p = vgb[0].to_ring(R);
        Polynomial q = squarefree_part(p);
        if (q.degree_in(v) < p.degree_in(v)) extra.push_back(q);
      }
      radicalized = true;
      if (!extra.empty()) {
        out.verdict = Verdict::Split;
        out.pieces = {ideal_sum(J, extra)};
        return out;
      }
    }
  }
  return out;
}

struct Splitter {
  std::mt19937_64 rng{0x9e3779b97f4a7c15ULL};
  int branches = 0;
  std::map<std::string, std::vector<Ideal>> memo;

  std::vector<Ideal> run(const Ideal& J0) {
    if (++branches > kMaxBranches) throw DecompositionError("splitting: branch budget exhausted");
    if (J0.is_unit()) return {};
    Ideal J = canonical(J0);
    std::string key = J.to_string();
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const RingPtr& R = J.ring();
    std::vector<Ideal> primes;

    if (J.is_zero()) {
      primes = {J};
    } else if (J.is_monomial()) {
      primes = monomial_minimal_primes(J);
    } else {
      std::vector<Polynomial> gb;
      for (auto& g : J.groebner()) gb.push_back(g.to_ring(R));
      int var;
      Polynomial expr;
      if (find_linear(gb, var, expr)) {
        std::vector<Polynomial> reduced;
        for (auto& g : gb) {
          Polynomial s = substitute_vars(g, {{var, expr}});
          if (!s.is_zero()) reduced.push_back(s);
        }
        Polynomial lin = Polynomial::variable(R, var) - expr;
        for (auto& P : run(Ideal(R, reduced))) primes.push_back(ideal_sum(P, {lin}));
      } else {
        bool split = false;
        std::vector<size_t> order(gb.size());
        for (size_t i = 0; i < gb.size(); ++i) order[i] = i;
        std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return gb[a].size() < gb[b].size(); });
        for (size_t i : order) {
          auto fac = factor_polynomial(gb[i]);
          if (fac.factors.size() == 1 && fac.factors[0].multiplicity == 1) continue;
          split = true;
          for (auto& f : fac.factors)
            for (auto& P : run(ideal_sum(J, {f.factor}))) primes.push_back(P);
          break;
        }
        if (!split) {
          auto cert = certify(J, rng);
          if (cert.verdict == Verdict::Prime) {
            primes = {J};
          } else if (cert.verdict == Verdict::Split) {
            for (auto& piece : cert.pieces)
              for (auto& P : run(piece)) primes.push_back(P);
          } else {
            throw DecompositionError("splitting: could not certify components of " + J.to_string());
          }
        }
      }
    }
    auto result = minimalize(primes);
    memo[key] = result;
    return result;
  }

  static std::vector<Ideal> minimalize(const std::vector<Ideal>& in) {
    std::vector<Ideal> uniq;
    std::set<std::string> seen;
    for (auto& P : in) {
      Ideal c = canonical(P);
      if (seen.insert(c.to_string()).second) uniq.push_back(c);
    }
    std::vector<Ideal> out;
    for (size_t i = 0; i < uniq.size(); ++i) {
      bool redundant = false;
      for (size_t j = 0; j < uniq.size() && !redundant; ++j)
        if (i != j && uniq[i].contains(uniq[j])) redundant = true;
      if (!redundant) out.push_back(uniq[i]);
    }
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
      int da = dimension(a), db = dimension(b);
      if (da != db) return da > db;
      return a.to_string() < b.to_string();
    });
    return out;
  }
};

Ideal intersect_all(const RingPtr& R, const std::vector<Ideal>& v) {
  if (v.empty()) return Ideal::unit(R);
  Ideal acc = v[0];
  for (size_t i = 1; i < v.size(); ++i) acc = ideal_intersection(acc, v[i]);
  return acc;
}

void gtz(const Ideal& J, std::vector<PrimaryComponent>& out, int depth) {
  if (J.is_unit()) return;
  if (depth > 64) throw DecompositionError("primary decomposition: recursion too deep");
  const RingPtr& R = J.ring();
  int n = R->nvars();
  int d = dimension(J);
  std::vector<int> us = max_independent_set(J, d), xs;
  for (int v = 0; v < n; ++v)
    if (std::find(us.begin(), us.end(), v) == us.end()) xs.push_back(v);
  std::vector<int> perm = xs;
  perm.insert(perm.end(), us.begin(), us.end());
  Polynomial h = Polynomial::constant(R, 1);
  for (auto& g : J.groebner(MonomialOrder::block(static_cast<int>(xs.size()), perm))) {
    Polynomial c = lc_in_u(g.to_ring(R), xs, R);
    if (!c.is_constant()) h = h * c;
  }
  int steps = 0;
  Ideal E = h.is_constant() ? J : saturation(J, h, 64, &steps);
  auto mins = minimal_primes(E);
  for (size_t j = 0; j < mins.size(); ++j) {
    std::vector<Ideal> others;
    for (size_t l = 0; l < mins.size(); ++l)
      if (l != j) others.push_back(mins[l]);
    Ideal q = others.empty() ? E : saturation(E, intersect_all(R, others));
    out.push_back({canonical(q), mins[j], dimension(mins[j])});
  }
  if (steps > 0) gtz(ideal_sum(J, {h.pow(steps)}), out, depth + 1);
}

}  // namespace

std::vector<Ideal> minimal_primes(const Ideal& J) {
  Splitter s;
  return s.run(J);
}

bool is_prime(const Ideal& J) {
  if (J.is_unit()) return false;
  auto mins = minimal_primes(J);
  return mins.size() == 1 && ideal_equal(mins[0], J);
}

std::vector<PrimaryComponent> primary_decomposition(const Ideal& J) {
  std::vector<PrimaryComponent> raw;
  gtz(J, raw, 0);
  // merge components with the same prime
  std::vector<PrimaryComponent> merged;
  for (auto& c : raw) {
    bool done = false;
    for (auto& m : merged)
      if (ideal_equal(m.prime, c.prime)) {
        m.primary = canonical(ideal_intersection(m.primary, c.primary));
        done = true;
        break;
      }
    if (!done) merged.push_back(c);
  }
  // drop redundant components, lowest dimension first
  std::sort(merged.begin(), merged.end(), [](const PrimaryComponent& a, const PrimaryComponent& b) {
    if (a.dimension != b.dimension) return a.dimension > b.dimension;
    return a.prime.to_string() < b.prime.to_string();
  });
  for (int i = static_cast<int>(merged.size()) - 1; i >= 0; --i) {
    std::vector<Ideal> rest;
    for (int k = 0; k < static_cast<int>(merged.size()); ++k)
      if (k != i) rest.push_back(merged[k].primary);
    if (rest.empty()) continue;
    if (ideal_equal(intersect_all(J.ring(), rest), J)) merged.erase(merged.begin() + i);
  }
  return merged;
}

long prime_degree(const Ideal& P) { return hilbert_data(P).degree; }

std::vector<long> minimal_lengths(const Ideal& J, const std::vector<Ideal>& primes) {
  auto all = minimal_primes(J);
  std::vector<long> out;
  for (auto& Q : primes) {
    std::vector<Ideal> others;
    for (auto& P : all)
      if (!ideal_equal(P, Q)) others.push_back(P);
    Ideal local = others.empty() ? J : saturation(J, intersect_all(J.ring(), others));
    auto hl = hilbert_data(local);
    long dq = prime_degree(Q);
    if (hl.dimension != dimension(Q) || hl.degree % dq != 0)
      throw DecompositionError("minimal_lengths: inconsistent degree data");
    out.push_back(hl.degree / dq);
  }
  return out;
}

long generic_length(const Ideal& J, const Ideal& Q, unsigned long seed) {
  const RingPtr& R = J.ring();
  int n = R->nvars();
  int d = dimension(Q);
  long dq = prime_degree(Q);
  Ideal A = saturation(J, Q);
  std::mt19937_64 rng(seed * 7919 + 17);
  std::uniform_int_distribution<int> co(-40, 40);
  long agreed = -1;
  int strikes = 0;
  for (int attempt = 0; attempt < 8; ++attempt) {
    std::vector<Polynomial> L;
    for (int k = 0; k < d; ++k) {
      Polynomial l = Polynomial::constant(R, co(rng));
      for (int v = 0; v < n; ++v) l = l + Polynomial::variable(R, v).scale(co(rng));
      L.push_back(l);
    }
    std::vector<Polynomial> gens = J.generators();
    for (auto& l : L)
      for (auto& a : A.generators()) gens.push_back(l * a);
    Ideal B(R, gens);
    if (dimension(ideal_sum(Q, L)) != 0) {
      if (++strikes >= 3) throw DecompositionError("generic_length: degenerate cuts");
      continue;
    }
    long len = quotient_dimension(A, B);
    if (len % dq != 0) continue;
    if (agreed == len / dq) return agreed;
    agreed = len / dq;
  }
  throw DecompositionError("generic_length: cuts did not agree");
}

}  // namespace chowkit
