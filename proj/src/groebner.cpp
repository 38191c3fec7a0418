#include "chowkit/groebner.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowkit {

namespace {

thread_local GroebnerStats g_stats;

using u64 = uint64_t;

// Coefficient domains. reduce_coeffs gives (mf, mg) with mf*a - mg*b = 0 so that
// mf*f - mg*t*g cancels the term of f with coefficient a against lc(g) = b.

struct ZDom {
  using C = mpz_class;
  static bool one(const C& c) { return c == 1; }
  static void reduce_coeffs(const C& a, const C& b, C& mf, C& mg) {
    C g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    mf = b / g;
    mg = a / g;
    if (mf < 0) mf = -mf, mg = -mg;
  }
  static C mul(const C& a, const C& b) { return a * b; }
  static C sub(const C& a, const C& b) { return a - b; }
  static C neg(const C& a) { return -a; }
  static bool zero(const C& a) { return a == 0; }
  // Scale making the vector primitive with positive first coefficient; returns 1/factor applied.
  static C content(const std::vector<C>& c) {
    C g = 0;
    for (auto& x : c) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) break;
    }
    if (!c.empty() && c[0] < 0) g = -g;
    return g;
  }
  static C div(const C& a, const C& b) { return a / b; }
  static constexpr bool tracking_ok = false;
};

struct FpDom {
  using C = u64;
  u64 p;
  static bool one(const C& c) { return c == 1; }
  void reduce_coeffs(const C& a, const C& b, C& mf, C& mg) const {
    mf = 1;
    mg = mul(a, inv(b));
  }
  C mul(C a, C b) const { return a * b % p; }
  C sub(C a, C b) const { return a >= b ? a - b : a + p - b; }
  C neg(C a) const { return a ? p - a : 0; }
  static bool zero(C a) { return a == 0; }
  C inv(C a) const {
    u64 r = 1, e = p - 2;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  static constexpr bool tracking_ok = true;
};

struct QDom {
  using C = mpq_class;
  static bool one(const C& c) { return c == 1; }
  static void reduce_coeffs(const C& a, const C& b, C& mf, C& mg) {
    mf = 1;
    mg = a / b;
  }
  static C mul(const C& a, const C& b) { return a * b; }
  static C sub(const C& a, const C& b) { return a - b; }
  static C neg(const C& a) { return -a; }
  static bool zero(const C& a) { return a == 0; }
  static C inv(const C& a) { return 1 / a; }
  static constexpr bool tracking_ok = true;
};

template <class C>
struct Lin {
  std::vector<Monomial> m;
  std::vector<C> c;
  size_t size() const { return m.size(); }
  bool empty() const { return m.empty(); }
};

uint32_t sev_of(const Monomial& m, int n) {
  uint32_t s = 0;
  for (int i = 0; i < n; ++i)
    if (m[i]) s |= 1u << i;
  return s;
}

template <class D>
class Engine {
 public:
  using C = typename D::C;
  using L = Lin<C>;

  struct Elem {
    L p;
    int sugar = 0;
    uint32_t sev = 0;
    std::vector<L> cof;
  };

  struct Pair {
    int i, j;
    Monomial lcm;
    int sugar;
  };

  Engine(const Ring& r, D dom, bool track, size_t ngens) : r_(r), d_(dom), track_(track), ngens_(ngens) {}

  // mf*a[apos:] - mg*t*b[bpos:]
  L combine(const C& mf, const L& a, size_t apos, const C& mg, const Monomial& t, const L& b, size_t bpos) const {
    L out;
    out.m.reserve(a.size() - apos + b.size() - bpos);
    out.c.reserve(a.size() - apos + b.size() - bpos);
    bool mf1 = D::one(mf);
    size_t i = apos, j = bpos;
    while (i < a.size() || j < b.size()) {
      int cmp;
      Monomial tb;
      if (j < b.size()) tb = b.m[j] * t;
      if (i == a.size()) cmp = -1;
      else if (j == b.size()) cmp = 1;
      else cmp = r_.compare(a.m[i], tb);
      if (cmp > 0) {
        out.m.push_back(a.m[i]);
        out.c.push_back(mf1 ? a.c[i] : d_.mul(mf, a.c[i]));
        ++i;
      } else if (cmp < 0) {
        out.m.push_back(tb);
        out.c.push_back(d_.neg(d_.mul(mg, b.c[j])));
        ++j;
      } else {
        C v = d_.sub(mf1 ? a.c[i] : d_.mul(mf, a.c[i]), d_.mul(mg, b.c[j]));
        if (!D::zero(v)) {
          out.m.push_back(a.m[i]);
          out.c.push_back(std::move(v));
        }
        ++i, ++j;
      }
    }
    return out;
  }

  void scale(L& a, const C& s) const {
    if (D::one(s)) return;
    for (auto& c : a.c) c = d_.mul(c, s);
  }

  // Normalize: primitive (Z) or monic (fields).
  void normalize(Elem& e) const {
    if (e.p.empty()) return;
    if constexpr (std::is_same_v<D, ZDom>) {
      C g = ZDom::content(e.p.c);
      if (g != 1)
        for (auto& c : e.p.c) c /= g;
    } else {
      C s = d_.inv(e.p.c[0]);
      scale(e.p, s);
      for (auto& q : e.cof) scale(q, s);
    }
  }

  const Elem* find_divisor(const Monomial& m, uint32_t msev, const std::vector<int>& G) const {
    const Elem* best = nullptr;
    for (int gi : G) {
      const Elem& g = polys_[gi];
      if (g.sev & ~msev) continue;
      if (!g.p.m[0].divides(m)) continue;
      if (!best || g.p.size() < best->p.size()) best = &g;
    }
    return best;
  }

  // Reduce e by the elements with indices G. full=false stops at the first irreducible leading term.
  void reduce(Elem& e, const std::vector<int>& G, bool full) const {
    L rem = std::move(e.p);
    L res;
    size_t pos = 0;
    int n = r_.nvars();
    while (pos < rem.size()) {
      const Monomial& lt = rem.m[pos];
      const Elem* g = find_divisor(lt, sev_of(lt, n), G);
      if (!g) {
        if (!full) break;
        res.m.push_back(lt);
        res.c.push_back(rem.c[pos]);
        ++pos;
        continue;
      }
      C mf, mg;
      d_.reduce_coeffs(rem.c[pos], g->p.c[0], mf, mg);
      Monomial t = lt / g->p.m[0];
      L next = combine(mf, rem, pos + 1, mg, t, g->p, 1);
      if (!D::one(mf)) scale(res, mf);
      if (track_) {
        for (size_t k = 0; k < ngens_; ++k) {
          if (g->cof[k].empty()) {
            scale(e.cof[k], mf);
          } else {
            e.cof[k] = combine(mf, e.cof[k], 0, mg, t, g->cof[k], 0);
          }
        }
      }
      e.sugar = std::max(e.sugar, t.degree() + g->sugar);
      rem = std::move(next);
      pos = 0;
      if constexpr (std::is_same_v<D, ZDom>) {
        // keep coefficient growth in check on long reductions
        if (rem.size() > 8 && res.size() + rem.size() > 0 && (++tick_ & 15) == 0) {
          std::vector<C> all = res.c;
          all.insert(all.end(), rem.c.begin(), rem.c.end());
          C gc = ZDom::content(all);
          if (gc < 0) gc = -gc;
          if (gc > 1) {
            for (auto& c : res.c) c /= gc;
            for (auto& c : rem.c) c /= gc;
            divided_ *= gc;
          }
        }
      }
    }
    for (size_t k = pos; k < rem.size(); ++k) {
      res.m.push_back(rem.m[k]);
      res.c.push_back(std::move(rem.c[k]));
    }
    e.p = std::move(res);
    if (!e.p.empty()) e.sev = sev_of(e.p.m[0], n);
  }

  bool is_unit(const Elem& e) const { return e.p.size() == 1 && e.p.m[0].is_one(); }

  void update(int h) {
    const Monomial& lh = polys_[h].p.m[0];
    std::vector<Pair> cands;
    for (int g : active_) {
      const Monomial& lg = polys_[g].p.m[0];
      Monomial l = lh.lcm(lg);
      int s = std::max(polys_[h].sugar + l.degree() - lh.degree(), polys_[g].sugar + l.degree() - lg.degree());
      cands.push_back({g, h, l, s});
    }
    std::vector<Pair> kept;
    std::vector<bool> coprime(cands.size());
    for (size_t a = 0; a < cands.size(); ++a) {
      coprime[a] = polys_[cands[a].i].p.m[0].coprime(lh);
    }
    std::vector<bool> alive(cands.size(), true);
    std::vector<size_t> dset;
    for (size_t a = 0; a < cands.size(); ++a) {
      alive[a] = false;  // popped from C
      bool keep = coprime[a];
      if (!keep) {
        keep = true;
        for (size_t b = a + 1; b < cands.size() && keep; ++b)
          if (alive[b] && cands[b].lcm.divides(cands[a].lcm)) keep = false;
        for (size_t b : dset)
          if (keep && cands[b].lcm.divides(cands[a].lcm)) keep = false;
      }
      if (keep) dset.push_back(a);
    }
    std::vector<Pair> old;
    old.swap(pairs_);
    for (auto& p : old) {
      if (lh.divides(p.lcm)) {
        Monomial l1 = polys_[p.i].p.m[0].lcm(lh), l2 = polys_[p.j].p.m[0].lcm(lh);
        if (l1 != p.lcm && l2 != p.lcm) continue;
      }
      pairs_.push_back(p);
    }
    for (size_t a : dset)
      if (!coprime[a]) pairs_.push_back(cands[a]);
    std::vector<int> na;
    for (int g : active_)
      if (!lh.divides(polys_[g].p.m[0])) na.push_back(g);
    na.push_back(h);
    active_ = na;
  }

  Elem spoly(const Pair& pr) const {
    const Elem& a = polys_[pr.i];
    const Elem& b = polys_[pr.j];
    Monomial ta = pr.lcm / a.p.m[0], tb = pr.lcm / b.p.m[0];
    L ash;
    for (size_t k = 0; k < a.p.size(); ++k) {
      ash.m.push_back(a.p.m[k] * ta);
      ash.c.push_back(a.p.c[k]);
    }
    C fa, fb;
    d_.reduce_coeffs(a.p.c[0], b.p.c[0], fa, fb);  // fa*lc(a) - fb*lc(b) = 0
    Elem e;
    e.p = combine(fa, ash, 1, fb, tb, b.p, 1);
    e.sugar = pr.sugar;
    if (track_) {
      e.cof.resize(ngens_);
      for (size_t k = 0; k < ngens_; ++k) {
        L ac;
        for (size_t q = 0; q < a.cof[k].size(); ++q) {
          ac.m.push_back(a.cof[k].m[q] * ta);
          ac.c.push_back(a.cof[k].c[q]);
        }
        e.cof[k] = combine(fa, ac, 0, fb, tb, b.cof[k], 0);
      }
    }
    return e;
  }

  void add_input(Elem e) {
    reduce(e, active_, true);
    normalize(e);
    if (e.p.empty()) return;
    polys_.push_back(std::move(e));
    int h = static_cast<int>(polys_.size()) - 1;
    if (is_unit(polys_[h])) {
      unit_ = h;
      return;
    }
    update(h);
  }

  void run(std::vector<Elem> inputs) {
    std::sort(inputs.begin(), inputs.end(), [&](const Elem& a, const Elem& b) {
      if (a.p.empty() || b.p.empty()) return !a.p.empty() && b.p.empty();
      return r_.compare(a.p.m[0], b.p.m[0]) < 0;
    });
    int n = r_.nvars();
    for (auto& e : inputs) {
      if (e.p.empty()) continue;
      e.sev = sev_of(e.p.m[0], n);
      add_input(std::move(e));
      if (unit_ >= 0) return;
    }
    while (!pairs_.empty()) {
      size_t best = 0;
      for (size_t k = 1; k < pairs_.size(); ++k) {
        const Pair& a = pairs_[k];
        const Pair& b = pairs_[best];
        if (a.sugar < b.sugar || (a.sugar == b.sugar && r_.compare(a.lcm, b.lcm) < 0)) best = k;
      }
      Pair pr = pairs_[best];
      pairs_.erase(pairs_.begin() + static_cast<long>(best));
      ++g_stats.pairs;
      Elem s = spoly(pr);
      reduce(s, active_, true);
      if (s.p.empty()) {
        ++g_stats.zero_reductions;
        continue;
      }
      normalize(s);
      s.sev = sev_of(s.p.m[0], n);
      polys_.push_back(std::move(s));
      int h = static_cast<int>(polys_.size()) - 1;
      if (is_unit(polys_[h])) {
        unit_ = h;
        return;
      }
      update(h);
    }
  }

  // Interreduced basis indices, sorted ascending by leading monomial.
  std::vector<int> finish() {
    if (unit_ >= 0) return {unit_};
    std::vector<int> G = active_;
    std::sort(G.begin(), G.end(), [&](int a, int b) { return r_.compare(polys_[a].p.m[0], polys_[b].p.m[0]) < 0; });
    for (size_t k = 0; k < G.size(); ++k) {
      std::vector<int> others;
      for (size_t q = 0; q < G.size(); ++q)
        if (q != k) others.push_back(G[q]);
      Elem& e = polys_[G[k]];
      // the leading term is irreducible by minimality; reduce the tail
      Elem tail;
      tail.p.m.assign(e.p.m.begin() + 1, e.p.m.end());
      tail.p.c.assign(e.p.c.begin() + 1, e.p.c.end());
      if (track_) tail.cof = std::vector<L>(ngens_);
      C scale_acc(1);
      if constexpr (std::is_same_v<D, ZDom>) {
        reduce_tracking_scale(tail, others, scale_acc);
      } else {
        reduce(tail, others, true);
      }
      L out;
      out.m.push_back(e.p.m[0]);
      out.c.push_back(d_.mul(e.p.c[0], scale_acc));
      for (size_t q = 0; q < tail.p.size(); ++q) {
        out.m.push_back(tail.p.m[q]);
        out.c.push_back(tail.p.c[q]);
      }
      e.p = std::move(out);
      if (track_)
        for (size_t q = 0; q < ngens_; ++q) e.cof[q] = combine(C(1), e.cof[q], 0, d_.neg(C(1)), Monomial(), tail.cof[q], 0);
      normalize(e);
    }
    return G;
  }

  // Full reduction over Z recording the product of multipliers applied to the input.
  void reduce_tracking_scale(Elem& e, const std::vector<int>& G, C& scale_acc) const {
    L rem = std::move(e.p);
    L res;
    size_t pos = 0;
    int n = r_.nvars();
    while (pos < rem.size()) {
      const Monomial& lt = rem.m[pos];
      const Elem* g = find_divisor(lt, sev_of(lt, n), G);
      if (!g) {
        res.m.push_back(lt);
        res.c.push_back(rem.c[pos]);
        ++pos;
        continue;
      }
      C mf, mg;
      d_.reduce_coeffs(rem.c[pos], g->p.c[0], mf, mg);
      Monomial t = lt / g->p.m[0];
      L next = combine(mf, rem, pos + 1, mg, t, g->p, 1);
      if (!D::one(mf)) {
        scale(res, mf);
        scale_acc = d_.mul(scale_acc, mf);
      }
      rem = std::move(next);
      pos = 0;
    }
    e.p = std::move(res);
  }

  const Ring& r_;
  D d_;
  bool track_;
  size_t ngens_;
  std::vector<Elem> polys_;
  std::vector<int> active_;
  std::vector<Pair> pairs_;
  int unit_ = -1;
  mutable unsigned tick_ = 0;
  mutable mpz_class divided_ = 1;
};

// ---- conversions

Lin<mpz_class> to_z(const Polynomial& p, mpq_class& applied) {
  Lin<mpz_class> out;
  mpz_class l = 1;
  for (auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
  for (auto& t : p.terms()) {
    out.m.push_back(t.m);
    out.c.push_back(t.c.get_num() * (l / t.c.get_den()));
  }
  applied = l;
  return out;
}

Lin<u64> to_fp(const Polynomial& p) {
  Lin<u64> out;
  for (auto& t : p.terms()) {
    out.m.push_back(t.m);
    out.c.push_back(t.c.get_num().get_ui());
  }
  return out;
}

Lin<mpq_class> to_q(const Polynomial& p) {
  Lin<mpq_class> out;
  for (auto& t : p.terms()) {
    out.m.push_back(t.m);
    out.c.push_back(t.c);
  }
  return out;
}

template <class C>
Polynomial from_lin(const Lin<C>& a, const RingPtr& r) {
  std::vector<Term> terms;
  terms.reserve(a.size());
  for (size_t k = 0; k < a.size(); ++k) {
    if constexpr (std::is_same_v<C, u64>) {
      terms.push_back({a.m[k], Scalar(mpz_class(static_cast<unsigned long>(a.c[k])))});
    } else {
      terms.push_back({a.m[k], Scalar(a.c[k])});
    }
  }
  return Polynomial::from_sorted(r, std::move(terms));
}

std::vector<Polynomial> prepare(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  std::vector<Polynomial> out;
  for (auto& g : gens) {
    if (!g.ring() || !g.ring()->compatible(*ring)) throw std::invalid_argument("groebner_basis: ring mismatch");
    if (!g.is_zero()) out.push_back(g.to_ring(ring));
  }
  return out;
}

template <class D, class Conv>
std::vector<Polynomial> run_plain(const std::vector<Polynomial>& gens, const RingPtr& ring, D dom, Conv conv) {
  using E = Engine<D>;
  E eng(*ring, dom, false, 0);
  std::vector<typename E::Elem> in;
  for (auto& g : gens) {
    typename E::Elem e;
    e.p = conv(g);
    e.sugar = g.total_degree();
    in.push_back(std::move(e));
  }
  eng.run(std::move(in));
  std::vector<Polynomial> out;
  for (int i : eng.finish()) out.push_back(from_lin(eng.polys_[i].p, ring).monic());
  return out;
}

template <class D, class Conv>
TrackedBasis run_tracked(const std::vector<Polynomial>& gens, const RingPtr& ring, D dom, Conv conv) {
  using E = Engine<D>;
  size_t ng = gens.size();
  E eng(*ring, dom, true, ng);
  std::vector<typename E::Elem> in;
  for (size_t k = 0; k < ng; ++k) {
    typename E::Elem e;
    e.p = conv(gens[k]);
    e.sugar = gens[k].total_degree();
    e.cof.resize(ng);
    e.cof[k].m.push_back(Monomial());
    e.cof[k].c.push_back(typename D::C(1));
    in.push_back(std::move(e));
  }
  eng.run(std::move(in));
  TrackedBasis tb;
  tb.gens = gens;
  for (int i : eng.finish()) {
    auto& e = eng.polys_[i];
    tb.basis.push_back(from_lin(e.p, ring));
    std::vector<Polynomial> cof;
    for (size_t k = 0; k < ng; ++k) cof.push_back(from_lin(e.cof[k], ring));
    tb.cofactors.push_back(std::move(cof));
  }
  return tb;
}

}  // namespace

std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  auto g = prepare(gens, ring);
  if (g.empty()) return {};
  const Field& f = ring->field();
  if (f.is_rational()) {
    mpq_class dummy;
    return run_plain(g, ring, ZDom{}, [&](const Polynomial& p) { return to_z(p, dummy); });
  }
  return run_plain(g, ring, FpDom{f.characteristic()}, to_fp);
}

TrackedBasis groebner_basis_tracked(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  std::vector<Polynomial> g;
  for (auto& p : gens) {
    if (!p.ring() || !p.ring()->compatible(*ring)) throw std::invalid_argument("groebner_basis: ring mismatch");
    g.push_back(p.to_ring(ring));
  }
  const Field& f = ring->field();
  if (f.is_rational()) return run_tracked(g, ring, QDom{}, to_q);
  return run_tracked(g, ring, FpDom{f.characteristic()}, to_fp);
}

namespace {

template <class D, class Conv>
Polynomial nf_impl(const Polynomial& f, const std::vector<Polynomial>& gb, const RingPtr& ring, D dom, Conv conv,
                   mpq_class& applied) {
  using E = Engine<D>;
  E eng(*ring, dom, false, 0);
  int n = ring->nvars();
  std::vector<int> G;
  for (auto& g : gb) {
    if (g.is_zero()) continue;
    typename E::Elem e;
    mpq_class dummy;
    e.p = conv(g.to_ring(ring), dummy);
    e.sev = sev_of(e.p.m[0], n);
    eng.polys_.push_back(std::move(e));
    G.push_back(static_cast<int>(eng.polys_.size()) - 1);
  }
  typename E::Elem e;
  e.p = conv(f.to_ring(ring), applied);
  if constexpr (std::is_same_v<D, ZDom>) {
    mpz_class sc = 1;
    eng.reduce_tracking_scale(e, G, sc);
    applied *= sc;
  } else {
    eng.reduce(e, G, true);
  }
  return from_lin(e.p, ring);
}

}  // namespace

Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb) {
  if (gb.empty()) return f;
  RingPtr ring = gb[0].ring();
  if (!f.ring()->compatible(*ring)) throw std::invalid_argument("normal_form: ring mismatch");
  if (f.is_zero()) return f.to_ring(ring);
  const Field& fl = ring->field();
  mpq_class applied = 1;
  if (fl.is_rational()) {
    Polynomial r = nf_impl(f, gb, ring, ZDom{}, to_z, applied);
    return r.scale(1 / applied);
  }
  return nf_impl(f, gb, ring, FpDom{fl.characteristic()},
                 [](const Polynomial& p, mpq_class&) { return to_fp(p); }, applied);
}

bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& gb) { return normal_form(f, gb).is_zero(); }

std::optional<std::vector<Polynomial>> lift(const Polynomial& f, const TrackedBasis& tb) {
  size_t ng = tb.gens.size();
  if (tb.basis.empty()) {
    if (!f.is_zero()) return std::nullopt;
    return std::vector<Polynomial>(ng, Polynomial(f.ring()));
  }
  RingPtr ring = tb.basis[0].ring();
  const Field& fl = ring->field();
  Polynomial rem = f.to_ring(ring);
  std::vector<Polynomial> q(ng, Polynomial(ring));
  // division algorithm over the field with quotient bookkeeping
  std::vector<Polynomial> quot(tb.basis.size(), Polynomial(ring));
  std::vector<Term> residue;
  while (!rem.is_zero()) {
    bool hit = false;
    for (size_t i = 0; i < tb.basis.size(); ++i) {
      const auto& g = tb.basis[i];
      if (g.lm().divides(rem.lm())) {
        Monomial t = rem.lm() / g.lm();
        Scalar c = fl.div(rem.lc(), g.lc());
        quot[i] = quot[i] + Polynomial::monomial(ring, t, c);
        rem = rem - g.mul_term(t, c);
        hit = true;
        break;
      }
    }
    if (!hit) return std::nullopt;
  }
  for (size_t i = 0; i < tb.basis.size(); ++i) {
    if (quot[i].is_zero()) continue;
    for (size_t k = 0; k < ng; ++k) q[k] = q[k] + quot[i] * tb.cofactors[i][k];
  }
  return q;
}

GroebnerStats last_groebner_stats() { return g_stats; }

}  // namespace chowkit
