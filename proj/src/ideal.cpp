#include "chowkit/ideal.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace chowkit {

namespace {
std::shared_ptr<BasisStore> g_store;
std::mutex g_store_mu;
}  // namespace

void set_basis_store(std::shared_ptr<BasisStore> store) {
  std::lock_guard<std::mutex> lk(g_store_mu);
  g_store = std::move(store);
}

std::string basis_key(const RingPtr& ring, const std::vector<Polynomial>& gens) {
  std::string s = ring->describe() + "|";
  for (auto& g : gens) s += g.to_string() + ";";
  return s;
}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (!g.ring() || !g.ring()->compatible(*ring_)) throw std::invalid_argument("ideal generator in wrong ring");
    if (!g.is_zero()) gens_.push_back(g.to_ring(ring_));
  }
}

Ideal Ideal::unit(const RingPtr& ring) { return Ideal(ring, {Polynomial::constant(ring, 1)}); }

Ideal Ideal::maximal_at_origin(const RingPtr& ring) {
  std::vector<Polynomial> g;
  for (int i = 0; i < ring->nvars(); ++i) g.push_back(Polynomial::variable(ring, i));
  return Ideal(ring, g);
}

const std::vector<Polynomial>& Ideal::groebner(const MonomialOrder& ord) const {
  if (!cache_) throw std::logic_error("empty ideal handle");
  std::string key = ord.key();
  std::lock_guard<std::mutex> lk(cache_->mu);
  auto it = cache_->bases.find(key);
  if (it != cache_->bases.end()) return *it->second;
  RingPtr r = with_order(ring_, ord);
  std::shared_ptr<BasisStore> store;
  {
    std::lock_guard<std::mutex> sl(g_store_mu);
    store = g_store;
  }
  std::vector<Polynomial> basis;
  std::string skey;
  bool loaded = false;
  if (store && !gens_.empty()) {
    skey = basis_key(r, gens_);
    loaded = store->load(skey, r, basis);
  }
  if (!loaded) {
    basis = groebner_basis(gens_, r);
    if (store && !gens_.empty()) store->save(skey, basis);
  }
  auto ptr = std::make_shared<const std::vector<Polynomial>>(std::move(basis));
  cache_->bases[key] = ptr;
  return *ptr;
}

const std::vector<Polynomial>& Ideal::groebner() const { return groebner(MonomialOrder::grevlex()); }

Polynomial Ideal::normal_form(const Polynomial& f) const {
  auto& gb = groebner();
  if (gb.empty()) return f.to_ring(with_order(ring_, MonomialOrder::grevlex()));
  return chowkit::normal_form(f, gb);
}

bool Ideal::contains(const Polynomial& f) const {
  if (f.is_zero()) return true;
  return normal_form(f).is_zero();
}

bool Ideal::contains(const Ideal& J) const {
  for (auto& g : J.generators())
    if (!contains(g)) return false;
  return true;
}

bool Ideal::is_unit() const {
  auto& gb = groebner();
  return gb.size() == 1 && gb[0].is_constant();
}

bool Ideal::is_zero() const { return gens_.empty(); }

bool Ideal::is_monomial() const {
  for (auto& g : groebner())
    if (!g.is_monomial()) return false;
  return true;
}

std::string Ideal::to_string() const {
  std::string s = "(";
  for (size_t i = 0; i < gens_.size(); ++i) s += (i ? ", " : "") + gens_[i].to_string();
  return s + ")";
}

bool ideal_equal(const Ideal& I, const Ideal& J) {
  if (!I.ring()->compatible(*J.ring())) return false;
  auto& a = I.groebner();
  auto& b = J.groebner();
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

Ideal ideal_sum(const Ideal& I, const Ideal& J) { return ideal_sum(I, J.generators()); }

Ideal ideal_sum(const Ideal& I, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> g = I.generators();
  for (auto& p : extra) g.push_back(p.to_ring(I.ring()));
  return Ideal(I.ring(), g);
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  std::vector<Polynomial> g;
  for (auto& a : I.generators())
    for (auto& b : J.generators()) g.push_back(a * b.to_ring(I.ring()));
  return Ideal(I.ring(), g);
}

Ideal ideal_power(const Ideal& I, int k) {
  Ideal r = Ideal::unit(I.ring());
  for (int i = 0; i < k; ++i) {
    r = ideal_product(r, I);
    // keep generator lists small: replace by reduced basis
    r = Ideal(I.ring(), r.groebner());
  }
  return r;
}

Ideal eliminate(const Ideal& I, const std::vector<int>& vars) {
  if (vars.empty()) return I;
  int n = I.ring()->nvars();
  std::vector<int> perm = vars;
  for (int i = 0; i < n; ++i)
    if (std::find(vars.begin(), vars.end(), i) == vars.end()) perm.push_back(i);
  auto& gb = I.groebner(MonomialOrder::block(static_cast<int>(vars.size()), perm));
  std::vector<Polynomial> keep;
  for (auto& g : gb) {
    bool uses = false;
    for (int v : vars) uses = uses || g.uses_var(v);
    if (!uses) keep.push_back(g.to_ring(I.ring()));
  }
  return Ideal(I.ring(), keep);
}

Ideal ideal_intersection(const Ideal& I, const Ideal& J) {
  if (I.is_zero() || J.is_zero()) return Ideal::zero(I.ring());
  auto ext = extend_ring(I.ring(), {fresh_name(I.ring(), "t")}, {}, MonomialOrder::block(1));
  std::vector<Polynomial> gens;
  Polynomial t = Polynomial::variable(ext.ring, 0);
  Polynomial one_minus_t = Polynomial::constant(ext.ring, 1) - t;
  for (auto& g : I.generators()) gens.push_back(t * relabel(g, ext.ring, ext.embedding));
  for (auto& g : J.generators()) gens.push_back(one_minus_t * relabel(g, ext.ring, ext.embedding));
  auto gb = groebner_basis(gens, ext.ring);
  std::vector<int> back(ext.ring->nvars(), -1);
  for (size_t i = 0; i < ext.embedding.size(); ++i) back[ext.embedding[i]] = static_cast<int>(i);
  std::vector<Polynomial> keep;
  for (auto& g : gb)
    if (!g.uses_var(0)) keep.push_back(relabel(g, I.ring(), back));
  return Ideal(I.ring(), keep);
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) return Ideal::unit(I.ring());
  Ideal both = ideal_intersection(I, Ideal(I.ring(), {f}));
  std::vector<Polynomial> q;
  Polynomial fr = f.to_ring(I.ring());
  for (auto& g : both.generators()) {
    auto d = divide_exact(g.to_ring(I.ring()), fr);
    if (!d) throw std::logic_error("ideal_quotient: inexact division");
    q.push_back(*d);
  }
  return Ideal(I.ring(), q);
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  if (J.is_zero()) return Ideal::unit(I.ring());
  Ideal acc;
  bool first = true;
  for (auto& g : J.generators()) {
    Ideal q = ideal_quotient(I, g);
    acc = first ? q : ideal_intersection(acc, q);
    first = false;
  }
  return acc;
}

Ideal saturation(const Ideal& I, const Ideal& J, int max_iter, int* steps) {
  Ideal cur(I.ring(), I.groebner());
  for (int it = 0; it < max_iter; ++it) {
    Ideal next = ideal_quotient(cur, J);
    if (cur.contains(next)) {
      if (steps) *steps = it;
      return cur;
    }
    cur = Ideal(I.ring(), next.groebner());
  }
  throw std::runtime_error("saturation did not stabilize within " + std::to_string(max_iter) + " steps");
}

Ideal saturation(const Ideal& I, const Polynomial& f, int max_iter, int* steps) {
  return saturation(I, Ideal(I.ring(), {f}), max_iter, steps);
}

Ideal saturate_element(const Ideal& I, const Polynomial& f) {
  if (f.is_zero()) return Ideal::unit(I.ring());
  auto ext = extend_ring(I.ring(), {fresh_name(I.ring(), "t")}, {}, MonomialOrder::block(1));
  std::vector<Polynomial> gens;
  for (auto& g : I.generators()) gens.push_back(relabel(g, ext.ring, ext.embedding));
  gens.push_back(Polynomial::constant(ext.ring, 1) - Polynomial::variable(ext.ring, 0) * relabel(f, ext.ring, ext.embedding));
  auto gb = groebner_basis(gens, ext.ring);
  std::vector<int> back(ext.ring->nvars(), -1);
  for (size_t i = 0; i < ext.embedding.size(); ++i) back[ext.embedding[i]] = static_cast<int>(i);
  std::vector<Polynomial> keep;
  for (auto& g : gb)
    if (!g.uses_var(0)) keep.push_back(relabel(g, I.ring(), back));
  return Ideal(I.ring(), keep);
}

Ideal restrict_to(const Ideal& I, const RingPtr& target, const std::vector<int>& index_map) {
  std::vector<int> fwd(I.ring()->nvars(), -1);
  for (size_t i = 0; i < index_map.size(); ++i) fwd[index_map[i]] = static_cast<int>(i);
  std::vector<Polynomial> g;
  for (auto& p : I.generators()) g.push_back(relabel(p, target, fwd));
  return Ideal(target, g);
}

// ---------------------------------------------------------------------------
// Hilbert series

namespace {

using TPoly = std::vector<long>;

void tadd(TPoly& a, const TPoly& b, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] += b[i];
}

TPoly tmul(const TPoly& a, const TPoly& b) {
  TPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

void ttrim(TPoly& a) {
  while (a.size() > 1 && a.back() == 0) a.pop_back();
}

std::vector<Monomial> minimalize(std::vector<Monomial> g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) { return a.degree() < b.degree(); });
  std::vector<Monomial> out;
  for (auto& m : g) {
    bool red = false;
    for (auto& o : out)
      if (o.divides(m)) {
        red = true;
        break;
      }
    if (!red) out.push_back(m);
  }
  return out;
}

TPoly numerator_rec(std::vector<Monomial> g, int n) {
  g = minimalize(std::move(g));
  if (g.empty()) return {1};
  bool coprime = true;
  for (size_t i = 0; i < g.size() && coprime; ++i)
    for (size_t j = i + 1; j < g.size() && coprime; ++j)
      if (!g[i].coprime(g[j])) coprime = false;
  if (coprime) {
    TPoly acc{1};
    for (auto& m : g) {
      TPoly f(m.degree() + 1, 0);
      f[0] = 1;
      f[m.degree()] -= 1;
      acc = tmul(acc, f);
    }
    return acc;
  }
  // pivot on the variable shared by the most generators
  int best = -1, cnt = -1;
  for (int v = 0; v < n; ++v) {
    int c = 0;
    for (auto& m : g)
      if (m[v] && m.degree() > 1) ++c;
    if (c > cnt) cnt = c, best = v;
  }
  Monomial p = Monomial::var(best);
  std::vector<Monomial> plus = g;
  plus.push_back(p);
  std::vector<Monomial> colon;
  for (auto& m : g) colon.push_back(m / m.gcd(p));
  TPoly a = numerator_rec(std::move(plus), n);
  TPoly b = numerator_rec(std::move(colon), n);
  tadd(a, b, 1);
  ttrim(a);
  return a;
}

// a = (1-t) q exactly? then a <- q.
bool divide_one_minus_t(TPoly& a) {
  // a(t) = (1-t) q(t): q_0 = a_0, q_i = a_i + q_{i-1}
  TPoly q(a.size(), 0);
  long run = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    run += a[i];
    q[i] = run;
  }
  if (run != 0) return false;
  q.pop_back();
  if (q.empty()) q.push_back(0);
  ttrim(q);
  a = q;
  return true;
}

long eval_one(const TPoly& a) {
  long s = 0;
  for (long v : a) s += v;
  return s;
}

std::vector<Monomial> leading_monomials(const Ideal& I) {
  std::vector<Monomial> lm;
  for (auto& g : I.groebner()) lm.push_back(g.lm());
  return lm;
}

}  // namespace

std::vector<long> hilbert_numerator(const std::vector<Monomial>& gens, int n) {
  TPoly a = numerator_rec(gens, n);
  ttrim(a);
  return a;
}

HilbertData hilbert_data(const Ideal& I) {
  HilbertData h;
  if (I.is_unit()) throw std::invalid_argument("hilbert_data: unit ideal");
  int n = I.ring()->nvars();
  h.numerator = hilbert_numerator(leading_monomials(I), n);
  TPoly q = h.numerator;
  int k = 0;
  while (k < n && divide_one_minus_t(q)) ++k;
  h.dimension = n - k;
  h.degree = eval_one(q);
  return h;
}

long projective_degree(const Ideal& I) {
  auto& gb = I.groebner();
  auto ext = extend_ring(I.ring(), {}, {fresh_name(I.ring(), "h")});
  int hv = ext.ring->nvars() - 1;
  std::vector<Polynomial> hg;
  for (auto& g : gb) hg.push_back(homogenize(g, ext.ring, ext.embedding, hv));
  return hilbert_data(Ideal(ext.ring, hg)).degree;
}

int dimension(const Ideal& I) {
  if (I.is_unit()) return -1;
  return hilbert_data(I).dimension;
}

long vdim(const Ideal& I) {
  if (I.is_unit()) return 0;
  auto h = hilbert_data(I);
  if (h.dimension != 0) throw std::invalid_argument("vdim: ideal is not zero-dimensional");
  return h.degree;
}

long quotient_dimension(const Ideal& A, const Ideal& B) {
  int n = A.ring()->nvars();
  TPoly na = A.is_unit() ? TPoly{0} : hilbert_numerator(leading_monomials(A), n);
  TPoly nb = B.is_unit() ? TPoly{0} : hilbert_numerator(leading_monomials(B), n);
  TPoly d = nb;
  if (d.size() < na.size()) d.resize(na.size(), 0);
  for (size_t i = 0; i < na.size(); ++i) d[i] -= na[i];
  ttrim(d);
  for (int k = 0; k < n; ++k)
    if (!divide_one_minus_t(d)) throw std::invalid_argument("quotient_dimension: quotient is infinite-dimensional");
  return eval_one(d);
}

std::vector<Monomial> standard_monomials(const Ideal& I) {
  if (I.is_unit()) return {};
  auto lm = leading_monomials(I);
  int n = I.ring()->nvars();
  if (dimension(I) != 0) throw std::invalid_argument("standard_monomials: ideal is not zero-dimensional");
  std::vector<Monomial> out;
  std::vector<Monomial> frontier{Monomial()};
  std::set<std::vector<int>> seen;
  auto key = [&](const Monomial& m) {
    std::vector<int> k(n);
    for (int i = 0; i < n; ++i) k[i] = m[i];
    return k;
  };
  while (!frontier.empty()) {
    Monomial m = frontier.back();
    frontier.pop_back();
    if (!seen.insert(key(m)).second) continue;
    bool in = false;
    for (auto& l : lm)
      if (l.divides(m)) {
        in = true;
        break;
      }
    if (in) continue;
    out.push_back(m);
    for (int v = 0; v < n; ++v) frontier.push_back(m * Monomial::var(v));
  }
  auto grev = MonomialOrder::grevlex();
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return grev.compare(a, b, n) < 0; });
  return out;
}

}  // namespace chowkit
