#include "chowkit/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace chowkit {

Polynomial Polynomial::constant(const RingPtr& r, const Scalar& c) {
  Polynomial p(r);
  Scalar v = r->field().normalize(c);
  if (v != 0) p.terms_.push_back({Monomial(), v});
  return p;
}

Polynomial Polynomial::variable(const RingPtr& r, int i) {
  if (i < 0 || i >= r->nvars()) throw std::out_of_range("variable index");
  return monomial(r, Monomial::var(i));
}

Polynomial Polynomial::monomial(const RingPtr& r, const Monomial& m, const Scalar& c) {
  Polynomial p(r);
  Scalar v = r->field().normalize(c);
  if (v != 0) p.terms_.push_back({m, v});
  return p;
}

Polynomial Polynomial::from_terms(const RingPtr& r, std::vector<Term> terms) {
  Polynomial p(r);
  const Ring& ring = *r;
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ring.compare(a.m, b.m) > 0; });
  const Field& f = ring.field();
  for (auto& t : terms) {
    Scalar c = f.normalize(t.c);
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      p.terms_.back().c = f.add(p.terms_.back().c, c);
      if (p.terms_.back().c == 0) p.terms_.pop_back();
    } else if (c != 0) {
      p.terms_.push_back({t.m, std::move(c)});
    }
  }
  return p;
}

Polynomial Polynomial::from_sorted(const RingPtr& r, std::vector<Term> terms) {
  Polynomial p(r);
  p.terms_ = std::move(terms);
  return p;
}

int Polynomial::total_degree() const {
  int d = -1;
  for (auto& t : terms_) d = std::max(d, t.m.degree());
  return d;
}

int Polynomial::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (auto& t : terms_) d = std::max(d, t.m[var]);
  return d;
}

std::vector<int> Polynomial::support() const {
  std::vector<int> s;
  for (int i = 0; i < ring_->nvars(); ++i)
    if (uses_var(i)) s.push_back(i);
  return s;
}

bool Polynomial::is_homogeneous() const {
  for (auto& t : terms_)
    if (t.m.degree() != terms_.front().m.degree()) return false;
  return true;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  for (auto& t : terms_)
    if (t.m == m) return t.c;
  return 0;
}

Scalar Polynomial::constant_term() const {
  if (!terms_.empty() && terms_.back().m.is_one()) return terms_.back().c;
  return 0;
}

void Polynomial::check_same(const Polynomial& o) const {
  if (ring_ != o.ring_ && !(ring_ && o.ring_ && ring_->compatible(*o.ring_) && ring_->order() == o.ring_->order()))
    throw std::invalid_argument("ring mismatch");
}

static std::vector<Term> merge(const Ring& r, const std::vector<Term>& a, const std::vector<Term>& b, bool subtract) {
  const Field& f = r.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = i == a.size() ? -1 : j == b.size() ? 1 : r.compare(a[i].m, b[j].m);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].m, subtract ? f.neg(b[j].c) : b[j].c});
      ++j;
    } else {
      Scalar s = subtract ? f.sub(a[i].c, b[j].c) : f.add(a[i].c, b[j].c);
      if (s != 0) out.push_back({a[i].m, std::move(s)});
      ++i, ++j;
    }
  }
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  check_same(o);
  return from_sorted(ring_, merge(*ring_, terms_, o.terms_, false));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  check_same(o);
  return from_sorted(ring_, merge(*ring_, terms_, o.terms_, true));
}

Polynomial Polynomial::operator-() const {
  Polynomial p(ring_);
  for (auto& t : terms_) p.terms_.push_back({t.m, field().neg(t.c)});
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  check_same(o);
  if (is_zero() || o.is_zero()) return Polynomial(ring_);
  const Field& f = field();
  if (terms_.size() == 1) return o.mul_term(terms_[0].m, terms_[0].c);
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].m, o.terms_[0].c);
  std::unordered_map<Monomial, Scalar, MonomialHash> acc;
  acc.reserve(terms_.size() * o.terms_.size());
  for (auto& a : terms_)
    for (auto& b : o.terms_) {
      auto [it, fresh] = acc.try_emplace(a.m * b.m, 0);
      it->second = f.add(it->second, f.mul(a.c, b.c));
    }
  std::vector<Term> out;
  out.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c != 0) out.push_back({m, c});
  const Ring& r = *ring_;
  std::sort(out.begin(), out.end(), [&](const Term& x, const Term& y) { return r.compare(x.m, y.m) > 0; });
  return from_sorted(ring_, std::move(out));
}

Polynomial Polynomial::scale(const Scalar& c) const {
  Scalar v = field().normalize(c);
  Polynomial p(ring_);
  if (v == 0) return p;
  p.terms_.reserve(terms_.size());
  for (auto& t : terms_) p.terms_.push_back({t.m, field().mul(t.c, v)});
  return p;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Scalar& c) const {
  Polynomial p(ring_);
  if (c == 0) return p;
  p.terms_.reserve(terms_.size());
  for (auto& t : terms_) p.terms_.push_back({t.m * m, field().mul(t.c, c)});
  return p;
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial r = constant(ring_, 1), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scale(field().inv(lc()));
}

Polynomial Polynomial::to_ring(const RingPtr& r) const {
  if (r == ring_) return *this;
  if (!r->compatible(*ring_)) throw std::invalid_argument("to_ring: incompatible rings");
  Polynomial p(r);
  p.terms_ = terms_;
  if (!(r->order() == ring_->order())) {
    const Ring& rr = *r;
    std::sort(p.terms_.begin(), p.terms_.end(), [&](const Term& a, const Term& b) { return rr.compare(a.m, b.m) > 0; });
  }
  return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  if (ring_ && o.ring_ && !ring_->compatible(*o.ring_)) return false;
  if (ring_ && o.ring_ && !(ring_->order() == o.ring_->order())) return *this == o.to_ring(ring_);
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].m != o.terms_[i].m || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

std::string scalar_to_string(const Scalar& c) { return c.get_str(); }

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& t : terms_) {
    Scalar c = t.c;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (int i = 0; i < ring_->nvars(); ++i) {
      int e = t.m[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->var(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      s += c.get_str();
    } else if (c == 1) {
      s += mono;
    } else {
      s += c.get_str() + "*" + mono;
    }
  }
  return s;
}

Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images) {
  if (static_cast<int>(images.size()) != p.ring()->nvars())
    throw std::invalid_argument("substitute: unmapped variable");
  if (images.empty()) throw std::invalid_argument("substitute: empty ring");
  RingPtr target = images[0].ring();
  for (auto& im : images)
    if (!im.ring() || !im.ring()->compatible(*target)) throw std::invalid_argument("substitute: images in different rings");
  std::vector<std::vector<Polynomial>> powers(images.size());
  auto power = [&](int v, int e) -> const Polynomial& {
    auto& pw = powers[v];
    if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
    while (static_cast<int>(pw.size()) <= e) pw.push_back(pw.back() * images[v].to_ring(target));
    return pw[e];
  };
  std::vector<Term> acc;
  Polynomial result(target);
  for (auto& t : p.terms()) {
    Polynomial term = Polynomial::constant(target, t.c);
    for (int v = 0; v < p.ring()->nvars() && !term.is_zero(); ++v)
      if (t.m[v]) term = term * power(v, t.m[v]);
    for (auto& x : term.terms()) acc.push_back(x);
  }
  return Polynomial::from_terms(target, std::move(acc));
}

Polynomial substitute_vars(const Polynomial& p, const std::vector<std::pair<int, Polynomial>>& subs) {
  std::vector<Polynomial> images;
  for (int i = 0; i < p.ring()->nvars(); ++i) images.push_back(Polynomial::variable(p.ring(), i));
  for (auto& [v, q] : subs) images[v] = q.to_ring(p.ring());
  return substitute(p, images);
}

Polynomial relabel(const Polynomial& p, const RingPtr& target, const std::vector<int>& index_map) {
  std::vector<Term> out;
  out.reserve(p.size());
  int n = p.ring()->nvars();
  for (auto& t : p.terms()) {
    Monomial m;
    for (int i = 0; i < n; ++i)
      if (t.m[i]) {
        if (index_map[i] < 0) throw std::invalid_argument("relabel: variable has no image");
        m.set(index_map[i], m[index_map[i]] + t.m[i]);
      }
    out.push_back({m, t.c});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial derivative(const Polynomial& p, int var) {
  std::vector<Term> out;
  for (auto& t : p.terms()) {
    int e = t.m[var];
    if (!e) continue;
    Monomial m = t.m;
    m.set(var, e - 1);
    out.push_back({m, p.field().mul(t.c, p.field().from_int(e))});
  }
  return Polynomial::from_terms(p.ring(), std::move(out));
}

Polynomial homogenize(const Polynomial& p, const RingPtr& hring, const std::vector<int>& embedding, int hvar) {
  int d = p.total_degree();
  std::vector<Term> out;
  for (auto& t : p.terms()) {
    Monomial m;
    for (int i = 0; i < p.ring()->nvars(); ++i)
      if (t.m[i]) m.set(embedding[i], t.m[i]);
    m.set(hvar, d - t.m.degree());
    out.push_back({m, t.c});
  }
  return Polynomial::from_terms(hring, std::move(out));
}

Polynomial dehomogenize(const Polynomial& p, const RingPtr& target, const std::vector<int>& embedding, int hvar) {
  std::vector<int> back(p.ring()->nvars(), -1);
  for (size_t i = 0; i < embedding.size(); ++i) back[embedding[i]] = static_cast<int>(i);
  std::vector<Term> out;
  for (auto& t : p.terms()) {
    Monomial m;
    for (int i = 0; i < p.ring()->nvars(); ++i) {
      if (i == hvar || !t.m[i]) continue;
      if (back[i] < 0) throw std::invalid_argument("dehomogenize: stray variable");
      m.set(back[i], t.m[i]);
    }
    out.push_back({m, t.c});
  }
  return Polynomial::from_terms(target, std::move(out));
}

Polynomial primitive_part(const Polynomial& p) {
  if (p.is_zero() || !p.field().is_rational()) return p;
  mpz_class l = 1, g = 0;
  for (auto& t : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.c.get_den_mpz_t());
  for (auto& t : p.terms()) {
    mpz_class v = t.c.get_num() * (l / t.c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  return p.scale(rational(l, g));
}

Polynomial normalize_content(const Polynomial& p) {
  if (p.is_zero()) return p;
  // leading coefficient under lex
  const Term* lead = &p.terms()[0];
  auto lex = MonomialOrder::lex();
  int n = p.ring()->nvars();
  for (auto& t : p.terms())
    if (lex.compare(t.m, lead->m, n) > 0) lead = &t;
  if (!p.field().is_rational()) return p.scale(p.field().inv(lead->c));
  Polynomial q = primitive_part(p);
  return lead->c < 0 ? -q : q;
}

std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  const Field& f = a.field();
  Polynomial r = a;
  std::vector<Term> q;
  Scalar binv = f.inv(b.lc());
  while (!r.is_zero()) {
    if (!b.lm().divides(r.lm())) return std::nullopt;
    Monomial m = r.lm() / b.lm();
    Scalar c = f.mul(r.lc(), binv);
    q.push_back({m, c});
    r = r - b.mul_term(m, c);
  }
  return Polynomial::from_sorted(a.ring(), std::move(q));
}

}  // namespace chowkit
