#include "chowkit/cycles.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

#include "chowkit/parse.hpp"

namespace chowkit {

Component make_component(const Ideal& prime) {
  auto h = hilbert_data(prime);
  return Component{prime, h.dimension, h.degree};
}

Component make_checked_component(const Ideal& prime) {
  if (!is_prime(prime)) throw std::invalid_argument("component ideal is not prime: " + prime.to_string());
  return make_component(prime);
}

Ideal parametrization_ideal(const RingPtr& target, const std::vector<std::string>& params,
                            const std::vector<std::string>& images) {
  if (static_cast<int>(images.size()) != target->nvars())
    throw std::invalid_argument("parametrization: need one image per variable");
  auto ext = extend_ring(target, params, {});
  std::vector<Polynomial> gens;
  for (int i = 0; i < target->nvars(); ++i) {
    Polynomial img = parse_polynomial(images[i], ext.ring);
    for (int k = 0; k < target->nvars(); ++k)
      if (img.uses_var(ext.embedding[k])) throw std::invalid_argument("parametrization: image uses a target variable");
    gens.push_back(Polynomial::variable(ext.ring, ext.embedding[i]) - img);
  }
  std::vector<int> ps(params.size());
  for (size_t k = 0; k < params.size(); ++k) ps[k] = static_cast<int>(k);
  Ideal el = eliminate(Ideal(ext.ring, gens), ps);
  return restrict_to(el, target, ext.embedding);
}

void Cycle::add(const Component& c, long multiplicity) {
  if (multiplicity <= 0) return;
  if (!ring_) ring_ = c.prime.ring();
  for (auto& t : terms_)
    if (t.component.dimension == c.dimension && ideal_equal(t.component.prime, c.prime)) {
      t.multiplicity += multiplicity;
      return;
    }
  terms_.push_back({c, multiplicity});
}

void Cycle::add(const Cycle& other) {
  for (auto& t : other.terms_) add(t.component, t.multiplicity);
}

Cycle Cycle::scaled(long factor) const {
  Cycle out(ring_);
  for (auto& t : terms_) out.add(t.component, t.multiplicity * factor);
  return out;
}

std::vector<int> Cycle::dimensions() const {
  std::vector<int> d;
  for (auto& t : terms_)
    if (std::find(d.begin(), d.end(), t.component.dimension) == d.end()) d.push_back(t.component.dimension);
  std::sort(d.rbegin(), d.rend());
  return d;
}

Cycle Cycle::pure_part(int d) const {
  Cycle out(ring_);
  for (auto& t : terms_)
    if (t.component.dimension == d) out.add(t.component, t.multiplicity);
  return out;
}

bool Cycle::operator==(const Cycle& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (auto& t : terms_) {
    bool found = false;
    for (auto& u : o.terms_)
      if (u.multiplicity == t.multiplicity && u.component.dimension == t.component.dimension &&
          ideal_equal(u.component.prime, t.component.prime))
        found = true;
    if (!found) return false;
  }
  return true;
}

std::string Cycle::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < terms_.size(); ++i) {
    if (i) os << " + ";
    os << terms_[i].multiplicity << "*[" << terms_[i].component.prime.to_string() << "]";
  }
  return os.str();
}

long cycle_degree(const Cycle& Z) {
  long d = 0;
  for (auto& t : Z.terms()) d += t.multiplicity * t.component.degree;
  return d;
}

namespace {

// Minimal primes of J with their lengths, as a cycle.
Cycle divisor_cycle(const Ideal& J) {
  Cycle out(J.ring());
  if (J.is_unit()) return out;
  auto mins = minimal_primes(J);
  auto lens = minimal_lengths(J, mins);
  for (size_t i = 0; i < mins.size(); ++i) out.add(make_component(mins[i]), lens[i]);
  return out;
}

}  // namespace

Cycle ncap(const Cycle& Z, const Polynomial& l) {
  if (l.total_degree() != 1) throw std::invalid_argument("ncap: hyperplane must be affine-linear and nonconstant");
  Cycle out(Z.ring());
  for (auto& t : Z.terms()) {
    const Ideal& P = t.component.prime;
    if (P.contains(l)) {
      out.add(t.component, t.multiplicity);
      continue;
    }
    out.add(divisor_cycle(ideal_sum(P, {l})).scaled(t.multiplicity));
  }
  return out;
}

RingPtr product_ring(const RingPtr& r, int m) {
  std::vector<std::string> names;
  for (int k = 1; k <= m; ++k)
    for (auto& v : r->vars()) names.push_back(v + "_" + std::to_string(k));
  return make_ring(names, r->field());
}

Cycle product_cycle(const std::vector<Cycle>& cycles, const RingPtr& prod) {
  int n = cycles.front().ring()->nvars();
  Cycle acc(prod);
  std::vector<size_t> idx(cycles.size(), 0);
  for (auto& c : cycles)
    if (c.empty()) return acc;
  while (true) {
    std::vector<Polynomial> gens;
    long mult = 1;
    for (size_t k = 0; k < cycles.size(); ++k) {
      const auto& term = cycles[k].terms()[idx[k]];
      mult *= term.multiplicity;
      std::vector<int> map(n);
      for (int i = 0; i < n; ++i) map[i] = static_cast<int>(k) * n + i;
      for (auto& g : term.component.prime.groebner()) gens.push_back(relabel(g, prod, map));
    }
    acc.add(divisor_cycle(Ideal(prod, gens)).scaled(mult));
    size_t k = 0;
    while (k < cycles.size() && ++idx[k] == cycles[k].terms().size()) idx[k++] = 0;
    if (k == cycles.size()) break;
  }
  return acc;
}

std::vector<Polynomial> standard_diagonal(const RingPtr& prod, int n, int m) {
  std::vector<Polynomial> out;
  for (int r = 0; r + 1 < m; ++r)
    for (int i = 0; i < n; ++i)
      out.push_back(Polynomial::variable(prod, r * n + i) - Polynomial::variable(prod, (r + 1) * n + i));
  return out;
}

std::vector<Polynomial> random_diagonal(const RingPtr& prod, int n, int m, unsigned long seed) {
  auto base = standard_diagonal(prod, n, m);
  size_t k = base.size();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> co(-5, 5);
  while (true) {
    std::vector<std::vector<Scalar>> M(k, std::vector<Scalar>(k));
    for (auto& row : M)
      for (auto& e : row) e = co(rng);
    // invertibility by exact elimination
    auto A = M;
    bool singular = false;
    for (size_t c = 0; c < k && !singular; ++c) {
      size_t p = c;
      while (p < k && sgn(A[p][c]) == 0) ++p;
      if (p == k) {
        singular = true;
        break;
      }
      std::swap(A[p], A[c]);
      for (size_t r = c + 1; r < k; ++r) {
        Scalar f = A[r][c] / A[c][c];
        for (size_t j = c; j < k; ++j) A[r][j] -= f * A[c][j];
      }
    }
    if (singular) continue;
    std::vector<Polynomial> out;
    for (size_t r = 0; r < k; ++r) {
      Polynomial h(prod);
      for (size_t j = 0; j < k; ++j) h = h + base[j].scale(M[r][j]);
      out.push_back(h);
    }
    return out;
  }
}

Cycle vt_intersection(const std::vector<Cycle>& cycles, const std::vector<Polynomial>& hyperplanes) {
  if (cycles.empty()) throw std::invalid_argument("vt_intersection: no cycles");
  const RingPtr& R = cycles.front().ring();
  int n = R->nvars();
  int m = static_cast<int>(cycles.size());
  if (m == 1) return cycles.front();
  RingPtr prod = hyperplanes.empty() ? product_ring(R, m) : hyperplanes.front().ring();
  if (!ideal_equal(Ideal(prod, hyperplanes), Ideal(prod, standard_diagonal(prod, n, m))))
    throw std::invalid_argument("vt_intersection: hyperplanes do not cut out the diagonal");
  Cycle Z = product_cycle(cycles, prod);
  for (auto& h : hyperplanes) Z = ncap(Z, h);
  std::vector<int> later;
  for (int i = n; i < n * m; ++i) later.push_back(i);
  std::vector<int> first(n);
  for (int i = 0; i < n; ++i) first[i] = i;
  Cycle out(R);
  for (auto& t : Z.terms()) {
    Ideal P = restrict_to(eliminate(t.component.prime, later), R, first);
    out.add(Component{P, t.component.dimension, t.component.degree}, t.multiplicity);
  }
  return out;
}

Cycle vt_intersection(const std::vector<Cycle>& cycles, DiagonalChoice choice, unsigned long seed) {
  if (cycles.size() == 1) return cycles.front();
  const RingPtr& R = cycles.front().ring();
  int n = R->nvars(), m = static_cast<int>(cycles.size());
  RingPtr prod = product_ring(R, m);
  auto hs = choice == DiagonalChoice::Standard ? standard_diagonal(prod, n, m) : random_diagonal(prod, n, m, seed);
  return vt_intersection(cycles, hs);
}

Ideal ideal_of_cycle(const Cycle& Z, const RingPtr& ring) {
  Ideal acc = Ideal::unit(ring);
  for (auto& t : Z.terms()) acc = ideal_product(acc, ideal_power(t.component.prime, static_cast<int>(t.multiplicity)));
  return acc;
}

Ideal ideal_of_cycle(const Cycle& Z) {
  if (!Z.ring()) throw std::invalid_argument("ideal_of_cycle: cycle without a ring");
  return ideal_of_cycle(Z, Z.ring());
}

Cycle associated_cycle(const Ideal& J) {
  if (J.is_unit()) throw std::invalid_argument("associated_cycle: unit ideal");
  auto pd = primary_decomposition(J);
  std::vector<Ideal> minimal;
  std::vector<bool> is_min(pd.size(), true);
  for (size_t i = 0; i < pd.size(); ++i)
    for (size_t j = 0; j < pd.size(); ++j)
      if (i != j && pd[j].dimension > pd[i].dimension && pd[i].prime.contains(pd[j].prime)) is_min[i] = false;
  for (size_t i = 0; i < pd.size(); ++i)
    if (is_min[i]) minimal.push_back(pd[i].prime);
  auto lens = minimal_lengths(J, minimal);
  Cycle out(J.ring());
  size_t k = 0;
  for (size_t i = 0; i < pd.size(); ++i) {
    long len = is_min[i] ? lens[k++] : generic_length(J, pd[i].prime);
    out.add(make_component(pd[i].prime), len);
  }
  return out;
}

long arith_degree(const Ideal& J) { return cycle_degree(associated_cycle(J)); }

}  // namespace chowkit
