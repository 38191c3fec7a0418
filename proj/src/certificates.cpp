#include "chowkit/certificates.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace chowkit {

long BezoutCertificate::exponent_sum() const {
  long s = 0;
  for (auto& f : factors) s += f.exponent;
  return s;
}

long bound_degree(const Ideal& I) {
  if (I.is_unit()) return 1;
  try {
    return arith_degree(I);
  } catch (const DecompositionError&) {
    return hilbert_data(I).degree;
  }
}

namespace {

std::vector<Monomial> monomials_of_degree(int n, int d) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (d == 0) out.push_back(Monomial());
    return out;
  }
  Monomial m;
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      m.set(i, left);
      out.push_back(m);
      return;
    }
    for (int v = left; v >= 0; --v) {
      m.set(i, v);
      rec(i + 1, left - v);
    }
  };
  rec(0, d);
  return out;
}

// Echelon basis of a span of polynomials with distinct leading monomials,
// each row remembering its combination of the inserted vectors.
class TrackedEchelon {
 public:
  using Combo = std::map<int, Scalar>;

  void insert(Polynomial v, int id) {
    Combo combo{{id, Scalar(1)}};
    const Field& F = v.field();
    while (!v.is_zero()) {
      auto it = pivots_.find(v.lm());
      if (it == pivots_.end()) break;
      const Row& b = rows_[it->second];
      Scalar c = F.div(v.lc(), b.poly.lc());
      v -= b.poly.scale(c);
      for (auto& [k, x] : b.combo) {
        Scalar& y = combo[k];
        y = F.sub(y, F.mul(c, x));
        if (sgn(y) == 0) combo.erase(k);
      }
    }
    if (v.is_zero()) return;
    pivots_[v.lm()] = rows_.size();
    rows_.push_back({std::move(v), std::move(combo)});
  }

  // Combination of inserted vectors equal to 1, if 1 is in the span.
  std::optional<Combo> unit_combination() const {
    auto it = pivots_.find(Monomial());
    if (it == pivots_.end()) return std::nullopt;
    const Row& r = rows_[it->second];
    const Field& F = r.poly.field();
    Scalar inv = F.inv(r.poly.lc());
    Combo out;
    for (auto& [k, x] : r.combo) out[k] = F.mul(x, inv);
    return out;
  }

 private:
  struct Row {
    Polynomial poly;
    Combo combo;
  };
  std::vector<Row> rows_;
  std::unordered_map<Monomial, size_t, MonomialHash> pivots_;
};

}  // namespace

NullResult null_certificate(const std::vector<Ideal>& ideals) {
  if (ideals.empty()) throw std::invalid_argument("null_certificate: no ideals");
  const RingPtr& R = ideals.front().ring();
  int n = R->nvars();
  NullResult res;
  long prod = 1;
  for (auto& I : ideals) {
    long d = bound_degree(I);
    res.arith_degrees.push_back(d);
    prod *= d;
  }
  res.bound = (n + 1) * prod;

  struct Unknown {
    int j, k;
    Monomial u;
  };
  std::vector<Unknown> unknowns;
  std::vector<std::vector<Polynomial>> gens;
  for (auto& I : ideals) gens.push_back(I.generators());
  TrackedEchelon ech;
  for (long D = 0; D <= res.bound; ++D) {
    for (size_t j = 0; j < gens.size(); ++j)
      for (size_t k = 0; k < gens[j].size(); ++k) {
        const Polynomial& g = gens[j][k].to_ring(R);
        int dg = g.total_degree();
        if (dg > D) continue;
        for (auto& u : monomials_of_degree(n, static_cast<int>(D - dg))) {
          unknowns.push_back({static_cast<int>(j), static_cast<int>(k), u});
          ech.insert(g.mul_term(u, Scalar(1)), static_cast<int>(unknowns.size()) - 1);
        }
      }
    res.degrees_tried = static_cast<int>(D) + 1;
    auto combo = ech.unit_combination();
    if (!combo) continue;
    NullCertificate cert;
    cert.generators = gens;
    cert.bound = res.bound;
    for (auto& gj : gens) cert.cofactors.push_back(std::vector<Polynomial>(gj.size(), Polynomial(R)));
    for (auto& [id, c] : *combo) {
      auto& un = unknowns[id];
      cert.cofactors[un.j][un.k] += Polynomial::monomial(R, un.u, c);
    }
    for (size_t j = 0; j < gens.size(); ++j) {
      Polynomial fj(R);
      for (size_t k = 0; k < gens[j].size(); ++k) fj += cert.cofactors[j][k] * gens[j][k].to_ring(R);
      cert.achieved_degree = std::max(cert.achieved_degree, fj.total_degree());
    }
    res.certificate = cert;
    return res;
  }
  return res;
}

bool verify_certificate(const NullCertificate& cert) {
  if (cert.generators.size() != cert.cofactors.size() || cert.generators.empty()) return false;
  RingPtr R;
  for (auto& gj : cert.generators)
    if (!gj.empty()) R = gj.front().ring();
  if (!R) return false;
  Polynomial total(R);
  for (size_t j = 0; j < cert.generators.size(); ++j) {
    if (cert.generators[j].size() != cert.cofactors[j].size()) return false;
    Polynomial fj(R);
    for (size_t k = 0; k < cert.generators[j].size(); ++k)
      fj += cert.cofactors[j][k].to_ring(R) * cert.generators[j][k].to_ring(R);
    if (fj.total_degree() > cert.achieved_degree) return false;
    total += fj;
  }
  return cert.achieved_degree <= cert.bound && total == Polynomial::constant(R, 1);
}

namespace {

Ideal product_of_powers(const RingPtr& R, const std::vector<BezoutFactor>& factors) {
  Ideal acc = Ideal::unit(R);
  for (auto& f : factors) {
    acc = ideal_product(acc, ideal_power(f.prime, static_cast<int>(f.exponent)));
    acc = Ideal(R, acc.groebner());
  }
  return acc;
}

}  // namespace

BezoutCertificate bezout_certificate(const std::vector<Ideal>& ideals, DiagonalChoice choice, unsigned long seed) {
  if (ideals.empty()) throw std::invalid_argument("bezout_certificate: no ideals");
  const RingPtr& R = ideals.front().ring();
  int n = R->nvars();
  BezoutCertificate cert;
  std::vector<Polynomial> all;
  std::vector<Cycle> cycles;
  long prod = 1;
  for (auto& I : ideals) {
    if (I.is_unit()) throw std::invalid_argument("bezout_certificate: unit ideal among the inputs");
    for (auto& g : I.generators()) all.push_back(g.to_ring(R));
    Cycle Z = associated_cycle(I);
    long d = cycle_degree(Z);
    cert.arith_degrees.push_back(d);
    prod *= d;
    cycles.push_back(Z);
  }
  cert.target = Ideal(R, all);
  cert.bound = n * prod;
  Cycle X;
  try {
    X = vt_intersection(cycles, choice, seed);
  } catch (const DecompositionError&) {
    if (choice != DiagonalChoice::Standard) throw;
    X = vt_intersection(cycles, DiagonalChoice::SeededRandom, seed);
  }
  for (auto& t : X.terms())
    cert.factors.push_back({t.component.prime, n * t.multiplicity * t.component.degree, t.multiplicity,
                            t.component.degree});
  Ideal prod_ideal = product_of_powers(R, cert.factors);
  cert.product_generators = prod_ideal.generators();
  for (auto& g : cert.product_generators)
    if (!cert.target.contains(g))
      throw std::logic_error("bezout_certificate: product of prime powers not contained in the ideal");
  return cert;
}

bool verify_certificate(const BezoutCertificate& cert) {
  if (cert.exponent_sum() > cert.bound) return false;
  for (auto& f : cert.factors)
    if (!f.prime.contains(cert.target)) return false;
  for (auto& g : cert.product_generators)
    if (!cert.target.contains(g)) return false;
  Ideal stored(cert.target.ring(), cert.product_generators);
  return ideal_equal(stored, product_of_powers(cert.target.ring(), cert.factors));
}

}  // namespace chowkit
