#include "chowkit/certificates.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace testing_support;

namespace {

using Coeffs = std::vector<Scalar>;  // dense, low degree first

int deg(const Coeffs& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (sgn(a[i]) != 0) return i;
  return -1;
}

Coeffs sub_shifted(Coeffs a, const Coeffs& b, const Scalar& c, int shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift);
  for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
  return a;
}

// (q, r) with a = q b + r
std::pair<Coeffs, Coeffs> divmod(Coeffs a, const Coeffs& b) {
  Coeffs q(a.size() + 1);
  int db = deg(b);
  while (deg(a) >= db) {
    int da = deg(a);
    Scalar c = a[da] / b[db];
    q[da - db] += c;
    a = sub_shifted(a, b, c, da - db);
  }
  return {q, a};
}

Coeffs mul(const Coeffs& a, const Coeffs& b) {
  Coeffs out(a.size() + b.size());
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Minimal max(deg u a, deg v b) over u a + v b = 1, from the reduced Bezout pair.
int euclid_degree(const Coeffs& a, const Coeffs& b) {
  Coeffs r0 = a, r1 = b, u0{1}, u1{0};
  while (deg(r1) >= 0) {
    auto [q, r] = divmod(r0, r1);
    Coeffs u2 = sub_shifted(u0, mul(q, u1), Scalar(1), 0);
    r0 = r1, r1 = r, u0 = u1, u1 = u2;
  }
  if (deg(r0) != 0) return -1;
  // u0 a = r0 mod b; u0 mod b is the cofactor of least degree, and then
  // deg(v b) = deg(1 - u a) = deg(u a)
  int du = deg(divmod(u0, b).second);
  return du + deg(a);
}

Polynomial from_coeffs(const RingPtr& R, const Coeffs& a) {
  std::vector<Term> t;
  for (size_t i = 0; i < a.size(); ++i) {
    Monomial m;
    m.set(0, static_cast<int>(i));
    t.push_back({m, a[i]});
  }
  return Polynomial::from_terms(R, std::move(t));
}

}  // namespace

TEST_CASE("null certificate examples") {
  auto R = ring({"x"});
  SUBCASE("telescoping") {
    auto r = null_certificate({Ideal(R, Ps(R, "x")), Ideal(R, Ps(R, "x-1"))});
    REQUIRE(r.certificate);
    CHECK(r.bound == 2);
    CHECK(r.certificate->achieved_degree == 1);
    CHECK(verify_certificate(*r.certificate));
  }
  SUBCASE("common zero removed") {
    auto r = null_certificate({Ideal(R, Ps(R, "x^2-1")), Ideal(R, Ps(R, "x^3-2"))});
    REQUIRE(r.certificate);
    CHECK(r.bound == 12);
    CHECK(r.certificate->achieved_degree == euclid_degree({-1, 0, 1}, {-2, 0, 0, 1}));
    CHECK(r.certificate->achieved_degree <= 4);
    CHECK(verify_certificate(*r.certificate));
  }
  SUBCASE("common zero at the origin") {
    auto R2 = ring({"x", "y"});
    auto r = null_certificate({Ideal(R2, Ps(R2, "x")), Ideal(R2, Ps(R2, "y"))});
    CHECK(!r.certificate);
    CHECK(r.bound == 3);
    CHECK(r.degrees_tried == 4);
  }
}

TEST_CASE("perturbed cofactor fails verification") {
  auto R = ring({"x", "y"});
  auto r = null_certificate({Ideal(R, Ps(R, "x^2+y^2-1")), Ideal(R, Ps(R, "x-2, y"))});
  REQUIRE(r.certificate);
  CHECK(verify_certificate(*r.certificate));
  auto bad = *r.certificate;
  bad.cofactors[0][0] += P(R, "1");
  CHECK(!verify_certificate(bad));
  auto low = *r.certificate;
  low.achieved_degree -= 1;
  CHECK(!verify_certificate(low));
}

TEST_CASE("bezout certificate examples") {
  auto R = ring({"x", "y"});
  SUBCASE("two lines") {
    auto c = bezout_certificate({Ideal(R, Ps(R, "x")), Ideal(R, Ps(R, "y"))});
    REQUIRE(c.factors.size() == 1);
    CHECK(ideal_equal(c.factors[0].prime, Ideal(R, Ps(R, "x, y"))));
    CHECK(c.factors[0].exponent == 2);
    CHECK(c.exponent_sum() == 2);
    CHECK(c.bound == 2);
    CHECK(verify_certificate(c));
  }
  SUBCASE("single prime") {
    auto c = bezout_certificate({Ideal(R, Ps(R, "y-x^2"))});
    REQUIRE(c.factors.size() == 1);
    CHECK(c.factors[0].exponent == 2 * 2);
    CHECK(c.bound == 4);
    CHECK(verify_certificate(c));
  }
  SUBCASE("disjoint lines give the unit product") {
    auto c = bezout_certificate({Ideal(R, Ps(R, "x")), Ideal(R, Ps(R, "x-1"))});
    CHECK(c.factors.empty());
    CHECK(verify_certificate(c));
  }
  CHECK_THROWS_AS(bezout_certificate({Ideal::unit(R)}), std::invalid_argument);
}

TEST_CASE("bezout certificate on the cut surface") {
  auto R = ring({"x", "y", "z", "s"});
  Ideal I3(R, Ps(R, "x^2-y^3, z^2-y*s^2, z^3-x*s^3, x*z-y^2*s, x*s-y*z"));
  Ideal J3(R, Ps(R, "x^2-y^3, z, s"));
  Ideal m(R, Ps(R, "x, y, z, s"));
  auto c = bezout_certificate({I3, Ideal(R, Ps(R, "s"))});
  CHECK(verify_certificate(c));
  CHECK(c.exponent_sum() <= c.bound);
  CHECK(c.exponent_sum() <= 12);
  REQUIRE(c.factors.size() == 1);
  CHECK(ideal_equal(c.factors[0].prime, J3));
  // the two minimal shapes and their degree counts against n = 3
  Ideal cut = ideal_sum(I3, Ps(R, "s"));
  CHECK(cut.contains(ideal_power(J3, 2)));
  CHECK(cut.contains(ideal_product(m, J3)));
  long dJ = hilbert_data(J3).degree, dm = hilbert_data(m).degree;
  CHECK(dJ == 3);
  CHECK(2 * dJ == 6);
  CHECK(1 * dm + dJ == 4);
}

TEST_CASE("property: null certificate dichotomy") {
  std::mt19937_64 rng(4242);
  auto R1 = ring({"x"});
  auto R2 = ring({"x", "y"});
  std::uniform_int_distribution<int> co(-2, 2), pick(0, 1);
  for (int trial = 0; trial < 100; ++trial) {
    bool two = pick(rng);
    const RingPtr& R = two ? R2 : R1;
    std::vector<Ideal> ideals;
    for (int j = 0; j < 2; ++j) {
      Polynomial g = two ? P(R, "x").scale(co(rng)) + P(R, "y").scale(co(rng)) + P(R, "x*y").scale(co(rng)) +
                               Polynomial::constant(R, co(rng))
                         : P(R, "x^2").scale(co(rng)) + P(R, "x").scale(co(rng)) + Polynomial::constant(R, co(rng));
      if (g.total_degree() < 1) g += P(R, "x");
      ideals.push_back(Ideal(R, {g}));
    }
    if (two) ideals.push_back(Ideal(R, {P(R, "y") + Polynomial::constant(R, co(rng))}));
    std::vector<Polynomial> all;
    for (auto& I : ideals)
      for (auto& g : I.generators()) all.push_back(g);
    bool no_zero = Ideal(R, all).is_unit();
    auto r = null_certificate(ideals);
    CHECK(r.certificate.has_value() == no_zero);
    if (r.certificate) {
      CHECK(verify_certificate(*r.certificate));
      CHECK(r.certificate->achieved_degree <= r.bound);
    }
    if (!two) {
      auto c0 = ideals[0].generators()[0], c1 = ideals[1].generators()[0];
      if (r.certificate && c0.total_degree() > 0 && c1.total_degree() > 0) {
        Coeffs a(3), b(3);
        for (auto& t : c0.terms()) a[t.m[0]] = t.c;
        for (auto& t : c1.terms()) b[t.m[0]] = t.c;
        CHECK(r.certificate->achieved_degree == euclid_degree(a, b));
      }
    }
  }
}

TEST_CASE("property: bezout certificates on plane curves") {
  std::mt19937_64 rng(515);
  auto R = ring({"x", "y"});
  std::uniform_int_distribution<int> co(-2, 2);
  int produced = 0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Ideal> ideals;
    for (int j = 0; j < 2; ++j) {
      Polynomial g = P(R, "x").scale(co(rng)) + P(R, "y").scale(co(rng)) + Polynomial::constant(R, co(rng));
      if (j == 0) g += P(R, "x^2").scale(co(rng));
      if (g.total_degree() < 1) g += P(R, "y");
      ideals.push_back(Ideal(R, {g}));
    }
    auto c = bezout_certificate(ideals);
    ++produced;
    CHECK(verify_certificate(c));
    CHECK(c.exponent_sum() <= c.bound);
    for (auto& f : c.factors) CHECK(f.prime.contains(c.target));
  }
  CHECK(produced == 100);
}
