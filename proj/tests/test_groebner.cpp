#include "chowkit/ideal.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace testing_support;

namespace {

// Naive multivariate division over the field, written independently of the engine.
Polynomial naive_remainder(Polynomial f, const std::vector<Polynomial>& G) {
  const Field& fl = f.field();
  Polynomial r(f.ring());
  while (!f.is_zero()) {
    bool hit = false;
    for (auto& g : G) {
      if (g.lm().divides(f.lm())) {
        f = f - g.mul_term(f.lm() / g.lm(), fl.div(f.lc(), g.lc()));
        hit = true;
        break;
      }
    }
    if (!hit) {
      r = r + Polynomial::monomial(f.ring(), f.lm(), f.lc());
      f = f - Polynomial::monomial(f.ring(), f.lm(), f.lc());
    }
  }
  return r;
}

// Buchberger's criterion: all S-polynomials reduce to zero.
bool is_groebner(const std::vector<Polynomial>& G) {
  for (size_t i = 0; i < G.size(); ++i)
    for (size_t j = i + 1; j < G.size(); ++j) {
      Monomial l = G[i].lm().lcm(G[j].lm());
      const Field& fl = G[i].field();
      Polynomial s = G[i].mul_term(l / G[i].lm(), fl.inv(G[i].lc())) - G[j].mul_term(l / G[j].lm(), fl.inv(G[j].lc()));
      if (!naive_remainder(s, G).is_zero()) return false;
    }
  return true;
}

std::vector<Polynomial> in_ring(const std::vector<Polynomial>& v, const RingPtr& r) {
  std::vector<Polynomial> o;
  for (auto& p : v) o.push_back(p.to_ring(r));
  return o;
}

}  // namespace

TEST_CASE("small bases") {
  auto R = make_ring({"x", "y"}, Field::rationals(), MonomialOrder::lex());
  auto G = groebner_basis(Ps(R, "x^2, x"), R);
  REQUIRE(G.size() == 1);
  CHECK(G[0] == P(R, "x"));
  auto H = groebner_basis(Ps(R, "y-x^2, x"), R);
  REQUIRE(H.size() == 2);
  CHECK(H[0] == P(R, "y"));
  CHECK(H[1] == P(R, "x"));
  CHECK(groebner_basis({}, R).empty());
}

TEST_CASE("deformation ideal is already a basis") {
  auto R = ring({"x", "y", "z"});
  auto gens = Ps(R, "x^2-y^5, z^2, x*z, y^2*z");
  CHECK(is_groebner(gens));
  auto G = groebner_basis(gens, R);
  CHECK(G.size() == 4);
}

TEST_CASE("surface family generators match implicitization") {
  for (int n : {3, 5}) {
    auto R = ring({"u", "v", "x", "y", "z", "s"});
    std::string graph = "x-u^" + std::to_string(n) + ", y-u^2, z-u*v, s-v";
    auto E = eliminate(Ideal(R, Ps(R, graph)), {0, 1});
    std::string h = std::to_string((n + 1) / 2), l = std::to_string((n - 1) / 2), ns = std::to_string(n);
    Ideal I(R, Ps(R, "x^2-y^" + ns + ", z^2-y*s^2, z^" + ns + "-x*s^" + ns + ", x*z-y^" + h + "*s, x*s-y^" + l + "*z"));
    CHECK(ideal_equal(E, I));
  }
}

TEST_CASE("surface family containments at n=3") {
  auto R = ring({"x", "y", "z", "s"});
  Ideal Is(R, Ps(R, "x^2-y^3, z^2-y*s^2, z^3-x*s^3, x*z-y^2*s, x*s-y*z, s"));
  auto J = Ps(R, "x^2-y^3, z, s");
  for (auto& a : J)
    for (auto& b : J) CHECK(Is.contains(a * b));
  CHECK(Is.contains(P(R, "x^2-y^3")));
  CHECK(!Is.contains(P(R, "z")));
}

TEST_CASE("quotient basis at n=5") {
  auto R = ring({"x", "y", "z", "s"});
  Ideal Is(R, Ps(R, "x^2-y^5, z^2-y*s^2, z^5-x*s^5, x*z-y^3*s, x*s-y^2*z, s"));
  Ideal J(R, Ps(R, "x^2-y^5, z, s"));
  CHECK(J.contains(Is));
  CHECK(quotient_dimension(J, Is) == 2);
  auto nz = Is.normal_form(P(R, "z")), nyz = Is.normal_form(P(R, "y*z"));
  CHECK(!nz.is_zero());
  CHECK(!nyz.is_zero());
  // independence: the two normal forms are not proportional
  CHECK(nz.lm() != nyz.lm());
}

TEST_CASE("elimination") {
  auto R = ring({"t", "x", "y"});
  auto E = eliminate(Ideal(R, Ps(R, "x-t^2, y-t^3")), {0});
  CHECK(ideal_equal(E, Ideal(R, Ps(R, "x^3-y^2"))));
  auto S = ring({"t", "u", "x", "y", "z"});
  auto F = eliminate(Ideal(S, Ps(S, "x-t, y-u, z-t*u")), {0, 1});
  CHECK(ideal_equal(F, Ideal(S, Ps(S, "z-x*y"))));
  Ideal I(R, Ps(R, "x-t^2"));
  CHECK(ideal_equal(eliminate(I, {}), I));
}

TEST_CASE("ideal operations") {
  auto R = ring({"x", "y"});
  CHECK(ideal_equal(ideal_product(Ideal(R, Ps(R, "x")), Ideal(R, Ps(R, "y"))), Ideal(R, Ps(R, "x*y"))));
  Ideal I(R, Ps(R, "x^2, x*y"));
  CHECK(ideal_equal(ideal_quotient(I, P(R, "x")), Ideal(R, Ps(R, "x, y"))));
  // the colon by x grows to the unit ideal after one more step
  int steps = -1;
  CHECK(saturation(I, P(R, "x"), 64, &steps).is_unit());
  CHECK(steps == 2);
  CHECK(ideal_equal(saturate_element(I, P(R, "y")), Ideal(R, Ps(R, "x"))));
  CHECK(ideal_equal(ideal_intersection(Ideal(R, Ps(R, "x")), Ideal(R, Ps(R, "y"))), Ideal(R, Ps(R, "x*y"))));
  CHECK(ideal_equal(Ideal(R, Ps(R, "x, y")), Ideal(R, Ps(R, "y, x+y"))));
  CHECK(!ideal_equal(Ideal(R, Ps(R, "x^2, y^2")), ideal_power(Ideal(R, Ps(R, "x, y")), 2)));
  CHECK(!ideal_equal(Ideal(R, Ps(R, "x")), Ideal(R, Ps(R, "x^2"))));
}

TEST_CASE("coordinate axes product ideal") {
  auto R = ring({"x1", "x2", "x3"});
  Ideal prod = ideal_product(ideal_product(Ideal(R, Ps(R, "x2, x3")), Ideal(R, Ps(R, "x1, x3"))), Ideal(R, Ps(R, "x1, x2")));
  // oracle: all monomials of degree >= 3 involving at least two variables
  std::vector<Polynomial> mons;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b) {
      int c = 3 - a - b;
      if ((a > 0) + (b > 0) + (c > 0) < 2) continue;
      Monomial m;
      m.set(0, a), m.set(1, b), m.set(2, c);
      mons.push_back(Polynomial::monomial(R, m));
    }
  CHECK(ideal_equal(prod, Ideal(R, mons)));
  // pure powers are never in it
  for (int v = 0; v < 3; ++v) CHECK(!prod.contains(Polynomial::monomial(R, Monomial::var(v, 9))));
}

TEST_CASE("hilbert data") {
  auto R = ring({"x", "y", "z", "s"});
  Ideal I3(R, Ps(R, "x^2-y^3, z^2-y*s^2, z^3-x*s^3, x*z-y^2*s, x*s-y*z"));
  auto h = hilbert_data(I3);
  CHECK(h.dimension == 2);
  // oracle: number of points cut out by two generic linear equations
  auto cut = ideal_sum(I3, Ps(R, "3*x-2*y+5*z-7*s+1, x+4*y-z+2*s-3"));
  CHECK(dimension(cut) == 0);
  CHECK(h.degree == vdim(cut));
  CHECK(h.degree == 4);
  CHECK(projective_degree(I3) == 4);
  auto hj = hilbert_data(Ideal(R, Ps(R, "x^2-y^3, z, s")));
  CHECK(hj.dimension == 1);
  CHECK(hj.degree == 3);
  auto hm = hilbert_data(Ideal::maximal_at_origin(R));
  CHECK(hm.dimension == 0);
  CHECK(hm.degree == 1);
  CHECK(hilbert_data(Ideal::zero(R)).dimension == 4);
  CHECK(hilbert_data(Ideal(R, Ps(R, "x-1, y-2*z"))).degree == 1);
  CHECK_THROWS(hilbert_data(Ideal::unit(R)));
  CHECK(vdim(Ideal(R, Ps(R, "x^2, y, z^3, s"))) == 6);
  CHECK(standard_monomials(Ideal(R, Ps(R, "x^2, y, z^3, s"))).size() == 6);
}

TEST_CASE("finite fields") {
  auto R = ring({"x", "y"}, Field::prime(5));
  Ideal I(R, Ps(R, "x^5, y^5"));
  CHECK(I.contains(P(R, "(x+y)^5")));
  CHECK(!I.contains(P(R, "(x+y)^4")));
  CHECK(vdim(I) == 25);
}

TEST_CASE("tracked bases and lifting") {
  auto R = ring({"x", "y", "z"});
  auto gens = Ps(R, "x^2-y*z, y^2-x*z, z^2-x*y");
  auto tb = groebner_basis_tracked(gens, R);
  for (size_t i = 0; i < tb.basis.size(); ++i) {
    Polynomial acc(R);
    for (size_t k = 0; k < gens.size(); ++k) acc = acc + tb.cofactors[i][k] * gens[k];
    CHECK(acc == tb.basis[i].to_ring(R));
  }
  auto f = P(R, "x^3*y - x*y^2*z + z^2*(x^2-y*z)");
  auto q = lift(f, tb);
  REQUIRE(q);
  Polynomial acc(R);
  for (size_t k = 0; k < gens.size(); ++k) acc = acc + (*q)[k].to_ring(R) * gens[k];
  CHECK(acc == f);
  CHECK(!lift(P(R, "x"), tb));
}

TEST_CASE("property: engine output satisfies Buchberger's criterion and is canonical") {
  std::mt19937_64 rng(101);
  auto R = ring({"x", "y", "z"});
  std::vector<MonomialOrder> orders{MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::block(1)};
  for (int iter = 0; iter < 100; ++iter) {
    std::vector<Polynomial> gens;
    int k = 2 + static_cast<int>(rng() % 2);
    for (int i = 0; i < k; ++i) gens.push_back(random_poly(R, rng, 3, 3));
    auto ord = orders[iter % orders.size()];
    auto Ro = with_order(R, ord);
    auto G = groebner_basis(gens, Ro);
    CHECK(is_groebner(G));
    for (auto& g : gens) CHECK(naive_remainder(g.to_ring(Ro), G).is_zero());
    // determinism under a shuffled generating set
    std::vector<Polynomial> shuffled = gens;
    std::reverse(shuffled.begin(), shuffled.end());
    auto G2 = groebner_basis(shuffled, Ro);
    REQUIRE(G2.size() == G.size());
    for (size_t i = 0; i < G.size(); ++i) CHECK(G[i] == G2[i]);
    // hilbert data does not depend on the generating set
    Ideal I(R, gens);
    if (!I.is_unit()) {
      auto h1 = hilbert_data(I);
      auto h2 = hilbert_data(Ideal(R, in_ring(I.groebner(), R)));
      CHECK(h1.dimension == h2.dimension);
      CHECK(h1.degree == h2.degree);
      CHECK(projective_degree(I) == h1.degree);
    }
  }
}

TEST_CASE("property: normal form, membership and elimination") {
  std::mt19937_64 rng(202);
  auto R = ring({"t", "x", "y"});
  for (int iter = 0; iter < 100; ++iter) {
    Ideal I(R, {random_poly(R, rng, 3, 3), random_poly(R, rng, 3, 3)});
    auto f = random_poly(R, rng, 4, 3), g = random_poly(R, rng, 4, 3);
    auto nf = I.normal_form(f);
    CHECK(I.normal_form(nf) == nf);
    CHECK(I.normal_form(f + g) == nf + I.normal_form(g));
    CHECK(I.normal_form(f.scale(7)) == nf.scale(7));
    if (!I.generators().empty()) CHECK(I.contains(I.generators()[0] * g));
    CHECK(I.contains(f - nf.to_ring(R)));
    auto E = eliminate(I, {0});
    for (auto& e : E.generators()) {
      CHECK(!e.uses_var(0));
      CHECK(I.contains(e));
    }
  }
}

TEST_CASE("property: degree is additive on unions of distinct lines") {
  std::mt19937_64 rng(303);
  std::uniform_int_distribution<int> co(-4, 4);
  auto R = ring({"x", "y", "z"});
  auto line = [&] {
    std::vector<Polynomial> g;
    for (int k = 0; k < 2; ++k) {
      Polynomial p = Polynomial::constant(R, co(rng));
      for (int v = 0; v < 3; ++v) p = p + Polynomial::variable(R, v).scale(co(rng));
      g.push_back(p);
    }
    return Ideal(R, g);
  };
  int checked = 0;
  while (checked < 100) {
    Ideal A = line(), B = line();
    if (A.is_unit() || B.is_unit() || dimension(A) != 1 || dimension(B) != 1 || ideal_equal(A, B)) continue;
    auto U = ideal_intersection(A, B);
    CHECK(hilbert_data(U).degree == hilbert_data(A).degree + hilbert_data(B).degree);
    CHECK(hilbert_data(U).dimension == 1);
    ++checked;
  }
}
