#include "chowkit/intclosure.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace testing_support;

namespace {

using Pt = std::vector<long>;

// x^e is integral over the monomial ideal with exponents a iff (x^e)^k lies in
// I^k for some k; with exponents <= 4 in two variables k | 12 suffices.
bool integral_by_powers(const Pt& e, const std::vector<Pt>& a) {
  for (int k = 1; k <= 12; ++k) {
    if (12 % k) continue;
    std::vector<Pt> sums{{0, 0}};
    for (int s = 0; s < k; ++s) {
      std::vector<Pt> next;
      for (auto& p : sums)
        for (auto& g : a) next.push_back({p[0] + g[0], p[1] + g[1]});
      // keep the Pareto-minimal sums
      std::vector<Pt> minimal;
      for (auto& p : next) {
        bool dominated = false;
        for (auto& q : next)
          if (q != p && q[0] <= p[0] && q[1] <= p[1]) dominated = true;
        if (!dominated && std::find(minimal.begin(), minimal.end(), p) == minimal.end()) minimal.push_back(p);
      }
      sums = minimal;
    }
    for (auto& p : sums)
      if (p[0] <= k * e[0] && p[1] <= k * e[1]) return true;
  }
  return false;
}

Ideal monomial_ideal(const RingPtr& R, const std::vector<Pt>& a) {
  std::vector<Polynomial> g;
  for (auto& e : a) {
    Monomial m;
    for (size_t v = 0; v < e.size(); ++v) m.set(static_cast<int>(v), static_cast<int>(e[v]));
    g.push_back(Polynomial::monomial(R, m));
  }
  return Ideal(R, g);
}

std::vector<Pt> random_exponents(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> cnt(1, 4), ex(0, 4);
  std::vector<Pt> a;
  int c = cnt(rng);
  for (int i = 0; i < c; ++i) {
    Pt e{ex(rng), ex(rng)};
    if (e[0] + e[1] == 0) e[0] = 1;
    a.push_back(e);
  }
  return a;
}

Polynomial xy(const RingPtr& R, long a, long b) {
  Monomial m;
  m.set(0, static_cast<int>(a));
  m.set(1, static_cast<int>(b));
  return Polynomial::monomial(R, m);
}

}  // namespace

TEST_CASE("monomial closure examples") {
  auto R = ring({"x", "y"});
  CHECK(ideal_equal(monomial_closure(Ideal(R, Ps(R, "x^2, y^2"))), Ideal(R, Ps(R, "x^2, x*y, y^2"))));
  CHECK(ideal_equal(monomial_closure(Ideal(R, Ps(R, "x, y"))), Ideal(R, Ps(R, "x, y"))));
  Ideal c = monomial_closure(Ideal(R, Ps(R, "x^3, y^5")));
  for (long a = 0; a <= 6; ++a)
    for (long b = 0; b <= 8; ++b) CHECK(c.contains(xy(R, a, b)) == (5 * a + 3 * b >= 15));
  CHECK_THROWS_AS(monomial_closure(Ideal(R, Ps(R, "x+y"))), std::invalid_argument);
}

TEST_CASE("monomial closure over F5") {
  auto R = ring({"x", "y"}, Field::prime(5));
  Ideal c = monomial_closure(Ideal(R, Ps(R, "x^5, y^5")));
  CHECK(ideal_equal(c, ideal_power(Ideal(R, Ps(R, "x, y")), 5)));
}

TEST_CASE("closure membership verdicts") {
  auto R = ring({"x", "y"});
  SUBCASE("member gives k=1") {
    Ideal I(R, Ps(R, "x^2+y^3, x*y"));
    auto f = P(R, "x^3*y + x^2*y^2");
    auto v = closure_membership(f, I);
    REQUIRE(v.verdict == Verdict::In);
    CHECK(v.certificates.size() == 1);
    CHECK(v.certificates[0].degree == 1);
    CHECK(verify_verdict(v, f, I));
  }
  SUBCASE("x over (x^2)") {
    auto R1 = ring({"x"});
    Ideal I(R1, Ps(R1, "x^2"));
    auto v = closure_membership(P(R1, "x"), I);
    REQUIRE(v.verdict == Verdict::Out);
    CHECK(v.witness->weights == std::vector<long>{1});
    CHECK(*v.witness->order_element == 1);
    CHECK(*v.witness->order_ideal == 2);
    CHECK(verify_verdict(v, P(R1, "x"), I));
  }
  SUBCASE("witness needs a vanishing generator") {
    Ideal I(R, Ps(R, "x-y"));
    auto v = closure_membership(P(R, "x"), I);
    REQUIRE(v.verdict == Verdict::Out);
    CHECK(!v.witness->order_ideal.has_value());
    CHECK(verify_verdict(v, P(R, "x"), I));
  }
  SUBCASE("degree two dependence, non-monomial ideal") {
    Ideal I(R, Ps(R, "(x+y)^2, (x-y)^2"));
    CHECK(!I.is_monomial());
    auto f = P(R, "x^2");
    CHECK(!I.contains(f));
    auto v = closure_membership(f, I);
    REQUIRE(v.verdict == Verdict::In);
    CHECK(v.certificates[0].degree == 2);
    CHECK(verify_verdict(v, f, I));
    auto g = P(R, "x");
    auto w = closure_membership(g, I);
    CHECK(w.verdict == Verdict::Out);
    CHECK(verify_verdict(w, g, I));
  }
  SUBCASE("monomial ideal, polynomial element") {
    Ideal I(R, Ps(R, "x^2, y^2"));
    auto f = P(R, "x*y + 3*x^2 - y^3");
    auto v = closure_membership(f, I);
    REQUIRE(v.verdict == Verdict::In);
    CHECK(v.certificates.size() == 3);
    CHECK(verify_verdict(v, f, I));
    auto g = P(R, "x*y + x");
    auto w = closure_membership(g, I);
    CHECK(w.verdict == Verdict::Out);
    CHECK(verify_verdict(w, g, I));
  }
  CHECK_THROWS_AS(closure_membership(P(R, "x"), Ideal::unit(R)), std::invalid_argument);
}

TEST_CASE("cusp ideal: integral but not a member") {
  auto R = ring({"x1", "x2", "x3"});
  Ideal I(R, Ps(R,
                "x1^3+x2^5, x1^2*x3, x1*x3^2, x3^3, x2^4*x3, x2^3*x3^2, x2^2*x3^3, x2*x3^4, x3^5"));
  auto f = P(R, "x2^2*x3^2");
  CHECK(!I.contains(f));
  // the hand-written equation
  CHECK((f * f - P(R, "x3^3") * P(R, "x2^4*x3")).is_zero());
  auto v = closure_membership(f, I);
  REQUIRE(v.verdict == Verdict::In);
  CHECK(v.certificates[0].degree == 2);
  CHECK(verify_verdict(v, f, I));
  auto g = P(R, "x2^3*x3");
  auto w = closure_membership(g, I);
  CHECK(w.verdict == Verdict::Out);
  CHECK(verify_verdict(w, g, I));
}

TEST_CASE("tampered certificates fail verification") {
  auto R = ring({"x", "y"});
  Ideal I(R, Ps(R, "(x+y)^2, (x-y)^2"));
  auto f = P(R, "x^2");
  auto v = closure_membership(f, I);
  REQUIRE(v.verdict == Verdict::In);
  auto bad = v;
  bad.certificates[0].coefficients.back().push_back({{0, 0}, P(R, "1")});
  CHECK(!verify_verdict(bad, f, I));
  auto w = closure_membership(P(R, "x"), I);
  REQUIRE(w.verdict == Verdict::Out);
  auto badw = w;
  *badw.witness->order_element += 1;
  CHECK(!verify_verdict(badw, P(R, "x"), I));
}

TEST_CASE("valuation orders") {
  auto R = ring({"x", "y"});
  CHECK(!valuation_order(P(R, "x^2 - y^3"), {3, 2}, {1, 1}).has_value());
  CHECK(*valuation_order(P(R, "x^2 - y^3"), {3, 2}, {2, 1}) == 6);
  CHECK(*valuation_order(P(R, "x^2 - y^3 + x*y^3"), {3, 2}, {1, 1}) == 9);
  CHECK(*valuation_order(P(R, "5"), {3, 2}, {1, 1}) == 0);
}

TEST_CASE("Briancon-Skoda examples") {
  auto R = ring({"x", "y"});
  auto r1 = brianconskoda_check(Ideal(R, Ps(R, "x, y")), 2, Ps(R, "x^2, x*y, y^2"));
  CHECK(r1.ok());
  for (auto& e : r1.entries) CHECK(e.closure_verdict == Verdict::In);
  auto r2 = brianconskoda_check(Ideal(R, Ps(R, "x^2, y^3")), 2, Ps(R, "x*y^2, x^3*y^3, x^2*y^2, y^5"));
  CHECK(r2.ok());
  CHECK(r2.entries[1].closure_verdict == Verdict::In);
  CHECK(r2.entries[0].closure_verdict == Verdict::Out);
  auto r3 = brianconskoda_check(Ideal::unit(R), 2, Ps(R, "x"));
  CHECK(r3.ok());
}

TEST_CASE("restriction commutes with closure") {
  auto R = ring({"x", "y", "s"});
  CHECK(restriction_commutes_check(Ideal(R, Ps(R, "x^2*s, y^3, x*y*s^2, x^4")), 2).status ==
        RestrictionStatus::Equal);
  auto rep = restriction_commutes_check(Ideal(R, Ps(R, "x^2-y^3+s*x")), 2);
  CHECK(rep.status != RestrictionStatus::Different);
  CHECK(!rep.candidates.empty());
  CHECK(restriction_commutes_check(Ideal::zero(R), 2).status == RestrictionStatus::Equal);
}

TEST_CASE("property: monomial closure against powers") {
  auto R = ring({"x", "y"});
  std::mt19937_64 rng(20241);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = random_exponents(rng);
    Ideal I = monomial_ideal(R, a);
    Ideal c = monomial_closure(I);
    CHECK(c.contains(I));
    CHECK(ideal_equal(monomial_closure(c), c));
    for (long e0 = 0; e0 <= 4; ++e0)
      for (long e1 = 0; e1 <= 4; ++e1) CHECK(c.contains(xy(R, e0, e1)) == integral_by_powers({e0, e1}, a));
  }
}

TEST_CASE("property: Briancon-Skoda on monomial ideals") {
  auto R = ring({"x", "y"});
  std::mt19937_64 rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    Ideal I = monomial_ideal(R, random_exponents(rng));
    std::vector<Polynomial> cands;
    for (long e0 = 0; e0 <= 6; ++e0)
      for (long e1 = 0; e1 <= 6; ++e1) cands.push_back(xy(R, e0, e1));
    auto rep = brianconskoda_check(I, 2, cands);
    CHECK(rep.ok());
  }
}

TEST_CASE("property: verdicts re-verify on random binomial ideals") {
  auto R = ring({"x", "y"});
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> ex(0, 3), co(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    auto g1 = xy(R, ex(rng) + 1, ex(rng)) + xy(R, ex(rng), ex(rng) + 1).scale(co(rng));
    auto g2 = xy(R, ex(rng), ex(rng) + 1);
    Ideal I(R, {g1, g2});
    if (I.is_unit()) continue;
    auto f = xy(R, ex(rng), ex(rng)) + xy(R, ex(rng), ex(rng)).scale(co(rng));
    ClosureBounds b;
    b.max_k = 2;
    auto v = closure_membership(f, I, b);
    CHECK(verify_verdict(v, f, I));
    if (I.contains(f)) CHECK(v.verdict == Verdict::In);
  }
}
