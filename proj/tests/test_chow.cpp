#include "chowkit/chow.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace testing_support;

namespace {

Cycle cyc(const RingPtr& R, std::vector<std::pair<long, const char*>> parts) {
  Cycle Z(R);
  for (auto& [m, s] : parts) Z.add(make_component(Ideal(R, Ps(R, s))), m);
  return Z;
}

Projection proj(std::vector<std::vector<long>> rows) {
  Projection p;
  for (auto& r : rows) {
    std::vector<Scalar> s;
    for (long v : r) s.push_back(v);
    p.rows.push_back(s);
  }
  return p;
}

}  // namespace

TEST_CASE("allowability") {
  auto R = ring({"x1", "x2", "x3"});
  CHECK(is_allowable(proj({{2, -3, 5}, {1, 4, -1}}), cyc(R, {{1, "x1-2*x3, x2+x3"}})));
  CHECK(!is_allowable(proj({{0, 1, 0}, {0, 0, 1}}), cyc(R, {{1, "x2, x3"}})));
  auto S = ring({"x", "y"});
  CHECK(is_allowable(proj({{1, 0}}), cyc(S, {{1, "y-x^2"}})));
  CHECK(!is_allowable(proj({{0, 1}}), cyc(S, {{1, "x*y-1"}})));
  CHECK(is_allowable(proj({{1, 0}, {0, 1}}), cyc(S, {{1, "y-x^2"}})));
  CHECK_THROWS(pushforward_equation(proj({{1, 0}}), cyc(S, {{1, "y-x^2"}})));
}

TEST_CASE("pushforward equations") {
  auto F5 = ring({"x", "y"}, Field::prime(5));
  Cycle pt = cyc(F5, {{5, "x, y"}});
  CHECK(pushforward_equation(proj({{2, 3}}), pt) == normalize_content(P(F5, "(2*x+3*y)^5")));
  CHECK(pushforward_equation(proj({{2, 3}}), pt) == normalize_content(P(F5, "2^5*x^5+3^5*y^5")));

  auto R = ring({"x1", "x2", "x3"});
  Cycle X = cyc(R, {{1, "x1^3+x2^5, x3"}});
  long a1 = 3, a2 = -2;
  auto f = pushforward_equation(proj({{1, 0, a1}, {0, 1, a2}}), X);
  CHECK(f == normalize_content(P(R, "(x1+3*x3)^3+(x2-2*x3)^5")));

  Cycle axes = cyc(R, {{1, "x2, x3"}, {1, "x1, x3"}, {1, "x1, x2"}});
  std::vector<long> a{1, 2, -1}, b{3, -1, 2};
  auto g = pushforward_equation(proj({a, b}), axes);
  Polynomial expect = Polynomial::constant(R, 1);
  for (int i = 0; i < 3; ++i) {
    Polynomial lin(R);
    for (int j = 0; j < 3; ++j) lin = lin + Polynomial::variable(R, j).scale(a[j] * b[i] - a[i] * b[j]);
    expect *= lin;
  }
  CHECK(g == normalize_content(expect));
}

TEST_CASE("chow ideals of the fixtures") {
  auto R = ring({"x1", "x2", "x3"});
  auto res = chow_ideal(cyc(R, {{1, "x1^3+x2^5, x3"}}));
  Ideal expect(R, Ps(R, "x1^3+x2^5, x1^2*x3, x1*x3^2, x3^3, x2^4*x3, x2^3*x3^2, x2^2*x3^3, x2*x3^4, x3^5"));
  CHECK(ideal_equal(res.ideal, expect));
  CHECK(res.stabilized);
  for (auto& s : res.samples) CHECK(res.ideal.contains(s.equation));

  auto S = ring({"x", "y", "z"});
  for (int n : {3, 5}) {
    std::string ns = std::to_string(n);
    auto W = cyc(S, {{1, ("z, x^2-y^" + ns).c_str()}});
    auto r = chow_ideal(W);
    CHECK(ideal_equal(r.ideal, Ideal(S, Ps(S, "x^2-y^" + ns + ", z^2, x*z, y^" + std::to_string(n - 1) + "*z"))));
  }
  // coordinate subspace
  CHECK(ideal_equal(chow_ideal(cyc(S, {{1, "x, y"}})).ideal, Ideal(S, Ps(S, "x, y"))));
  // coordinate axes
  auto axes = cyc(R, {{1, "x2, x3"}, {1, "x1, x3"}, {1, "x1, x2"}});
  Ideal Ich = chow_ideal(axes).ideal;
  CHECK(!Ich.contains(P(R, "x1*x2*x3")));
  Ideal prod = Ideal::unit(R);
  for (auto& t : axes.terms()) {
    Cycle Ci(R);
    Ci.add(t.component, 1);
    prod = ideal_product(prod, chow_ideal(Ci).ideal);
  }
  CHECK(ideal_equal(prod, ideal_sum(Ich, Ps(R, "x1*x2*x3"))));
}

TEST_CASE("chow ideal over a finite field") {
  auto F5 = ring({"x", "y"}, Field::prime(5));
  auto r = chow_ideal(cyc(F5, {{5, "x, y"}}));
  CHECK(ideal_equal(r.ideal, Ideal(F5, Ps(F5, "x^5, y^5"))));
}

TEST_CASE("mixed cycles multiply pure parts") {
  auto S = ring({"x", "y"});
  auto Z = cyc(S, {{1, "y"}, {1, "x-1, y-1"}});
  auto r = chow_ideal(Z);
  CHECK(ideal_equal(r.ideal, Ideal(S, Ps(S, "y*(x-1), y*(y-1)"))));
}

TEST_CASE("restriction to coordinate subspaces") {
  auto A2 = ring({"x", "y"});
  auto A3 = ring({"x", "y", "z"});
  CHECK(chow_restriction_check(cyc(A2, {{1, "y-x^2"}}), A3, {0, 1}));
  CHECK(chow_restriction_check(cyc(A2, {{1, "x-y"}}), A3, {0, 1}));
  CHECK(chow_restriction_check(cyc(A2, {{1, "x^2-y^3"}}), A3, {0, 1}));
}

TEST_CASE("determinantal surfaces") {
  auto R = ring({"x", "y", "z", "s"});
  long a = 2, b = 3, c = 5, d = 7;
  auto minors = [&](const std::string& t) {
    std::string A = "(y+" + std::to_string(a) + "*" + t + ")", B = "(" + std::to_string(b) + "*" + t + ")";
    std::string Cc = "(y+" + std::to_string(c) + "*" + t + ")", D = "(z+" + std::to_string(d) + "*" + t + ")";
    return "x*" + Cc + "-z*" + A + ", x*" + D + "-z*" + B + ", " + A + "*" + D + "-" + B + "*" + Cc;
  };
  Ideal Z1(R, Ps(R, minors("s"))), Z2(R, Ps(R, minors("s^2")));
  CHECK(is_prime(Z1));
  CHECK(is_prime(Z2));
  Cycle C1(R), C2(R);
  C1.add(make_component(Z1), 1);
  C2.add(make_component(Z2), 1);
  CHECK(C1.terms()[0].component.degree == 3);
  auto r1 = chow_ideal(C1);
  // xyz does not vanish on the irreducible surface Z1, so only the cut holds
  CHECK(!Z1.contains(P(R, "x*y*z")));
  CHECK(!r1.ideal.contains(P(R, "x*y*z")));
  CHECK(ideal_sum(r1.ideal, Ps(R, "s")).contains(P(R, "x*y*z")));
  auto r2 = chow_ideal(C2);
  CHECK(!ideal_sum(r2.ideal, Ps(R, "s")).contains(P(R, "x*y*z")));
}
