#include "chowkit/cycles.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace testing_support;

namespace {

Component C(const RingPtr& R, const char* s) { return make_component(Ideal(R, Ps(R, s))); }

Cycle cyc(const RingPtr& R, std::vector<std::pair<long, const char*>> parts) {
  Cycle Z(R);
  for (auto& [m, s] : parts) Z.add(C(R, s), m);
  return Z;
}

}  // namespace

TEST_CASE("cycle degree") {
  auto R = ring({"x", "y"});
  CHECK(cycle_degree(cyc(R, {{1, "x-y"}})) == 1);
  CHECK(cycle_degree(cyc(R, {{2, "x-1, y"}, {1, "x^2+y^2-1"}})) == 4);
  CHECK(cycle_degree(cyc(R, {{1, "x^2-2, y"}})) == 2);
  Cycle Z = cyc(R, {{1, "x, y"}});
  Z.add(C(R, "y, x"), 2);
  CHECK(Z.terms().size() == 1);
  CHECK(Z.terms()[0].multiplicity == 3);
}

TEST_CASE("ncap against hyperplanes") {
  auto R = ring({"x", "y"});
  Cycle Z = cyc(R, {{1, "y-x^2"}});
  Cycle a = ncap(Z, P(R, "x"));
  CHECK(a == cyc(R, {{1, "x, y"}}));
  CHECK(ncap(a, P(R, "y")) == cyc(R, {{1, "x, y"}}));
  Cycle b = ncap(Z, P(R, "y"));
  CHECK(b == cyc(R, {{2, "x, y"}}));
  CHECK(ncap(b, P(R, "x")) == cyc(R, {{2, "x, y"}}));
  CHECK(!(ncap(a, P(R, "y")) == ncap(b, P(R, "x"))));
  Cycle line = cyc(R, {{3, "x"}});
  CHECK(ncap(line, P(R, "2*x")) == line);
  Cycle circle = ncap(cyc(R, {{1, "x^2+y^2-1"}}), P(R, "y"));
  CHECK(circle == cyc(R, {{1, "x-1, y"}, {1, "x+1, y"}}));
  CHECK(ncap(cyc(R, {{1, "x^2+y^2-1"}}), P(R, "y-2")).terms().size() == 1);  // x^2 = -3 irreducible over Q
  CHECK_THROWS(ncap(Z, P(R, "x*y")));
}

TEST_CASE("Vogel-Tworzewski intersections") {
  auto R = ring({"x", "y"});
  Cycle Z1 = cyc(R, {{1, "y-x^2"}}), Z2 = cyc(R, {{1, "y"}});
  Cycle V = vt_intersection({Z1, Z2});
  CHECK(V == cyc(R, {{2, "x, y"}}));
  CHECK(cycle_degree(V) <= cycle_degree(Z1) * cycle_degree(Z2));
  CHECK(vt_intersection({Z1}) == Z1);
  // two lines meeting transversally
  CHECK(vt_intersection({cyc(R, {{1, "x"}}), cyc(R, {{1, "y"}})}) == cyc(R, {{1, "x, y"}}));
  // a curve with itself: self-intersection is the curve
  CHECK(vt_intersection({cyc(R, {{1, "x"}}), cyc(R, {{1, "x"}})}) == cyc(R, {{1, "x"}}));
  // seeded-random hyperplanes still cut out the diagonal
  Cycle Vr = vt_intersection({Z1, Z2}, DiagonalChoice::SeededRandom, 7);
  CHECK(cycle_degree(Vr) <= 2);
  auto prod = product_ring(R, 2);
  CHECK_THROWS_AS(vt_intersection({Z1, Z2}, std::vector<Polynomial>{P(prod, "x_1-x_2")}), std::invalid_argument);
}

TEST_CASE("ideal of a cycle") {
  auto R = ring({"x", "y"});
  CHECK(ideal_equal(ideal_of_cycle(cyc(R, {{2, "x, y"}})), ideal_power(Ideal(R, Ps(R, "x, y")), 2)));
  CHECK(ideal_of_cycle(Cycle(R)).is_unit());
  auto S = ring({"x", "y", "z"});
  Cycle axes = cyc(S, {{1, "y, z"}, {1, "x, z"}, {1, "x, y"}});
  Ideal expect = ideal_product(ideal_product(Ideal(S, Ps(S, "y, z")), Ideal(S, Ps(S, "x, z"))), Ideal(S, Ps(S, "x, y")));
  CHECK(ideal_equal(ideal_of_cycle(axes), expect));
}

TEST_CASE("associated cycles") {
  auto L = ring({"x"});
  Cycle a = associated_cycle(Ideal(L, Ps(L, "x^2")));
  CHECK(a == cyc(L, {{2, "x"}}));
  CHECK(arith_degree(Ideal(L, Ps(L, "x^2"))) == 2);
  auto R = ring({"x", "y", "z", "s"});
  Ideal J(R, Ps(R, "x^2-y^3, z, s"));
  CHECK(associated_cycle(J) == cyc(R, {{1, "x^2-y^3, z, s"}}));
  CHECK(arith_degree(J) == 3);
  auto S = ring({"x", "y"});
  Ideal E(S, Ps(S, "x^2, x*y"));
  CHECK(associated_cycle(E) == cyc(S, {{1, "x"}, {1, "x, y"}}));
  CHECK(arith_degree(E) == 2);
  CHECK(ideal_equal(ideal_of_cycle(associated_cycle(E)), E));
  CHECK(E.contains(ideal_of_cycle(associated_cycle(E))));
  // the surface family at n=3 has degree 4 and its section by s=0 has an embedded point
  Ideal I3(R, Ps(R, "x^2-y^3, z^2-y*s^2, z^3-x*s^3, x*z-y^2*s, x*s-y*z"));
  CHECK(cycle_degree(associated_cycle(I3)) == 4);
  Ideal cut = ideal_sum(I3, Ps(R, "s"));
  Cycle ac = associated_cycle(cut);
  CHECK(ac.terms().size() == 2);
  CHECK(Ideal(cut).contains(ideal_of_cycle(ac)));
}

TEST_CASE("parametrized components") {
  auto R = ring({"x", "y", "z", "s"});
  Ideal S3 = parametrization_ideal(R, {"u", "v"}, {"u^3", "u^2", "u*v", "v"});
  CHECK(ideal_equal(S3, Ideal(R, Ps(R, "x^2-y^3, z^2-y*s^2, z^3-x*s^3, x*z-y^2*s, x*s-y*z"))));
  CHECK(make_checked_component(S3).dimension == 2);
  CHECK_THROWS(make_checked_component(Ideal(R, Ps(R, "x*y"))));
}
