#include "chowkit/loja.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace testing_support;

namespace {

NumericScene point_scene(const RingPtr& R, const std::string& f1, const std::string& f2) {
  auto R0 = ring({});
  NumericScene s;
  s.ideals = {Ideal(R, Ps(R, f1)), Ideal(R, Ps(R, f2))};
  s.intersection = {Parametrization{Ps(R0, "0, 0")}};
  s.center = {0, 0};
  return s;
}

NumericScene cut_surface_scene() {
  auto R = ring({"x", "y", "z", "s"});
  auto U = ring({"u"});
  NumericScene s;
  s.ideals = {Ideal(R, Ps(R, "x^2-y^3, z^2-y*s^2, z^3-x*s^3, x*z-y^2*s, x*s-y*z")), Ideal(R, Ps(R, "s"))};
  s.intersection = {Parametrization{Ps(U, "u^3, u^2, 0, 0")}};
  s.center = {0, 0, 0, 0};
  return s;
}

}  // namespace

TEST_CASE("exponent estimates on the fixtures") {
  auto R = ring({"x", "y"});
  auto tangent = estimate_exponent(point_scene(R, "y-x^2", "y"));
  CHECK(tangent.D == 2);
  CHECK(std::abs(tangent.slope - 2.0) < 0.1);
  CHECK(tangent.within_bound);
  auto transverse = estimate_exponent(point_scene(R, "x", "y"));
  CHECK(transverse.D == 1);
  CHECK(std::abs(transverse.slope - 1.0) < 0.05);
  auto cut = estimate_exponent(cut_surface_scene());
  CHECK(cut.slope <= 3.25);
  CHECK(cut.within_bound);
  CHECK(cut.band_low <= cut.slope);
  CHECK(cut.slope <= cut.band_high);
}

TEST_CASE("penalty oracle agrees with the parametrization") {
  auto R = ring({"x", "y"});
  auto s = point_scene(R, "y-x^2", "y");
  s.intersection.clear();
  auto e = estimate_exponent(s);
  CHECK(std::abs(e.slope - 2.0) < 0.1);
  auto d = scene_distance(s, {Complex(0.01, 0), Complex(0, 0)});
  REQUIRE(d);
  CHECK(std::abs(*d - 0.01) < 1e-6);
}

TEST_CASE("distance oracle on the zero set") {
  auto s = cut_surface_scene();
  for (double u : {0.7, -0.3, 0.05}) {
    auto d = scene_distance(s, {Complex(u * u * u, 0), Complex(u * u, 0), 0, 0});
    REQUIRE(d);
    CHECK(*d < 1e-9);
  }
  auto off = scene_distance(s, {0, 0, Complex(1e-3, 0), 0});
  REQUIRE(off);
  CHECK(std::abs(*off - 1e-3) < 1e-9);
}

TEST_CASE("estimates are deterministic and stable under more samples") {
  auto R = ring({"x", "y"});
  auto s = point_scene(R, "y-x^2", "y");
  auto a = estimate_exponent(s);
  auto b = estimate_exponent(s);
  CHECK(a.slope == b.slope);
  for (auto base : {s, cut_surface_scene()}) {
    auto more = base;
    more.per_shell *= 2;
    CHECK(std::abs(estimate_exponent(base).slope - estimate_exponent(more).slope) < 0.05);
  }
}

TEST_CASE("box choice does not move the exponent") {
  auto R = ring({"x", "y"});
  auto s = point_scene(R, "y-x^2", "y");
  auto small = s;
  small.radius = 0.3;
  CHECK(std::abs(estimate_exponent(s).slope - estimate_exponent(small).slope) < 0.1);
}

TEST_CASE("upper chain: ideal elements are Lipschitz in the distance") {
  auto R = ring({"x", "y"});
  auto U = ring({"u"});
  NumericScene s;
  s.ideals = {Ideal(R, Ps(R, "y-x^2"))};
  s.intersection = {Parametrization{Ps(U, "u, u^2")}};
  s.center = {0, 0};
  auto rep = verify_upper_chain(s, Ps(R, "y-x^2"));
  CHECK(rep.bounded);
  CHECK(rep.samples > 0);
  // |y - x^2| <= |grad| dist + dist^2 on the unit box
  CHECK(rep.constant <= 4);
  CHECK(verify_upper_chain(s, Ps(R, "0")).constant == 0);
  auto cut = cut_surface_scene();
  auto chain = verify_upper_chain(cut, Ps(ring({"x", "y", "z", "s"}), "x*z - y^2*s, s"));
  CHECK(chain.bounded);
}

TEST_CASE("parametrizations must land in the zero set") {
  auto R = ring({"x", "y"});
  auto U = ring({"u"});
  NumericScene s;
  s.ideals = {Ideal(R, Ps(R, "y-x^2"))};
  s.intersection = {Parametrization{Ps(U, "u, u^3")}};
  s.center = {0, 0};
  CHECK_THROWS_AS(estimate_exponent(s), std::invalid_argument);
}
