#include "chowkit/univariate.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace testing_support;

namespace {

Polynomial expand(const UnivariateFactorization& fz, const RingPtr& r) {
  Polynomial acc = Polynomial::constant(r, fz.unit);
  for (auto& f : fz.factors) acc = acc * f.factor.pow(f.multiplicity);
  return acc;
}

}  // namespace

TEST_CASE("small factorizations over Q") {
  auto R = ring({"x", "y"});
  auto f1 = factor_univariate(P(R, "x^2-1"));
  CHECK(f1.factors.size() == 2);
  CHECK(expand(f1, R) == P(R, "x^2-1"));

  auto f2 = factor_univariate(P(R, "x^2+1"));
  REQUIRE(f2.factors.size() == 1);
  CHECK(f2.factors[0].multiplicity == 1);

  // x^4 - x^2 = x^2 (x-1)(x+1)
  auto f3 = factor_univariate(P(R, "x^4-x^2"));
  REQUIRE(f3.factors.size() == 3);
  int mult_x = 0;
  for (auto& f : f3.factors)
    if (f.factor == P(R, "x")) mult_x = f.multiplicity;
  CHECK(mult_x == 2);
  CHECK(expand(f3, R) == P(R, "x^4-x^2"));

  CHECK_THROWS(factor_univariate(P(R, "x*y")));
  // works in whichever single variable occurs
  CHECK(factor_univariate(P(R, "4*y^2-9")).factors.size() == 2);
}

TEST_CASE("irreducible with many modular factors") {
  auto R = ring({"x"});
  // x^4 - 10x^2 + 1 splits modulo every prime but is irreducible over Q
  auto f = factor_univariate(P(R, "x^4-10*x^2+1"));
  CHECK(f.factors.size() == 1);
  auto g = factor_univariate(P(R, "(x^4-10*x^2+1)*(x^4-10*x^2+1)*(x^3-2)*(2*x+3)"));
  CHECK(g.factors.size() == 3);
  CHECK(expand(g, R) == P(R, "(x^4-10*x^2+1)^2*(x^3-2)*(2*x+3)"));
}

TEST_CASE("factorization over prime fields") {
  auto R = ring({"x"}, Field::prime(5));
  // x^5 - x = prod (x - a) over F_5
  auto f = factor_univariate(P(R, "x^5-x"));
  CHECK(f.factors.size() == 5);
  // (x+1)^5 = x^5 + 1 in characteristic 5
  auto g = factor_univariate(P(R, "x^5+1"));
  REQUIRE(g.factors.size() == 1);
  CHECK(g.factors[0].multiplicity == 5);
  auto R2 = ring({"x"}, Field::prime(2));
  auto h = factor_univariate(P(R2, "x^4+x^3+x^2+x+1"));  // irreducible over F_2
  CHECK(h.factors.size() == 1);
  auto k = factor_univariate(P(R2, "(x^2+x+1)*(x^3+x+1)*(x^3+x^2+1)"));
  CHECK(k.factors.size() == 3);
}

TEST_CASE("property: products of known irreducibles factor back") {
  std::mt19937_64 rng(23);
  auto R = ring({"x"});
  // pool of irreducible polynomials over Q
  std::vector<std::string> pool{"x-1", "x+2", "2*x-3", "x^2+1", "x^2-2", "x^2+x+1", "x^3-2",
                                "x^3+x+1", "x^4-10*x^2+1", "3*x^2-5", "x^4+1", "x^5-x-1"};
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<int> mult(1, 2), count(1, 4);
  for (int iter = 0; iter < 100; ++iter) {
    std::map<size_t, int> chosen;
    int k = count(rng);
    for (int i = 0; i < k; ++i) chosen[pick(rng)] += mult(rng);
    Polynomial prod = Polynomial::constant(R, 7);
    for (auto& [i, e] : chosen) prod = prod * P(R, pool[i]).pow(e);
    auto fz = factor_univariate(prod);
    CHECK(fz.factors.size() == chosen.size());
    CHECK(expand(fz, R) == prod);
    for (auto& f : fz.factors) {
      bool matched = false;
      for (auto& [i, e] : chosen)
        if (normalize_content(P(R, pool[i])) == f.factor) matched = (e == f.multiplicity);
      CHECK(matched);
    }
  }
}
