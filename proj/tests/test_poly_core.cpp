#include "doctest.h"
#include "support.hpp"

using namespace testing_support;

namespace {

// Direct evaluation from the term list; used as an oracle for arithmetic.
Scalar eval(const Polynomial& p, const std::vector<Scalar>& pt) {
  Scalar acc = 0;
  for (auto& t : p.terms()) {
    Scalar v = t.c;
    for (int i = 0; i < p.ring()->nvars(); ++i)
      for (int e = 0; e < t.m[i]; ++e) v *= pt[i];
    acc += v;
  }
  return acc;
}

}  // namespace

TEST_CASE("difference of squares and identities") {
  auto R = ring({"x", "y"});
  CHECK(P(R, "(x+y)*(x-y)") == P(R, "x^2-y^2"));
  auto p = P(R, "3/4*x^3*y - 2");
  CHECK(p + Polynomial(R) == p);
  CHECK(p.to_string() == "3/4*x^3*y - 2");
}

TEST_CASE("characteristic two squaring") {
  auto R = ring({"x", "y"}, Field::prime(2));
  // (x+y)^2 = x^2 + 2xy + y^2 and 2 = 0 mod 2
  CHECK(P(R, "(x+y)^2") == P(R, "x^2+y^2"));
  auto R5 = ring({"x"}, Field::prime(5));
  CHECK(P(R5, "1/2*x") == P(R5, "3*x"));  // 2*3 = 6 = 1 mod 5
}

TEST_CASE("substitution") {
  auto R = ring({"x1", "x2", "x3"});
  auto g = P(R, "x1^3+x2^5");
  auto img = substitute(g, {P(R, "x1+2*x3"), P(R, "x2-3*x3"), P(R, "x3")});
  // oracle: compare against evaluation at a few points
  for (int k = 0; k < 5; ++k) {
    std::vector<Scalar> pt{rational(k + 1, 3), Scalar(2 - k), rational(k, 7)};
    Scalar a = pt[0] + 2 * pt[2], b = pt[1] - 3 * pt[2];
    CHECK(eval(img, pt) == a * a * a + b * b * b * b * b);
  }
  CHECK(substitute(g, {P(R, "x1"), P(R, "x2"), P(R, "x3")}) == g);

  auto S = ring({"x", "y"});
  auto T = ring({"t"});
  CHECK(substitute(P(S, "x^2-y"), {P(T, "t"), P(T, "t^2")}).is_zero());
  CHECK_THROWS(substitute(P(S, "x"), {P(T, "t")}));
}

TEST_CASE("homogenization round trip") {
  auto R = ring({"x", "y"});
  auto ext = extend_ring(R, {}, {"x0"});
  int h = 2;
  CHECK(homogenize(P(R, "x^2-y"), ext.ring, ext.embedding, h) == P(ext.ring, "x^2-y*x0"));
  CHECK(homogenize(P(R, "1"), ext.ring, ext.embedding, h) == P(ext.ring, "1"));
  auto f = P(R, "x^2-y^5");
  auto fh = homogenize(f, ext.ring, ext.embedding, h);
  CHECK(fh == P(ext.ring, "x^2*x0^3-y^5"));
  CHECK(dehomogenize(fh, R, ext.embedding, h) == f);
}

TEST_CASE("parse errors carry columns") {
  auto R = ring({"x", "y"});
  try {
    parse_polynomial("x + z", R, 3);
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() == 5);
  }
  CHECK_THROWS_AS(parse_polynomial("x / y", R), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x +", R), ParseError);
  CHECK(parse_polynomial_list("x, (x+y)^2, -y", R).size() == 3);
}

TEST_CASE("exact division") {
  auto R = ring({"x", "y"});
  auto q = divide_exact(P(R, "x^3-y^3"), P(R, "x-y"));
  REQUIRE(q);
  CHECK(*q == P(R, "x^2+x*y+y^2"));
  CHECK(!divide_exact(P(R, "x^2+y"), P(R, "x-y")));
}

TEST_CASE("normalization of content") {
  auto R = ring({"x", "y"});
  CHECK(normalize_content(P(R, "-2/3*x + 4/9*y")) == P(R, "3*x - 2*y"));
}

TEST_CASE("property: ring axioms and substitution homomorphism") {
  std::mt19937_64 rng(11);
  auto R = ring({"x", "y", "z"});
  auto S = ring({"u", "v"});
  for (int iter = 0; iter < 120; ++iter) {
    auto a = random_poly(R, rng), b = random_poly(R, rng), c = random_poly(R, rng);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b - b == a);
    std::vector<Polynomial> images{random_poly(S, rng, 3, 2), random_poly(S, rng, 3, 2), random_poly(S, rng, 3, 2)};
    CHECK(substitute(a * b, images) == substitute(a, images) * substitute(b, images));
    std::vector<Scalar> pt{Scalar(iter % 7 - 3), rational(1, iter % 5 + 1), Scalar(2)};
    CHECK(eval(a * b, pt) == eval(a, pt) * eval(b, pt));
  }
}

TEST_CASE("property: monomial orders are multiplicative with minimum one") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> ex(0, 4);
  std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::grevlex(), MonomialOrder::block(2),
                                    MonomialOrder::grevlex({3, 1, 0, 2}), MonomialOrder::block(1, {2, 0, 1, 3})};
  int n = 4;
  auto rand_mono = [&] {
    Monomial m;
    for (int i = 0; i < n; ++i) m.set(i, ex(rng));
    return m;
  };
  for (auto& ord : orders)
    for (int iter = 0; iter < 150; ++iter) {
      Monomial a = rand_mono(), b = rand_mono(), m = rand_mono();
      if (!a.is_one()) CHECK(ord.compare(a, Monomial(), n) > 0);
      int c = ord.compare(a, b, n);
      CHECK(ord.compare(a * m, b * m, n) == c);
      CHECK(ord.compare(b, a, n) == -c);
      CHECK((c == 0) == (a == b));
    }
}

TEST_CASE("property: homogenize is homogeneous and invertible") {
  std::mt19937_64 rng(17);
  auto R = ring({"x", "y", "z"});
  auto ext = extend_ring(R, {}, {"h"});
  for (int iter = 0; iter < 120; ++iter) {
    auto p = random_poly(R, rng, 5, 4);
    auto ph = homogenize(p, ext.ring, ext.embedding, 3);
    CHECK(ph.is_homogeneous());
    CHECK(ph.total_degree() == p.total_degree());
    CHECK(dehomogenize(ph, R, ext.embedding, 3) == p);
  }
}
