#pragma once

#include <vector>

#include "chowkit/polynomial.hpp"

namespace chowkit {

struct UnivariateFactor {
  Polynomial factor;
  int multiplicity;
};

struct UnivariateFactorization {
  Scalar unit;
  std::vector<UnivariateFactor> factors;
};

// p must involve at most one variable. Factors are primitive with positive
// leading coefficient over Q, monic over F_p; p = unit * prod factor^mult.
UnivariateFactorization factor_univariate(const Polynomial& p);

// Dense univariate helpers over a Field. Coefficients low to high, no
// trailing zeros; the zero polynomial is empty.
namespace dense {

using Poly = std::vector<Scalar>;

Poly from_polynomial(const Polynomial& p, int var);
Polynomial to_polynomial(const Poly& a, const RingPtr& r, int var);

int deg(const Poly& a);
void trim(Poly& a);
Poly add(const Field& f, const Poly& a, const Poly& b);
Poly sub(const Field& f, const Poly& a, const Poly& b);
Poly mul(const Field& f, const Poly& a, const Poly& b);
void divmod(const Field& f, const Poly& a, const Poly& b, Poly& q, Poly& r);
Poly rem(const Field& f, const Poly& a, const Poly& b);
Poly quo(const Field& f, const Poly& a, const Poly& b);
Poly monic(const Field& f, const Poly& a);
Poly derivative(const Field& f, const Poly& a);
Poly gcd(const Field& f, Poly a, Poly b);  // monic
// g = gcd(a,b) monic with s*a + t*b = g
Poly xgcd(const Field& f, const Poly& a, const Poly& b, Poly& s, Poly& t);
// Irreducible factors with multiplicity of a nonzero polynomial, monic.
std::vector<std::pair<Poly, int>> factor(const Field& f, const Poly& a);
bool is_squarefree(const Field& f, const Poly& a);

}  // namespace dense

}  // namespace chowkit
