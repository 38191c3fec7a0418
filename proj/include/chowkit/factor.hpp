#pragma once

#include <vector>

#include "chowkit/polynomial.hpp"

namespace chowkit {

// Greatest common divisor, normalized with normalize_content. gcd(0,0) = 0.
Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

struct FactorPower {
  Polynomial factor;
  int multiplicity;
};

struct Factorization {
  Scalar unit;
  std::vector<FactorPower> factors;  // irreducible, normalized, pairwise distinct
};

// Irreducible factorization over the ring's field: p = unit * prod f^m.
// Variable factors are included; the order is deterministic.
Factorization factor_polynomial(const Polynomial& p);

// Product of the distinct irreducible factors.
Polynomial squarefree_part(const Polynomial& p);

bool is_irreducible(const Polynomial& p);

}  // namespace chowkit
