#pragma once

#include <map>
#include <random>
#include <string>
#include <vector>

#include "chowkit/parse.hpp"

namespace testing_support {

using namespace chowkit;

inline RingPtr ring(std::vector<std::string> vars, Field f = Field::rationals()) { return make_ring(std::move(vars), f); }

inline Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(s, r); }

inline std::vector<Polynomial> Ps(const RingPtr& r, const std::string& s) { return parse_polynomial_list(s, r); }

// Random sparse polynomial with small integer coefficients.
inline Polynomial random_poly(const RingPtr& r, std::mt19937_64& rng, int max_terms = 4, int max_deg = 3) {
  std::uniform_int_distribution<int> nt(0, max_terms), co(-5, 5), ex(0, max_deg);
  std::vector<Term> terms;
  int k = nt(rng);
  for (int i = 0; i < k; ++i) {
    Monomial m;
    for (int v = 0; v < r->nvars(); ++v) m.set(v, ex(rng) / (r->nvars() > 2 ? 2 : 1));
    terms.push_back({m, Scalar(co(rng))});
  }
  return Polynomial::from_terms(r, std::move(terms));
}

}  // namespace testing_support
