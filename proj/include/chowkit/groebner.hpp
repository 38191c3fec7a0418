#pragma once

#include <optional>
#include <vector>

#include "chowkit/polynomial.hpp"

namespace chowkit {

// Reduced, monic Groebner basis of the ideal generated by gens, under
// `ring`'s monomial order. gens may live in any ring compatible with `ring`.
// Output sorted ascending by leading monomial.
std::vector<Polynomial> groebner_basis(const std::vector<Polynomial>& gens, const RingPtr& ring);

// Same, recording how each basis element is built from the generators:
// basis[i] = sum_k cofactors[i][k] * gens[k].
struct TrackedBasis {
  std::vector<Polynomial> gens;
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> cofactors;
};
TrackedBasis groebner_basis_tracked(const std::vector<Polynomial>& gens, const RingPtr& ring);

// Full normal form with respect to a Groebner basis (any basis works as a
// divisor set; uniqueness needs a Groebner basis). Result lives in gb's ring.
Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& gb);
bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& gb);

// Quotients q_k with f = sum q_k * gens_k, or nullopt when f is not in the ideal.
std::optional<std::vector<Polynomial>> lift(const Polynomial& f, const TrackedBasis& tb);

struct GroebnerStats {
  long pairs = 0;
  long zero_reductions = 0;
};
GroebnerStats last_groebner_stats();

}  // namespace chowkit
