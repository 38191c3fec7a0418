#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "chowkit/ideal.hpp"

namespace chowkit {

// The splitting engine could not certify a decomposition.
class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Minimal primes of J, each certified prime, given by reduced grevlex bases,
// pairwise incomparable, in a deterministic order. Empty for the unit ideal.
std::vector<Ideal> minimal_primes(const Ideal& J);

// True iff J is prime (radical with a single minimal prime).
bool is_prime(const Ideal& J);

struct PrimaryComponent {
  Ideal primary;
  Ideal prime;
  int dimension;
};

// Irredundant primary decomposition; the primes are exactly Ass(R/J).
std::vector<PrimaryComponent> primary_decomposition(const Ideal& J);

// Length of (R/J) localized at each minimal prime in `primes` (which must be
// exactly the minimal primes of J of top dimension or any subset of Min(J)).
std::vector<long> minimal_lengths(const Ideal& J, const std::vector<Ideal>& primes);

// Generic length of (J : Q^inf)/J along V(Q), computed by cutting with
// dim Q seeded random affine hyperplanes (two agreeing cuts required).
long generic_length(const Ideal& J, const Ideal& Q, unsigned long seed = 1);

// Degree of the projective closure of V(P) for a prime P.
long prime_degree(const Ideal& P);

}  // namespace chowkit
