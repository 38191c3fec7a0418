#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chowkit/cycles.hpp"

namespace chowkit {

// sum_j sum_k cofactors[j][k] * generators[j][k] = 1
struct NullCertificate {
  std::vector<std::vector<Polynomial>> generators;
  std::vector<std::vector<Polynomial>> cofactors;
  int achieved_degree = 0;  // max_j deg f_j
  long bound = 0;           // (n+1) * prod arith-deg I_j
};

struct NullResult {
  std::optional<NullCertificate> certificate;  // empty: no certificate up to the bound
  long bound = 0;
  std::vector<long> arith_degrees;
  int degrees_tried = 0;  // sweep levels 0..degrees_tried-1 were solved
};

struct BezoutFactor {
  Ideal prime;
  long exponent = 0;      // a = n * b * d
  long multiplicity = 0;  // b
  long degree = 0;        // d
};

struct BezoutCertificate {
  Ideal target;  // (I_1, ..., I_m)
  std::vector<BezoutFactor> factors;
  std::vector<Polynomial> product_generators;  // of prod P_j^{a_j}
  long bound = 0;                              // n * prod arith-deg I_i
  std::vector<long> arith_degrees;
  long exponent_sum() const;
};

// Arithmetic degree used in the bounds; the unit ideal counts as 1.
long bound_degree(const Ideal& I);

NullResult null_certificate(const std::vector<Ideal>& ideals);

BezoutCertificate bezout_certificate(const std::vector<Ideal>& ideals,
                                     DiagonalChoice choice = DiagonalChoice::Standard, unsigned long seed = 1);

bool verify_certificate(const NullCertificate& cert);
bool verify_certificate(const BezoutCertificate& cert);

}  // namespace chowkit
