#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chowkit/ideal.hpp"

namespace chowkit {

// cofactor * prod_{i in factors} generators[i]
struct ProductTerm {
  std::vector<int> factors;
  Polynomial cofactor;
};

// element^k + sum_j i_j element^{k-j} = 0 with i_j = sum of j-fold products.
struct DependenceCertificate {
  Polynomial element;
  std::vector<Polynomial> generators;
  int degree = 0;
  std::vector<std::vector<ProductTerm>> coefficients;  // coefficients[j-1] builds i_j

  Polynomial coefficient(int j) const;
};

// x_i -> scalars[i] * t^weights[i]; an order of nullopt means the image is 0.
struct ValuationWitness {
  std::vector<long> weights;
  std::vector<Scalar> scalars;
  std::optional<long> order_element;
  std::optional<long> order_ideal;
};

enum class Verdict { In, Out, Unknown };

struct ClosureVerdict {
  Verdict verdict = Verdict::Unknown;
  // One certificate for the element, or one per term when the terms were
  // certified separately (monomial ideals).
  std::vector<DependenceCertificate> certificates;
  std::optional<ValuationWitness> witness;
  std::string note;
};

struct ClosureBounds {
  int max_k = 4;
  // Accepted for interface compatibility; the dependence search is an exact
  // membership test for each k and has no auxiliary degree cutoff.
  int max_aux_degree = -1;
  int witness_weight_bound = 6;
  uint64_t seed = 1;
};

// Exact integral closure of a monomial ideal (Newton polyhedron).
Ideal monomial_closure(const Ideal& I);

ClosureVerdict closure_membership(const Polynomial& f, const Ideal& I, const ClosureBounds& bounds = {});

bool verify_certificate(const DependenceCertificate& cert, const Ideal& I);
// Recomputes the orders from weights and scalars.
bool verify_witness(const ValuationWitness& w, const Polynomial& f, const Ideal& I);
bool verify_verdict(const ClosureVerdict& v, const Polynomial& f, const Ideal& I);

// t-adic order of f under x_i -> c_i t^{w_i}; nullopt when the image is 0.
std::optional<long> valuation_order(const Polynomial& f, const std::vector<long>& weights,
                                    const std::vector<Scalar>& scalars);

struct BrianconSkodaEntry {
  Polynomial candidate;
  Verdict closure_verdict = Verdict::Unknown;  // for I^n
  bool member = false;                          // plain membership in I
};

struct BrianconSkodaReport {
  std::vector<BrianconSkodaEntry> entries;
  std::vector<int> violations;  // certified in closure(I^n) but not in I
  bool ok() const { return violations.empty(); }
};

BrianconSkodaReport brianconskoda_check(const Ideal& I, int n, const std::vector<Polynomial>& candidates,
                                        const ClosureBounds& bounds = {});

enum class RestrictionStatus { Equal, Consistent, Different };

struct RestrictionReport {
  RestrictionStatus status = RestrictionStatus::Equal;
  std::vector<Polynomial> candidates;  // in the ring without var
  std::vector<Verdict> big_side, small_side;
};

// Compares closure((I, var)) mod var with closure of the image of I in the
// ring without var, exactly for monomial ideals and on a candidate set of
// monomials otherwise.
RestrictionReport restriction_commutes_check(const Ideal& I, int var, const ClosureBounds& bounds = {});

std::string to_string(Verdict v);

}  // namespace chowkit
