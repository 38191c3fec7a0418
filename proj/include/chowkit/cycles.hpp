#pragma once

#include <string>
#include <vector>

#include "chowkit/splitting.hpp"

namespace chowkit {

struct Component {
  Ideal prime;  // asserted prime
  int dimension = -1;
  long degree = 0;
};

// Fills dimension and degree from hilbert_data; primality is not checked.
Component make_component(const Ideal& prime);
// Same, after certifying primality; throws std::invalid_argument otherwise.
Component make_checked_component(const Ideal& prime);

// Ideal of the image of t -> (images[0](t), ..., images[n-1](t)). The images
// live in a ring whose first `nparams` variables are the parameters and whose
// remaining variables are target's variables (which the images must not use).
Ideal parametrization_ideal(const RingPtr& target, const std::vector<std::string>& params,
                            const std::vector<std::string>& images);

struct CycleTerm {
  Component component;
  long multiplicity = 0;
};

class Cycle {
 public:
  Cycle() = default;
  explicit Cycle(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const { return ring_; }
  const std::vector<CycleTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  // Merges with an equal component already present.
  void add(const Component& c, long multiplicity);
  void add(const Cycle& other);
  Cycle scaled(long factor) const;

  std::vector<int> dimensions() const;  // distinct, descending
  Cycle pure_part(int d) const;
  bool is_pure() const { return dimensions().size() <= 1; }

  bool operator==(const Cycle& o) const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<CycleTerm> terms_;
};

long cycle_degree(const Cycle& Z);

// Z ncap (l = 0) for an affine-linear l.
Cycle ncap(const Cycle& Z, const Polynomial& l);

// Ring of m copies of r's variables, named v_1, ..., v_m; copy k of
// variable i sits at index k*n + i.
RingPtr product_ring(const RingPtr& r, int m);
// Cross product of cycles, as a cycle on the product ring.
Cycle product_cycle(const std::vector<Cycle>& cycles, const RingPtr& prod);
// x_i^(r) - x_i^(r+1) for all i and r.
std::vector<Polynomial> standard_diagonal(const RingPtr& prod, int n, int m);
// Random invertible recombination of the standard diagonal hyperplanes.
std::vector<Polynomial> random_diagonal(const RingPtr& prod, int n, int m, unsigned long seed);

enum class DiagonalChoice { Standard, SeededRandom };

Cycle vt_intersection(const std::vector<Cycle>& cycles, DiagonalChoice choice = DiagonalChoice::Standard,
                      unsigned long seed = 1);
// Explicit ordered hyperplanes in product_ring(ring, m); their common zero set
// must be the diagonal (throws std::invalid_argument otherwise).
Cycle vt_intersection(const std::vector<Cycle>& cycles, const std::vector<Polynomial>& hyperplanes);

// prod I(Z_i)^{a_i}; the unit ideal for the empty cycle.
Ideal ideal_of_cycle(const Cycle& Z);
Ideal ideal_of_cycle(const Cycle& Z, const RingPtr& ring);

// Associated primes of R/J weighted by the generic length of the sections
// supported in dimension at most dim P.
Cycle associated_cycle(const Ideal& J);
long arith_degree(const Ideal& J);

}  // namespace chowkit
