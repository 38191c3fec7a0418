#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "chowkit/groebner.hpp"

namespace chowkit {

class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal unit(const RingPtr& ring);
  static Ideal zero(const RingPtr& ring) { return Ideal(ring, {}); }
  static Ideal maximal_at_origin(const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }

  // Reduced basis under `ord` (polynomials live in the ring with that order).
  const std::vector<Polynomial>& groebner(const MonomialOrder& ord) const;
  // Canonical: grevlex in the declared variable order.
  const std::vector<Polynomial>& groebner() const;

  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& J) const;  // J subset of this
  Polynomial normal_form(const Polynomial& f) const;
  bool is_unit() const;
  bool is_zero() const;
  bool is_monomial() const;  // generated by monomials (checked on the reduced basis)

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::string, std::shared_ptr<const std::vector<Polynomial>>> bases;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

// Hook for persisting bases between runs; consulted by Ideal::groebner.
class BasisStore {
 public:
  virtual ~BasisStore() = default;
  virtual bool load(const std::string& key, const RingPtr& ring, std::vector<Polynomial>& out) = 0;
  virtual void save(const std::string& key, const std::vector<Polynomial>& basis) = 0;
};
void set_basis_store(std::shared_ptr<BasisStore> store);
std::string basis_key(const RingPtr& ring, const std::vector<Polynomial>& gens);

bool ideal_equal(const Ideal& I, const Ideal& J);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_sum(const Ideal& I, const std::vector<Polynomial>& extra);
Ideal ideal_product(const Ideal& I, const Ideal& J);
Ideal ideal_power(const Ideal& I, int k);
Ideal ideal_intersection(const Ideal& I, const Ideal& J);
Ideal ideal_quotient(const Ideal& I, const Polynomial& f);
Ideal ideal_quotient(const Ideal& I, const Ideal& J);

// I : J^infinity by iterated colon; throws after max_iter steps. `steps`
// receives the number of colon steps taken before stabilizing.
Ideal saturation(const Ideal& I, const Ideal& J, int max_iter = 64, int* steps = nullptr);
Ideal saturation(const Ideal& I, const Polynomial& f, int max_iter = 64, int* steps = nullptr);
// Single elimination (I, 1 - t f) ∩ K[x]; same ideal as saturation(I, f).
Ideal saturate_element(const Ideal& I, const Polynomial& f);

// I ∩ K[other variables], returned in the same ring.
Ideal eliminate(const Ideal& I, const std::vector<int>& vars);

// Move an ideal whose generators avoid some variables into a smaller ring;
// target variable i corresponds to source variable index_map[i].
Ideal restrict_to(const Ideal& I, const RingPtr& target, const std::vector<int>& index_map);

struct HilbertData {
  int dimension = -1;  // -1 for the unit ideal
  long degree = 0;
  std::vector<long> numerator;  // of HS = N(t)/(1-t)^n for the leading-term ideal
};

std::vector<long> hilbert_numerator(const std::vector<Monomial>& gens, int n);
HilbertData hilbert_data(const Ideal& I);
// Degree via the homogenized basis (projective closure); agrees with hilbert_data.
long projective_degree(const Ideal& I);
int dimension(const Ideal& I);
// dim_K R/I; throws when infinite.
long vdim(const Ideal& I);
// dim_K A/B for B ⊆ A with finite quotient; throws when infinite.
long quotient_dimension(const Ideal& A, const Ideal& B);
// Standard monomials of a zero-dimensional ideal under grevlex.
std::vector<Monomial> standard_monomials(const Ideal& I);

}  // namespace chowkit
