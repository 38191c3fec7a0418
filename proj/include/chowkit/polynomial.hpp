#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chowkit/ring.hpp"

namespace chowkit {

struct Term {
  Monomial m;
  Scalar c;
};

// Sparse polynomial; terms sorted strictly descending under the ring's order,
// no zero coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr r) : ring_(std::move(r)) {}

  static Polynomial constant(const RingPtr& r, const Scalar& c);
  static Polynomial variable(const RingPtr& r, int i);
  static Polynomial monomial(const RingPtr& r, const Monomial& m, const Scalar& c = 1);
  // Accepts terms in any order with repeats; merges and drops zeros.
  static Polynomial from_terms(const RingPtr& r, std::vector<Term> terms);
  // Trusted: terms already sorted, normalized, nonzero.
  static Polynomial from_sorted(const RingPtr& r, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  const Field& field() const { return ring_->field(); }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }
  int total_degree() const;  // -1 for zero
  int degree_in(int var) const;
  bool uses_var(int var) const { return degree_in(var) > 0; }
  std::vector<int> support() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }

  const Monomial& lm() const { return terms_.front().m; }
  const Scalar& lc() const { return terms_.front().c; }
  Scalar coefficient(const Monomial& m) const;
  Scalar constant_term() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial scale(const Scalar& c) const;
  Polynomial mul_term(const Monomial& m, const Scalar& c) const;
  Polynomial pow(unsigned e) const;
  Polynomial monic() const;

  // Same variables and field, new order.
  Polynomial to_ring(const RingPtr& r) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same(const Polynomial& o) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

// images[i] is the image of variable i; all images share one target ring.
Polynomial substitute(const Polynomial& p, const std::vector<Polynomial>& images);
// Substitute selected variables only; others map to themselves (same ring).
Polynomial substitute_vars(const Polynomial& p, const std::vector<std::pair<int, Polynomial>>& subs);
// Move p into target ring, sending variable i to target variable index_map[i] (monomial relabeling).
Polynomial relabel(const Polynomial& p, const RingPtr& target, const std::vector<int>& index_map);

Polynomial derivative(const Polynomial& p, int var);

// hring must contain p's variables at positions `embedding` plus the new variable hvar.
Polynomial homogenize(const Polynomial& p, const RingPtr& hring, const std::vector<int>& embedding, int hvar);
// Inverse: hvar set to 1, result moved back to `target` whose variable i is hring variable embedding[i].
Polynomial dehomogenize(const Polynomial& p, const RingPtr& target, const std::vector<int>& embedding, int hvar);

// Over Q: integer coefficients with content 1 and positive leading coefficient under lex.
// Over F_p: monic under lex.
Polynomial normalize_content(const Polynomial& p);
// LCM of denominators times p divided by gcd of numerators; sign unchanged.
Polynomial primitive_part(const Polynomial& p);

// Exact quotient a/b if b divides a, else nullopt.
std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b);

std::string scalar_to_string(const Scalar& c);

}  // namespace chowkit
