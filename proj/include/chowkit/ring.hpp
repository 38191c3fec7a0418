#pragma once

#include <memory>
#include <string>
#include <vector>

#include "chowkit/field.hpp"
#include "chowkit/monomial.hpp"

namespace chowkit {

class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring {
 public:
  Ring(std::vector<std::string> vars, Field field, MonomialOrder order);

  int nvars() const { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::string& var(int i) const { return vars_[i]; }
  int index_of(const std::string& name) const;  // -1 if absent
  const Field& field() const { return field_; }
  const MonomialOrder& order() const { return order_; }

  int compare(const Monomial& a, const Monomial& b) const { return order_.compare(a, b, nvars()); }

  // Same variables and field: polynomials can be moved between the two by re-sorting.
  bool compatible(const Ring& o) const { return vars_ == o.vars_ && field_ == o.field_; }

  std::string describe() const;

 private:
  std::vector<std::string> vars_;
  Field field_;
  MonomialOrder order_;
};

RingPtr make_ring(std::vector<std::string> vars, Field field = Field::rationals(),
                  MonomialOrder order = MonomialOrder::grevlex());
RingPtr with_order(const RingPtr& r, const MonomialOrder& ord);

// A ring with extra variables. The new ring lists `prepend`, then r's
// variables, then `append`; embedding() maps old index i to its new index.
struct RingExtension {
  RingPtr ring;
  std::vector<int> embedding;
};
RingExtension extend_ring(const RingPtr& r, const std::vector<std::string>& prepend,
                          const std::vector<std::string>& append,
                          MonomialOrder order = MonomialOrder::grevlex());

std::string fresh_name(const RingPtr& r, const std::string& base);

}  // namespace chowkit
