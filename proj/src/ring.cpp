#include "chowkit/ring.hpp"

#include <stdexcept>

namespace chowkit {

std::string MonomialOrder::key() const {
  std::string s;
  switch (kind_) {
    case OrderKind::Lex: s = "lex"; break;
    case OrderKind::GrevLex: s = "grevlex"; break;
    case OrderKind::Block: s = "block" + std::to_string(k_); break;
  }
  for (int v : perm_) s += "," + std::to_string(v);
  return s;
}

Ring::Ring(std::vector<std::string> vars, Field field, MonomialOrder order)
    : vars_(std::move(vars)), field_(field), order_(std::move(order)) {
  if (nvars() > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
  if (!order_.perm().empty() && static_cast<int>(order_.perm().size()) != nvars())
    throw std::invalid_argument("order permutation length does not match the variable count");
  for (size_t i = 0; i < vars_.size(); ++i)
    for (size_t j = i + 1; j < vars_.size(); ++j)
      if (vars_[i] == vars_[j]) throw std::invalid_argument("duplicate variable " + vars_[i]);
}

int Ring::index_of(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (vars_[i] == name) return i;
  return -1;
}

std::string Ring::describe() const {
  std::string s = field_.name() + "[";
  for (int i = 0; i < nvars(); ++i) s += (i ? "," : "") + vars_[i];
  return s + "] " + order_.key();
}

RingPtr make_ring(std::vector<std::string> vars, Field field, MonomialOrder order) {
  return std::make_shared<const Ring>(std::move(vars), field, std::move(order));
}

RingPtr with_order(const RingPtr& r, const MonomialOrder& ord) {
  if (r->order() == ord) return r;
  return make_ring(r->vars(), r->field(), ord);
}

RingExtension extend_ring(const RingPtr& r, const std::vector<std::string>& prepend,
                          const std::vector<std::string>& append, MonomialOrder order) {
  std::vector<std::string> vars = prepend;
  RingExtension ext;
  for (int i = 0; i < r->nvars(); ++i) {
    ext.embedding.push_back(static_cast<int>(vars.size()));
    vars.push_back(r->var(i));
  }
  vars.insert(vars.end(), append.begin(), append.end());
  ext.ring = make_ring(std::move(vars), r->field(), std::move(order));
  return ext;
}

std::string fresh_name(const RingPtr& r, const std::string& base) {
  std::string name = base;
  for (int k = 0; r->index_of(name) >= 0; ++k) name = base + "_" + std::to_string(k);
  return name;
}

}  // namespace chowkit
