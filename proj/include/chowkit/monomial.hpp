#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace chowkit {

inline constexpr int kMaxVars = 16;

class Monomial {
 public:
  Monomial() { e_.fill(0); }

  int operator[](int i) const { return e_[i]; }
  void set(int i, int v) {
    deg_ += v - e_[i];
    e_[i] = static_cast<uint16_t>(v);
  }
  int degree() const { return static_cast<int>(deg_); }
  bool is_one() const { return deg_ == 0; }

  static Monomial var(int i, int power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e_[i] = e_[i] + o.e_[i];
    r.deg_ = deg_ + o.deg_;
    return r;
  }
  bool divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < kMaxVars; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }
  // precondition: divisor.divides(*this)
  Monomial operator/(const Monomial& d) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e_[i] = e_[i] - d.e_[i];
    r.deg_ = deg_ - d.deg_;
    return r;
  }
  Monomial lcm(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e_[i] = std::max(e_[i], o.e_[i]);
    r.recount();
    return r;
  }
  Monomial gcd(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e_[i] = std::min(e_[i], o.e_[i]);
    r.recount();
    return r;
  }
  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e_[i] && o.e_[i]) return false;
    return true;
  }
  bool operator==(const Monomial& o) const { return deg_ == o.deg_ && e_ == o.e_; }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  size_t hash() const {
    size_t h = deg_;
    for (int i = 0; i < kMaxVars; ++i) h = h * 1000003u ^ e_[i];
    return h;
  }

 private:
  void recount() {
    deg_ = 0;
    for (auto v : e_) deg_ += v;
  }
  std::array<uint16_t, kMaxVars> e_;
  uint32_t deg_ = 0;
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { Lex, GrevLex, Block };

// A total order on monomials. perm[i] is the variable sitting at position i;
// positions earlier are "bigger". Block(k) compares positions [0,k) by grevlex
// first, then the rest by grevlex.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  static MonomialOrder lex(std::vector<int> perm = {}) { return {OrderKind::Lex, 0, std::move(perm)}; }
  static MonomialOrder grevlex(std::vector<int> perm = {}) { return {OrderKind::GrevLex, 0, std::move(perm)}; }
  static MonomialOrder block(int k, std::vector<int> perm = {}) { return {OrderKind::Block, k, std::move(perm)}; }

  OrderKind kind() const { return kind_; }
  int block_size() const { return k_; }
  const std::vector<int>& perm() const { return perm_; }

  // -1, 0, 1 for a < b, a == b, a > b. n = number of ring variables.
  int compare(const Monomial& a, const Monomial& b, int n) const {
    switch (kind_) {
      case OrderKind::Lex:
        for (int i = 0; i < n; ++i) {
          int v = at(i);
          if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
        }
        return 0;
      case OrderKind::GrevLex:
        return grevlex_range(a, b, 0, n);
      case OrderKind::Block: {
        int c = grevlex_range(a, b, 0, std::min(k_, n));
        if (c) return c;
        return grevlex_range(a, b, std::min(k_, n), n);
      }
    }
    return 0;
  }

  bool operator==(const MonomialOrder& o) const { return kind_ == o.kind_ && k_ == o.k_ && perm_ == o.perm_; }
  std::string key() const;

 private:
  MonomialOrder(OrderKind k, int b, std::vector<int> p) : kind_(k), k_(b), perm_(std::move(p)) {}
  int at(int i) const { return perm_.empty() ? i : perm_[i]; }
  int grevlex_range(const Monomial& a, const Monomial& b, int lo, int hi) const {
    int da = 0, db = 0;
    for (int i = lo; i < hi; ++i) {
      da += a[at(i)];
      db += b[at(i)];
    }
    if (da != db) return da > db ? 1 : -1;
    for (int i = hi - 1; i >= lo; --i) {
      int v = at(i);
      if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
  }

  OrderKind kind_ = OrderKind::GrevLex;
  int k_ = 0;
  std::vector<int> perm_;
};

}  // namespace chowkit
