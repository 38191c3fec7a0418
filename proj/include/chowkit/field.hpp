#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace chowkit {

// Coefficients are always mpq_class. Over F_p they are kept as integers in [0, p).
using Scalar = mpq_class;

inline Scalar rational(const mpz_class& num, const mpz_class& den) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field prime(uint32_t p);

  bool is_rational() const { return p_ == 0; }
  uint32_t characteristic() const { return p_; }

  Scalar normalize(const Scalar& a) const;
  Scalar from_int(long v) const { return normalize(Scalar(v)); }
  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  Scalar inv(const Scalar& a) const;  // throws on zero
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }
  Scalar pow(const Scalar& a, unsigned long e) const;

  std::string name() const;  // "Q" or "Fp:5"
  static Field parse(const std::string& s);

  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }

 private:
  uint32_t p_ = 0;
};

bool is_prime_u32(uint32_t n);

}  // namespace chowkit
