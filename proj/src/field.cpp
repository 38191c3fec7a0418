#include "chowkit/field.hpp"

#include <stdexcept>

namespace chowkit {

bool is_prime_u32(uint32_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(uint32_t p) {
  if (p >= (1u << 31) || !is_prime_u32(p))
    throw std::invalid_argument("field characteristic must be a prime below 2^31: " + std::to_string(p));
  Field f;
  f.p_ = p;
  return f;
}

static mpz_class mod_p(const mpz_class& a, uint32_t p) {
  mpz_class r = a % p;
  if (r < 0) r += p;
  return r;
}

Scalar Field::normalize(const Scalar& a) const {
  if (p_ == 0) return a;
  mpz_class num = mod_p(a.get_num(), p_);
  mpz_class den = mod_p(a.get_den(), p_);
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p_));
  mpz_class dinv;
  mpz_class pp(p_);
  mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t());
  return Scalar(mod_p(num * dinv, p_));
}

Scalar Field::add(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a + b;
  mpz_class r = a.get_num() + b.get_num();
  if (r >= p_) r -= p_;
  return Scalar(r);
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a - b;
  mpz_class r = a.get_num() - b.get_num();
  if (r < 0) r += p_;
  return Scalar(r);
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const {
  if (p_ == 0) return a * b;
  return Scalar(mod_p(a.get_num() * b.get_num(), p_));
}

Scalar Field::neg(const Scalar& a) const {
  if (p_ == 0) return -a;
  if (a == 0) return a;
  return Scalar(mpz_class(p_) - a.get_num());
}

Scalar Field::inv(const Scalar& a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  if (p_ == 0) return 1 / a;
  mpz_class r;
  mpz_class pp(p_);
  mpz_class an = a.get_num();
  mpz_invert(r.get_mpz_t(), an.get_mpz_t(), pp.get_mpz_t());
  return Scalar(r);
}

Scalar Field::pow(const Scalar& a, unsigned long e) const {
  Scalar r = from_int(1), b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::string Field::name() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

Field Field::parse(const std::string& s) {
  if (s == "Q" || s == "q") return rationals();
  auto pos = s.find(':');
  if (pos != std::string::npos) {
    std::string head = s.substr(0, pos);
    if (head == "Fp" || head == "fp") {
      unsigned long v = std::stoul(s.substr(pos + 1));
      return prime(static_cast<uint32_t>(v));
    }
  }
  throw std::invalid_argument("unknown field '" + s + "' (expected Q or Fp:<prime>)");
}

}  // namespace chowkit
