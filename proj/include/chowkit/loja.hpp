#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chowkit/ideal.hpp"

namespace chowkit {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

// Polynomial with rational coefficients evaluated in complex double precision.
class NumericPoly {
 public:
  NumericPoly() = default;
  explicit NumericPoly(const Polynomial& f);
  Complex operator()(const CVec& x) const;
  Complex partial(const CVec& x, int var) const;
  int nvars() const { return nvars_; }

 private:
  struct T {
    std::vector<int> e;
    Complex c;
  };
  std::vector<T> terms_;
  int nvars_ = 0;
};

// t in C^k -> coordinates, each a polynomial in the parameter ring.
struct Parametrization {
  std::vector<Polynomial> coords;
  double param_radius = 1.0;  // parameters are sampled with |t_i| <= radius
};

struct NumericScene {
  std::vector<Ideal> ideals;
  // Components of the common zero set near the center; empty selects the
  // penalty-minimization distance oracle.
  std::vector<Parametrization> intersection;
  CVec center;
  double radius = 1.0;
  int shells = 6;  // radii 10^-1 ... 10^-shells
  int per_shell = 64;
  uint64_t seed = 1;
};

struct ShellSample {
  double radius = 0;
  double distance = 0;
  double value = 0;  // max_ij |f_ij|
};

struct ExponentEstimate {
  double slope = 0;
  double band_low = 0, band_high = 0;  // slope -/+ 2 standard errors
  long D = 0;                          // prod arith-deg I_i
  double tolerance = 0.25;
  bool within_bound = false;  // slope <= D + tolerance
  std::vector<ShellSample> samples;  // the minimizing sample of each shell
  int excluded = 0;                  // samples with distance below 1e-12
  int oracle_failures = 0;
};

struct UpperChainReport {
  double constant = 0;  // max |f| / dist over the samples
  int samples = 0;
  bool bounded = false;
};

class OracleFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Distance from x to the common zero set, via the parametrizations when the
// scene has them and Gauss-Newton on the generators otherwise.
std::optional<double> scene_distance(const NumericScene& scene, const CVec& x);

ExponentEstimate estimate_exponent(const NumericScene& scene);

// |f(x)| <= C dist(x, Z) for x near the zero set of the scene.
UpperChainReport verify_upper_chain(const NumericScene& scene, const std::vector<Polynomial>& fs);

}  // namespace chowkit
