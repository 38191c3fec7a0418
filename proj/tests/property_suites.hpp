#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Seeded randomized suites shared by the unit tests and the acceptance run.
namespace suites {

struct SuiteReport {
  std::string name;
  int cases = 0;
  int violations = 0;
  std::string first_violation;
  double seconds = 0;
};

SuiteReport ncap_degree(int cases, uint64_t seed);
SuiteReport vt_degree(int cases, uint64_t seed);
SuiteReport chow_inside_cycle_ideal(int cases, uint64_t seed);
SuiteReport product_ideal_containment(int cases, uint64_t seed);
SuiteReport briancon_skoda(int cases, uint64_t seed);
SuiteReport closure_idempotence(int cases, uint64_t seed);
SuiteReport intersection_closure(int cases, uint64_t seed);

std::vector<SuiteReport> run_all(int cases, uint64_t seed);

}  // namespace suites
