#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "chowkit/cycles.hpp"

namespace chowkit {

// Linear map A^n -> A^{d+1}, one row per target coordinate.
struct Projection {
  std::vector<std::vector<Scalar>> rows;
  int target_dim() const { return static_cast<int>(rows.size()); }
};

// The projection is degenerate for this cycle; sample another.
class DegenerateProjection : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// pi is finite on every component of the pure d-dimensional cycle Z.
bool is_allowable(const Projection& pi, const Cycle& Z);

// Pullback of the equation of pi_*(Z), normalized with normalize_content.
Polynomial pushforward_equation(const Projection& pi, const Cycle& Z);

struct ChowConfig {
  uint64_t seed = 1;
  int window = 4;
  int max_rounds = 64;
  long initial_bound = 7;
};

struct ChowSample {
  Projection projection;
  Polynomial equation;
};

struct ChowIdealResult {
  Ideal ideal;
  std::vector<ChowSample> samples;
  int rounds = 0;  // projections evaluated over all pure parts
  uint64_t seed = 0;
  bool stabilized = false;
};

class ChowNotStabilized : public std::runtime_error {
 public:
  ChowNotStabilized(const std::string& msg, ChowIdealResult partial)
      : std::runtime_error(msg), partial(std::move(partial)) {}
  ChowIdealResult partial;
};

ChowIdealResult chow_ideal(const Cycle& Z, const ChowConfig& config = {});

// Z lives on a coordinate subspace: sub's variable i is big's variable
// embedding[i], the other variables of big vanish on Z. Checks that setting
// those variables to 0 in I^ch(j_* Z) gives I^ch(Z).
bool chow_restriction_check(const Cycle& Z, const RingPtr& big, const std::vector<int>& embedding,
                            const ChowConfig& config = {});

// Push a cycle on a coordinate subspace forward to the big ring.
Cycle embed_cycle(const Cycle& Z, const RingPtr& big, const std::vector<int>& embedding);

}  // namespace chowkit
