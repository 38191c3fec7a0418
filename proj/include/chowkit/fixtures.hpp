#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace chowkit {

struct FixtureResult {
  std::string name;
  bool passed = false;
  // Known to fail because the stated value is wrong; a pass here is also
  // reported, since it means something changed.
  bool expected_failure = false;
  std::string detail;
  double seconds = 0;
};

// Surface family cut by s = 0 at odd n: quotient basis, both containments,
// and the stated degrees.
FixtureResult surface_family_fixture(int n);
FixtureResult cusp_fixture();
FixtureResult coordinate_axes_fixture();
FixtureResult char_p_fixture();
// `tuples` seeded random (a, b, c, d) with prime surfaces.
FixtureResult determinantal_fixture(int tuples, uint64_t seed);
FixtureResult deformation_fixture(int n);
FixtureResult loja_fixture();

std::vector<FixtureResult> run_fixture_suite(const std::string& scenes_dir);

// Times fn and fills seconds; exceptions become failures.
FixtureResult timed(const std::string& name, const std::function<FixtureResult()>& fn);

}  // namespace chowkit
