#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cpv {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double elapsed_s = 0.0;
};

// The ten acceptance checks. Tolerances are pinned in the implementations;
// seeds only choose the random draws, never the thresholds.
CheckResult check_calibration_identity(std::uint64_t seed);
CheckResult check_conservation(std::uint64_t seed);
CheckResult check_equilibria();
CheckResult check_collective_motion_n2(std::uint64_t seed);
CheckResult check_re_families(std::uint64_t seed);
CheckResult check_rank_stabilizer_duality(std::uint64_t seed);
CheckResult check_velocity_tables(std::uint64_t seed);
CheckResult check_landmarks();
CheckResult check_fiber_probe(std::uint64_t seed);
CheckResult check_polytope_convexity(std::uint64_t seed);

std::vector<CheckResult> run_all_checks(std::uint64_t seed);

// cmd_verify suites: calibration, conservation, stabilizers, tables,
// landmarks, re_families, fiber. Throws std::invalid_argument for an unknown
// name.
std::vector<std::string> suite_names();
std::vector<CheckResult> run_suite(const std::string& suite,
                                   std::uint64_t seed);

}  // namespace cpv
