#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cpv/analysis.hpp"
#include "cpv/integrate.hpp"
#include "cpv/vortex.hpp"

namespace cpv {

// Parsed experiment description. Complex numbers are serialized as [re, im]
// pairs everywhere; a point is a list of three such pairs.
struct RunConfig {
  std::vector<double> gammas;
  std::string preset;               // "", or one of the named presets below
  std::vector<Vector3c> points;     // used when preset is empty
  std::uint64_t seed = 0;
  HamiltonianSpec hamiltonian = HamiltonianSpec::log_sin();
  IntegratorSpec integrator;
  std::string out_dir = ".";
};

// Named presets: triple, totally_orthogonal, semi_orthogonal, coplanar,
// random. For N = 2 the presets that need three slots degrade to their
// two-point analogue; random draws N = gammas.size() points from seed.
VortexConfig build_config(const RunConfig& rc);

RunConfig parse_run_config(const nlohmann::json& j);
RunConfig parse_run_config_file(const std::string& path);
nlohmann::json to_json(const RunConfig& rc);

nlohmann::json complex_json(const Complex& z);
nlohmann::json matrix_json(const Matrix3c& m);
nlohmann::json trajectory_json(const Trajectory& t, const RunConfig& echo);

// Round-trippable decimal formatting used for all numeric file output.
std::string fmt_double(double x);

// Trajectory CSV. Columns, fixed order:
//   t, then per point j: reZ<j>_1, imZ<j>_1, ..., reZ<j>_3, imZ<j>_3,
//   then H, lambda1, lambda2, lambda3, then pairwise distances
//   (d12 for N=2; d12, d13, d23 for N=3).
// The first line is a '#' comment carrying the RunConfig echo as JSON.
void write_trajectory_csv(const std::string& path, const Trajectory& t,
                          const RunConfig& echo);

void write_trajectory_json(const std::string& path, const Trajectory& t,
                           const RunConfig& echo);

// Polytope scatter CSV: lambda1, lambda2, lambda3, x, y (chamber coords).
void write_polytope_scatter_csv(const std::string& path,
                                const std::vector<WeylPoint>& samples,
                                const RunConfig& echo);

// Landmarks, both as CSV (name, lambda1..3, x, y) and JSON.
void write_landmarks_csv(const std::string& path, const PolytopeLandmarks& lm,
                         const RunConfig& echo);
nlohmann::json landmarks_json(const PolytopeLandmarks& lm);

nlohmann::json fiber_report_json(const FiberProbeReport& report);

}  // namespace cpv
