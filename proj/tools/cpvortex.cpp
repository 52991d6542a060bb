// Command-line driver: simulate trajectories, chart momentum polytopes,
// classify configurations, and run the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 input error,
//             3 runtime error (collision / failed convergence).

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cpv/analysis.hpp"
#include "cpv/integrate.hpp"
#include "cpv/serialize.hpp"
#include "cpv/verify.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitInput = 2;
constexpr int kExitRuntime = 3;

std::vector<double> parse_gammas(const std::string& csv) {
  std::vector<double> out;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw std::invalid_argument("bad strength value: " + item);
    }
  }
  if (out.size() != 2 && out.size() != 3) {
    throw std::invalid_argument("--gammas needs 2 or 3 comma-separated values");
  }
  return out;
}

int cmd_simulate(const std::string& config_path, const std::string& out_dir) {
  cpv::RunConfig rc = cpv::parse_run_config_file(config_path);
  if (!out_dir.empty()) rc.out_dir = out_dir;
  fs::create_directories(rc.out_dir);

  cpv::VortexConfig c0 = cpv::build_config(rc);
  cpv::Trajectory traj = cpv::integrate(c0, rc.hamiltonian, rc.integrator);

  cpv::write_trajectory_csv(rc.out_dir + "/trajectory.csv", traj, rc);
  cpv::write_trajectory_json(rc.out_dir + "/trajectory.json", traj, rc);

  std::cout << "samples: " << traj.samples.size() << "\n"
            << "max |dH|: " << cpv::fmt_double(traj.max_energy_drift)
            << "  (relative " << cpv::fmt_double(traj.max_rel_energy_drift)
            << ")\n"
            << "max ||dJ||_F: " << cpv::fmt_double(traj.max_momentum_drift)
            << "\n"
            << "max renormalization move: "
            << cpv::fmt_double(traj.max_renorm_move) << "\n";
  if (traj.collided) {
    std::cout << "collision at t = " << cpv::fmt_double(traj.collision_time)
              << "; partial trajectory written\n";
    return kExitRuntime;
  }
  return kExitOk;
}

int cmd_polytope(const std::vector<double>& gammas, int samples,
                 std::uint64_t seed, const std::string& out_dir) {
  if (gammas.size() != 3) {
    throw std::invalid_argument("polytope charting needs 3 strengths");
  }
  fs::create_directories(out_dir);
  cpv::RunConfig echo;
  echo.gammas = gammas;
  echo.preset = "random";
  echo.seed = seed;
  echo.out_dir = out_dir;

  cpv::Rng rng(seed);
  auto pts = cpv::sample_polytope(gammas, samples, rng);
  cpv::write_polytope_scatter_csv(out_dir + "/polytope_scatter.csv", pts, echo);

  cpv::PolytopeLandmarks lm =
      cpv::polytope_landmarks({gammas[0], gammas[1], gammas[2]});
  cpv::write_landmarks_csv(out_dir + "/polytope_landmarks.csv", lm, echo);

  json j;
  j["config"] = cpv::to_json(echo);
  j["landmarks"] = cpv::landmarks_json(lm);
  json preds;
  using Site = cpv::LandmarkSite;
  for (auto [name, site] : {std::pair{"a", Site::A}, std::pair{"b", Site::B},
                            std::pair{"c1", Site::C1}, std::pair{"c2", Site::C2},
                            std::pair{"c3", Site::C3},
                            std::pair{"interior", Site::Interior}}) {
    auto p = cpv::predict_reduced_space({gammas[0], gammas[1], gammas[2]}, site);
    json jp;
    using Kind = cpv::ReducedSpacePrediction::Kind;
    jp["kind"] = p.kind == Kind::Point          ? "point"
                 : p.kind == Kind::SmoothSphere ? "smooth_sphere"
                 : p.kind == Kind::PointedSphere
                     ? ("pointed_sphere_" + std::to_string(p.singular_points))
                     : "unknown";
    jp["rule"] = p.rule;
    preds[name] = jp;
  }
  j["reduced_space_predictions"] = preds;
  std::ofstream out(out_dir + "/polytope_landmarks.json");
  out << j.dump(2) << "\n";

  std::cout << "wrote " << samples << " samples to " << out_dir << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed,
               const std::string& out_dir) {
  std::vector<cpv::CheckResult> results = cpv::run_suite(suite, seed);
  bool all_pass = true;
  json checks = json::array();
  for (const auto& r : results) {
    all_pass = all_pass && r.pass;
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << " — "
              << r.detail << " (" << r.elapsed_s << " s)\n";
    checks.push_back({{"name", r.name},
                      {"pass", r.pass},
                      {"detail", r.detail},
                      {"elapsed_s", r.elapsed_s}});
  }
  json report;
  report["suite"] = suite;
  report["seed"] = seed;
  report["pass"] = all_pass;
  report["checks"] = checks;
  if (!out_dir.empty()) {
    fs::create_directories(out_dir);
    std::ofstream out(out_dir + "/verify_" + suite + ".json");
    out << report.dump(2) << "\n";
  } else {
    std::cout << report.dump(2) << "\n";
  }
  return all_pass ? kExitOk : kExitVerifyFail;
}

int cmd_classify(const std::string& config_path) {
  cpv::RunConfig rc = cpv::parse_run_config_file(config_path);
  cpv::VortexConfig c = cpv::build_config(rc);

  cpv::StabilizerType type = cpv::classify_stabilizer(c);
  int stab_dim = static_cast<int>(cpv::stabilizer_algebra(c).size());
  cpv::WeylPoint w = cpv::weyl_projection(cpv::momentum_map(c));
  int r0 = cpv::allowed_velocity_dim(c);
  cpv::ReResidual res = cpv::re_residual(c, rc.hamiltonian);

  std::cout << "stabilizer type: " << cpv::to_string(type) << "\n"
            << "stabilizer algebra dimension: " << stab_dim << "\n"
            << "momentum (sorted spectrum): (" << cpv::fmt_double(w[0]) << ", "
            << cpv::fmt_double(w[1]) << ", " << cpv::fmt_double(w[2]) << ")\n"
            << "allowed velocity dimension: " << r0 << "\n"
            << "relative-equilibrium residual: "
            << cpv::fmt_double(res.residual) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"point vortices on CP^2: simulation and momentum analysis"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_dir;
  std::string gammas_csv = "1,2,3";
  std::string suite = "landmarks";
  std::uint64_t seed = 42;
  int samples = 10000;

  CLI::App* simulate = app.add_subcommand("simulate", "integrate a trajectory");
  simulate->add_option("--config", config_path, "JSON run configuration")
      ->required();
  simulate->add_option("--out", out_dir, "output directory");

  CLI::App* polytope =
      app.add_subcommand("polytope", "sample the momentum polytope");
  polytope->add_option("--gammas", gammas_csv, "g1,g2,g3");
  polytope->add_option("--samples", samples, "number of random configurations");
  polytope->add_option("--seed", seed, "random seed");
  polytope->add_option("--out", out_dir, "output directory")->required();

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite, "suite name")->required();
  verify->add_option("--seed", seed, "random seed");
  verify->add_option("--out", out_dir, "directory for the JSON report");

  CLI::App* classify =
      app.add_subcommand("classify", "stabilizer and momentum report");
  classify->add_option("--config", config_path, "JSON run configuration")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (simulate->parsed()) return cmd_simulate(config_path, out_dir);
    if (polytope->parsed()) {
      return cmd_polytope(parse_gammas(gammas_csv), samples, seed, out_dir);
    }
    if (verify->parsed()) return cmd_verify(suite, seed, out_dir);
    if (classify->parsed()) return cmd_classify(config_path);
  } catch (const cpv::CollisionError& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "runtime error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
