#include "cpv/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace cpv {

using nlohmann::json;

std::string fmt_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

json complex_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

static Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) {
    throw std::invalid_argument("expected complex as [re, im]");
  }
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json matrix_json(const Matrix3c& m) {
  json rows = json::array();
  for (int r = 0; r < 3; ++r) {
    json row = json::array();
    for (int c = 0; c < 3; ++c) row.push_back(complex_json(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

static json point_json(const ProjectivePoint& p) {
  json out = json::array();
  for (int r = 0; r < 3; ++r) out.push_back(complex_json(p.rep()[r]));
  return out;
}

static json weyl_json(const WeylPoint& w) {
  return json::array({w[0], w[1], w[2]});
}

// --- RunConfig ---------------------------------------------------------------

static const char* method_name(StepMethod m) {
  return m == StepMethod::Rk4Projected ? "rk4_projected" : "midpoint_projected";
}

static StepMethod method_from(const std::string& s) {
  if (s == "rk4_projected") return StepMethod::Rk4Projected;
  if (s == "midpoint_projected") return StepMethod::MidpointProjected;
  throw std::invalid_argument("unknown integrator method: " + s);
}

static json hamiltonian_json(const HamiltonianSpec& h) {
  json out;
  switch (h.kind()) {
    case Interaction::LogSin:
      out["kind"] = "log_sin";
      break;
    case Interaction::Cosine:
      out["kind"] = "cosine";
      break;
    case Interaction::CustomTable: {
      out["kind"] = "custom_table";
      json nodes = json::array();
      for (const auto& [d, v] : h.nodes()) nodes.push_back(json::array({d, v}));
      out["nodes"] = nodes;
      break;
    }
  }
  out["scale"] = h.scale();
  return out;
}

static HamiltonianSpec hamiltonian_from(const json& j) {
  std::string kind = j.value("kind", "log_sin");
  double scale = j.value("scale", 1.0);
  if (kind == "log_sin") return HamiltonianSpec::log_sin(scale);
  if (kind == "cosine") return HamiltonianSpec::cosine(scale);
  if (kind == "custom_table") {
    if (!j.contains("nodes")) {
      throw std::invalid_argument("custom_table needs a nodes array");
    }
    std::vector<std::pair<double, double>> nodes;
    for (const auto& n : j.at("nodes")) {
      nodes.emplace_back(n.at(0).get<double>(), n.at(1).get<double>());
    }
    return HamiltonianSpec::custom_table(std::move(nodes), scale);
  }
  throw std::invalid_argument("unknown hamiltonian kind: " + kind);
}

RunConfig parse_run_config(const json& j) {
  RunConfig rc;
  if (!j.contains("gammas") || !j.at("gammas").is_array() ||
      j.at("gammas").empty()) {
    throw std::invalid_argument("config: gammas must be a nonempty array");
  }
  rc.gammas = j.at("gammas").get<std::vector<double>>();
  rc.seed = j.value("seed", std::uint64_t{0});

  if (j.contains("points")) {
    const json& p = j.at("points");
    if (p.is_string()) {
      rc.preset = p.get<std::string>();
    } else if (p.is_object() && p.contains("preset")) {
      rc.preset = p.at("preset").get<std::string>();
      if (p.contains("seed")) rc.seed = p.at("seed").get<std::uint64_t>();
    } else if (p.is_array()) {
      for (const auto& pt : p) {
        if (!pt.is_array() || pt.size() != 3) {
          throw std::invalid_argument("config: each point needs 3 components");
        }
        Vector3c v;
        for (int r = 0; r < 3; ++r) v[r] = complex_from_json(pt[static_cast<std::size_t>(r)]);
        rc.points.push_back(v);
      }
    } else {
      throw std::invalid_argument("config: points must be a preset or an array");
    }
  } else {
    rc.preset = "random";
  }

  if (j.contains("hamiltonian")) rc.hamiltonian = hamiltonian_from(j.at("hamiltonian"));
  if (j.contains("integrator")) {
    const json& ji = j.at("integrator");
    rc.integrator.method = method_from(ji.value("method", "rk4_projected"));
    rc.integrator.dt = ji.value("dt", 1e-3);
    rc.integrator.steps = ji.value("steps", 10000L);
    rc.integrator.monitor_every = ji.value("monitor_every", 10L);
    rc.integrator.validate();
  }
  rc.out_dir = j.value("out", std::string("."));
  return rc;
}

RunConfig parse_run_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config parse error: ") + e.what());
  }
  return parse_run_config(j);
}

json to_json(const RunConfig& rc) {
  json j;
  j["gammas"] = rc.gammas;
  if (!rc.preset.empty()) {
    j["points"] = rc.preset;
  } else {
    json pts = json::array();
    for (const auto& v : rc.points) {
      json p = json::array();
      for (int r = 0; r < 3; ++r) p.push_back(complex_json(v[r]));
      pts.push_back(p);
    }
    j["points"] = pts;
  }
  j["seed"] = rc.seed;
  j["hamiltonian"] = hamiltonian_json(rc.hamiltonian);
  j["integrator"] = {{"method", method_name(rc.integrator.method)},
                     {"dt", rc.integrator.dt},
                     {"steps", rc.integrator.steps},
                     {"monitor_every", rc.integrator.monitor_every}};
  // the output destination is not part of the experiment, so it is not
  // echoed; echoes stay byte-identical wherever the files land
  return j;
}

VortexConfig build_config(const RunConfig& rc) {
  const std::size_t n = rc.gammas.size();
  if (n != 2 && n != 3) {
    throw std::invalid_argument("config: need 2 or 3 strengths");
  }
  std::vector<ProjectivePoint> pts;
  auto e1 = ProjectivePoint::coordinate(0);
  auto e2 = ProjectivePoint::coordinate(1);
  auto e3 = ProjectivePoint::coordinate(2);
  ProjectivePoint diag = make_point(Vector3c(1.0, 1.0, 0.0));

  if (rc.preset.empty()) {
    if (rc.points.size() != n) {
      throw std::invalid_argument("config: need one point per strength");
    }
    for (const auto& v : rc.points) pts.push_back(make_point(v));
  } else if (rc.preset == "random") {
    Rng rng(rc.seed);
    for (std::size_t j = 0; j < n; ++j) pts.push_back(random_point(rng));
  } else if (rc.preset == "triple") {
    pts.assign(n, e1);
  } else if (rc.preset == "totally_orthogonal") {
    pts = n == 2 ? std::vector<ProjectivePoint>{e1, e2}
                 : std::vector<ProjectivePoint>{e1, e2, e3};
  } else if (rc.preset == "semi_orthogonal") {
    if (n != 3) throw std::invalid_argument("semi_orthogonal preset needs N=3");
    pts = {e3, e1, diag};
  } else if (rc.preset == "coplanar") {
    if (n != 3) throw std::invalid_argument("coplanar preset needs N=3");
    pts = {e1, e2, diag};
  } else {
    throw std::invalid_argument("unknown preset: " + rc.preset);
  }
  return VortexConfig(std::move(pts), rc.gammas);
}

// --- writers ------------------------------------------------------------------

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  return out;
}

void write_echo_comment(std::ofstream& out, const RunConfig& echo) {
  out << "# config " << to_json(echo).dump() << "\n";
}

}  // namespace

void write_trajectory_csv(const std::string& path, const Trajectory& t,
                          const RunConfig& echo) {
  auto out = open_out(path);
  write_echo_comment(out, echo);
  if (t.samples.empty()) {
    out << "t\n";
    return;
  }
  const int n = t.samples.front().config.size();
  out << "t";
  for (int j = 1; j <= n; ++j) {
    for (int r = 1; r <= 3; ++r) {
      out << ",reZ" << j << "_" << r << ",imZ" << j << "_" << r;
    }
  }
  out << ",H,lambda1,lambda2,lambda3";
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) out << ",d" << i << j;
  }
  out << "\n";
  for (const auto& s : t.samples) {
    out << fmt_double(s.t);
    for (const auto& p : s.config.points) {
      for (int r = 0; r < 3; ++r) {
        out << "," << fmt_double(p.rep()[r].real()) << ","
            << fmt_double(p.rep()[r].imag());
      }
    }
    out << "," << fmt_double(s.energy);
    for (int i = 0; i < 3; ++i) out << "," << fmt_double(s.weyl[i]);
    for (double d : s.distances) out << "," << fmt_double(d);
    out << "\n";
  }
}

json trajectory_json(const Trajectory& t, const RunConfig& echo) {
  json j;
  j["config"] = to_json(echo);
  j["collided"] = t.collided;
  if (t.collided) j["collision_time"] = t.collision_time;
  j["max_energy_drift"] = t.max_energy_drift;
  j["max_rel_energy_drift"] = t.max_rel_energy_drift;
  j["max_momentum_drift"] = t.max_momentum_drift;
  j["max_distance_drift"] = t.max_distance_drift;
  j["max_renorm_move"] = t.max_renorm_move;
  json samples = json::array();
  for (const auto& s : t.samples) {
    json js;
    js["t"] = s.t;
    json pts = json::array();
    for (const auto& p : s.config.points) pts.push_back(point_json(p));
    js["points"] = pts;
    js["H"] = s.energy;
    js["momentum"] = matrix_json(s.momentum.matrix());
    js["lambda"] = weyl_json(s.weyl);
    js["distances"] = s.distances;
    samples.push_back(js);
  }
  j["samples"] = samples;
  return j;
}

void write_trajectory_json(const std::string& path, const Trajectory& t,
                           const RunConfig& echo) {
  auto out = open_out(path);
  out << trajectory_json(t, echo).dump(2) << "\n";
}

void write_polytope_scatter_csv(const std::string& path,
                                const std::vector<WeylPoint>& samples,
                                const RunConfig& echo) {
  auto out = open_out(path);
  write_echo_comment(out, echo);
  out << "lambda1,lambda2,lambda3,x,y\n";
  for (const auto& w : samples) {
    Eigen::Vector2d xy = chamber_coords(w);
    out << fmt_double(w[0]) << "," << fmt_double(w[1]) << ","
        << fmt_double(w[2]) << "," << fmt_double(xy[0]) << ","
        << fmt_double(xy[1]) << "\n";
  }
}

void write_landmarks_csv(const std::string& path, const PolytopeLandmarks& lm,
                         const RunConfig& echo) {
  auto out = open_out(path);
  write_echo_comment(out, echo);
  out << "name,lambda1,lambda2,lambda3,x,y\n";
  auto row = [&](const char* name, const WeylPoint& w) {
    Eigen::Vector2d xy = chamber_coords(w);
    out << name << "," << fmt_double(w[0]) << "," << fmt_double(w[1]) << ","
        << fmt_double(w[2]) << "," << fmt_double(xy[0]) << ","
        << fmt_double(xy[1]) << "\n";
  };
  row("a", lm.a);
  row("b", lm.b);
  row("c1", lm.c1);
  row("c2", lm.c2);
  row("c3", lm.c3);
}

json landmarks_json(const PolytopeLandmarks& lm) {
  json j;
  j["a"] = weyl_json(lm.a);
  j["b"] = weyl_json(lm.b);
  j["c1"] = weyl_json(lm.c1);
  j["c2"] = weyl_json(lm.c2);
  j["c3"] = weyl_json(lm.c3);
  return j;
}

json fiber_report_json(const FiberProbeReport& report) {
  json j;
  j["target"] = weyl_json(report.target);
  j["degenerate_target"] = report.degenerate_target;
  j["n_starts"] = report.n_starts;
  j["n_converged"] = report.n_converged;
  j["n_failed"] = report.n_failed;
  j["invariant_clusters"] = report.invariant_clusters;
  json pts = json::array();
  for (const auto& p : report.points) {
    json jp;
    jp["objective"] = p.objective;
    jp["lambda"] = weyl_json(p.weyl);
    jp["stabilizer_type"] = to_string(p.stab_type);
    jp["stabilizer_dim"] = p.stabilizer_dim;
    jp["fiber_nullity"] = p.fiber_nullity;
    jp["reduced_dim_estimate"] = p.reduced_dim_estimate;
    jp["distances"] =
        json::array({p.invariants.d12, p.invariants.d13, p.invariants.d23});
    jp["cyclic_phase_defined"] = p.invariants.phase_defined;
    if (p.invariants.phase_defined) jp["cyclic_phase"] = p.invariants.phase;
    json cfg = json::array();
    for (const auto& pt : p.config.points) cfg.push_back(point_json(pt));
    jp["points"] = cfg;
    pts.push_back(jp);
  }
  j["points"] = pts;
  return j;
}

}  // namespace cpv
