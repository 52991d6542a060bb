#include "cpv/integrate.hpp"

#include <cmath>
#include <stdexcept>

namespace cpv {

void IntegratorSpec::validate() const {
  if (!(dt > 0.0)) throw std::invalid_argument("IntegratorSpec: dt must be > 0");
  if (steps < 1) throw std::invalid_argument("IntegratorSpec: steps must be >= 1");
  if (monitor_every < 1) {
    throw std::invalid_argument("IntegratorSpec: monitor_every must be >= 1");
  }
}

std::vector<double> pairwise_distances(const VortexConfig& c) {
  std::vector<double> d;
  for (int i = 0; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) {
      d.push_back(distance(c.points[static_cast<std::size_t>(i)],
                           c.points[static_cast<std::size_t>(j)]));
    }
  }
  return d;
}

namespace {

using State = std::vector<Vector3c>;

State reps_of(const VortexConfig& c) {
  State y;
  y.reserve(c.points.size());
  for (const auto& p : c.points) y.push_back(p.rep());
  return y;
}

VortexConfig config_of(const State& y, const std::vector<double>& gammas,
                       double* renorm_move = nullptr) {
  std::vector<ProjectivePoint> pts;
  pts.reserve(y.size());
  double worst = 0.0;
  for (const auto& v : y) {
    ProjectivePoint p = make_point(v);
    worst = std::max(worst, (p.rep() - v).norm());
    pts.push_back(p);
  }
  if (renorm_move) *renorm_move = worst;
  return VortexConfig(std::move(pts), gammas);
}

State field(const State& y, const std::vector<double>& gammas,
            const HamiltonianSpec& spec, double kappa) {
  VortexConfig c = config_of(y, gammas);
  ConfigTangent x = hamiltonian_vector_field(c, spec, kappa);
  State k(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) k[j] = x.vecs[j].vec;
  return k;
}

State axpy(const State& y, double a, const State& k) {
  State out(y.size());
  for (std::size_t j = 0; j < y.size(); ++j) out[j] = y[j] + a * k[j];
  return out;
}

}  // namespace

VortexConfig step(const VortexConfig& c, const HamiltonianSpec& spec,
                  double dt, StepMethod method, double kappa,
                  double* renorm_move) {
  State y = reps_of(c);
  State ynew;
  switch (method) {
    case StepMethod::Rk4Projected: {
      State k1 = field(y, c.gammas, spec, kappa);
      State k2 = field(axpy(y, 0.5 * dt, k1), c.gammas, spec, kappa);
      State k3 = field(axpy(y, 0.5 * dt, k2), c.gammas, spec, kappa);
      State k4 = field(axpy(y, dt, k3), c.gammas, spec, kappa);
      ynew = y;
      for (std::size_t j = 0; j < y.size(); ++j) {
        ynew[j] += dt / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
      }
      break;
    }
    case StepMethod::MidpointProjected: {
      State k1 = field(y, c.gammas, spec, kappa);
      State k2 = field(axpy(y, 0.5 * dt, k1), c.gammas, spec, kappa);
      ynew = axpy(y, dt, k2);
      break;
    }
  }
  VortexConfig out = config_of(ynew, c.gammas, renorm_move);
  if (spec.singular_at_collision()) {
    auto dists = pairwise_distances(out);
    int k = 0;
    for (int i = 0; i < out.size(); ++i) {
      for (int j = i + 1; j < out.size(); ++j, ++k) {
        if (dists[static_cast<std::size_t>(k)] <= kCollisionTol) {
          throw CollisionError(i, j, dists[static_cast<std::size_t>(k)]);
        }
      }
    }
  }
  return out;
}

Trajectory integrate(const VortexConfig& c0, const HamiltonianSpec& hspec,
                     const IntegratorSpec& ispec, double kappa) {
  ispec.validate();
  Trajectory traj;

  auto record = [&](double t, const VortexConfig& c, double h,
                    const CoalgebraElement& j) {
    traj.samples.push_back(
        TrajectorySample{t, c, h, j, weyl_projection(j), pairwise_distances(c)});
  };

  double h0 = 0.0;
  CoalgebraElement j0;
  std::vector<double> d0;
  try {
    h0 = hamiltonian(c0, hspec);
  } catch (const CollisionError&) {
    traj.collided = true;
    traj.collision_time = 0.0;
    return traj;
  }
  j0 = momentum_map(c0);
  d0 = pairwise_distances(c0);
  record(0.0, c0, h0, j0);

  VortexConfig c = c0;
  for (long k = 1; k <= ispec.steps; ++k) {
    double t = static_cast<double>(k) * ispec.dt;
    try {
      double move = 0.0;
      c = step(c, hspec, ispec.dt, ispec.method, kappa, &move);
      traj.max_renorm_move = std::max(traj.max_renorm_move, move);
    } catch (const CollisionError&) {
      traj.collided = true;
      traj.collision_time = t;
      break;
    }

    // a successful step leaves every pair above the collision tolerance, so
    // the energy evaluates
    double h = hamiltonian(c, hspec);
    CoalgebraElement j = momentum_map(c);
    traj.max_energy_drift = std::max(traj.max_energy_drift, std::abs(h - h0));
    traj.max_rel_energy_drift =
        std::max(traj.max_rel_energy_drift,
                 std::abs(h - h0) / std::max(1e-300, std::abs(h0)));
    traj.max_momentum_drift =
        std::max(traj.max_momentum_drift, (j.matrix() - j0.matrix()).norm());
    auto d = pairwise_distances(c);
    for (std::size_t m = 0; m < d.size(); ++m) {
      traj.max_distance_drift =
          std::max(traj.max_distance_drift, std::abs(d[m] - d0[m]));
    }

    if (k % ispec.monitor_every == 0 || k == ispec.steps) {
      record(t, c, h, j);
    }
  }
  return traj;
}

}  // namespace cpv
