#pragma once

#include <vector>

#include "cpv/vortex.hpp"

namespace cpv {

enum class StepMethod { Rk4Projected, MidpointProjected };

struct IntegratorSpec {
  StepMethod method = StepMethod::Rk4Projected;
  double dt = 1e-3;
  long steps = 10000;
  long monitor_every = 10;

  void validate() const;  // dt > 0, steps >= 1, monitor_every >= 1
};

struct TrajectorySample {
  double t;
  VortexConfig config;
  double energy;
  CoalgebraElement momentum;
  WeylPoint weyl;
  std::vector<double> distances;  // pairwise, (i,j) lexicographic
};

struct Trajectory {
  std::vector<TrajectorySample> samples;  // strictly increasing times
  bool collided = false;
  double collision_time = 0.0;
  // drifts relative to t = 0, maximized over every step taken
  double max_energy_drift = 0.0;      // |H - H0|
  double max_rel_energy_drift = 0.0;  // |H - H0| / max(1e-300, |H0|)
  double max_momentum_drift = 0.0;    // ||J - J0||_F
  double max_distance_drift = 0.0;    // max_ij |d_ij - d_ij(0)|
  double max_renorm_move = 0.0;       // projection distance per step
};

// One explicit step of the chosen scheme on the representatives. Stage
// evaluations renormalize before applying the field; the result is projected
// back to unit norm per factor. Throws CollisionError when a singular
// interaction meets a pair below tolerance during or after the step. When
// renorm_move is given, it receives the largest distance the final unit-norm
// projection moved a raw representative.
VortexConfig step(const VortexConfig& c, const HamiltonianSpec& spec,
                  double dt, StepMethod method, double kappa = kDefaultKappa,
                  double* renorm_move = nullptr);

// Iterates step, recording observables every monitor_every steps (plus the
// initial and final states) and tracking drifts at every step. A collision
// aborts integration and returns the partial trajectory flagged.
Trajectory integrate(const VortexConfig& c, const HamiltonianSpec& hspec,
                     const IntegratorSpec& ispec, double kappa = kDefaultKappa);

std::vector<double> pairwise_distances(const VortexConfig& c);

}  // namespace cpv
