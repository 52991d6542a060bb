#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "cpv/vortex.hpp"

namespace cpv {

// Stabilizer types of configurations of 3 (respectively 2) points, one tag
// each, decided in the documented order by classify_stabilizer.
enum class StabilizerType {
  // N = 3
  TriplePoint,
  DoublePoint,
  DoubleOrthogonal,
  TotallyOrthogonal,
  Coplanar,
  SemiOrthogonal,
  Generic,
  // N = 2
  Equal,
  Orthogonal,
  Generic2,
};

std::string to_string(StabilizerType t);

// Decision order for N = 3: all coincident; exactly two coincident with the
// third orthogonal; exactly two coincident; all mutually orthogonal; one
// point orthogonal to both (distinct) others; all three in a common
// projective line; generic. Coincidence means distance < tol, orthogonality
// |d - pi/2| < tol, coplanarity smallest singular value of the stacked
// representatives < tol.
StabilizerType classify_stabilizer(const VortexConfig& c, double tol = 1e-9);

// Basis of the kernel of xi -> (xi_M(Z_j))_j over su(3), by SVD of the
// stacked 8 -> R^{6N} action map.
std::vector<AlgebraElement> stabilizer_algebra(const VortexConfig& c,
                                               double tol = 1e-8);

// Numerical rank of the derivative of the momentum map at c (SVD threshold
// 1e-8 relative to the largest singular value). Equals 8 minus the stabilizer
// algebra dimension.
int momentum_jacobian_rank(const VortexConfig& c);

// Dimension of R0 = the subspace of span{xi_M(c) : xi in g_mu} annihilated by
// the linearized action of the stabilizer algebra of c (stabilizers here are
// connected, so algebra-annihilation equals group-fixedness).
int allowed_velocity_dim(const VortexConfig& c, double tol = 1e-8);

// Momentum values of the torus-fixed configuration patterns:
//   a  from (e,e,e), b from (e1,e2,e3), c_k with the k-th point alone at a
//   coordinate orthogonal to the coincident pair.
struct PolytopeLandmarks {
  WeylPoint a, b, c1, c2, c3;
};

PolytopeLandmarks polytope_landmarks(const std::array<double, 3>& gammas);

// Weyl projections of the momentum map over n random configurations.
std::vector<WeylPoint> sample_polytope(const std::vector<double>& gammas,
                                       int n, Rng& rng);

enum class LandmarkSite { A, B, C1, C2, C3, Interior };

struct ReducedSpacePrediction {
  enum class Kind { Point, SmoothSphere, PointedSphere, Unknown };
  Kind kind = Kind::Unknown;
  int singular_points = 0;  // 1..3 when kind == PointedSphere
  std::string rule;         // which decision produced the answer
};

// Predicts the topology of the symplectic reduced space at a landmark value
// or at a regular interior value, from the strengths alone. Landmark rules:
// b is always a point; a is a point or a pointed sphere according to the sign
// of Gamma1 Gamma2 Gamma3 (Gamma1+Gamma2+Gamma3); at c_k the verdict follows
// the definiteness of the local quadratic form; equal-strength and
// cancelling-pair transitions yield multi-pointed spheres. Unknown is an
// honest output for cases the rules do not cover.
ReducedSpacePrediction predict_reduced_space(
    const std::array<double, 3>& gammas, LandmarkSite which,
    double tol = 1e-9);

// --- descent over configurations --------------------------------------------

struct DescentOptions {
  int max_iters = 10000;
  double f_tol = 1e-12;        // stop when the objective drops below this
  double fd_step = 1e-6;       // central-difference step on representatives
  double init_step = 0.25;     // initial line-search step
};

struct DescentResult {
  VortexConfig config;
  double f = 0.0;
  int iters = 0;
  bool converged = false;
};

using ConfigObjective = std::function<double(const VortexConfig&)>;
// Gradient as a flat 6N real vector in the representative chart (may point
// off the horizontal space; it is projected internally).
using ConfigGradient = std::function<Eigen::VectorXd(const VortexConfig&)>;

// Gradient descent with backtracking on the unit-sphere product: steps move
// the representatives and renormalize. Uses grad when supplied, otherwise
// central finite differences with DescentOptions::fd_step.
DescentResult minimize_over_configs(const VortexConfig& start,
                                    const ConfigObjective& f,
                                    const DescentOptions& opts = {},
                                    const ConfigGradient& grad = nullptr);

// Squared Euclidean distance of weyl_projection(momentum_map(m)) to target.
ConfigObjective momentum_mismatch(const WeylPoint& target);

// --- fiber probe -------------------------------------------------------------

struct FiberPoint {
  VortexConfig config;
  double objective;
  WeylPoint weyl;
  StabilizerType stab_type;
  int stabilizer_dim;
  int fiber_nullity;        // nullity of d(chamber o weyl o J) at the point
  int reduced_dim_estimate; // fiber_nullity - (8 - stabilizer_dim)
  ConfigInvariants invariants;
};

struct FiberProbeReport {
  WeylPoint target;
  bool degenerate_target = false;  // Weyl projection not smooth at the target
  int n_starts = 0;
  int n_converged = 0;
  int n_failed = 0;
  std::vector<FiberPoint> points;
  int invariant_clusters = 0;  // orbit-count heuristic
};

// Multi-start probe of the momentum fiber over mu for N = 3: from n_starts
// random configurations, descend on the squared eigenvalue mismatch, retain
// minima below opts.f_tol, and estimate fiber and reduced dimensions at each.
// Starts run in parallel with per-start substreams of rng, so the report does
// not depend on the thread count.
FiberProbeReport fiber_probe(const std::array<double, 3>& gammas,
                             const WeylPoint& mu, int n_starts, Rng& rng,
                             const DescentOptions& opts = {},
                             double cluster_tol = 1e-3);

// Symmetric family for equal strengths: (m1, D_j m1, D_j^2 m1) with
//   D_1 = diag(1, e^{2 pi i/3}, e^{-2 pi i/3}),
//   D_2 = diag(e^{2 pi i/9}, e^{2 pi i/9}, e^{-4 pi i/9}).
VortexConfig symmetric_family_config(int j, const ProjectivePoint& m1,
                                     double gamma = 1.0);

Matrix3c symmetric_family_generator(int j);

}  // namespace cpv
