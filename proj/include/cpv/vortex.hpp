#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cpv/projective.hpp"
#include "cpv/su3.hpp"

namespace cpv {

// Weighted point configuration: N points of CP^2 with nonzero real strengths
// Gamma_j. The strengths are the coefficients of the factor symplectic forms,
//   Omega = Gamma_1 w0 (+) ... (+) Gamma_N w0.
struct VortexConfig {
  std::vector<ProjectivePoint> points;
  std::vector<double> gammas;

  VortexConfig(std::vector<ProjectivePoint> pts, std::vector<double> g);

  int size() const { return static_cast<int>(points.size()); }
};

// Tangent vector to the product: one horizontal vector per factor, the j-th
// based at points[j] of the owning configuration.
struct ConfigTangent {
  std::vector<TangentVector> vecs;

  double norm() const;
};

// Pairwise distance exactly at the collision threshold or below.
class CollisionError : public std::runtime_error {
 public:
  CollisionError(int i, int j, double d);
  int i, j;
  double dist;
};

enum class Interaction { LogSin, Cosine, CustomTable };

// The invariant pairwise interaction h0 as a function of the distance
// d in (0, pi/2]. Internally everything is evaluated through the smooth
// overlap coordinate q = cos^2 d = |<Z_i, Z_j>|^2:
//   log_sin : h0 = ln sin d = (1/2) ln(1 - q), singular at d = 0
//   cosine  : h0 = cos 2d = 2q - 1, smooth on all of [0, pi/2]
//   custom  : natural cubic spline through (d_k, h_k) nodes
class HamiltonianSpec {
 public:
  static HamiltonianSpec log_sin(double scale = 1.0);
  static HamiltonianSpec cosine(double scale = 1.0);
  // nodes must be strictly increasing in d, at least 4 of them, inside
  // [0, pi/2]. Declared singular when the domain excludes d = 0.
  static HamiltonianSpec custom_table(
      std::vector<std::pair<double, double>> nodes, double scale = 1.0);

  Interaction kind() const { return kind_; }
  double scale() const { return scale_; }
  bool singular_at_collision() const { return singular_; }
  const std::vector<std::pair<double, double>>& nodes() const { return nodes_; }

  double h0(double d) const;      // value at distance d
  double dh0(double d) const;     // d h0 / d d
  double h0_of_q(double q) const;
  double dh0_dq(double q) const;

 private:
  HamiltonianSpec() = default;
  void build_spline();
  struct SplineSegment {
    std::size_t k;
    double h, t0, t1;
  };
  SplineSegment segment_at(double d) const;

  Interaction kind_ = Interaction::LogSin;
  double scale_ = 1.0;
  bool singular_ = true;
  std::vector<std::pair<double, double>> nodes_;
  std::vector<double> spline_m_;  // second derivatives at the nodes
};

// Normalization of the factor form, w0(u, v) = kappa Im <u, v> on horizontal
// lifts. The value is pinned by requiring d<J, xi>(v) = Omega(xi_M, v) against
// the fixed momentum lift J0(Z) = Z Z^dagger - I/3; calibrate_kappa recovers
// it from random data, and the shipped constant is the calibrated value.
inline constexpr double kDefaultKappa = -2.0;

// Distance below which a collision-singular interaction refuses to evaluate.
inline constexpr double kCollisionTol = 1e-8;

// Sum over factors of Gamma_j kappa Im <u_j, v_j>. Antisymmetric, bilinear.
// Throws std::invalid_argument when u or v is not based at c.
double symplectic_form(const VortexConfig& c, const ConfigTangent& u,
                       const ConfigTangent& v, double kappa = kDefaultKappa);

// J0(Z) = Z Z^dagger - I/3 on unit representatives; phase independent.
CoalgebraElement momentum_single(const ProjectivePoint& z);

// J(c) = sum_j Gamma_j J0(points[j]); equivariant under the diagonal action.
CoalgebraElement momentum_map(const VortexConfig& c);

// H(c) = sum_{i<j} Gamma_i Gamma_j h0(d(x_i, x_j)).
// Throws CollisionError when spec is singular and a pair sits closer than
// kCollisionTol.
double hamiltonian(const VortexConfig& c, const HamiltonianSpec& spec);

// The vector field of Hamilton's equation i_{X_H} Omega = -dH:
//   X_j = (i / (kappa Gamma_j)) P_j grad_j H
// with P_j the horizontal projection and grad_j the Euclidean gradient in the
// representative chart.
ConfigTangent hamiltonian_vector_field(const VortexConfig& c,
                                       const HamiltonianSpec& spec,
                                       double kappa = kDefaultKappa);

struct ReResidual {
  double residual;     // min over xi of || X_H(c) - xi_M(c) || (weighted)
  AlgebraElement xi;   // a minimizer
};

// Least-squares certificate for relative equilibria: minimizes
// || X_H(c) - xi_M(c) ||^2 over xi in su(3), or over the coadjoint stabilizer
// of J(c) when restrict_to_g_mu is set. The norm weights factor j by
// |Gamma_j| (set weighted = false for the plain product metric). A residual
// of ~0 certifies that c lies on a relative equilibrium.
ReResidual re_residual(const VortexConfig& c, const HamiltonianSpec& spec,
                       bool restrict_to_g_mu = false,
                       double kappa = kDefaultKappa, bool weighted = true);

// Diagonal-action invariants of a triple: the three pairwise distances and
// the cyclic phase gamma = arg(<Z1,Z2><Z2,Z3><Z3,Z1>). The phase is flagged
// undefined when any overlap vanishes. Used as a heuristic orbit-equivalence
// signature; whether it separates all generic orbits is open.
struct ConfigInvariants {
  double d12, d13, d23;
  double phase;
  bool phase_defined;
};

ConfigInvariants config_invariants(const VortexConfig& c);

// --- tangent-space utilities -----------------------------------------------

// Real orthonormal basis of the horizontal space at z: {u, iu, w, iw} with
// {rep, u, w} a unitary basis of C^3.
std::vector<TangentVector> horizontal_basis(const ProjectivePoint& z);

// The 4N-element product basis, one factor moving at a time.
std::vector<ConfigTangent> horizontal_basis(const VortexConfig& c);

// Gaussian horizontal tangent.
ConfigTangent random_tangent(const VortexConfig& c, Rng& rng);

// Per-factor zero tangent except slot j.
ConfigTangent single_factor_tangent(const VortexConfig& c, int j,
                                    const Vector3c& v);

// Stacked real coordinates (6 per point) of a tangent.
Eigen::VectorXd flatten(const ConfigTangent& t);

// c moved along t by parameter s, each representative renormalized.
VortexConfig displace(const VortexConfig& c, const ConfigTangent& t, double s);

// Least-squares estimate of kappa from the defining identity
// d<J, xi>(v) = Omega(xi_M, v) over random (config, xi, v) triples with
// N in {2, 3}; finite differences with step 1e-6.
double calibrate_kappa(Rng& rng, int samples = 200);

}  // namespace cpv
