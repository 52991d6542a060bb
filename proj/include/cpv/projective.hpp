#pragma once

#include "cpv/rng.hpp"
#include "cpv/su3.hpp"

namespace cpv {

// A point of CP^2 = S^5/U(1), stored as a unit-norm representative in C^3.
// The representative phase is gauge; equality and all geometric quantities
// depend only on |<rep1, rep2>|.
class ProjectivePoint {
 public:
  ProjectivePoint() : rep_(Vector3c::UnitX()) {}

  const Vector3c& rep() const { return rep_; }

  static ProjectivePoint coordinate(int i);  // e1, e2, e3

  friend ProjectivePoint make_point(const Vector3c& v, bool canonical_phase);

 private:
  explicit ProjectivePoint(const Vector3c& unit) : rep_(unit) {}
  Vector3c rep_;
};

// Normalizes v to unit norm; rejects (near-)zero input. With canonical_phase
// the first component of modulus > 1e-12 is rotated to be real positive,
// giving a reproducible representative.
ProjectivePoint make_point(const Vector3c& v, bool canonical_phase = false);

// Phase-insensitive equality: | |<Z1,Z2>| - 1 | <= tol.
bool same_point(const ProjectivePoint& a, const ProjectivePoint& b,
                double tol = 1e-9);

// Fubini-Study distance, arccos |<Z1,Z2>| in [0, pi/2].
double distance(const ProjectivePoint& a, const ProjectivePoint& b);

// Horizontal tangent vector at base: a complex 3-vector with <rep, vec> = 0,
// i.e. orthogonal to both the radial and the phase direction.
struct TangentVector {
  ProjectivePoint base;
  Vector3c vec;

  double norm() const { return vec.norm(); }
};

// vec = v - rep <rep, v>; idempotent.
TangentVector horizontal_project(const ProjectivePoint& base,
                                 const Vector3c& v);

// Action of a special unitary g. Throws std::invalid_argument when g fails
// g^dagger g = I or det g = 1 to 1e-10.
ProjectivePoint act(const Matrix3c& g, const ProjectivePoint& z);

// Vector field of the one-parameter subgroup exp(t xi) evaluated at z, in the
// horizontal chart: horizontal_project(z, xi * rep).
TangentVector infinitesimal_action(const AlgebraElement& xi,
                                   const ProjectivePoint& z);

// Fubini-Study-uniform point: a normalized standard complex Gaussian vector.
ProjectivePoint random_point(Rng& rng);

}  // namespace cpv
