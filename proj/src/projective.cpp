#include "cpv/projective.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cpv {

ProjectivePoint ProjectivePoint::coordinate(int i) {
  Vector3c v = Vector3c::Zero();
  v[i] = 1.0;
  return ProjectivePoint(v);
}

ProjectivePoint make_point(const Vector3c& v, bool canonical_phase) {
  double n = v.norm();
  if (n < 1e-14) {
    throw std::invalid_argument("make_point: zero vector has no direction");
  }
  Vector3c unit = v / n;
  if (canonical_phase) {
    for (int i = 0; i < 3; ++i) {
      if (std::abs(unit[i]) > 1e-12) {
        unit *= std::conj(unit[i]) / std::abs(unit[i]);
        break;
      }
    }
  }
  return ProjectivePoint(unit);
}

bool same_point(const ProjectivePoint& a, const ProjectivePoint& b,
                double tol) {
  return std::abs(std::abs(a.rep().dot(b.rep())) - 1.0) <= tol;
}

double distance(const ProjectivePoint& a, const ProjectivePoint& b) {
  double overlap = std::abs(a.rep().dot(b.rep()));
  return std::acos(std::clamp(overlap, 0.0, 1.0));
}

TangentVector horizontal_project(const ProjectivePoint& base,
                                 const Vector3c& v) {
  Vector3c h = v - base.rep() * base.rep().dot(v);
  return TangentVector{base, h};
}

ProjectivePoint act(const Matrix3c& g, const ProjectivePoint& z) {
  if ((g.adjoint() * g - Matrix3c::Identity()).norm() > 1e-10) {
    throw std::invalid_argument("act: matrix is not unitary");
  }
  if (std::abs(g.determinant() - Complex(1.0, 0.0)) > 1e-10) {
    throw std::invalid_argument("act: determinant is not 1");
  }
  return make_point(g * z.rep());
}

TangentVector infinitesimal_action(const AlgebraElement& xi,
                                   const ProjectivePoint& z) {
  return horizontal_project(z, xi.matrix() * z.rep());
}

ProjectivePoint random_point(Rng& rng) {
  Vector3c v;
  for (int i = 0; i < 3; ++i) v[i] = Complex(rng.normal(), rng.normal());
  return make_point(v);
}

}  // namespace cpv
