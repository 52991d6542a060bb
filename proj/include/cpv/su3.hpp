#pragma once

#include <array>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "cpv/rng.hpp"

namespace cpv {

using Complex = std::complex<double>;
using Matrix3c = Eigen::Matrix3cd;
using Vector3c = Eigen::Vector3cd;

// Element xi of su(3): 3x3 complex, anti-Hermitian, traceless.
class AlgebraElement {
 public:
  AlgebraElement() : m_(Matrix3c::Zero()) {}
  // Throws std::invalid_argument unless m is anti-Hermitian and traceless to
  // 1e-12 (relative to its norm).
  explicit AlgebraElement(const Matrix3c& m);

  // Nearest algebra element: anti-Hermitian part with the trace removed.
  static AlgebraElement project(const Matrix3c& m);

  const Matrix3c& matrix() const { return m_; }
  double norm() const { return m_.norm(); }

 private:
  struct unchecked_t {};
  AlgebraElement(const Matrix3c& m, unchecked_t) : m_(m) {}
  Matrix3c m_;
};

// Element mu of su(3)^*, identified with the 3x3 Hermitian traceless matrices
// through the pairing <mu, xi> = tr(mu * (-i xi)).
class CoalgebraElement {
 public:
  CoalgebraElement() : m_(Matrix3c::Zero()) {}
  explicit CoalgebraElement(const Matrix3c& m);

  static CoalgebraElement project(const Matrix3c& m);

  const Matrix3c& matrix() const { return m_; }
  double norm() const { return m_.norm(); }

 private:
  Matrix3c m_;
};

// Sorted spectrum of a coalgebra element: a real triple lambda1 >= lambda2 >=
// lambda3 with zero sum, labelling a coadjoint orbit in the positive Weyl
// chamber.
class WeylPoint {
 public:
  WeylPoint() : l_{0.0, 0.0, 0.0} {}
  // Throws std::invalid_argument if not descending or the sum exceeds 1e-10.
  WeylPoint(double l1, double l2, double l3);

  double operator[](int i) const { return l_[static_cast<std::size_t>(i)]; }
  const std::array<double, 3>& lambda() const { return l_; }

 private:
  std::array<double, 3> l_;
};

// Euclidean distance between sorted triples (the metric the chamber chart
// below is an isometry for).
double weyl_distance(const WeylPoint& a, const WeylPoint& b);

// Isometric 2-D coordinates on the sum-zero plane:
//   x = (l1 - l2)/sqrt(2),  y = (l1 + l2 - 2 l3)/sqrt(6).
// The positive chamber maps into the wedge x >= 0, sqrt(3) y >= x.
Eigen::Vector2d chamber_coords(const WeylPoint& w);

// Ordered orthonormal basis of su(3) under <xi,eta> = Re tr((-i xi)(-i eta)).
class AlgebraBasis {
 public:
  static const AlgebraBasis& standard();  // i/sqrt(2) times the Gell-Mann set

  static constexpr int size = 8;
  const AlgebraElement& operator[](int a) const {
    return e_[static_cast<std::size_t>(a)];
  }

  Eigen::Matrix<double, 8, 1> coordinates(const AlgebraElement& xi) const;
  AlgebraElement combine(const Eigen::Matrix<double, 8, 1>& c) const;

 private:
  AlgebraBasis() = default;
  std::array<AlgebraElement, 8> e_;
};

// Inner product on the algebra (positive definite): Re tr((-i a)(-i b)).
double algebra_inner(const AlgebraElement& a, const AlgebraElement& b);

// Duality pairing <mu, xi> = tr(mu * (-i xi)); always real for valid inputs.
double pairing(const CoalgebraElement& mu, const AlgebraElement& xi);

// mu = -i xi and xi = i mu identify algebra and coalgebra; the pairing of an
// element with its own dual is its squared norm under algebra_inner.
CoalgebraElement dualize(const AlgebraElement& xi);
AlgebraElement dualize(const CoalgebraElement& mu);

// Eigenvalues of mu sorted in descending order, with the mean subtracted so
// the triple sums exactly to zero.
WeylPoint weyl_projection(const CoalgebraElement& mu);

// Basis of the coadjoint stabilizer algebra g_mu = {xi : mu xi - xi mu = 0},
// computed as the kernel of the commutator map on the 8-dimensional algebra.
// The kernel dimension (2, 4 or 8) is decided from the eigenvalue multiplicity
// pattern of mu, with near-degeneracy resolved by degeneracy_tol relative to
// the spectral radius.
std::vector<AlgebraElement> coadjoint_stabilizer(const CoalgebraElement& mu,
                                                 double degeneracy_tol = 1e-9);

// Gaussian element of su(3) in the standard basis.
AlgebraElement random_algebra_element(Rng& rng);

// Haar-distributed special unitary matrix.
Matrix3c random_su3(Rng& rng);

}  // namespace cpv
