#include "cpv/su3.hpp"

#include <cmath>
#include <stdexcept>

namespace cpv {

namespace {

constexpr double kStructureTol = 1e-12;

double structure_scale(const Matrix3c& m) { return std::max(1.0, m.norm()); }

}  // namespace

AlgebraElement::AlgebraElement(const Matrix3c& m) : m_(m) {
  if ((m + m.adjoint()).norm() > kStructureTol * structure_scale(m)) {
    throw std::invalid_argument("AlgebraElement: matrix is not anti-Hermitian");
  }
  if (std::abs(m.trace()) > kStructureTol * structure_scale(m)) {
    throw std::invalid_argument("AlgebraElement: matrix has nonzero trace");
  }
}

AlgebraElement AlgebraElement::project(const Matrix3c& m) {
  Matrix3c a = 0.5 * (m - m.adjoint());
  a -= (a.trace() / 3.0) * Matrix3c::Identity();
  return AlgebraElement(a, unchecked_t{});
}

CoalgebraElement::CoalgebraElement(const Matrix3c& m) : m_(m) {
  if ((m - m.adjoint()).norm() > kStructureTol * structure_scale(m)) {
    throw std::invalid_argument("CoalgebraElement: matrix is not Hermitian");
  }
  if (std::abs(m.trace()) > kStructureTol * structure_scale(m)) {
    throw std::invalid_argument("CoalgebraElement: matrix has nonzero trace");
  }
}

CoalgebraElement CoalgebraElement::project(const Matrix3c& m) {
  Matrix3c h = 0.5 * (m + m.adjoint());
  h -= (h.trace() / 3.0) * Matrix3c::Identity();
  return CoalgebraElement(h);
}

WeylPoint::WeylPoint(double l1, double l2, double l3) : l_{l1, l2, l3} {
  double scale = std::max({1.0, std::abs(l1), std::abs(l2), std::abs(l3)});
  if (l1 < l2 - 1e-10 * scale || l2 < l3 - 1e-10 * scale) {
    throw std::invalid_argument("WeylPoint: triple is not descending");
  }
  if (std::abs(l1 + l2 + l3) > 1e-10 * scale) {
    throw std::invalid_argument("WeylPoint: triple does not sum to zero");
  }
}

double weyl_distance(const WeylPoint& a, const WeylPoint& b) {
  double s = 0.0;
  for (int i = 0; i < 3; ++i) {
    double d = a[i] - b[i];
    s += d * d;
  }
  return std::sqrt(s);
}

Eigen::Vector2d chamber_coords(const WeylPoint& w) {
  return {(w[0] - w[1]) / std::sqrt(2.0),
          (w[0] + w[1] - 2.0 * w[2]) / std::sqrt(6.0)};
}

const AlgebraBasis& AlgebraBasis::standard() {
  static const AlgebraBasis basis = [] {
    const Complex i(0.0, 1.0);
    std::array<Matrix3c, 8> lambda;
    for (auto& m : lambda) m.setZero();
    lambda[0](0, 1) = 1.0;
    lambda[0](1, 0) = 1.0;
    lambda[1](0, 1) = -i;
    lambda[1](1, 0) = i;
    lambda[2](0, 0) = 1.0;
    lambda[2](1, 1) = -1.0;
    lambda[3](0, 2) = 1.0;
    lambda[3](2, 0) = 1.0;
    lambda[4](0, 2) = -i;
    lambda[4](2, 0) = i;
    lambda[5](1, 2) = 1.0;
    lambda[5](2, 1) = 1.0;
    lambda[6](1, 2) = -i;
    lambda[6](2, 1) = i;
    lambda[7](0, 0) = 1.0;
    lambda[7](1, 1) = 1.0;
    lambda[7](2, 2) = -2.0;
    lambda[7] /= std::sqrt(3.0);

    AlgebraBasis b;
    for (int a = 0; a < 8; ++a) {
      b.e_[static_cast<std::size_t>(a)] =
          AlgebraElement(i / std::sqrt(2.0) * lambda[static_cast<std::size_t>(a)]);
    }
    return b;
  }();
  return basis;
}

Eigen::Matrix<double, 8, 1> AlgebraBasis::coordinates(
    const AlgebraElement& xi) const {
  Eigen::Matrix<double, 8, 1> c;
  for (int a = 0; a < 8; ++a) c[a] = algebra_inner((*this)[a], xi);
  return c;
}

AlgebraElement AlgebraBasis::combine(
    const Eigen::Matrix<double, 8, 1>& c) const {
  Matrix3c m = Matrix3c::Zero();
  for (int a = 0; a < 8; ++a) m += c[a] * (*this)[a].matrix();
  return AlgebraElement::project(m);
}

double algebra_inner(const AlgebraElement& a, const AlgebraElement& b) {
  // (-i a)(-i b) = -a b; both factors Hermitian, so the trace is real.
  return -(a.matrix() * b.matrix()).trace().real();
}

double pairing(const CoalgebraElement& mu, const AlgebraElement& xi) {
  const Complex i(0.0, 1.0);
  return (mu.matrix() * (-i * xi.matrix())).trace().real();
}

CoalgebraElement dualize(const AlgebraElement& xi) {
  const Complex i(0.0, 1.0);
  return CoalgebraElement(-i * xi.matrix());
}

AlgebraElement dualize(const CoalgebraElement& mu) {
  const Complex i(0.0, 1.0);
  return AlgebraElement(i * mu.matrix());
}

WeylPoint weyl_projection(const CoalgebraElement& mu) {
  Eigen::SelfAdjointEigenSolver<Matrix3c> es(mu.matrix(),
                                             Eigen::EigenvaluesOnly);
  Eigen::Vector3d ev = es.eigenvalues();  // ascending
  double mean = ev.sum() / 3.0;
  return WeylPoint(ev[2] - mean, ev[1] - mean, ev[0] - mean);
}

std::vector<AlgebraElement> coadjoint_stabilizer(const CoalgebraElement& mu,
                                                 double degeneracy_tol) {
  const AlgebraBasis& basis = AlgebraBasis::standard();

  Eigen::SelfAdjointEigenSolver<Matrix3c> es(mu.matrix(),
                                             Eigen::EigenvaluesOnly);
  Eigen::Vector3d ev = es.eigenvalues();
  double radius = std::max(std::abs(ev[0]), std::abs(ev[2]));

  int dim = 2;
  if (radius < 1e-12) {
    dim = 8;  // mu = 0: everything commutes
  } else {
    double tol = degeneracy_tol * radius;
    int coincident = 0;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) {
        if (std::abs(ev[i] - ev[j]) <= tol) ++coincident;
      }
    }
    if (coincident >= 3) {
      dim = 8;  // all equal and traceless, i.e. spectrum ~ 0
    } else if (coincident >= 1) {
      dim = 4;  // one repeated eigenvalue: u(2) block
    }
  }

  // Commutator map ad_mu on basis coordinates, as an 18x8 real matrix.
  Eigen::MatrixXd commutator(18, 8);
  for (int a = 0; a < 8; ++a) {
    Matrix3c c = mu.matrix() * basis[a].matrix() - basis[a].matrix() * mu.matrix();
    for (int r = 0; r < 3; ++r) {
      for (int s = 0; s < 3; ++s) {
        commutator(2 * (3 * r + s), a) = c(r, s).real();
        commutator(2 * (3 * r + s) + 1, a) = c(r, s).imag();
      }
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(commutator, Eigen::ComputeFullV);
  // Right singular vectors are ordered by descending singular value; the
  // kernel is spanned by the trailing columns.
  std::vector<AlgebraElement> out;
  out.reserve(static_cast<std::size_t>(dim));
  for (int k = 8 - dim; k < 8; ++k) {
    out.push_back(basis.combine(svd.matrixV().col(k)));
  }
  return out;
}

AlgebraElement random_algebra_element(Rng& rng) {
  Eigen::Matrix<double, 8, 1> c;
  for (int a = 0; a < 8; ++a) c[a] = rng.normal();
  return AlgebraBasis::standard().combine(c);
}

Matrix3c random_su3(Rng& rng) {
  Matrix3c g;
  for (int r = 0; r < 3; ++r) {
    for (int s = 0; s < 3; ++s) {
      g(r, s) = Complex(rng.normal(), rng.normal());
    }
  }
  Eigen::HouseholderQR<Matrix3c> qr(g);
  Matrix3c q = qr.householderQ();
  Matrix3c r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phase ambiguity of QR, then scale to unit determinant.
  for (int k = 0; k < 3; ++k) {
    Complex d = r(k, k);
    q.col(k) *= d / std::abs(d);
  }
  Complex det = q.determinant();
  q /= std::pow(det, 1.0 / 3.0);
  return q;
}

}  // namespace cpv
