#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cpv/su3.hpp"
#include "test_support.hpp"

using namespace cpv;

namespace {

Matrix3c diag(double a, double b, double c) {
  Matrix3c m = Matrix3c::Zero();
  m(0, 0) = a;
  m(1, 1) = b;
  m(2, 2) = c;
  return m;
}

CoalgebraElement random_coalgebra(Rng& rng) {
  return dualize(random_algebra_element(rng));
}

}  // namespace

TEST_CASE("pairing on diagonal elements") {
  const Complex i(0.0, 1.0);
  CoalgebraElement mu(diag(2.0 / 3, -1.0 / 3, -1.0 / 3));
  AlgebraElement xi(i * diag(2.0 / 3, -1.0 / 3, -1.0 / 3));
  CHECK(pairing(mu, xi) == doctest::Approx(2.0 / 3).epsilon(1e-14));

  CHECK(pairing(CoalgebraElement(), xi) == doctest::Approx(0.0));

  CoalgebraElement mu2(diag(1, 0, -1));
  AlgebraElement xi2(i * diag(0, 1, -1));
  CHECK(pairing(mu2, xi2) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("pairing is bilinear and real") {
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    CoalgebraElement mu = random_coalgebra(rng);
    AlgebraElement x = random_algebra_element(rng);
    AlgebraElement y = random_algebra_element(rng);
    double a = rng.uniform(-2, 2), b = rng.uniform(-2, 2);
    AlgebraElement comb =
        AlgebraElement::project(a * x.matrix() + b * y.matrix());
    CHECK(pairing(mu, comb) ==
          doctest::Approx(a * pairing(mu, x) + b * pairing(mu, y))
              .epsilon(1e-12));
    // imaginary part of the trace vanishes for valid arguments
    const Complex i(0.0, 1.0);
    Complex full = (mu.matrix() * (-i * x.matrix())).trace();
    CHECK(std::abs(full.imag()) < 1e-12);
  }
}

TEST_CASE("pairing is nondegenerate on the standard basis") {
  const AlgebraBasis& basis = AlgebraBasis::standard();
  Eigen::Matrix<double, 8, 8> gram;
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      gram(a, b) = pairing(dualize(basis[a]), basis[b]);
    }
  }
  CHECK((gram - Eigen::Matrix<double, 8, 8>::Identity()).norm() < 1e-12);
  CHECK(std::abs(gram.determinant()) > 0.5);
}

TEST_CASE("structure validation rejects bad matrices") {
  Matrix3c not_traceless = diag(1, 1, 1);
  CHECK_THROWS_AS(CoalgebraElement{not_traceless}, std::invalid_argument);
  Matrix3c not_herm = Matrix3c::Zero();
  not_herm(0, 1) = 1.0;
  CHECK_THROWS_AS(CoalgebraElement{not_herm}, std::invalid_argument);
  CHECK_THROWS_AS(AlgebraElement{diag(1, 0, -1)}, std::invalid_argument);
}

TEST_CASE("coadjoint stabilizer dimensions") {
  CHECK(coadjoint_stabilizer(CoalgebraElement(diag(1, 0, -1))).size() == 2);
  CHECK(coadjoint_stabilizer(CoalgebraElement()).size() == 8);

  // brute-force oracle for the rank-one projector case: the commutator map
  // over the basis has rank 4, so the kernel is 4-dimensional
  CoalgebraElement mu(diag(2.0 / 3, -1.0 / 3, -1.0 / 3));
  const AlgebraBasis& basis = AlgebraBasis::standard();
  Eigen::MatrixXd cm(18, 8);
  for (int a = 0; a < 8; ++a) {
    Matrix3c c = mu.matrix() * basis[a].matrix() - basis[a].matrix() * mu.matrix();
    for (int r = 0; r < 3; ++r) {
      for (int s = 0; s < 3; ++s) {
        cm(2 * (3 * r + s), a) = c(r, s).real();
        cm(2 * (3 * r + s) + 1, a) = c(r, s).imag();
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(cm);
  int rank = 0;
  for (int i = 0; i < 8; ++i) {
    if (svd.singularValues()[i] > 1e-10) ++rank;
  }
  CHECK(rank == 4);
  CHECK(coadjoint_stabilizer(mu).size() == 8 - rank);
}

TEST_CASE("stabilizer elements commute and dimension is 2, 4 or 8") {
  Rng rng(11);
  for (int t = 0; t < 50; ++t) {
    CoalgebraElement mu = random_coalgebra(rng);
    auto stab = coadjoint_stabilizer(mu);
    CHECK((stab.size() == 2 || stab.size() == 4 || stab.size() == 8));
    for (const auto& xi : stab) {
      Matrix3c comm =
          mu.matrix() * xi.matrix() - xi.matrix() * mu.matrix();
      CHECK(comm.norm() < 1e-10);
      CHECK(xi.norm() == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
  // engineered degeneracy away from the diagonal
  Rng rng2(13);
  Matrix3c g = random_su3(rng2);
  CoalgebraElement mu4 =
      CoalgebraElement::project(g * diag(1, 1, -2) * g.adjoint());
  CHECK(coadjoint_stabilizer(mu4).size() == 4);
  for (const auto& xi : coadjoint_stabilizer(mu4)) {
    CHECK((mu4.matrix() * xi.matrix() - xi.matrix() * mu4.matrix()).norm() <
          1e-10);
  }
}

TEST_CASE("weyl projection sorts and centers") {
  WeylPoint w = weyl_projection(CoalgebraElement(diag(-1, 0, 1)));
  CHECK(w[0] == doctest::Approx(1.0));
  CHECK(w[1] == doctest::Approx(0.0));
  CHECK(w[2] == doctest::Approx(-1.0));

  WeylPoint z = weyl_projection(CoalgebraElement());
  CHECK(z[0] == 0.0);
  CHECK(z[2] == 0.0);

  WeylPoint p = weyl_projection(CoalgebraElement(diag(2.0 / 3, -1.0 / 3, -1.0 / 3)));
  CHECK(p[0] == doctest::Approx(2.0 / 3).epsilon(1e-14));
  CHECK(p[1] == doctest::Approx(-1.0 / 3).epsilon(1e-14));
}

TEST_CASE("weyl projection is conjugation invariant") {
  Rng rng(17);
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    CoalgebraElement mu = random_coalgebra(rng);
    Matrix3c g = random_su3(rng);
    CoalgebraElement conj =
        CoalgebraElement::project(g * mu.matrix() * g.adjoint());
    worst = std::max(worst, weyl_distance(weyl_projection(mu),
                                          weyl_projection(conj)));
  }
  CHECK(worst < 1e-9);
}

TEST_CASE("chamber coordinates") {
  Eigen::Vector2d origin = chamber_coords(WeylPoint(0, 0, 0));
  CHECK(origin.norm() == doctest::Approx(0.0));

  Eigen::Vector2d p = chamber_coords(WeylPoint(1, 0, -1));
  CHECK(p[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(p[1] == doctest::Approx(3.0 / std::sqrt(6.0)).epsilon(1e-14));

  // wall lambda2 = lambda3 maps onto the wedge boundary sqrt(3) y = x
  Eigen::Vector2d q = chamber_coords(WeylPoint(2.0 / 3, -1.0 / 3, -1.0 / 3));
  CHECK(q[0] == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(std::sqrt(3.0) * q[1] == doctest::Approx(q[0]).epsilon(1e-12));
}

TEST_CASE("chamber chart is an isometry on the sum-zero plane") {
  Rng rng(19);
  for (int t = 0; t < 200; ++t) {
    // random descending sum-zero triples
    double a = rng.uniform(0, 2), b = rng.uniform(-1, 1);
    double l1 = std::max({a, b, -a - b}), l3 = std::min({a, b, -a - b});
    double l2 = -(l1 + l3);
    // enforce descending order of the middle entry
    if (l2 > l1 || l2 < l3) continue;
    WeylPoint u(l1, l2, l3);
    double c = rng.uniform(0, 2), d = rng.uniform(-1, 1);
    double m1 = std::max({c, d, -c - d}), m3 = std::min({c, d, -c - d});
    double m2 = -(m1 + m3);
    if (m2 > m1 || m2 < m3) continue;
    WeylPoint v(m1, m2, m3);
    double plane = weyl_distance(u, v);
    double chart = (chamber_coords(u) - chamber_coords(v)).norm();
    CHECK(chart == doctest::Approx(plane).epsilon(1e-10));
    // wedge membership
    Eigen::Vector2d xy = chamber_coords(u);
    CHECK(xy[0] >= -1e-12);
    CHECK(std::sqrt(3.0) * xy[1] >= xy[0] - 1e-12);
  }
}

TEST_CASE("weyl point validation") {
  CHECK_THROWS_AS(WeylPoint(0, 1, -1), std::invalid_argument);
  CHECK_THROWS_AS(WeylPoint(1, 0, 0), std::invalid_argument);
}

TEST_CASE("random special unitary matrices") {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    Matrix3c g = random_su3(rng);
    CHECK((g.adjoint() * g - Matrix3c::Identity()).norm() < 1e-12);
    CHECK(std::abs(g.determinant() - Complex(1, 0)) < 1e-12);
  }
}
