#include "cpv/verify.hpp"

#include <chrono>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "cpv/analysis.hpp"
#include "cpv/integrate.hpp"
#include "cpv/vortex.hpp"

namespace cpv {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string sci(double x) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << x;
  return os.str();
}

VortexConfig random_config(const std::vector<double>& gammas, Rng& rng,
                           double min_dist = 0.0) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<ProjectivePoint> pts;
    for (std::size_t j = 0; j < gammas.size(); ++j) {
      pts.push_back(random_point(rng));
    }
    VortexConfig c(pts, gammas);
    if (min_dist <= 0.0) return c;
    double dmin = std::numbers::pi;
    for (double d : pairwise_distances(c)) dmin = std::min(dmin, d);
    if (dmin >= min_dist) return c;
  }
  throw std::runtime_error("random_config: could not satisfy min distance");
}

double random_generic_gamma(Rng& rng) {
  double g = rng.uniform(0.5, 3.0);
  return rng.uniform() < 0.5 ? -g : g;
}

}  // namespace

// 1. Calibration identity: |d<J,xi>(v) - Omega(xi_M, v)| <= 1e-6 relative
//    over 100 random (config, xi, v) triples for each N in {2, 3}.
CheckResult check_calibration_identity(std::uint64_t seed) {
  auto t0 = Clock::now();
  Rng rng(seed);
  const double step = 1e-6;
  double worst = 0.0;
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> gammas;
      for (int j = 0; j < n; ++j) gammas.push_back(random_generic_gamma(rng));
      VortexConfig c = random_config(gammas, rng);
      AlgebraElement xi = random_algebra_element(rng);
      ConfigTangent v = random_tangent(c, rng);

      auto bracket = [&](double t) {
        return pairing(momentum_map(displace(c, v, t)), xi);
      };
      double lhs = (bracket(step) - bracket(-step)) / (2.0 * step);

      ConfigTangent xim;
      for (int j = 0; j < n; ++j) {
        xim.vecs.push_back(
            infinitesimal_action(xi, c.points[static_cast<std::size_t>(j)]));
      }
      double rhs = symplectic_form(c, xim, v);
      double rel = std::abs(lhs - rhs) /
                   std::max({1.0, std::abs(lhs), std::abs(rhs)});
      worst = std::max(worst, rel);
    }
  }
  double kappa_hat = calibrate_kappa(rng, 200);
  CheckResult r;
  r.name = "calibration identity";
  r.elapsed_s = seconds_since(t0);
  r.pass = worst <= 1e-6 && r.elapsed_s < 5.0;
  r.detail = "max rel err " + sci(worst) + " (tol 1e-06), kappa_hat " +
             sci(kappa_hat) + " (shipped " + sci(kDefaultKappa) + ")";
  return r;
}

// 2. Conservation over 10^4 steps at dt = 1e-3: N=3 relative energy drift
//    <= 1e-8 and momentum Frobenius drift <= 1e-6; N=2 distance drift <= 1e-6.
CheckResult check_conservation(std::uint64_t seed) {
  auto t0 = Clock::now();
  Rng rng(seed);
  IntegratorSpec ispec;
  ispec.method = StepMethod::Rk4Projected;
  ispec.dt = 1e-3;
  ispec.steps = 10000;
  ispec.monitor_every = 100;

  VortexConfig c3 = random_config({1.0, 2.0, 3.0}, rng, 0.5);
  Trajectory t3 = integrate(c3, HamiltonianSpec::log_sin(), ispec);

  VortexConfig c2 = random_config({1.0, 1.0}, rng, 0.4);
  Trajectory t2 = integrate(c2, HamiltonianSpec::log_sin(), ispec);

  CheckResult r;
  r.name = "conservation drifts";
  r.elapsed_s = seconds_since(t0);
  r.pass = !t3.collided && !t2.collided &&
           t3.max_rel_energy_drift <= 1e-8 && t3.max_momentum_drift <= 1e-6 &&
           t2.max_distance_drift <= 1e-6 && r.elapsed_s < 30.0;
  r.detail = "N=3 rel dH " + sci(t3.max_rel_energy_drift) + " (tol 1e-08), dJ " +
             sci(t3.max_momentum_drift) + " (tol 1e-06); N=2 d-drift " +
             sci(t2.max_distance_drift) + " (tol 1e-06)";
  return r;
}

// 3. Equilibria: ||X_H|| <= 1e-12 at the 6 non-colliding torus-fixed triples
//    and at the orthogonal pair for N = 2, with the singular interaction.
CheckResult check_equilibria() {
  auto t0 = Clock::now();
  HamiltonianSpec spec = HamiltonianSpec::log_sin();
  auto e1 = ProjectivePoint::coordinate(0);
  auto e2 = ProjectivePoint::coordinate(1);
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  double worst = 0.0;
  for (const auto& p : perms) {
    VortexConfig c({ProjectivePoint::coordinate(p[0]),
                    ProjectivePoint::coordinate(p[1]),
                    ProjectivePoint::coordinate(p[2])},
                   {1.0, 2.0, 3.0});
    worst = std::max(worst, hamiltonian_vector_field(c, spec).norm());
  }
  VortexConfig pair({e1, e2}, {2.0, 3.0});
  worst = std::max(worst, hamiltonian_vector_field(pair, spec).norm());

  CheckResult r;
  r.name = "torus-fixed and orthogonal-pair equilibria";
  r.pass = worst <= 1e-12;
  r.elapsed_s = seconds_since(t0);
  r.detail = "max ||X_H|| " + sci(worst) + " (tol 1e-12)";
  return r;
}

// 4. N=2 collective motion: re_residual <= 1e-8 for 100 random configurations
//    for each strength regime (1,1), (1,-1), (2,3).
CheckResult check_collective_motion_n2(std::uint64_t seed) {
  auto t0 = Clock::now();
  Rng rng(seed);
  HamiltonianSpec spec = HamiltonianSpec::log_sin();
  double worst = 0.0;
  for (auto gammas : {std::vector<double>{1.0, 1.0},
                      std::vector<double>{1.0, -1.0},
                      std::vector<double>{2.0, 3.0}}) {
    for (int trial = 0; trial < 100; ++trial) {
      VortexConfig c = random_config(gammas, rng, 1e-3);
      worst = std::max(worst, re_residual(c, spec).residual);
    }
  }
  CheckResult r;
  r.name = "N=2 collective motion";
  r.pass = worst <= 1e-8;
  r.elapsed_s = seconds_since(t0);
  r.detail = "max residual " + sci(worst) + " (tol 1e-08) over 300 configs";
  return r;
}

// 5. Relative-equilibrium families for N=3: semi-orthogonal configurations
//    with generic strengths and the two cyclic-symmetric families with equal
//    strengths, 20 random samples each, residual <= 1e-8.
CheckResult check_re_families(std::uint64_t seed) {
  auto t0 = Clock::now();
  Rng rng(seed);
  HamiltonianSpec spec = HamiltonianSpec::log_sin();
  double worst = 0.0;

  for (int trial = 0; trial < 20; ++trial) {
    // one point orthogonal to the two others, which live in its polar line
    ProjectivePoint z1 = random_point(rng);
    auto hb = horizontal_basis(z1);
    const Vector3c u = hb[0].vec, w = hb[2].vec;
    auto in_polar_line = [&]() {
      Vector3c v = Complex(rng.normal(), rng.normal()) * u +
                   Complex(rng.normal(), rng.normal()) * w;
      return make_point(v);
    };
    ProjectivePoint z2 = in_polar_line();
    ProjectivePoint z3 = in_polar_line();
    while (distance(z2, z3) < 1e-2) z3 = in_polar_line();
    std::vector<double> gammas = {random_generic_gamma(rng),
                                  random_generic_gamma(rng),
                                  random_generic_gamma(rng)};
    VortexConfig c({z1, z2, z3}, gammas);
    worst = std::max(worst, re_residual(c, spec).residual);
  }

  for (int j : {1, 2}) {
    for (int trial = 0; trial < 20; ++trial) {
      VortexConfig c = [&] {
        while (true) {
          ProjectivePoint m1 = random_point(rng);
          VortexConfig cand = symmetric_family_config(j, m1);
          double dmin = std::numbers::pi;
          for (double d : pairwise_distances(cand)) dmin = std::min(dmin, d);
          if (dmin > 1e-2) return cand;
        }
      }();
      worst = std::max(worst, re_residual(c, spec).residual);
    }
  }

  CheckResult r;
  r.name = "N=3 relative-equilibrium families";
  r.pass = worst <= 1e-8;
  r.elapsed_s = seconds_since(t0);
  r.detail = "max residual " + sci(worst) +
             " (tol 1e-08) over semi-orthogonal + two symmetric families";
  return r;
}

// 6. Bifurcation-lemma duality: momentum_jacobian_rank + stabilizer dimension
//    = 8 on canonical representatives of the six stabilizer geometries and on
//    50 random configurations.
CheckResult check_rank_stabilizer_duality(std::uint64_t seed) {
  auto t0 = Clock::now();
  Rng rng(seed);
  auto e1 = ProjectivePoint::coordinate(0);
  auto e2 = ProjectivePoint::coordinate(1);
  auto e3 = ProjectivePoint::coordinate(2);
  ProjectivePoint diag = make_point(Vector3c(1.0, 1.0, 0.0));

  std::vector<double> g = {2.0, 3.0, 4.0};
  std::vector<std::pair<std::string, VortexConfig>> cases = {
      {"triple", VortexConfig({e1, e1, e1}, g)},
      {"double+orthogonal", VortexConfig({e1, e1, e2}, g)},
      {"double", VortexConfig({e1, e1, diag}, g)},
      {"totally orthogonal", VortexConfig({e1, e2, e3}, g)},
      {"coplanar", VortexConfig({e1, e2, diag}, g)},
      {"semi-orthogonal", VortexConfig({e3, e1, diag}, g)},
      {"generic", random_config(g, rng, 0.2)},
  };
  bool pass = true;
  std::ostringstream detail;
  for (const auto& [name, c] : cases) {
    int rank = momentum_jacobian_rank(c);
    int dim = static_cast<int>(stabilizer_algebra(c).size());
    if (rank + dim != 8) {
      pass = false;
      detail << name << ": rank " << rank << " + dim " << dim << " != 8; ";
    }
  }
  int random_fail = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> gr = {random_generic_gamma(rng),
                              random_generic_gamma(rng),
                              random_generic_gamma(rng)};
    VortexConfig c = random_config(gr, rng);
    if (momentum_jacobian_rank(c) +
            static_cast<int>(stabilizer_algebra(c).size()) !=
        8) {
      ++random_fail;
    }
  }
  if (random_fail > 0) pass = false;

  CheckResult r;
  r.name = "rank/stabilizer duality";
  r.pass = pass;
  r.elapsed_s = seconds_since(t0);
  r.detail = detail.str().empty()
                 ? "rank + dim = 8 on 7 canonical and 50 random configs"
                 : detail.str() + std::to_string(random_fail) + " random fails";
  return r;
}

namespace {

// Coplanar configuration whose momentum lies in a chamber wall: Bloch vectors
// n_j on the equatorial circle with sum_j Gamma_j n_j = 0, so the su(2) block
// of J vanishes and the spectrum is (S/6, S/6, -S/3). Needs |G1|,|G2|,|G3| to
// satisfy the strict triangle inequality.
VortexConfig coplanar_wall_config(double g1, double g2, double g3) {
  double cos12 = (g3 * g3 - g1 * g1 - g2 * g2) / (2.0 * g1 * g2);
  if (std::abs(cos12) >= 1.0) {
    throw std::invalid_argument("coplanar_wall_config: no strength triangle");
  }
  double th2 = std::acos(cos12);
  Eigen::Vector2d n1(0.0, 1.0);  // (sin, cos) in the x-z plane
  Eigen::Vector2d n2(std::sin(th2), std::cos(th2));
  Eigen::Vector2d n3 = -(g1 * n1 + g2 * n2) / g3;
  auto bloch_point = [](const Eigen::Vector2d& n) {
    double theta = std::atan2(n[0], n[1]);
    return make_point(
        Vector3c(std::cos(theta / 2.0), std::sin(theta / 2.0), 0.0));
  };
  return VortexConfig({bloch_point(n1), bloch_point(n2), bloch_point(n3)},
                      {g1, g2, g3});
}

// Analytic gradient of (ev1 - ev0)^2, the squared gap of the two lowest
// momentum eigenvalues; used to steer a generic configuration onto a wall.
Eigen::VectorXd eigengap_sq_gradient(const VortexConfig& c) {
  Eigen::SelfAdjointEigenSolver<Matrix3c> es(momentum_map(c).matrix());
  double gap = es.eigenvalues()[1] - es.eigenvalues()[0];
  Vector3c u0 = es.eigenvectors().col(0);
  Vector3c u1 = es.eigenvectors().col(1);
  Eigen::VectorXd grad(6 * c.size());
  for (int j = 0; j < c.size(); ++j) {
    auto k = static_cast<std::size_t>(j);
    const Vector3c& z = c.points[k].rep();
    Vector3c gj = 2.0 * gap * 2.0 * c.gammas[k] *
                  (std::conj(z.dot(u1)) * u1 - std::conj(z.dot(u0)) * u0);
    for (int r = 0; r < 3; ++r) {
      grad[6 * j + 2 * r] = gj[r].real();
      grad[6 * j + 2 * r + 1] = gj[r].imag();
    }
  }
  return grad;
}

VortexConfig generic_wall_config(const std::vector<double>& gammas, Rng& rng) {
  ConfigObjective f = [](const VortexConfig& c) {
    Eigen::SelfAdjointEigenSolver<Matrix3c> es(momentum_map(c).matrix(),
                                               Eigen::EigenvaluesOnly);
    double gap = es.eigenvalues()[1] - es.eigenvalues()[0];
    return gap * gap;
  };
  DescentOptions opts;
  opts.max_iters = 20000;
  opts.f_tol = 1e-22;
  opts.init_step = 0.05;
  for (int attempt = 0; attempt < 10; ++attempt) {
    VortexConfig start = random_config(gammas, rng, 0.3);
    DescentResult res =
        minimize_over_configs(start, f, opts, eigengap_sq_gradient);
    if (!res.converged) continue;
    if (classify_stabilizer(res.config, 1e-4) != StabilizerType::Generic) {
      continue;
    }
    if (!stabilizer_algebra(res.config, 1e-6).empty()) continue;
    WeylPoint w = weyl_projection(momentum_map(res.config));
    if (w[0] - w[1] < 0.1) continue;  // keep away from the other wall
    return res.config;
  }
  throw std::runtime_error("generic_wall_config: search failed");
}

}  // namespace

// 7. Allowed-velocity tables: every row of the N=2 table across the three
//    strength regimes, and every row of the N=3 table for generic strengths.
CheckResult check_velocity_tables(std::uint64_t seed) {
  auto t0 = Clock::now();
  Rng rng(seed);
  auto e1 = ProjectivePoint::coordinate(0);
  auto e2 = ProjectivePoint::coordinate(1);
  auto e3 = ProjectivePoint::coordinate(2);
  ProjectivePoint diag = make_point(Vector3c(1.0, 1.0, 0.0));
  ProjectivePoint z = make_point(Vector3c(Complex(1.0, 0.0), Complex(0.4, 0.3),
                                          Complex(0.2, -0.1)));

  bool pass = true;
  std::ostringstream bad;
  auto expect = [&](const std::string& name, const VortexConfig& c, int want) {
    int got = allowed_velocity_dim(c);
    if (got != want) {
      pass = false;
      bad << name << ": got " << got << " want " << want << "; ";
    }
  };

  // N = 2, rows (equal, orthogonal, generic) x strength regimes
  for (auto [tag, g1, g2] :
       {std::tuple{"G1=G2", 1.0, 1.0}, std::tuple{"G1=-G2", 1.0, -1.0},
        std::tuple{"generic", 2.0, 3.0}}) {
    std::vector<double> g = {g1, g2};
    expect(std::string("N2 equal ") + tag, VortexConfig({z, z}, g), 0);
    expect(std::string("N2 orthogonal ") + tag, VortexConfig({e1, e2}, g), 0);
    expect(std::string("N2 generic ") + tag, VortexConfig({e1, diag}, g), 1);
  }

  // N = 3, generic strengths; (2,3,4) also satisfies the strict triangle
  // inequality needed to realize wall momenta away from the triple stratum.
  std::vector<double> g = {2.0, 3.0, 4.0};
  expect("N3 triple (wall)", VortexConfig({e1, e1, e1}, g), 0);
  expect("N3 double+orthogonal", VortexConfig({e1, e1, e2}, g), 0);
  expect("N3 totally orthogonal", VortexConfig({e1, e2, e3}, g), 0);
  expect("N3 double", VortexConfig({e1, e1, diag}, g), 1);
  expect("N3 coplanar distinct", VortexConfig({e1, e2, diag}, g), 1);
  expect("N3 semi-orthogonal", VortexConfig({e3, e1, diag}, g), 1);
  expect("N3 generic off-wall", random_config(g, rng, 0.3), 2);
  expect("N3 coplanar on wall (non-triple vertex)",
         coplanar_wall_config(g[0], g[1], g[2]), 3);
  expect("N3 generic on wall", generic_wall_config(g, rng), 4);

  CheckResult r;
  r.name = "allowed-velocity tables";
  r.pass = pass;
  r.elapsed_s = seconds_since(t0);
  r.detail = pass ? "all 9 + 9 rows match" : bad.str();
  return r;
}

// 8. Landmarks: equal strengths give b = 0 and coincident c's; (1,1,-1) gives
//    a = c1; (1,2,3) gives a = (4,-2,-2) and b = (1,0,-1). All to 1e-12.
CheckResult check_landmarks() {
  auto t0 = Clock::now();
  const double tol = 1e-12;
  bool pass = true;
  std::ostringstream bad;

  PolytopeLandmarks lm111 = polytope_landmarks({1.0, 1.0, 1.0});
  if (weyl_distance(lm111.b, WeylPoint(0, 0, 0)) > tol) {
    pass = false;
    bad << "b(1,1,1) != 0; ";
  }
  if (weyl_distance(lm111.c1, lm111.c2) > tol ||
      weyl_distance(lm111.c2, lm111.c3) > tol) {
    pass = false;
    bad << "c's(1,1,1) not coincident; ";
  }

  PolytopeLandmarks lm11m1 = polytope_landmarks({1.0, 1.0, -1.0});
  if (weyl_distance(lm11m1.a, lm11m1.c1) > tol) {
    pass = false;
    bad << "a(1,1,-1) != c1; ";
  }

  PolytopeLandmarks lm123 = polytope_landmarks({1.0, 2.0, 3.0});
  if (weyl_distance(lm123.a, WeylPoint(4, -2, -2)) > tol) {
    pass = false;
    bad << "a(1,2,3) != (4,-2,-2); ";
  }
  if (weyl_distance(lm123.b, WeylPoint(1, 0, -1)) > tol) {
    pass = false;
    bad << "b(1,2,3) != (1,0,-1); ";
  }

  CheckResult r;
  r.name = "polytope landmarks";
  r.pass = pass;
  r.elapsed_s = seconds_since(t0);
  r.detail = pass ? "all landmark identities hold to 1e-12" : bad.str();
  return r;
}

// 9. Fiber probe for (1,2,3): interior regular value reports reduced
//    dimension 2 at >= 90% of converged starts (200 starts); every converged
//    point over b classifies totally orthogonal; every converged point over a
//    classifies as a triple point.
CheckResult check_fiber_probe(std::uint64_t seed) {
  auto t0 = Clock::now();
  Rng rng(seed);
  std::array<double, 3> gammas = {1.0, 2.0, 3.0};

  // regular interior value: the image of a random configuration, kept away
  // from walls
  WeylPoint mu_int = [&] {
    while (true) {
      VortexConfig c = random_config({1.0, 2.0, 3.0}, rng, 0.3);
      WeylPoint w = weyl_projection(momentum_map(c));
      if (w[0] - w[1] > 0.3 && w[1] - w[2] > 0.3) return w;
    }
  }();

  FiberProbeReport interior = fiber_probe(gammas, mu_int, 200, rng);
  int dim_ok = 0;
  for (const auto& p : interior.points) {
    if (p.reduced_dim_estimate == 2) ++dim_ok;
  }
  bool interior_pass =
      interior.n_converged > 0 &&
      dim_ok * 10 >= interior.n_converged * 9;  // >= 90%

  PolytopeLandmarks lm = polytope_landmarks(gammas);
  FiberProbeReport at_b = fiber_probe(gammas, lm.b, 50, rng);
  bool b_pass = at_b.n_converged > 0;
  for (const auto& p : at_b.points) {
    b_pass = b_pass && p.stab_type == StabilizerType::TotallyOrthogonal;
  }

  FiberProbeReport at_a = fiber_probe(gammas, lm.a, 50, rng);
  bool a_pass = at_a.n_converged > 0;
  for (const auto& p : at_a.points) {
    a_pass = a_pass && p.stab_type == StabilizerType::TriplePoint;
  }

  CheckResult r;
  r.name = "reduced-space prediction vs fiber probe";
  r.elapsed_s = seconds_since(t0);
  r.pass = interior_pass && b_pass && a_pass && r.elapsed_s < 120.0;
  std::ostringstream d;
  d << "interior: " << dim_ok << "/" << interior.n_converged
    << " report dim 2 (need 90%); b: " << at_b.n_converged
    << " converged all totally orthogonal: " << (b_pass ? "yes" : "no")
    << "; a: " << at_a.n_converged
    << " converged all triple: " << (a_pass ? "yes" : "no");
  r.detail = d.str();
  return r;
}

// 10. Convexity probe: midpoints of random sample pairs are realized by an
//     optimizer to within 1e-3 in chamber coordinates, >= 95 of 100 pairs for
//     each of three strength vectors.
CheckResult check_polytope_convexity(std::uint64_t seed) {
  auto t0 = Clock::now();
  bool pass = true;
  std::ostringstream d;
  const std::vector<std::array<double, 3>> gamma_sets = {
      {1.0, 1.0, 1.0}, {1.0, 2.0, 3.0}, {1.0, 1.0, -1.0}};

  DescentOptions opts;
  opts.f_tol = 1e-7;  // sqrt() well below the 1e-3 acceptance distance
  opts.max_iters = 4000;

  Rng rng(seed);
  for (const auto& ga : gamma_sets) {
    std::vector<double> g(ga.begin(), ga.end());
    auto samples = sample_polytope(g, 2000, rng);
    int success = 0;
    for (int pair = 0; pair < 100; ++pair) {
      const WeylPoint& w1 =
          samples[static_cast<std::size_t>(rng.raw() % samples.size())];
      const WeylPoint& w2 =
          samples[static_cast<std::size_t>(rng.raw() % samples.size())];
      WeylPoint mid(0.5 * (w1[0] + w2[0]), 0.5 * (w1[1] + w2[1]),
                    0.5 * (w1[2] + w2[2]));
      for (int attempt = 0; attempt < 3; ++attempt) {
        VortexConfig start = random_config(g, rng);
        DescentResult res =
            minimize_over_configs(start, momentum_mismatch(mid), opts);
        WeylPoint got = weyl_projection(momentum_map(res.config));
        if ((chamber_coords(got) - chamber_coords(mid)).norm() <= 1e-3) {
          ++success;
          break;
        }
      }
    }
    if (success < 95) pass = false;
    d << "(" << ga[0] << "," << ga[1] << "," << ga[2] << "): " << success
      << "/100; ";
  }

  CheckResult r;
  r.name = "polytope convexity (midpoint realizability)";
  r.pass = pass;
  r.elapsed_s = seconds_since(t0);
  r.detail = d.str() + "need >= 95 each";
  return r;
}

std::vector<CheckResult> run_all_checks(std::uint64_t seed) {
  return {check_calibration_identity(seed),
          check_conservation(seed),
          check_equilibria(),
          check_collective_motion_n2(seed),
          check_re_families(seed),
          check_rank_stabilizer_duality(seed),
          check_velocity_tables(seed),
          check_landmarks(),
          check_fiber_probe(seed),
          check_polytope_convexity(seed)};
}

std::vector<std::string> suite_names() {
  return {"calibration", "conservation", "stabilizers", "tables",
          "landmarks",   "re_families",  "fiber"};
}

std::vector<CheckResult> run_suite(const std::string& suite,
                                   std::uint64_t seed) {
  if (suite == "calibration") return {check_calibration_identity(seed)};
  if (suite == "conservation") return {check_conservation(seed)};
  if (suite == "stabilizers") return {check_rank_stabilizer_duality(seed)};
  if (suite == "tables") return {check_velocity_tables(seed)};
  if (suite == "landmarks") return {check_landmarks()};
  if (suite == "re_families") {
    return {check_equilibria(), check_collective_motion_n2(seed),
            check_re_families(seed)};
  }
  if (suite == "fiber") {
    return {check_fiber_probe(seed), check_polytope_convexity(seed)};
  }
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace cpv
