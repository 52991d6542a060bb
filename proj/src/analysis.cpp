#include "cpv/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>

#include "cpv/parallel.hpp"

namespace cpv {

namespace {

constexpr double kHalfPi = std::numbers::pi / 2.0;

int rank_of(const Eigen::MatrixXd& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  double thresh = rel_tol * std::max(sv.size() > 0 ? sv[0] : 0.0, 1.0);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv[i] > thresh) ++r;
  }
  return r;
}

}  // namespace

std::string to_string(StabilizerType t) {
  switch (t) {
    case StabilizerType::TriplePoint: return "TriplePoint";
    case StabilizerType::DoublePoint: return "DoublePoint";
    case StabilizerType::DoubleOrthogonal: return "DoubleOrthogonal";
    case StabilizerType::TotallyOrthogonal: return "TotallyOrthogonal";
    case StabilizerType::Coplanar: return "Coplanar";
    case StabilizerType::SemiOrthogonal: return "SemiOrthogonal";
    case StabilizerType::Generic: return "Generic";
    case StabilizerType::Equal: return "Equal";
    case StabilizerType::Orthogonal: return "Orthogonal";
    case StabilizerType::Generic2: return "Generic2";
  }
  return "?";
}

StabilizerType classify_stabilizer(const VortexConfig& c, double tol) {
  if (c.size() == 2) {
    double d = distance(c.points[0], c.points[1]);
    if (d < tol) return StabilizerType::Equal;
    if (std::abs(d - kHalfPi) < tol) return StabilizerType::Orthogonal;
    return StabilizerType::Generic2;
  }
  if (c.size() != 3) {
    throw std::invalid_argument("classify_stabilizer: N must be 2 or 3");
  }

  double d12 = distance(c.points[0], c.points[1]);
  double d13 = distance(c.points[0], c.points[2]);
  double d23 = distance(c.points[1], c.points[2]);
  auto eq = [&](double d) { return d < tol; };
  auto orth = [&](double d) { return std::abs(d - kHalfPi) < tol; };

  if (eq(d12) && eq(d13) && eq(d23)) return StabilizerType::TriplePoint;

  // exactly two coincident: (pair, outsider distance to the pair)
  struct Pair { bool is; double out; };
  Pair pairs[3] = {{eq(d12), d13}, {eq(d13), d12}, {eq(d23), d12}};
  for (const auto& p : pairs) {
    if (p.is) {
      return orth(p.out) ? StabilizerType::DoubleOrthogonal
                         : StabilizerType::DoublePoint;
    }
  }

  if (orth(d12) && orth(d13) && orth(d23)) {
    return StabilizerType::TotallyOrthogonal;
  }

  // one point orthogonal to both others (which are distinct by now)
  if ((orth(d12) && orth(d13)) || (orth(d12) && orth(d23)) ||
      (orth(d13) && orth(d23))) {
    return StabilizerType::SemiOrthogonal;
  }

  // coplanar: the stacked representatives span only 2 dimensions; the
  // smallest singular value is the root of the smallest Gram eigenvalue
  Matrix3c stacked;
  for (int j = 0; j < 3; ++j) {
    stacked.col(j) = c.points[static_cast<std::size_t>(j)].rep();
  }
  Eigen::SelfAdjointEigenSolver<Matrix3c> gram(stacked.adjoint() * stacked,
                                               Eigen::EigenvaluesOnly);
  double sigma3 = std::sqrt(std::max(0.0, gram.eigenvalues()[0]));
  if (sigma3 < tol) return StabilizerType::Coplanar;

  return StabilizerType::Generic;
}

std::vector<AlgebraElement> stabilizer_algebra(const VortexConfig& c,
                                               double tol) {
  const AlgebraBasis& basis = AlgebraBasis::standard();
  const int n = c.size();
  Eigen::MatrixXd a(6 * n, 8);
  for (int g = 0; g < 8; ++g) {
    for (int j = 0; j < n; ++j) {
      Vector3c v =
          infinitesimal_action(basis[g], c.points[static_cast<std::size_t>(j)])
              .vec;
      for (int r = 0; r < 3; ++r) {
        a(6 * j + 2 * r, g) = v[r].real();
        a(6 * j + 2 * r + 1, g) = v[r].imag();
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double thresh = tol * std::max(sv[0], 1.0);
  std::vector<AlgebraElement> out;
  for (int k = 0; k < 8; ++k) {
    if (sv[k] <= thresh) out.push_back(basis.combine(svd.matrixV().col(k)));
  }
  return out;
}

int momentum_jacobian_rank(const VortexConfig& c) {
  const AlgebraBasis& basis = AlgebraBasis::standard();
  auto tangents = horizontal_basis(c);
  Eigen::MatrixXd jac(8, static_cast<int>(tangents.size()));
  for (std::size_t t = 0; t < tangents.size(); ++t) {
    // DJ(v) = sum_j Gamma_j (v_j z_j^dag + z_j v_j^dag)
    Matrix3c dj = Matrix3c::Zero();
    for (int j = 0; j < c.size(); ++j) {
      auto k = static_cast<std::size_t>(j);
      const Vector3c& v = tangents[t].vecs[k].vec;
      const Vector3c& z = c.points[k].rep();
      dj += c.gammas[k] * (v * z.adjoint() + z * v.adjoint());
    }
    CoalgebraElement mu = CoalgebraElement::project(dj);
    for (int a = 0; a < 8; ++a) {
      jac(a, static_cast<int>(t)) = pairing(mu, basis[a]);
    }
  }
  return rank_of(jac, 1e-8);
}

int allowed_velocity_dim(const VortexConfig& c, double tol) {
  CoalgebraElement mu = momentum_map(c);
  auto g_mu = coadjoint_stabilizer(mu);
  const int n = c.size();
  const int rows = 6 * n;

  Eigen::MatrixXd w(rows, static_cast<int>(g_mu.size()));
  for (std::size_t g = 0; g < g_mu.size(); ++g) {
    for (int j = 0; j < n; ++j) {
      Vector3c v =
          infinitesimal_action(g_mu[g], c.points[static_cast<std::size_t>(j)])
              .vec;
      for (int r = 0; r < 3; ++r) {
        w(6 * j + 2 * r, static_cast<int>(g)) = v[r].real();
        w(6 * j + 2 * r + 1, static_cast<int>(g)) = v[r].imag();
      }
    }
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(w, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  double thresh = tol * std::max(sv.size() > 0 ? sv[0] : 0.0, 1.0);
  int r = 0;
  for (int i = 0; i < sv.size(); ++i) {
    if (sv[i] > thresh) ++r;
  }
  if (r == 0) return 0;
  Eigen::MatrixXd v_basis = svd.matrixU().leftCols(r);

  auto g_x = stabilizer_algebra(c, tol);
  if (g_x.empty()) return r;

  // Linearized action of eta on a tangent u at the fixed configuration:
  // (L_eta u)_j = eta u_j - <z_j, eta z_j> u_j. The kernel over all eta in
  // g_x is the fixed subspace (stabilizers here are connected).
  Eigen::MatrixXd stacked(static_cast<int>(g_x.size()) * rows, r);
  for (std::size_t e = 0; e < g_x.size(); ++e) {
    const Matrix3c& eta = g_x[e].matrix();
    for (int col = 0; col < r; ++col) {
      for (int j = 0; j < n; ++j) {
        auto k = static_cast<std::size_t>(j);
        Vector3c u;
        for (int rr = 0; rr < 3; ++rr) {
          u[rr] = Complex(v_basis(6 * j + 2 * rr, col),
                          v_basis(6 * j + 2 * rr + 1, col));
        }
        const Vector3c& z = c.points[k].rep();
        Vector3c lu = eta * u - z.dot(eta * z) * u;
        for (int rr = 0; rr < 3; ++rr) {
          stacked(static_cast<int>(e) * rows + 6 * j + 2 * rr, col) =
              lu[rr].real();
          stacked(static_cast<int>(e) * rows + 6 * j + 2 * rr + 1, col) =
              lu[rr].imag();
        }
      }
    }
  }
  return r - rank_of(stacked, tol);
}

PolytopeLandmarks polytope_landmarks(const std::array<double, 3>& gammas) {
  std::vector<double> g(gammas.begin(), gammas.end());
  auto e1 = ProjectivePoint::coordinate(0);
  auto e2 = ProjectivePoint::coordinate(1);
  auto e3 = ProjectivePoint::coordinate(2);
  auto at = [&](const ProjectivePoint& p1, const ProjectivePoint& p2,
                const ProjectivePoint& p3) {
    return weyl_projection(momentum_map(VortexConfig({p1, p2, p3}, g)));
  };
  PolytopeLandmarks lm;
  lm.a = at(e1, e1, e1);
  lm.b = at(e1, e2, e3);
  lm.c1 = at(e1, e2, e2);
  lm.c2 = at(e2, e1, e2);
  lm.c3 = at(e2, e2, e1);
  return lm;
}

std::vector<WeylPoint> sample_polytope(const std::vector<double>& gammas,
                                       int n, Rng& rng) {
  std::vector<WeylPoint> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int s = 0; s < n; ++s) {
    std::vector<ProjectivePoint> pts;
    for (std::size_t j = 0; j < gammas.size(); ++j) {
      pts.push_back(random_point(rng));
    }
    out.push_back(weyl_projection(momentum_map(VortexConfig(pts, gammas))));
  }
  return out;
}

namespace {

// The local quadratic form governing the reduced space at c_k: with the
// isolated strength G_k and the coincident pair (G_i, G_j),
//   S = A |v|^2 + 2B Re(uv) + C |u|^2 on C^2,
//   A = G_k (G_k - G_i)/G_i, B = G_k G_j / G_i, C = G_j (G_j + G_i)/G_i,
// assembled as a real 4x4 matrix in (Re u, Im u, Re v, Im v).
Eigen::Matrix4d slice_form_at_c(double gk, double gi, double gj) {
  double a = gk * (gk - gi) / gi;
  double b = gk * gj / gi;
  double cc = gj * (gj + gi) / gi;
  Eigen::Matrix4d s = Eigen::Matrix4d::Zero();
  s(0, 0) = cc;
  s(1, 1) = cc;
  s(2, 2) = a;
  s(3, 3) = a;
  s(0, 2) = s(2, 0) = b;
  s(1, 3) = s(3, 1) = -b;
  return s;
}

enum class Definiteness { Definite, Indefinite, Degenerate };

Definiteness classify_form(const Eigen::Matrix4d& s, double tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4d> es(s, Eigen::EigenvaluesOnly);
  double scale = std::max(std::abs(es.eigenvalues()[0]),
                          std::abs(es.eigenvalues()[3]));
  if (scale < tol) return Definiteness::Degenerate;
  double lo = es.eigenvalues()[0], hi = es.eigenvalues()[3];
  if (lo > tol * scale) return Definiteness::Definite;
  if (hi < -tol * scale) return Definiteness::Definite;
  if (lo < -tol * scale && hi > tol * scale) return Definiteness::Indefinite;
  return Definiteness::Degenerate;
}

}  // namespace

ReducedSpacePrediction predict_reduced_space(
    const std::array<double, 3>& gammas, LandmarkSite which, double tol) {
  using Kind = ReducedSpacePrediction::Kind;
  const double g1 = gammas[0], g2 = gammas[1], g3 = gammas[2];
  const double scale = std::max({std::abs(g1), std::abs(g2), std::abs(g3)});
  auto near = [&](double x, double y) { return std::abs(x - y) <= tol * scale; };

  if (which == LandmarkSite::Interior) {
    return {Kind::SmoothSphere, 0, "regular interior value"};
  }
  if (which == LandmarkSite::B) {
    return {Kind::Point, 0, "vertex distinct from a"};
  }

  if (which == LandmarkSite::A) {
    // transitions first: (t, t, -t) patterns give three singular points,
    // a single cancelling pair pulls a onto c_k with two
    bool three_fold = (near(g1, g2) && near(g1, -g3)) ||
                      (near(g1, g3) && near(g1, -g2)) ||
                      (near(g2, g3) && near(g2, -g1));
    if (three_fold) {
      return {Kind::PointedSphere, 3, "transition: strengths (t, t, -t)"};
    }
    if (near(g1, -g2) || near(g1, -g3) || near(g2, -g3)) {
      return {Kind::PointedSphere, 2, "transition: cancelling pair, a = c_k"};
    }
    if (near(g1 + g2 + g3, 0.0)) {
      return {Kind::Point, 0, "transition: zero total strength"};
    }
    double crit = g1 * g2 * g3 * (g1 + g2 + g3);
    if (crit > 0.0) {
      return {Kind::Point, 0, "product-sum criterion positive"};
    }
    return {Kind::PointedSphere, 1, "product-sum criterion negative"};
  }

  // c_k sites
  int k = which == LandmarkSite::C1 ? 0 : which == LandmarkSite::C2 ? 1 : 2;
  int i = (k + 1) % 3, j = (k + 2) % 3;
  double gk = gammas[static_cast<std::size_t>(k)];
  double gi = gammas[static_cast<std::size_t>(i)];
  double gj = gammas[static_cast<std::size_t>(j)];

  if (near(g1, g2) && near(g2, g3)) {
    return {Kind::PointedSphere, 3, "transition: equal strengths, c1 = c2 = c3"};
  }
  if ((near(gk, gi) && near(gk, -gj)) || (near(gk, gj) && near(gk, -gi))) {
    return {Kind::PointedSphere, 3, "transition: (t, t, -t), c_k = a"};
  }
  if (near(gi, -gj)) {
    return {Kind::PointedSphere, 2, "transition: cancelling pair, c_k = a"};
  }
  if (near(gk, gi) || near(gk, gj)) {
    return {Kind::PointedSphere, 2, "transition: coincident landmarks c_k = c_l"};
  }
  switch (classify_form(slice_form_at_c(gk, gi, gj), tol)) {
    case Definiteness::Definite:
      return {Kind::Point, 0, "slice form definite"};
    case Definiteness::Indefinite:
      return {Kind::PointedSphere, 1, "slice form indefinite"};
    case Definiteness::Degenerate:
      break;
  }
  if (near(gk, gi + gj)) {
    return {Kind::Point, 0, "transition: c_k on a chamber wall"};
  }
  return {Kind::Unknown, 0, "degenerate slice form"};
}

// --- descent over configurations ---------------------------------------------

namespace {

VortexConfig move_config(const VortexConfig& c, const Eigen::VectorXd& delta) {
  std::vector<ProjectivePoint> pts;
  pts.reserve(c.points.size());
  for (int j = 0; j < c.size(); ++j) {
    Vector3c v = c.points[static_cast<std::size_t>(j)].rep();
    for (int r = 0; r < 3; ++r) {
      v[r] += Complex(delta[6 * j + 2 * r], delta[6 * j + 2 * r + 1]);
    }
    pts.push_back(make_point(v));
  }
  return VortexConfig(std::move(pts), c.gammas);
}

Eigen::VectorXd fd_gradient(const VortexConfig& c, const ConfigObjective& f,
                            double h) {
  const int dim = 6 * c.size();
  Eigen::VectorXd g(dim);
  Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
  for (int k = 0; k < dim; ++k) {
    e[k] = h;
    double fp = f(move_config(c, e));
    e[k] = -h;
    double fm = f(move_config(c, e));
    e[k] = 0.0;
    g[k] = (fp - fm) / (2.0 * h);
  }
  return g;
}

void project_horizontal(const VortexConfig& c, Eigen::VectorXd& g) {
  for (int j = 0; j < c.size(); ++j) {
    Vector3c v;
    for (int r = 0; r < 3; ++r) {
      v[r] = Complex(g[6 * j + 2 * r], g[6 * j + 2 * r + 1]);
    }
    v = horizontal_project(c.points[static_cast<std::size_t>(j)], v).vec;
    for (int r = 0; r < 3; ++r) {
      g[6 * j + 2 * r] = v[r].real();
      g[6 * j + 2 * r + 1] = v[r].imag();
    }
  }
}

}  // namespace

ConfigObjective momentum_mismatch(const WeylPoint& target) {
  return [target](const VortexConfig& c) {
    WeylPoint w = weyl_projection(momentum_map(c));
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
      double d = w[i] - target[i];
      s += d * d;
    }
    return s;
  };
}

DescentResult minimize_over_configs(const VortexConfig& start,
                                    const ConfigObjective& f,
                                    const DescentOptions& opts,
                                    const ConfigGradient& grad) {
  VortexConfig c = start;
  double fc = f(c);
  double step = opts.init_step;
  int it = 0;
  for (; it < opts.max_iters && fc > opts.f_tol; ++it) {
    Eigen::VectorXd g = grad ? grad(c) : fd_gradient(c, f, opts.fd_step);
    project_horizontal(c, g);
    double gn2 = g.squaredNorm();
    if (gn2 < 1e-30) break;  // stalled at a critical point

    bool accepted = false;
    while (step > 1e-18) {
      VortexConfig cand = move_config(c, (-step) * g);
      double fcand = f(cand);
      if (fcand <= fc - 1e-4 * step * gn2) {
        c = cand;
        fc = fcand;
        accepted = true;
        step = std::min(step * 1.5, 1e3);
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
  }
  return DescentResult{c, fc, it, fc <= opts.f_tol};
}

// --- fiber probe --------------------------------------------------------------

FiberProbeReport fiber_probe(const std::array<double, 3>& gammas,
                             const WeylPoint& mu, int n_starts, Rng& rng,
                             const DescentOptions& opts, double cluster_tol) {
  FiberProbeReport report;
  report.target = mu;
  report.n_starts = n_starts;
  double scale = std::max({1.0, std::abs(mu[0]), std::abs(mu[2])});
  report.degenerate_target =
      (mu[0] - mu[1] < 1e-6 * scale) || (mu[1] - mu[2] < 1e-6 * scale);

  // one independent stream per start, seeded sequentially up front so the
  // outcome does not depend on the worker count
  std::vector<double> g(gammas.begin(), gammas.end());
  std::vector<Rng> streams;
  streams.reserve(static_cast<std::size_t>(n_starts));
  for (int s = 0; s < n_starts; ++s) streams.push_back(Rng(rng.raw()));

  std::vector<std::optional<DescentResult>> results(
      static_cast<std::size_t>(n_starts));
  ConfigObjective f = momentum_mismatch(mu);
  parallel_for(n_starts, [&](int s) {
    Rng r = streams[static_cast<std::size_t>(s)];
    std::vector<ProjectivePoint> pts{random_point(r), random_point(r),
                                     random_point(r)};
    results[static_cast<std::size_t>(s)] =
        minimize_over_configs(VortexConfig(pts, g), f, opts);
  });

  // Stratum tolerance matched to the descent resolution: where the target
  // eigenvalues coalesce the objective is quartically flat transverse to the
  // stratum, so f <= f_tol only places a converged point within ~f_tol^(1/4)
  // of it.
  const double stratum_tol = 1e-2;

  for (int s = 0; s < n_starts; ++s) {
    const auto& res = results[static_cast<std::size_t>(s)];
    if (!res || !res->converged) {
      ++report.n_failed;
      continue;
    }
    ++report.n_converged;
    FiberPoint p{res->config,
                 res->f,
                 weyl_projection(momentum_map(res->config)),
                 classify_stabilizer(res->config, stratum_tol),
                 static_cast<int>(stabilizer_algebra(res->config, stratum_tol).size()),
                 0,
                 0,
                 config_invariants(res->config)};

    // nullity of d(chamber o weyl o J) over the 12 horizontal directions
    auto tangents = horizontal_basis(res->config);
    Eigen::MatrixXd jac(2, static_cast<int>(tangents.size()));
    const double h = opts.fd_step;
    for (std::size_t t = 0; t < tangents.size(); ++t) {
      Eigen::Vector2d plus = chamber_coords(
          weyl_projection(momentum_map(displace(res->config, tangents[t], h))));
      Eigen::Vector2d minus = chamber_coords(weyl_projection(
          momentum_map(displace(res->config, tangents[t], -h))));
      jac.col(static_cast<int>(t)) = (plus - minus) / (2.0 * h);
    }
    int rank = rank_of(jac, 1e-4);
    p.fiber_nullity = static_cast<int>(tangents.size()) - rank;
    p.reduced_dim_estimate = p.fiber_nullity - (8 - p.stabilizer_dim);
    report.points.push_back(std::move(p));
  }

  // greedy clustering of invariant vectors as an orbit-count heuristic
  std::vector<ConfigInvariants> reps;
  for (const auto& p : report.points) {
    bool found = false;
    for (const auto& r : reps) {
      if (r.phase_defined != p.invariants.phase_defined) continue;
      double dd = std::max({std::abs(r.d12 - p.invariants.d12),
                            std::abs(r.d13 - p.invariants.d13),
                            std::abs(r.d23 - p.invariants.d23)});
      double dphi = 0.0;
      if (r.phase_defined) {
        dphi = std::abs(r.phase - p.invariants.phase);
        dphi = std::min(dphi, 2.0 * std::numbers::pi - dphi);
      }
      if (dd <= cluster_tol && dphi <= 10.0 * cluster_tol) {
        found = true;
        break;
      }
    }
    if (!found) reps.push_back(p.invariants);
  }
  report.invariant_clusters = static_cast<int>(reps.size());
  return report;
}

Matrix3c symmetric_family_generator(int j) {
  const double pi = std::numbers::pi;
  Matrix3c d = Matrix3c::Zero();
  if (j == 1) {
    d(0, 0) = 1.0;
    d(1, 1) = std::polar(1.0, 2.0 * pi / 3.0);
    d(2, 2) = std::polar(1.0, -2.0 * pi / 3.0);
  } else if (j == 2) {
    d(0, 0) = std::polar(1.0, 2.0 * pi / 9.0);
    d(1, 1) = std::polar(1.0, 2.0 * pi / 9.0);
    d(2, 2) = std::polar(1.0, -4.0 * pi / 9.0);
  } else {
    throw std::invalid_argument("symmetric_family_generator: j must be 1 or 2");
  }
  return d;
}

VortexConfig symmetric_family_config(int j, const ProjectivePoint& m1,
                                     double gamma) {
  Matrix3c d = symmetric_family_generator(j);
  ProjectivePoint m2 = act(d, m1);
  ProjectivePoint m3 = act(d, m2);
  return VortexConfig({m1, m2, m3}, {gamma, gamma, gamma});
}

}  // namespace cpv
