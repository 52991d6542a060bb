#include "cpv/vortex.hpp"

#include <algorithm>
#include <cmath>

namespace cpv {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

double dist_from_q(double q) { return std::acos(clamp01(std::sqrt(clamp01(q)))); }

}  // namespace

VortexConfig::VortexConfig(std::vector<ProjectivePoint> pts,
                           std::vector<double> g)
    : points(std::move(pts)), gammas(std::move(g)) {
  if (points.size() != gammas.size() || points.empty()) {
    throw std::invalid_argument("VortexConfig: need one strength per point");
  }
  for (double gamma : gammas) {
    if (gamma == 0.0 || !std::isfinite(gamma)) {
      throw std::invalid_argument("VortexConfig: strengths must be nonzero");
    }
  }
}

double ConfigTangent::norm() const {
  double s = 0.0;
  for (const auto& v : vecs) s += v.vec.squaredNorm();
  return std::sqrt(s);
}

CollisionError::CollisionError(int i_, int j_, double d)
    : std::runtime_error("collision: points " + std::to_string(i_) + "," +
                         std::to_string(j_) + " at distance " +
                         std::to_string(d)),
      i(i_),
      j(j_),
      dist(d) {}

// --- HamiltonianSpec --------------------------------------------------------

HamiltonianSpec HamiltonianSpec::log_sin(double scale) {
  HamiltonianSpec s;
  s.kind_ = Interaction::LogSin;
  s.scale_ = scale;
  s.singular_ = true;
  return s;
}

HamiltonianSpec HamiltonianSpec::cosine(double scale) {
  HamiltonianSpec s;
  s.kind_ = Interaction::Cosine;
  s.scale_ = scale;
  s.singular_ = false;
  return s;
}

HamiltonianSpec HamiltonianSpec::custom_table(
    std::vector<std::pair<double, double>> nodes, double scale) {
  if (nodes.size() < 4) {
    throw std::invalid_argument("custom_table: need at least 4 nodes");
  }
  for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
    if (nodes[k + 1].first <= nodes[k].first) {
      throw std::invalid_argument("custom_table: nodes must increase in d");
    }
  }
  const double half_pi = 2.0 * std::atan(1.0);
  if (nodes.front().first < 0.0 || nodes.back().first > half_pi + 1e-12) {
    throw std::invalid_argument("custom_table: nodes outside [0, pi/2]");
  }
  HamiltonianSpec s;
  s.kind_ = Interaction::CustomTable;
  s.scale_ = scale;
  s.nodes_ = std::move(nodes);
  s.singular_ = s.nodes_.front().first > kCollisionTol;
  s.build_spline();
  return s;
}

// Natural cubic spline: solve the tridiagonal system for the second
// derivatives m_k at the nodes.
void HamiltonianSpec::build_spline() {
  const int n = static_cast<int>(nodes_.size());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  a(0, 0) = 1.0;
  a(n - 1, n - 1) = 1.0;
  for (int k = 1; k + 1 < n; ++k) {
    double h0 = nodes_[k].first - nodes_[k - 1].first;
    double h1 = nodes_[k + 1].first - nodes_[k].first;
    a(k, k - 1) = h0 / 6.0;
    a(k, k) = (h0 + h1) / 3.0;
    a(k, k + 1) = h1 / 6.0;
    rhs[k] = (nodes_[k + 1].second - nodes_[k].second) / h1 -
             (nodes_[k].second - nodes_[k - 1].second) / h0;
  }
  Eigen::VectorXd m = a.colPivHouseholderQr().solve(rhs);
  spline_m_.assign(m.data(), m.data() + n);
}

HamiltonianSpec::SplineSegment HamiltonianSpec::segment_at(double d) const {
  double x = std::clamp(d, nodes_.front().first, nodes_.back().first);
  auto it = std::upper_bound(
      nodes_.begin(), nodes_.end(), x,
      [](double v, const std::pair<double, double>& n) { return v < n.first; });
  std::size_t k = std::min(
      nodes_.size() - 2,
      static_cast<std::size_t>(std::max<std::ptrdiff_t>(0, it - nodes_.begin() - 1)));
  double h = nodes_[k + 1].first - nodes_[k].first;
  return {k, h, (nodes_[k + 1].first - x) / h, (x - nodes_[k].first) / h};
}

double HamiltonianSpec::h0(double d) const {
  switch (kind_) {
    case Interaction::LogSin:
      return scale_ * std::log(std::sin(d));
    case Interaction::Cosine:
      return scale_ * std::cos(2.0 * d);
    case Interaction::CustomTable:
      break;
  }
  auto [k, h, t0, t1] = segment_at(d);
  double val = t0 * nodes_[k].second + t1 * nodes_[k + 1].second +
               ((t0 * t0 * t0 - t0) * spline_m_[k] +
                (t1 * t1 * t1 - t1) * spline_m_[k + 1]) *
                   h * h / 6.0;
  return scale_ * val;
}

double HamiltonianSpec::dh0(double d) const {
  switch (kind_) {
    case Interaction::LogSin:
      return scale_ / std::tan(d);
    case Interaction::Cosine:
      return -2.0 * scale_ * std::sin(2.0 * d);
    case Interaction::CustomTable:
      break;
  }
  auto [k, h, t0, t1] = segment_at(d);
  double der = (nodes_[k + 1].second - nodes_[k].second) / h +
               ((3.0 * t1 * t1 - 1.0) * spline_m_[k + 1] -
                (3.0 * t0 * t0 - 1.0) * spline_m_[k]) *
                   h / 6.0;
  return scale_ * der;
}

double HamiltonianSpec::h0_of_q(double q) const {
  switch (kind_) {
    case Interaction::LogSin:
      return scale_ * 0.5 * std::log1p(-clamp01(q));
    case Interaction::Cosine:
      return scale_ * (2.0 * q - 1.0);
    case Interaction::CustomTable:
      return h0(dist_from_q(q));
  }
  return 0.0;
}

double HamiltonianSpec::dh0_dq(double q) const {
  switch (kind_) {
    case Interaction::LogSin:
      return -scale_ * 0.5 / (1.0 - clamp01(q));
    case Interaction::Cosine:
      return 2.0 * scale_;
    case Interaction::CustomTable:
      break;
  }
  // chain rule: dq = -sin(2d) dd, so dh/dq = -h'(d)/sin(2d). Near the
  // orthogonal end sin(2d) vanishes; for a smooth interaction h'(pi/2) = 0
  // and the ratio tends to -h''(d)/(2 cos 2d), estimated by differencing.
  double d = dist_from_q(q);
  double s2 = std::sin(2.0 * d);
  if (std::abs(s2) < 1e-6) {
    double eps = 1e-5;
    double hi = std::min(d + eps, nodes_.back().first);
    double lo = std::max(d - eps, nodes_.front().first);
    double h2 = (dh0(hi) - dh0(lo)) / (hi - lo);
    return -h2 / (2.0 * std::cos(2.0 * d));
  }
  return -dh0(d) / s2;
}

// --- core operations --------------------------------------------------------

namespace {

void require_based_at(const VortexConfig& c, const ConfigTangent& t,
                      const char* what) {
  if (static_cast<int>(t.vecs.size()) != c.size()) {
    throw std::invalid_argument(std::string(what) + ": wrong factor count");
  }
  for (int j = 0; j < c.size(); ++j) {
    if ((t.vecs[static_cast<std::size_t>(j)].base.rep() -
         c.points[static_cast<std::size_t>(j)].rep())
            .norm() > 1e-12) {
      throw std::invalid_argument(std::string(what) +
                                  ": tangent not based at configuration");
    }
  }
}

void check_collisions(const VortexConfig& c, const HamiltonianSpec& spec) {
  if (!spec.singular_at_collision()) return;
  for (int i = 0; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) {
      double d = distance(c.points[static_cast<std::size_t>(i)],
                          c.points[static_cast<std::size_t>(j)]);
      if (d <= kCollisionTol) throw CollisionError(i, j, d);
    }
  }
}

}  // namespace

double symplectic_form(const VortexConfig& c, const ConfigTangent& u,
                       const ConfigTangent& v, double kappa) {
  require_based_at(c, u, "symplectic_form(u)");
  require_based_at(c, v, "symplectic_form(v)");
  double s = 0.0;
  for (int j = 0; j < c.size(); ++j) {
    auto k = static_cast<std::size_t>(j);
    s += c.gammas[k] * kappa * (u.vecs[k].vec.dot(v.vecs[k].vec)).imag();
  }
  return s;
}

CoalgebraElement momentum_single(const ProjectivePoint& z) {
  Matrix3c m = z.rep() * z.rep().adjoint() - Matrix3c::Identity() / 3.0;
  return CoalgebraElement::project(m);
}

CoalgebraElement momentum_map(const VortexConfig& c) {
  Matrix3c m = Matrix3c::Zero();
  for (int j = 0; j < c.size(); ++j) {
    auto k = static_cast<std::size_t>(j);
    m += c.gammas[k] * momentum_single(c.points[k]).matrix();
  }
  return CoalgebraElement::project(m);
}

double hamiltonian(const VortexConfig& c, const HamiltonianSpec& spec) {
  check_collisions(c, spec);
  double h = 0.0;
  for (int i = 0; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) {
      auto a = static_cast<std::size_t>(i);
      auto b = static_cast<std::size_t>(j);
      Complex s = c.points[a].rep().dot(c.points[b].rep());
      h += c.gammas[a] * c.gammas[b] * spec.h0_of_q(std::norm(s));
    }
  }
  return h;
}

ConfigTangent hamiltonian_vector_field(const VortexConfig& c,
                                       const HamiltonianSpec& spec,
                                       double kappa) {
  check_collisions(c, spec);
  const int n = c.size();
  std::vector<Vector3c> grad(static_cast<std::size_t>(n), Vector3c::Zero());
  // Euclidean gradient in the representative chart: dH(delta) =
  // sum_j Re <grad_j, delta_j>, assembled pairwise through q = |s|^2.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      auto a = static_cast<std::size_t>(i);
      auto b = static_cast<std::size_t>(j);
      Complex s = c.points[a].rep().dot(c.points[b].rep());
      double coef =
          2.0 * c.gammas[a] * c.gammas[b] * spec.dh0_dq(std::norm(s));
      grad[a] += coef * std::conj(s) * c.points[b].rep();
      grad[b] += coef * s * c.points[a].rep();
    }
  }
  ConfigTangent x;
  x.vecs.reserve(static_cast<std::size_t>(n));
  const Complex i_unit(0.0, 1.0);
  for (int j = 0; j < n; ++j) {
    auto k = static_cast<std::size_t>(j);
    TangentVector h = horizontal_project(c.points[k], grad[k]);
    h.vec = (i_unit / (kappa * c.gammas[k])) * h.vec;
    x.vecs.push_back(h);
  }
  return x;
}

ReResidual re_residual(const VortexConfig& c, const HamiltonianSpec& spec,
                       bool restrict_to_g_mu, double kappa, bool weighted) {
  ConfigTangent xh = hamiltonian_vector_field(c, spec, kappa);

  std::vector<AlgebraElement> gen;
  if (restrict_to_g_mu) {
    gen = coadjoint_stabilizer(momentum_map(c));
  } else {
    const AlgebraBasis& basis = AlgebraBasis::standard();
    for (int a = 0; a < AlgebraBasis::size; ++a) gen.push_back(basis[a]);
  }

  const int n = c.size();
  const int rows = 6 * n;
  Eigen::MatrixXd a(rows, static_cast<int>(gen.size()));
  Eigen::VectorXd b(rows);
  std::vector<double> w(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    auto k = static_cast<std::size_t>(j);
    w[k] = weighted ? std::sqrt(std::abs(c.gammas[k])) : 1.0;
  }
  for (std::size_t g = 0; g < gen.size(); ++g) {
    for (int j = 0; j < n; ++j) {
      auto k = static_cast<std::size_t>(j);
      Vector3c v = infinitesimal_action(gen[g], c.points[k]).vec * w[k];
      for (int r = 0; r < 3; ++r) {
        a(6 * j + 2 * r, static_cast<int>(g)) = v[r].real();
        a(6 * j + 2 * r + 1, static_cast<int>(g)) = v[r].imag();
      }
    }
  }
  for (int j = 0; j < n; ++j) {
    auto k = static_cast<std::size_t>(j);
    Vector3c v = xh.vecs[k].vec * w[k];
    for (int r = 0; r < 3; ++r) {
      b[6 * j + 2 * r] = v[r].real();
      b[6 * j + 2 * r + 1] = v[r].imag();
    }
  }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(
      a, Eigen::ComputeThinU | Eigen::ComputeThinV);
  svd.setThreshold(1e-12);
  Eigen::VectorXd coeff = svd.solve(b);

  Matrix3c xi = Matrix3c::Zero();
  for (std::size_t g = 0; g < gen.size(); ++g) {
    xi += coeff[static_cast<int>(g)] * gen[g].matrix();
  }
  return ReResidual{(a * coeff - b).norm(), AlgebraElement::project(xi)};
}

ConfigInvariants config_invariants(const VortexConfig& c) {
  if (c.size() != 3) {
    throw std::invalid_argument("config_invariants: defined for N = 3");
  }
  const auto& z1 = c.points[0].rep();
  const auto& z2 = c.points[1].rep();
  const auto& z3 = c.points[2].rep();
  Complex s12 = z1.dot(z2), s23 = z2.dot(z3), s31 = z3.dot(z1);
  ConfigInvariants inv{};
  inv.d12 = distance(c.points[0], c.points[1]);
  inv.d13 = distance(c.points[0], c.points[2]);
  inv.d23 = distance(c.points[1], c.points[2]);
  double min_overlap =
      std::min({std::abs(s12), std::abs(s23), std::abs(s31)});
  inv.phase_defined = min_overlap > 1e-10;
  inv.phase = inv.phase_defined ? std::arg(s12 * s23 * s31) : 0.0;
  return inv;
}

// --- tangent-space utilities -----------------------------------------------

std::vector<TangentVector> horizontal_basis(const ProjectivePoint& z) {
  // Complete rep to a unitary basis of C^3 by Householder-style pivoting.
  Vector3c u, w;
  int pivot = 0;
  for (int i = 1; i < 3; ++i) {
    if (std::abs(z.rep()[i]) < std::abs(z.rep()[pivot])) pivot = i;
  }
  Vector3c seed = Vector3c::Zero();
  seed[pivot] = 1.0;
  u = seed - z.rep() * z.rep().dot(seed);
  u.normalize();
  w[0] = std::conj(z.rep()[1]) * std::conj(u[2]) - std::conj(z.rep()[2]) * std::conj(u[1]);
  w[1] = std::conj(z.rep()[2]) * std::conj(u[0]) - std::conj(z.rep()[0]) * std::conj(u[2]);
  w[2] = std::conj(z.rep()[0]) * std::conj(u[1]) - std::conj(z.rep()[1]) * std::conj(u[0]);
  w.normalize();
  const Complex i_unit(0.0, 1.0);
  return {TangentVector{z, u}, TangentVector{z, i_unit * u},
          TangentVector{z, w}, TangentVector{z, i_unit * w}};
}

std::vector<ConfigTangent> horizontal_basis(const VortexConfig& c) {
  std::vector<ConfigTangent> out;
  for (int j = 0; j < c.size(); ++j) {
    auto pb = horizontal_basis(c.points[static_cast<std::size_t>(j)]);
    for (const auto& tv : pb) {
      out.push_back(single_factor_tangent(c, j, tv.vec));
    }
  }
  return out;
}

ConfigTangent random_tangent(const VortexConfig& c, Rng& rng) {
  ConfigTangent t;
  for (int j = 0; j < c.size(); ++j) {
    Vector3c v;
    for (int r = 0; r < 3; ++r) v[r] = Complex(rng.normal(), rng.normal());
    t.vecs.push_back(
        horizontal_project(c.points[static_cast<std::size_t>(j)], v));
  }
  return t;
}

ConfigTangent single_factor_tangent(const VortexConfig& c, int j,
                                    const Vector3c& v) {
  ConfigTangent t;
  for (int k = 0; k < c.size(); ++k) {
    const auto& z = c.points[static_cast<std::size_t>(k)];
    t.vecs.push_back(k == j ? horizontal_project(z, v)
                            : TangentVector{z, Vector3c::Zero()});
  }
  return t;
}

Eigen::VectorXd flatten(const ConfigTangent& t) {
  Eigen::VectorXd v(6 * static_cast<int>(t.vecs.size()));
  for (std::size_t j = 0; j < t.vecs.size(); ++j) {
    for (int r = 0; r < 3; ++r) {
      v[6 * static_cast<int>(j) + 2 * r] = t.vecs[j].vec[r].real();
      v[6 * static_cast<int>(j) + 2 * r + 1] = t.vecs[j].vec[r].imag();
    }
  }
  return v;
}

VortexConfig displace(const VortexConfig& c, const ConfigTangent& t,
                      double s) {
  std::vector<ProjectivePoint> pts;
  pts.reserve(c.points.size());
  for (std::size_t j = 0; j < c.points.size(); ++j) {
    pts.push_back(make_point(c.points[j].rep() + s * t.vecs[j].vec));
  }
  return VortexConfig(std::move(pts), c.gammas);
}

double calibrate_kappa(Rng& rng, int samples) {
  double num = 0.0, den = 0.0;
  const double step = 1e-6;
  for (int s = 0; s < samples; ++s) {
    int n = (s % 2 == 0) ? 2 : 3;
    std::vector<ProjectivePoint> pts;
    std::vector<double> gam;
    for (int j = 0; j < n; ++j) {
      pts.push_back(random_point(rng));
      double g = rng.uniform(0.5, 3.0) * (rng.uniform() < 0.5 ? -1.0 : 1.0);
      gam.push_back(g);
    }
    VortexConfig c(pts, gam);
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
    double unit_form = symplectic_form(c, xim, v, 1.0);
    num += lhs * unit_form;
    den += unit_form * unit_form;
  }
  return num / den;
}

}  // namespace cpv
