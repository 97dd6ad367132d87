#include <algorithm>
#include <cmath>

#include "sphpatch/disk_steklov.hpp"
#include "sphpatch/errors.hpp"
#include "sphpatch/specfun.hpp"

namespace sphpatch {

namespace {
constexpr double kEuler = 0.57721566490153286;

double sigmoidal_scaled(double mu) { return 2.0 * mu / (M_PI * mu + 4.0); }
}  // namespace

CapacitanceModel::CapacitanceModel(DiskSteklovSpectrum spec, CapacitanceMode mode)
    : spec_(std::move(spec)), mode_(mode) {
  sum_d2_ = 0.0;
  sum_d2_mu_ = 0.0;
  for (int k = 0; k < spec_.n_modes; ++k) {
    sum_d2_ += spec_.d[k] * spec_.d[k];
    sum_d2_mu_ += spec_.d[k] * spec_.d[k] / spec_.mu[k];
  }
}

void CapacitanceModel::check_pole(double kappa) const {
  double tol = spec_.pole_tolerance();
  for (double m : spec_.mu)
    if (std::abs(kappa + m) < tol)
      throw pole_error("capacitance: kappa within pole tolerance of -mu = " + std::to_string(-m));
}

double CapacitanceModel::spectral_capacitance(double kappa) const {
  check_pole(kappa);
  double a = spec_.radius;
  // Inside |kappa| << mu_max the truncated sum is resummed through the exact
  // rules sum d^2 = pi a^2 and sum d^2/mu = (8/3) a^3, which pushes the
  // truncation error into an O(d_k^2/mu_k^2) tail.
  double cut = 0.25 * spec_.mu.back() / 1.0;
  if (std::abs(kappa) * a < cut * a) {
    double T = 0.0;
    for (int k = 0; k < spec_.n_modes; ++k)
      T += spec_.d[k] * spec_.d[k] / (spec_.mu[k] * (spec_.mu[k] + kappa));
    return (kappa / (2.0 * M_PI)) *
           (M_PI * a * a - (8.0 / 3.0) * a * a * a * kappa + kappa * kappa * T);
  }
  double s = 0.0;
  for (int k = 0; k < spec_.n_modes; ++k)
    s += spec_.mu[k] * spec_.d[k] * spec_.d[k] / (spec_.mu[k] + kappa);
  return kappa / (2.0 * M_PI) * s;
}

double CapacitanceModel::capacitance(Reactivity kappa) const {
  double a = spec_.radius;
  if (kappa.is_infinite()) {
    switch (mode_) {
      case CapacitanceMode::spectral: {
        double s = 0.0;
        for (int k = 0; k < spec_.n_modes; ++k) s += spec_.mu[k] * spec_.d[k] * spec_.d[k];
        return s / (2.0 * M_PI);
      }
      case CapacitanceMode::sigmoidal:
      case CapacitanceMode::large_kappa:
        return 2.0 * a / M_PI;
      case CapacitanceMode::taylor:
        throw std::invalid_argument("capacitance: taylor mode has no kappa = inf limit");
    }
  }
  double k = kappa.value();
  switch (mode_) {
    case CapacitanceMode::spectral:
      return spectral_capacitance(k);
    case CapacitanceMode::sigmoidal:
      return capacitance_sigmoidal(a, k);
    case CapacitanceMode::taylor: {
      auto c = taylor_coeffs(3);
      return capacitance_taylor(a, c[0], c[1], c[2], k);
    }
    case CapacitanceMode::large_kappa:
      return capacitance_large_kappa(a, k);
  }
  return 0.0;  // unreachable
}

double CapacitanceModel::capacitance_derivative(double kappa) const {
  check_pole(kappa);
  double a = spec_.radius;
  double cut = 0.25 * spec_.mu.back();
  if (std::abs(kappa) < cut) {
    // derivative of the resummed representation, consistent with capacitance()
    double T = 0.0, Tp = 0.0;
    for (int k = 0; k < spec_.n_modes; ++k) {
      double dk2 = spec_.d[k] * spec_.d[k], mk = spec_.mu[k];
      T += dk2 / (mk * (mk + kappa));
      Tp -= dk2 / (mk * (mk + kappa) * (mk + kappa));
    }
    return (1.0 / (2.0 * M_PI)) * (M_PI * a * a - (16.0 / 3.0) * a * a * a * kappa +
                                   3.0 * kappa * kappa * T + kappa * kappa * kappa * Tp);
  }
  double s = 0.0;
  for (int k = 0; k < spec_.n_modes; ++k) {
    double t = spec_.mu[k] / (spec_.mu[k] + kappa);
    s += t * t * spec_.d[k] * spec_.d[k];
  }
  return s / (2.0 * M_PI);
}

std::vector<double> CapacitanceModel::taylor_coeffs(int n) const {
  if (n < 1) throw std::invalid_argument("taylor_coeffs: n must be >= 1");
  double a = spec_.radius;
  std::vector<double> c(n);
  c[0] = 0.5;  // |Gamma|/(2 pi a^2) for the disk, exact
  for (int m = 2; m <= n; ++m) {
    double s = 0.0;
    for (int k = 0; k < spec_.n_modes; ++k)
      s += spec_.d[k] * spec_.d[k] / std::pow(spec_.mu[k], m - 1);
    c[m - 1] = s / (2.0 * M_PI * std::pow(a, m + 1));
  }
  return c;
}

double CapacitanceModel::charge_density(Reactivity kappa, double r) const {
  double a = spec_.radius;
  if (r < 0.0 || r >= a) throw std::invalid_argument("charge_density: r outside [0, a)");
  if (kappa.is_infinite()) return 1.0 / (M_PI * std::sqrt(a * a - r * r));
  double k = kappa.value();
  check_pole(k);
  double mu = k * a, x = r / a;
  // doubly accelerated series on the unit disk (mu_k a, d_k/a, a psi_k)
  double s = 0.0;
  for (int j = 0; j < spec_.n_modes; ++j) {
    double mj = spec_.mu[j] * a;
    s += (spec_.d[j] / a) * (a * spec_.psi_at(j, x * a)) / (mj * (mj + mu));
  }
  double qu = 0.5 * mu * (1.0 - mu * ((2.0 / M_PI) * elliptic_e(x) - mu * s));
  return qu / a;
}

double CapacitanceModel::monopole_E(Reactivity kappa, double dr) const {
  double a = spec_.radius;
  double C = capacitance(kappa);
  int n = (int)std::llround(1.0 / dr);
  // prefix f(x) = int_0^x x' q_unit(x') dx' on the unit disk
  std::vector<double> f(n + 1);
  if (kappa.is_infinite()) {
    for (int i = 0; i <= n; ++i) {
      double x = (double)i / n;
      f[i] = (1.0 - std::sqrt(std::max(0.0, 1.0 - x * x))) / M_PI;
    }
  } else {
    check_pole(kappa.value());
    double mu = kappa.value() * a;
    std::vector<double> q(n + 1);
#pragma omp parallel for schedule(static)
    for (int i = 0; i <= n; ++i) {
      double x = (double)i / n;
      double s = 0.0;
      for (int j = 0; j < spec_.n_modes; ++j) {
        double mj = spec_.mu[j] * a;
        s += (spec_.d[j] / a) * (a * spec_.psi_at(j, x * a)) / (mj * (mj + mu));
      }
      q[i] = 0.5 * mu * (1.0 - mu * ((2.0 / M_PI) * elliptic_e(std::min(x, 1.0)) - mu * s));
    }
    double acc = 0.0;
    f[0] = 0.0;
    for (int i = 1; i <= n; ++i) {
      acc += 0.5 * ((i - 1.0) / n * q[i - 1] + (double)i / n * q[i]) / n;
      f[i] = acc;
    }
  }
  double I = 0.0;
  for (int i = 1; i <= n; ++i) {
    double xm = (i - 0.5) / n, fm = 0.5 * (f[i - 1] + f[i]);
    I += fm * fm / (xm * n);
  }
  double scriptE = 2.0 * I;
  return -0.5 * std::log(a) * C * C + a * a * scriptE;
}

std::vector<double> CapacitanceModel::neumann_zeros(int k_max) const {
  if (k_max < 0) throw std::invalid_argument("neumann_zeros: k_max must be >= 0");
  if (k_max >= spec_.n_modes)
    throw bracket_error("neumann_zeros: spectrum truncation too short to bracket " +
                        std::to_string(k_max) + " zeros");
  std::vector<double> z;
  z.push_back(0.0);
  for (int k = 1; k <= k_max; ++k) {
    double gap = spec_.mu[k] - spec_.mu[k - 1];
    double lo = spec_.mu[k - 1] + 1e-6 * gap, hi = spec_.mu[k] - 1e-6 * gap;
    double flo = spectral_capacitance(-lo), fhi = spectral_capacitance(-hi);
    if (!(flo > 0.0) || !(fhi < 0.0))
      throw bracket_error("neumann_zeros: sign audit failed in gap " + std::to_string(k));
    while (hi - lo > 1e-10) {
      double mid = 0.5 * (lo + hi);
      if (spectral_capacitance(-mid) > 0.0)
        lo = mid;
      else
        hi = mid;
    }
    z.push_back(0.5 * (lo + hi));
  }
  return z;
}

double CapacitanceModel::patch_solution_w(Reactivity kappa, double r) const {
  double a = spec_.radius;
  if (r < 0.0 || r > a) throw std::invalid_argument("patch_solution_w: r outside [0, a]");
  if (kappa.is_infinite()) return 1.0;  // Dirichlet limit on the patch
  double k = kappa.value();
  check_pole(k);
  double s = 0.0;
  for (int j = 0; j < spec_.n_modes; ++j)
    s += spec_.d[j] * spec_.psi_at(j, r) / (spec_.mu[j] + k);
  return k * s;
}

double CapacitanceModel::patch_solution_wc(double sigma, double r) const {
  double a = spec_.radius;
  if (r < 0.0 || r > a) throw std::invalid_argument("patch_solution_wc: r outside [0, a]");
  check_pole(-sigma);
  double s = 0.0;
  for (int j = 0; j < spec_.n_modes; ++j) {
    double den = spec_.mu[j] - sigma;
    s += spec_.mu[j] * spec_.d[j] * spec_.psi_at(j, r) / (den * den);
  }
  return -s;
}

bool CapacitanceModel::in_validity_range(double kappa) const {
  double mua = kappa * spec_.radius;
  switch (mode_) {
    case CapacitanceMode::spectral:
      return true;
    case CapacitanceMode::sigmoidal:
      return kappa >= 0.0;
    case CapacitanceMode::taylor:
      return mua >= 0.0 && mua < 0.45;
    case CapacitanceMode::large_kappa:
      return mua > 10.0;
  }
  return false;
}

double capacitance_sigmoidal(double a, double kappa) {
  if (kappa < 0.0) throw std::invalid_argument("capacitance_sigmoidal: kappa must be >= 0");
  return a * sigmoidal_scaled(kappa * a);
}

double capacitance_taylor(double a, double c1, double c2, double c3, double kappa) {
  double m = kappa * a;
  return a * (c1 * m - c2 * m * m + c3 * m * m * m);
}

double capacitance_large_kappa(double a, double kappa) {
  double m = kappa * a;
  return 2.0 * a / M_PI - 2.0 * a * (std::log(m) + std::log(2.0) + kEuler + 1.0) / (M_PI * M_PI * m);
}

double monopole_E_heuristic(double a, double kappa) {
  if (kappa < 0.0) throw std::invalid_argument("monopole_E_heuristic: kappa must be >= 0");
  double mu = kappa * a;
  double capp = sigmoidal_scaled(mu);
  double e_app =
      capp * capp *
      (0.75 - std::log(2.0) + 1.0 / (1.0 / (std::log(2.0) - 0.625) + 5.17 * std::pow(mu, 0.81)));
  return -0.5 * a * a * std::log(a) * capp * capp + a * a * e_app;
}

double disk_c2_quadrature() {
  static const double v = [] {
    GaussRule g = gauss_legendre(64);
    double s = 0.0;
    for (size_t i = 0; i < g.x.size(); ++i) {
      double r = 0.5 * (g.x[i] + 1.0);
      s += 0.5 * g.w[i] * r * elliptic_e(r);
    }
    return 2.0 / M_PI * s;
  }();
  return v;
}

double disk_c3_quadrature() {
  static const double v = [] {
    GaussRule g = gauss_legendre(64);
    double s = 0.0;
    for (size_t i = 0; i < g.x.size(); ++i) {
      double r = 0.5 * (g.x[i] + 1.0);
      double e = elliptic_e(r);
      s += 0.5 * g.w[i] * r * e * e;
    }
    return 4.0 / (M_PI * M_PI) * s;
  }();
  return v;
}

namespace {

bool segments_intersect(const Eigen::Vector2d& p1, const Eigen::Vector2d& p2,
                        const Eigen::Vector2d& q1, const Eigen::Vector2d& q2) {
  auto cross = [](const Eigen::Vector2d& u, const Eigen::Vector2d& v) {
    return u.x() * v.y() - u.y() * v.x();
  };
  double d1 = cross(q2 - q1, p1 - q1), d2 = cross(q2 - q1, p2 - q1);
  double d3 = cross(p2 - p1, q1 - p1), d4 = cross(p2 - p1, q2 - p1);
  return ((d1 > 0) != (d2 > 0)) && ((d3 > 0) != (d4 > 0));
}

}  // namespace

GeometricCoeffs geometric_coeffs_arbitrary(const std::vector<Eigen::Vector2d>& boundary) {
  const int n = (int)boundary.size();
  if (n < 3) throw std::invalid_argument("geometric_coeffs_arbitrary: need >= 3 vertices");
  double area2 = 0.0;
  for (int i = 0; i < n; ++i) {
    const auto& p = boundary[i];
    const auto& q = boundary[(i + 1) % n];
    area2 += p.x() * q.y() - q.x() * p.y();
  }
  if (area2 <= 0.0)
    throw std::invalid_argument("geometric_coeffs_arbitrary: boundary must be counterclockwise");
  for (int i = 0; i < n; ++i)
    for (int j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;  // adjacent around the wrap
      if (segments_intersect(boundary[i], boundary[(i + 1) % n], boundary[j],
                             boundary[(j + 1) % n]))
        throw std::invalid_argument("geometric_coeffs_arbitrary: self-intersecting boundary");
    }
  double area = 0.5 * area2;

  double diam2 = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) diam2 = std::max(diam2, (boundary[i] - boundary[j]).squaredNorm());
  double a = 0.5 * std::sqrt(diam2);

  // omega(y) = -(1/2pi) oint n_{y'} . (y - y') / |y - y'| ds', boundary form
  constexpr double gx4[4] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                             0.8611363115940526};
  constexpr double gw4[4] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                             0.3478548451374538};
  auto omega = [&](const Eigen::Vector2d& y) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) {
      Eigen::Vector2d p = boundary[i], q = boundary[(i + 1) % n];
      Eigen::Vector2d t = q - p;
      double len = t.norm();
      Eigen::Vector2d nout(t.y() / len, -t.x() / len);  // outward for ccw
      for (int g = 0; g < 4; ++g) {
        Eigen::Vector2d yp = p + 0.5 * (gx4[g] + 1.0) * t;
        Eigen::Vector2d diff = y - yp;
        double dist = diff.norm();
        if (dist > 1e-14) s += 0.5 * len * gw4[g] * nout.dot(diff) / dist;
      }
    }
    return -s / (2.0 * M_PI);
  };

  // interior quadrature: centroid fan, degree-5 rule on each triangle
  Eigen::Vector2d cen = Eigen::Vector2d::Zero();
  for (const auto& p : boundary) cen += p;
  cen /= n;
  static const double tb[7][3] = {
      {1.0 / 3, 1.0 / 3, 1.0 / 3},
      {0.0597158717897698, 0.4701420641051151, 0.4701420641051151},
      {0.4701420641051151, 0.0597158717897698, 0.4701420641051151},
      {0.4701420641051151, 0.4701420641051151, 0.0597158717897698},
      {0.7974269853530873, 0.1012865073234563, 0.1012865073234563},
      {0.1012865073234563, 0.7974269853530873, 0.1012865073234563},
      {0.1012865073234563, 0.1012865073234563, 0.7974269853530873}};
  static const double tw[7] = {0.225,
                               0.1323941527885062, 0.1323941527885062, 0.1323941527885062,
                               0.1259391805448271, 0.1259391805448271, 0.1259391805448271};
  double i1 = 0.0, i2 = 0.0;
  for (int i = 0; i < n; ++i) {
    Eigen::Vector2d p = boundary[i], q = boundary[(i + 1) % n];
    double tarea = 0.5 * std::abs((p - cen).x() * (q - cen).y() - (q - cen).x() * (p - cen).y());
    for (int g = 0; g < 7; ++g) {
      Eigen::Vector2d y = tb[g][0] * cen + tb[g][1] * p + tb[g][2] * q;
      double om = omega(y);
      i1 += tarea * tw[g] * om;
      i2 += tarea * tw[g] * om * om;
    }
  }
  GeometricCoeffs out;
  out.area = area;
  out.c2 = i1 / (2.0 * M_PI * a * a * a);
  out.c3 = i2 / (2.0 * M_PI * a * a * a * a);
  return out;
}

}  // namespace sphpatch
