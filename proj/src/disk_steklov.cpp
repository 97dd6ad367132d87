#include "sphpatch/disk_steklov.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "sphpatch/eigs.hpp"
#include "sphpatch/errors.hpp"
#include "sphpatch/specfun.hpp"

namespace sphpatch {

namespace {

// 6-point Gauss-Legendre on [-1,1], used panel-wise on smooth factors.
constexpr double kGx[6] = {-0.9324695142031521, -0.6612093864662645, -0.2386191860831969,
                           0.2386191860831969,  0.6612093864662645,  0.9324695142031521};
constexpr double kGw[6] = {0.1713244923791704, 0.3607615730481386, 0.4679139345726910,
                           0.4679139345726910, 0.3607615730481386, 0.1713244923791704};

// x = ((r - r')/(r + r'))^2 is the squared complementary modulus of the
// kernel's elliptic argument; below this the log-split series is used.
constexpr double kSeriesX = 0.09;

struct RowContext {
  double a;
  const std::vector<double>* theta;
  const std::vector<double>* r;
};

double kernel_k(double ri, double rp) {
  double m = 2.0 * std::sqrt(ri * rp) / (ri + rp);
  return 2.0 / (M_PI * (ri + rp)) * elliptic_k(std::min(m, 1.0 - 1e-16));
}

double jac(double a, double tp) { return a * a * std::sin(tp) * std::cos(tp); }

// Coefficient of ln|theta_i - theta'| in the kernel row (times the radial
// Jacobian), from K(m) = ln(4/m') F(m'^2) - D(m'^2).
double Bfun(const RowContext& c, int i, double tp) {
  double rp = c.a * std::sin(tp), Jp = jac(c.a, tp);
  if (Jp == 0.0) return 0.0;
  double ri = (*c.r)[i];
  double x = (ri - rp) / (ri + rp);
  x *= x;
  double F;
  if (x < kSeriesX) {
    double D;
    elliptic_log_split(x, F, D);
  } else {
    F = (2.0 / M_PI) * elliptic_k(std::sqrt(x));
  }
  return -(2.0 * Jp / (M_PI * (ri + rp))) * F;
}

// Smooth remainder after the log extraction.
double Afun(const RowContext& c, int i, double tp) {
  double rp = c.a * std::sin(tp), Jp = jac(c.a, tp);
  if (Jp == 0.0) return 0.0;
  double ri = (*c.r)[i];
  double x = (ri - rp) / (ri + rp);
  x *= x;
  double dth = std::abs((*c.theta)[i] - tp);
  if (x < kSeriesX) {
    double F, D;
    elliptic_log_split(x, F, D);
    double R = (dth == 0.0) ? std::log(c.a * std::cos((*c.theta)[i]))
                            : std::log(std::abs(ri - rp) / dth);
    return (2.0 * Jp / (M_PI * (ri + rp))) * ((std::log(4.0 * (ri + rp)) - R) * F - D);
  }
  return kernel_k(ri, rp) * Jp - std::log(dth) * Bfun(c, i, tp);
}

// Moments of ln|c - t| * t^k over [ta,tb] for k = 0,1,2.
void log_moments(double c, double ta, double tb, double M[3]) {
  auto L0 = [](double u) { return u == 0.0 ? 0.0 : u * std::log(std::abs(u)) - u; };
  auto L1 = [](double u) { return u == 0.0 ? 0.0 : 0.5 * u * u * (std::log(std::abs(u)) - 0.5); };
  auto L2 = [](double u) {
    return u == 0.0 ? 0.0 : u * u * u * (std::log(std::abs(u)) / 3.0 - 1.0 / 9.0);
  };
  double ua = ta - c, ub = tb - c;
  double m0 = L0(ub) - L0(ua), m1 = L1(ub) - L1(ua), m2 = L2(ub) - L2(ua);
  M[0] = m0;
  M[1] = m1 + c * m0;
  M[2] = m2 + 2.0 * c * m1 + c * c * m0;
}

// One matrix row: product integration over 3-node (quadratic) elements.
void assemble_row(const RowContext& c, int n, int i, double* row) {
  const auto& th = *c.theta;
  double h = (M_PI / 2) / n;
  int ne = n / 2;
  for (int e = 0; e < ne; ++e) {
    int A = 2 * e, B = 2 * e + 1, C = 2 * e + 2;
    double ta = th[A], tm = th[B], tb = th[C];
    double den0 = (ta - tm) * (ta - tb), den1 = (tm - ta) * (tm - tb),
           den2 = (tb - ta) * (tb - tm);
    auto shapes = [&](double t, double L[3]) {
      L[0] = (t - tm) * (t - tb) / den0;
      L[1] = (t - ta) * (t - tb) / den1;
      L[2] = (t - ta) * (t - tm) / den2;
    };
    double dist = (th[i] < ta) ? ta - th[i] : (th[i] > tb ? th[i] - tb : 0.0);
    bool near = (i > 0) && dist < 4.0 * h;  // row i = 0 (r = 0) has a smooth kernel
    if (!near) {
      for (int q = 0; q < 6; ++q) {
        double tp = 0.5 * (ta + tb) + 0.5 * (tb - ta) * kGx[q];
        double w = 0.5 * (tb - ta) * kGw[q];
        double g = kernel_k((*c.r)[i], c.a * std::sin(tp)) * jac(c.a, tp);
        double L[3];
        shapes(tp, L);
        row[A] += w * g * L[0];
        row[B] += w * g * L[1];
        row[C] += w * g * L[2];
      }
    } else {
      for (int q = 0; q < 6; ++q) {
        double tp = 0.5 * (ta + tb) + 0.5 * (tb - ta) * kGx[q];
        double w = 0.5 * (tb - ta) * kGw[q];
        double Ai = Afun(c, i, tp);
        double L[3];
        shapes(tp, L);
        row[A] += w * Ai * L[0];
        row[B] += w * Ai * L[1];
        row[C] += w * Ai * L[2];
      }
      // ln|theta_i - t| against the quadratic interpolant of B_i * psi
      double M[3];
      log_moments(th[i], ta, tb, M);
      double c0[3] = {tm * tb / den0, ta * tb / den1, ta * tm / den2};
      double c1[3] = {-(tm + tb) / den0, -(ta + tb) / den1, -(ta + tm) / den2};
      double c2[3] = {1.0 / den0, 1.0 / den1, 1.0 / den2};
      double Bv[3] = {Bfun(c, i, ta), Bfun(c, i, tm), Bfun(c, i, tb)};
      int nodes[3] = {A, B, C};
      for (int k = 0; k < 3; ++k)
        row[nodes[k]] += Bv[k] * (c0[k] * M[0] + c1[k] * M[1] + c2[k] * M[2]);
    }
  }
}

Eigen::MatrixXd assemble(double radius, int n_quad, bool parallel) {
  if (radius <= 0.0) throw std::invalid_argument("nystrom_matrix: radius must be positive");
  if (n_quad < 4 || n_quad % 2 != 0)
    throw std::invalid_argument("nystrom_matrix: n_quad must be even and >= 4");
  int N = n_quad + 1;
  std::vector<double> theta(N), r(N);
  double h = (M_PI / 2) / n_quad;
  for (int i = 0; i < N; ++i) {
    theta[i] = i * h;
    r[i] = radius * std::sin(theta[i]);
  }
  RowContext ctx{radius, &theta, &r};
  Eigen::MatrixXd W = Eigen::MatrixXd::Zero(N, N);
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < N; ++i) {
      std::vector<double> row(N, 0.0);
      assemble_row(ctx, n_quad, i, row.data());
      for (int j = 0; j < N; ++j) W(i, j) = row[j];
    }
  } else {
    for (int i = 0; i < N; ++i) {
      std::vector<double> row(N, 0.0);
      assemble_row(ctx, n_quad, i, row.data());
      for (int j = 0; j < N; ++j) W(i, j) = row[j];
    }
  }
  return W;
}

// Simpson weights on the uniform theta grid (n panels, n even).
std::vector<double> simpson_weights(int n, double h) {
  std::vector<double> w(n + 1);
  for (int i = 0; i <= n; ++i)
    w[i] = (i == 0 || i == n) ? h / 3.0 : ((i % 2) ? 4.0 * h / 3.0 : 2.0 * h / 3.0);
  return w;
}

}  // namespace

Eigen::MatrixXd nystrom_matrix(double radius, int n_quad) { return assemble(radius, n_quad, true); }
Eigen::MatrixXd nystrom_matrix_serial(double radius, int n_quad) {
  return assemble(radius, n_quad, false);
}

DiskSteklovSpectrum solve_disk_spectrum(double radius, const SolveOptions& opt) {
  if (opt.n_modes < 1) throw std::invalid_argument("solve_disk_spectrum: n_modes must be >= 1");
  if (opt.n_quad < 4 * opt.n_modes)
    throw std::invalid_argument("solve_disk_spectrum: n_quad must be at least 4*n_modes");
  Eigen::MatrixXd W = assemble(radius, opt.n_quad, opt.parallel);
  RealEig eig = eig_nonsymmetric(W, true);

  int N = opt.n_quad + 1;
  std::vector<int> idx(N);
  std::iota(idx.begin(), idx.end(), 0);
  // eigenvalues of W are 1/mu; keep the largest real positive ones
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return eig.re[a] > eig.re[b]; });
  int valid = 0;
  for (int k = 0; k < N && valid < opt.n_modes; ++k) {
    int j = idx[k];
    if (std::abs(eig.im[j]) > 1e-10 * std::abs(eig.re[j]) + 1e-14 || eig.re[j] <= 0.0)
      throw convergence_error("solve_disk_spectrum: complex or nonpositive eigenvalue in range");
    ++valid;
  }
  if (valid < opt.n_modes)
    throw convergence_error("solve_disk_spectrum: fewer real positive eigenvalues than n_modes");

  DiskSteklovSpectrum S;
  S.radius = radius;
  S.n_quad = opt.n_quad;
  S.n_modes = opt.n_modes;
  S.theta.resize(N);
  double h = (M_PI / 2) / opt.n_quad;
  for (int i = 0; i < N; ++i) S.theta[i] = i * h;
  auto sw = simpson_weights(opt.n_quad, h);

  S.mu.resize(opt.n_modes);
  S.d.resize(opt.n_modes);
  S.psi.resize(N, opt.n_modes);
  for (int k = 0; k < opt.n_modes; ++k) {
    int j = idx[k];
    S.mu[k] = 1.0 / eig.re[j];
    double nrm = 0.0, dint = 0.0;
    for (int i = 0; i < N; ++i) {
      double v = eig.vectors(i, j), Ji = jac(radius, S.theta[i]);
      nrm += sw[i] * v * v * Ji;
      dint += sw[i] * v * Ji;
    }
    double scale = 1.0 / std::sqrt(2.0 * M_PI * nrm);
    if (dint < 0) scale = -scale;  // sign convention d_k >= 0
    for (int i = 0; i < N; ++i) S.psi(i, k) = scale * eig.vectors(i, j);
    S.d[k] = 2.0 * M_PI * std::abs(dint) * std::abs(scale);
  }
  // numerical simplicity assertion (all retained axisymmetric modes simple)
  for (int k = 1; k < opt.n_modes; ++k)
    if (S.mu[k] - S.mu[k - 1] <= 1e-8 * S.mu[k])
      throw convergence_error("solve_disk_spectrum: near-degenerate eigenvalues mu_" +
                              std::to_string(k - 1) + ", mu_" + std::to_string(k));
  return S;
}

double DiskSteklovSpectrum::psi_at(int k, double r) const {
  double s = std::clamp(r / radius, 0.0, 1.0);
  double t = std::asin(s);
  double h = (M_PI / 2) / n_quad;
  int j = std::min((int)(t / h), n_quad - 1);
  double lam = (t - j * h) / h;
  return (1.0 - lam) * psi(j, k) + lam * psi(j + 1, k);
}

DiskSteklovSpectrum DiskSteklovSpectrum::rescaled(double new_radius) const {
  if (new_radius <= 0.0) throw std::invalid_argument("rescaled: radius must be positive");
  DiskSteklovSpectrum S = *this;
  double s = new_radius / radius;
  S.radius = new_radius;
  for (auto& m : S.mu) m /= s;
  for (auto& w : S.d) w *= s;
  S.psi /= s;
  return S;
}

}  // namespace sphpatch
