#include "sphpatch/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "sphpatch/eigs.hpp"
#include "sphpatch/errors.hpp"
#include "sphpatch/sphere_geometry.hpp"
#include "sphpatch/specfun.hpp"

namespace sphpatch {

namespace {

void check_angle(double eps) {
  if (!(eps > 0.0) || !(eps < M_PI))
    throw std::invalid_argument("oracle: patch angle must lie in (0, pi)");
}

Eigen::MatrixXd gram(int nmax, double eps, bool parallel) {
  check_angle(eps);
  const int G = nmax + 1;
  GaussRule rule = gauss_legendre(G);  // exact for degree 2 nmax + 1
  double c = std::cos(eps);
  // sqrt-weighted Legendre samples, row m contiguous
  Eigen::MatrixXd P(G, nmax + 1);
  std::vector<double> row(nmax + 1);
  for (int g = 0; g < G; ++g) {
    double x = 0.5 * (1.0 - c) * rule.x[g] + 0.5 * (1.0 + c);
    double sw = std::sqrt(rule.w[g] * 0.5 * (1.0 - c));
    legendre_row(nmax, x, row);
    for (int m = 0; m <= nmax; ++m) P(g, m) = sw * row[m];
  }
  Eigen::MatrixXd I(nmax + 1, nmax + 1);
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (int m = 0; m <= nmax; ++m)
      for (int n = m; n <= nmax; ++n) {
        double s = P.col(m).dot(P.col(n));
        I(m, n) = I(n, m) = s;
      }
  } else {
    for (int m = 0; m <= nmax; ++m)
      for (int n = m; n <= nmax; ++n) {
        double s = P.col(m).dot(P.col(n));
        I(m, n) = I(n, m) = s;
      }
  }
  return I;
}

}  // namespace

Eigen::MatrixXd legendre_gram(int nmax, double eps_angle) { return gram(nmax, eps_angle, true); }
Eigen::MatrixXd legendre_gram_serial(int nmax, double eps_angle) {
  return gram(nmax, eps_angle, false);
}

double k_element(int m, int n, double eps_angle) {
  if (m < 0 || n < 0) throw std::invalid_argument("k_element: indices must be nonnegative");
  check_angle(eps_angle);
  int G = (m + n) / 2 + 2;
  GaussRule rule = gauss_legendre(G);
  double c = std::cos(eps_angle);
  double s = 0.0;
  std::vector<double> row(std::max(m, n) + 1);
  for (int g = 0; g < G; ++g) {
    double x = 0.5 * (1.0 - c) * rule.x[g] + 0.5 * (1.0 + c);
    legendre_row(std::max(m, n), x, row);
    s += rule.w[g] * 0.5 * (1.0 - c) * row[m] * row[n];
  }
  return (m + 0.5) * s;
}

std::vector<double> a_sequence(int k_max) {
  if (k_max < 0) throw std::invalid_argument("a_sequence: k_max must be >= 0");
  std::vector<double> A(k_max + 1);
  A[0] = 1.0;
  for (int k = 1; k <= k_max; ++k) A[k] = A[k - 1] * (k - 0.5) / k;
  return A;
}

double k_element_closed(int m, int n, double eps_angle) {
  check_angle(eps_angle);
  double c = std::cos(eps_angle);
  auto A = a_sequence(m + n);
  std::vector<double> row(m + n + 2);
  legendre_row(m + n + 1, c, row);
  auto P = [&](int j) { return j < 0 ? 1.0 : row[j]; };  // P_{-1} := 1 convention
  double s = 0.0;
  for (int k = 0; k <= std::min(m, n); ++k) {
    double B = A[k] * A[m - k] * A[n - k] / A[m + n - k] * (2.0 * m + 2.0 * n - 4.0 * k + 1.0) /
               (2.0 * m + 2.0 * n - 2.0 * k + 1.0);
    s += B * (P(m + n - 2 * k - 1) - P(m + n - 2 * k + 1)) / (2.0 * (m + n - 2 * k) + 1.0);
  }
  // the sum yields the unweighted integral; apply the (m + 1/2) weight
  return (m + 0.5) * s;
}

OracleResult sn_oracle(const std::vector<double>& patch_angles, int n_max, int n_eigs) {
  if (patch_angles.empty() || patch_angles.size() > 2)
    throw std::invalid_argument("sn_oracle: one or two patch angles required");
  for (double e : patch_angles) check_angle(e);
  if (patch_angles.size() == 2 && patch_angles[0] + patch_angles[1] >= M_PI)
    throw std::invalid_argument("sn_oracle: antipodal patches overlap");
  if (n_max < 2) throw std::invalid_argument("sn_oracle: n_max must be >= 2");
  if (n_eigs < 1 || n_eigs > n_max) throw std::invalid_argument("sn_oracle: bad n_eigs");

  Eigen::MatrixXd I = legendre_gram(n_max, patch_angles[0]);
  if (patch_angles.size() == 2) {
    Eigen::MatrixXd I2 = legendre_gram(n_max, patch_angles[1]);
    for (int m = 0; m <= n_max; ++m)
      for (int n = 0; n <= n_max; ++n) I(m, n) += ((m + n) % 2 ? -1.0 : 1.0) * I2(m, n);
  }
  // M_{m,n} = (1/m)(K_{m,n} - K_{m,0} K_{0,n}/K_{0,0}), eigenvalues are 1/Sigma
  Eigen::MatrixXd M(n_max, n_max);
  double I00 = I(0, 0);
  for (int n = 1; n <= n_max; ++n)
    for (int m = 1; m <= n_max; ++m)
      M(m - 1, n - 1) = (m + 0.5) / m * (I(m, n) - I(m, 0) * I(0, n) / I00);

  RealEig eig = eig_nonsymmetric(M, false);
  OracleResult out;
  out.n_max = n_max;
  out.patch_angles = patch_angles;
  for (double e : patch_angles) out.patch_chords.push_back(chord_from_angle(e));
  std::vector<double> raw;
  for (int i = 0; i < n_max; ++i) {
    if (std::abs(eig.im[i]) > 1e-8 || eig.re[i] <= 0.0) {
      out.max_imag_discarded = std::max(out.max_imag_discarded, std::abs(eig.im[i]));
      continue;
    }
    raw.push_back(1.0 / eig.re[i]);
  }
  std::sort(raw.begin(), raw.end());
  out.n_real = (int)raw.size();
  if (out.n_real < n_eigs)
    throw convergence_error("sn_oracle: fewer real positive eigenvalues than requested");
  raw.resize(n_eigs);
  out.sigma_raw = raw;
  for (double s : raw) out.sigma.push_back(s * patch_angles[0]);
  return out;
}

}  // namespace sphpatch
