#pragma once

#include <Eigen/Dense>
#include <vector>

namespace sphpatch {

// Steklov-Neumann eigenvalues on the unit sphere for one polar cap or two
// antipodal caps, by expanding axisymmetric harmonics in Legendre polynomials
// and diagonalizing the resulting dense matrix. Serves as the independent
// reference for the asymptotic branches.
struct OracleResult {
  std::vector<double> sigma;        // ascending, scaled by the first patch angle
  std::vector<double> sigma_raw;    // unscaled matrix eigenvalues
  int n_max = 0;
  std::vector<double> patch_angles;  // polar angles
  std::vector<double> patch_chords;  // 2 sin(angle/2), recorded for provenance
  int n_real = 0;                    // real positive eigenvalues kept
  double max_imag_discarded = 0.0;   // largest |imag| among discarded eigenvalues
};

// K_{m,n} = (m + 1/2) int_0^eps P_m(cos t) P_n(cos t) sin t dt by
// Gauss-Legendre quadrature in cos t (the reference path).
double k_element(int m, int n, double eps_angle);

// Same element by the closed-form sum over B_{mn}^k. The sum itself gives the
// unweighted integral; the (m + 1/2) factor is applied here so that the two
// paths agree (verified against quadrature to 1e-10 in the tests).
double k_element_closed(int m, int n, double eps_angle);

// A_0 = 1, A_k = A_{k-1} (k - 1/2)/k  ( = Gamma(k+1/2)/(sqrt(pi) Gamma(k+1)) ).
std::vector<double> a_sequence(int k_max);

// Unweighted Gram blocks I_{mn}(eps) = int_0^eps P_m P_n sin t dt for
// m,n = 0..nmax, exact Gauss-Legendre; rows assembled concurrently.
Eigen::MatrixXd legendre_gram(int nmax, double eps_angle);
Eigen::MatrixXd legendre_gram_serial(int nmax, double eps_angle);

// Full oracle: 1 or 2 patch angles (two patches sit at opposite poles).
OracleResult sn_oracle(const std::vector<double>& patch_angles, int n_max, int n_eigs);

}  // namespace sphpatch
