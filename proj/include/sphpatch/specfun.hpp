#pragma once

#include <span>
#include <vector>

namespace sphpatch {

// Legendre polynomial P_n(x) on [-1,1] via the three-term recurrence.
double legendre_p(int n, double x);

// Fills out[0..nmax] with P_0(x) .. P_nmax(x).
void legendre_row(int nmax, double x, std::span<double> out);

// Complete elliptic integrals in the modulus convention,
//   K(k) = int_0^{pi/2} (1 - k^2 sin^2 t)^{-1/2} dt,   k in [0,1),
//   E(k) = int_0^{pi/2} (1 - k^2 sin^2 t)^{1/2} dt,    k in [0,1],
// evaluated by AGM iteration.
double elliptic_k(double k);
double elliptic_e(double k);

// Log-split of K around the k -> 1 singularity: with x = k'^2 = 1 - k^2,
//   K(k) = ln(4/k') * F(x) - D(x),
// where F(x) = (2/pi) K(sqrt(x)) and D are power series in x. Used to peel
// the logarithmic singularity off the axisymmetric single-layer kernel.
void elliptic_log_split(double x, double& F, double& D);

struct GaussRule {
  std::vector<double> x, w;  // nodes and weights on [-1,1]
};
GaussRule gauss_legendre(int n);

}  // namespace sphpatch
