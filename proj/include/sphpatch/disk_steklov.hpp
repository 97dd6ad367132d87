#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "sphpatch/reactivity.hpp"

namespace sphpatch {

// Axisymmetric eigenpairs of the exterior Steklov problem on a flat disk of
// radius a in the half-space: the single-layer integral eigenproblem
//   int_0^a k(r,r') psi(r') r' dr' = (1/mu) psi(r),
//   k(r,r') = 2/(pi (r+r')) K(2 sqrt(r r')/(r+r')),
// discretized under the substitution r = a sin(theta), which clusters the
// radial grid quadratically at the patch edge where psi has sqrt behavior.
//
// Modes are sorted by increasing mu, L2-normalized (2 pi int psi^2 r dr = 1),
// and signed so that the weights d_k = 2 pi int psi_k r dr are nonnegative.
struct DiskSteklovSpectrum {
  double radius = 1.0;
  int n_quad = 0;   // number of theta panels (even); nodes = n_quad + 1
  int n_modes = 0;  // retained mode count

  std::vector<double> theta;  // nodes in [0, pi/2]
  std::vector<double> mu;     // eigenvalues, ascending
  std::vector<double> d;      // weights d_k >= 0
  Eigen::MatrixXd psi;        // (n_quad+1) x n_modes, column k = psi_k at nodes

  double r_node(int i) const { return radius * std::sin(theta[i]); }

  // Linear interpolation of psi_k in theta = asin(r/a); r in [0, a].
  double psi_at(int k, double r) const;

  // d_k = 2 pi int psi_k r dr evaluated by the grid rule (Simpson).
  // Relative distance below which an evaluation point counts as "at a pole".
  double pole_tolerance() const { return 1e-6 * mu.front(); }

  // Exact dilation: mu -> mu/s, d -> s d, psi(r) -> psi(r/s)/s.
  DiskSteklovSpectrum rescaled(double new_radius) const;

  void save(std::ostream& os) const;
  void save_file(const std::string& path) const;
  static DiskSteklovSpectrum load(std::istream& is);
  static DiskSteklovSpectrum load_file(const std::string& path);
};

struct SolveOptions {
  int n_modes = 64;
  int n_quad = 800;
  bool parallel = true;
};

DiskSteklovSpectrum solve_disk_spectrum(double radius, const SolveOptions& opt = {});

// Raw Nystrom matrix of the discretized integral operator (exposed for the
// serial/parallel comparison tests and the benchmark).
Eigen::MatrixXd nystrom_matrix(double radius, int n_quad);
Eigen::MatrixXd nystrom_matrix_serial(double radius, int n_quad);

// Modes for the approximate capacitance evaluations.
enum class CapacitanceMode { spectral, sigmoidal, taylor, large_kappa };

// kappa-dependent quantities of one disk patch, backed by a solved spectrum.
// Immutable after construction; all evaluators are pure.
class CapacitanceModel {
 public:
  explicit CapacitanceModel(DiskSteklovSpectrum spec,
                            CapacitanceMode mode = CapacitanceMode::spectral);

  const DiskSteklovSpectrum& spectrum() const { return spec_; }
  double radius() const { return spec_.radius; }
  CapacitanceMode mode() const { return mode_; }

  // C(kappa). Finite kappa must stay clear of the poles -mu_k.
  double capacitance(Reactivity kappa) const;
  double capacitance(double kappa) const { return capacitance(Reactivity::finite(kappa)); }
  // C'(kappa), same pole exclusions.
  double capacitance_derivative(double kappa) const;

  // Taylor coefficients c_1..c_n of C = a sum c_n (kappa a)^n (alternating
  // signs applied by the caller); c_1 from the area identity, the rest from
  // the spectral sums.
  std::vector<double> taylor_coeffs(int n) const;

  // Charge density q(r; kappa), r in [0, a). Uses the doubly accelerated
  // series; the Dirichlet sentinel returns the exact edge-singular profile.
  double charge_density(Reactivity kappa, double r) const;

  // Monopole correction E(kappa) = -(log a)/2 C^2 + a^2 script_E(kappa a),
  // script_E by the nested radial quadrature at step dr (trapezoid).
  double monopole_E(Reactivity kappa, double dr = 1e-4) const;

  // Zeros mu_k^N of C(-sigma): mu_0^N = 0 and one zero per pole gap.
  std::vector<double> neumann_zeros(int k_max) const;

  // w(r; kappa) and w_c(r; -sigma) on the patch, r in [0, a].
  double patch_solution_w(Reactivity kappa, double r) const;
  double patch_solution_wc(double sigma, double r) const;

  // True when (mode, kappa) is inside the mode's documented validity range.
  bool in_validity_range(double kappa) const;

  // Throws pole_error if kappa is within pole_tolerance of a pole.
  void check_pole(double kappa) const;

 private:
  double spectral_capacitance(double kappa) const;
  DiskSteklovSpectrum spec_;
  CapacitanceMode mode_;
  double sum_d2_;       // sum d_k^2 over retained modes
  double sum_d2_mu_;    // sum d_k^2 / mu_k
};

// Closed-form approximations (disk of radius a).
double capacitance_sigmoidal(double a, double kappa);
double capacitance_taylor(double a, double c1, double c2, double c3, double kappa);
double capacitance_large_kappa(double a, double kappa);
double monopole_E_heuristic(double a, double kappa);

// Exact disk Taylor coefficients via elliptic-integral quadratures:
// c2 = (2/pi) int_0^1 r E(r) dr = 4/(3 pi), c3 = (4/pi^2) int_0^1 r E(r)^2 dr.
double disk_c2_quadrature();
double disk_c3_quadrature();

// Shape coefficients of an arbitrary flat patch given as a simple closed
// counterclockwise polyline: area (shoelace), and the dilation-invariant
// c2, c3 from boundary-reduced integrals of omega(y).
struct GeometricCoeffs {
  double area, c2, c3;
};
GeometricCoeffs geometric_coeffs_arbitrary(const std::vector<Eigen::Vector2d>& boundary);

}  // namespace sphpatch
