#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "sphpatch/reactivity.hpp"

namespace sphpatch {

// Geometric configuration of the patches on the unit sphere.
struct PatchLayout {
  std::vector<Eigen::Vector3d> centers;  // unit vectors
  std::vector<double> radii;             // dimensionless a_i, max = 1
  std::vector<Reactivity> kappas;
  double epsilon = 0.0;

  int size() const { return (int)centers.size(); }

  // Checks |x_i| = 1 to 1e-12, max a_i = 1, positive radii/epsilon, and the
  // well-separation condition (pairwise chord >= 4 eps max a).
  void validate() const;

  void save(std::ostream& os) const;
  static PatchLayout load(std::istream& is);
  static PatchLayout load_file(const std::string& path);
};

// Surface Neumann Green's function of the unit ball, boundary source x_i.
double green_s(const Eigen::Vector3d& x, const Eigen::Vector3d& xi);

// Diagonal R_s = -9/(20 pi) of the Green's matrix.
inline double green_self() { return -9.0 / (20.0 * M_PI); }

Eigen::MatrixXd green_matrix(const std::vector<Eigen::Vector3d>& centers);
Eigen::MatrixXd green_matrix(const PatchLayout& layout);

// Discrete energy H = sum_{i<j} (1/|xi-xj| - log|xi-xj|/2 - log(2+|xi-xj|)/2).
double discrete_energy(const std::vector<Eigen::Vector3d>& centers);
double discrete_energy_serial(const std::vector<Eigen::Vector3d>& centers);

// Large-N asymptotics of the discrete energy for uniform layouts,
//   H ~ N^2 (1 - log 2)/2 + b1 N^{3/2} - N log N / 8 + N (log 2 - 1/4)/2.
// The mean-field value is b1 = -1/2; b1 = -0.5523 absorbs the tiling defects
// of actual lattices on the sphere.
double discrete_energy_asymptotic(int N, double b1 = -0.5);

// Deterministic golden-spiral lattice; N = 1 is the north pole.
std::vector<Eigen::Vector3d> fibonacci_layout(int N);

// Vertices of the platonic solid with N in {4, 6, 8, 12, 20}.
std::vector<Eigen::Vector3d> platonic_layout(int N);

// Chord scale from a polar angle: eps = 2 sin(theta/2).
double chord_from_angle(double theta);

}  // namespace sphpatch
