#pragma once

#include <Eigen/Dense>
#include <vector>

namespace sphpatch {

struct RealEig {
  std::vector<double> re, im;   // eigenvalues
  Eigen::MatrixXd vectors;      // right eigenvectors (columns), if requested
};

// Dense nonsymmetric eigensolve (LAPACK dgeev). The input is copied.
RealEig eig_nonsymmetric(const Eigen::MatrixXd& A, bool want_vectors);

// Dense symmetric eigensolve (LAPACK dsyev), eigenvalues ascending.
struct SymEig {
  std::vector<double> values;
  Eigen::MatrixXd vectors;
};
SymEig eig_symmetric(const Eigen::MatrixXd& A);

}  // namespace sphpatch
