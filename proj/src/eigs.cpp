#include "sphpatch/eigs.hpp"

#include <lapacke.h>

#include "sphpatch/errors.hpp"

namespace sphpatch {

RealEig eig_nonsymmetric(const Eigen::MatrixXd& A, bool want_vectors) {
  const int n = (int)A.rows();
  if (A.cols() != n) throw std::invalid_argument("eig_nonsymmetric: matrix not square");
  Eigen::MatrixXd work = A;  // dgeev overwrites
  RealEig out;
  out.re.resize(n);
  out.im.resize(n);
  if (want_vectors) out.vectors.resize(n, n);
  int info = LAPACKE_dgeev(LAPACK_COL_MAJOR, 'N', want_vectors ? 'V' : 'N', n, work.data(), n,
                           out.re.data(), out.im.data(), nullptr, n,
                           want_vectors ? out.vectors.data() : nullptr, want_vectors ? n : 1);
  if (info != 0) throw convergence_error("dgeev failed, info=" + std::to_string(info));
  return out;
}

SymEig eig_symmetric(const Eigen::MatrixXd& A) {
  const int n = (int)A.rows();
  if (A.cols() != n) throw std::invalid_argument("eig_symmetric: matrix not square");
  SymEig out;
  out.vectors = A;
  out.values.resize(n);
  int info = LAPACKE_dsyev(LAPACK_COL_MAJOR, 'V', 'L', n, out.vectors.data(), n, out.values.data());
  if (info != 0) throw convergence_error("dsyev failed, info=" + std::to_string(info));
  return out;
}

}  // namespace sphpatch
