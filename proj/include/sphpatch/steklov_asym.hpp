#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sphpatch/disk_steklov.hpp"
#include "sphpatch/sphere_geometry.hpp"

namespace sphpatch {

enum class Regime { sdn, sn_nonresonant, sn_near_resonant, zero_bulk };
const char* regime_name(Regime r);

// One asymptotic eigenvalue branch, sigma(eps) = sigma0 + eps log(eps/2) sigma1 + eps sigma2.
struct EigenBranch {
  Regime regime;
  int k = 0;  // branch index (gap index, or the resonant local mode index)
  double sigma0 = 0.0, sigma1 = 0.0, sigma2 = 0.0;
  int multiplicity = 1;
  bool leading_order_only = false;  // zero-bulk eigenvalues: higher orders are open

  // Eigenfunction payload. Non/near-resonant branches carry what the
  // leading-order patch restriction needs; see eigenfunction_on_patch.
  double norm_integral = 0.0;   // sum_i int_Gamma_i (1 - w_i)^2 dy  (non-resonant, SDN)
  Eigen::VectorXd amplitudes;   // unit vector A with sum A_i = 0   (near-resonant)
  double psit_norm2 = 0.0;      // int psi~^2 = (2 pi/(mu d))^2     (near-resonant)

  double evaluate(double eps) const;
};

// SDN problem: patch 0 of the layout is the Steklov patch (backed by
// steklov_model), patches 1..N-1 are Dirichlet disks whose capacitances
// C_i(inf) are supplied. Branch k solves C_1(-sigma0) = -sum C_i(inf) in the
// k-th pole gap of the Steklov patch.
std::vector<EigenBranch> sdn_eigenvalues(const CapacitanceModel& steklov_model,
                                         const std::vector<double>& dirichlet_capacitances,
                                         const PatchLayout& layout, int n_branches);

// SN problem, non-resonant branches: roots of sum_i C_i(-sigma0) = 0 between
// consecutive poles of the merged pole set. Identical patches make the merged
// poles degenerate; pass allow_identical to accept the non-resonant subset.
std::vector<EigenBranch> sn_nonresonant(const std::vector<const CapacitanceModel*>& models,
                                        const PatchLayout& layout, int n_branches,
                                        bool allow_identical = false);

// SN problem, near-resonant branches for M identical patches at the given
// centers, pinned to the local mode k_prime. Returns one branch per distinct
// eigenvalue alpha of the deflated Green's-matrix problem; multiplicities sum
// to M-1.
std::vector<EigenBranch> sn_near_resonant(const CapacitanceModel& common_model,
                                          const std::vector<Eigen::Vector3d>& centers,
                                          int k_prime);

// Platonic specialization (N in {4,6,8,12,20}).
std::vector<EigenBranch> sn_near_resonant_platonic(const CapacitanceModel& common_model, int N,
                                                   int k_prime);

// Zero-bulk eigenvalues sigma0 = mu_k^N (k = 1..k_max), leading order only.
std::vector<EigenBranch> zero_bulk_branches(const CapacitanceModel& model, int k_max);

// Leading-order eigenfunction restricted to a patch. Non-resonant branches
// return U0 (1 - w(r; -sigma0)); near-resonant branches return
// A_i psi~_{k'}(r) with the eps-dependent normalization folded in.
double eigenfunction_on_patch(const EigenBranch& branch, const CapacitanceModel& model, double r,
                              double eps, int patch_index = 0);

}  // namespace sphpatch
