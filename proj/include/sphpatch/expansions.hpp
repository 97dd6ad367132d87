#pragma once

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "sphpatch/disk_steklov.hpp"
#include "sphpatch/sphere_geometry.hpp"

namespace sphpatch {

// Basis functions of the small-eps expansions.
enum class EpsBasis {
  inv_eps2,       // 1/eps^2
  inv_eps,        // 1/eps
  log_half_eps,   // log(eps/2)
  log_two_eps,    // log(2/eps)
  one,            // 1
  eps_log,        // eps log(eps/2)
  eps,            // eps
  eps2_log,       // eps^2 log(eps/2)
  eps2            // eps^2
};
double eps_basis_eval(EpsBasis b, double eps);
const char* eps_basis_name(EpsBasis b);

enum class ExpansionKind { mfrt, splitting, lambda0, mfrt_moderate };

struct ExpansionTerm {
  std::string label;
  EpsBasis basis;
  double coeff;
};

// Ordered expansion coefficients plus the per-patch inputs they were built
// from. evaluate() is exactly the declared sum, no hidden terms.
struct ExpansionResult {
  ExpansionKind kind;
  std::vector<ExpansionTerm> terms;
  std::vector<double> per_patch_C, per_patch_E;

  double evaluate(double eps) const;
  double coeff(const std::string& label) const;  // throws if absent
};

// Three-term volume-averaged MFRT: ubar = U0/eps (1 + eps log(eps/2) r10 + eps r11).
ExpansionResult mfrt_coeffs(const PatchLayout& layout,
                            const std::vector<const CapacitanceModel*>& models);

// Spatial MFRT field through order eps plus the eps^2 log(eps/2) profile with
// the undetermined constant set to zero.
struct FieldValue {
  double value;
  bool u2_constant_set_to_zero;  // the eps^2 log term's constant is beyond this order
};
FieldValue mfrt_field(const ExpansionResult& result, const PatchLayout& layout,
                      const Eigen::Vector3d& x, double eps);

// Four-term MFRT for finite dimensional reactivities (dimensional output).
// Shape data per patch; disks need only the radius.
struct PatchShape {
  double area_rel;  // |Gamma_i| in units of L_i^2 (pi for a disk of unit radius)
  double c2, c3;    // dilation-invariant Taylor shape coefficients
  double e;         // log-shape integral, 1/8 for disks
  static PatchShape disk();
};
ExpansionResult mfrt_moderate_reactivity(const std::vector<Eigen::Vector3d>& centers,
                                         const std::vector<double>& radii_a,
                                         const std::vector<double>& reactivities_K,
                                         double R, double D,
                                         const std::vector<PatchShape>& shapes = {});

// Principal Robin-Laplacian eigenvalue, three terms.
ExpansionResult principal_eigenvalue(const PatchLayout& layout,
                                     const std::vector<const CapacitanceModel*>& models);

// Volume-averaged splitting probability onto patch target_index.
ExpansionResult splitting_coeffs(const PatchLayout& layout,
                                 const std::vector<const CapacitanceModel*>& models,
                                 int target_index);

// Deviation from 1 of the sum of splitting probabilities over all targets.
double splitting_sum_check(const PatchLayout& layout,
                           const std::vector<const CapacitanceModel*>& models, double eps);

// Homogenized effective reactivity (dimensionless), dilute fraction f.
double k_eff(double C, double E, double f, double eps, double b1 = -0.5);
// Dimensional version, eps = L/R.
double keff_dimensional(double C, double E, double f, double L, double R, double D,
                        double b1 = -0.5);

// Two-term general-domain MFRT with boundary mean curvatures H_i.
double general_domain_mfrt(double volume, const std::vector<double>& H,
                           const std::vector<double>& C, double eps);

// Shared conversion layer for dimensional quantities: kappa_i = L K_i / D,
// MFRT scales as (R^2/D) ubar.
struct DimensionalScaling {
  double R, D, L;
  double kappa(double K) const { return L * K / D; }
  double mfrt(double ubar) const { return R * R / D * ubar; }
  double epsilon() const { return L / R; }
};

}  // namespace sphpatch
