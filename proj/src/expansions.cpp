#include "sphpatch/expansions.hpp"

#include <cmath>

#include "sphpatch/errors.hpp"

namespace sphpatch {

double eps_basis_eval(EpsBasis b, double eps) {
  switch (b) {
    case EpsBasis::inv_eps2: return 1.0 / (eps * eps);
    case EpsBasis::inv_eps: return 1.0 / eps;
    case EpsBasis::log_half_eps: return std::log(eps / 2.0);
    case EpsBasis::log_two_eps: return std::log(2.0 / eps);
    case EpsBasis::one: return 1.0;
    case EpsBasis::eps_log: return eps * std::log(eps / 2.0);
    case EpsBasis::eps: return eps;
    case EpsBasis::eps2_log: return eps * eps * std::log(eps / 2.0);
    case EpsBasis::eps2: return eps * eps;
  }
  return 0.0;
}

const char* eps_basis_name(EpsBasis b) {
  switch (b) {
    case EpsBasis::inv_eps2: return "eps^-2";
    case EpsBasis::inv_eps: return "eps^-1";
    case EpsBasis::log_half_eps: return "log(eps/2)";
    case EpsBasis::log_two_eps: return "log(2/eps)";
    case EpsBasis::one: return "1";
    case EpsBasis::eps_log: return "eps*log(eps/2)";
    case EpsBasis::eps: return "eps";
    case EpsBasis::eps2_log: return "eps^2*log(eps/2)";
    case EpsBasis::eps2: return "eps^2";
  }
  return "?";
}

double ExpansionResult::evaluate(double eps) const {
  double s = 0.0;
  for (const auto& t : terms) s += t.coeff * eps_basis_eval(t.basis, eps);
  return s;
}

double ExpansionResult::coeff(const std::string& label) const {
  for (const auto& t : terms)
    if (t.label == label) return t.coeff;
  throw std::invalid_argument("ExpansionResult: no term labeled '" + label + "'");
}

namespace {

struct PatchSums {
  std::vector<double> C, E;
  double Cbar = 0.0, Ebar = 0.0, CtC = 0.0, CtGC = 0.0;
  Eigen::VectorXd GC;
};

PatchSums patch_sums(const PatchLayout& layout, const std::vector<const CapacitanceModel*>& models,
                     bool need_E) {
  layout.validate();
  const int N = layout.size();
  if ((int)models.size() != N)
    throw std::invalid_argument("expansions: one capacitance model per patch required");
  for (int i = 0; i < N; ++i)
    if (std::abs(models[i]->radius() - layout.radii[i]) > 1e-12 * layout.radii[i])
      throw std::invalid_argument("expansions: model radius mismatch at patch " +
                                  std::to_string(i));
  PatchSums s;
  s.C.resize(N);
  s.E.resize(N);
  Eigen::VectorXd C(N);
  for (int i = 0; i < N; ++i) {
    s.C[i] = models[i]->capacitance(layout.kappas[i]);
    C[i] = s.C[i];
    s.E[i] = need_E ? models[i]->monopole_E(layout.kappas[i]) : 0.0;
    s.Cbar += s.C[i];
    s.Ebar += s.E[i];
    s.CtC += s.C[i] * s.C[i];
  }
  Eigen::MatrixXd G = green_matrix(layout.centers);
  s.GC = G * C;
  s.CtGC = C.dot(s.GC);
  return s;
}

}  // namespace

ExpansionResult mfrt_coeffs(const PatchLayout& layout,
                            const std::vector<const CapacitanceModel*>& models) {
  PatchSums s = patch_sums(layout, models, true);
  if (!(s.Cbar > 0.0)) throw numerical_error("mfrt_coeffs: total capacitance must be positive");
  double U0 = 2.0 / (3.0 * s.Cbar);
  double r10 = -s.CtC / (2.0 * s.Cbar);
  double r11 = 2.0 * M_PI * s.CtGC / s.Cbar + s.Ebar / s.Cbar;
  if (r10 > 0.0) throw numerical_error("mfrt_coeffs: U10/U0 must be nonpositive");
  ExpansionResult out;
  out.kind = ExpansionKind::mfrt;
  out.terms = {{"U0", EpsBasis::inv_eps, U0},
               {"U10", EpsBasis::log_half_eps, U0 * r10},
               {"U11", EpsBasis::one, U0 * r11}};
  out.per_patch_C = s.C;
  out.per_patch_E = s.E;
  return out;
}

FieldValue mfrt_field(const ExpansionResult& result, const PatchLayout& layout,
                      const Eigen::Vector3d& x, double eps) {
  if (result.kind != ExpansionKind::mfrt)
    throw std::invalid_argument("mfrt_field: result is not an MFRT expansion");
  if (x.norm() > 1.0 + 1e-12) throw std::invalid_argument("mfrt_field: x outside the unit ball");
  for (int i = 0; i < layout.size(); ++i)
    if ((x - layout.centers[i]).norm() <= 3.0 * eps)
      throw std::invalid_argument("mfrt_field: x within 3 eps of patch " + std::to_string(i));
  double U0 = result.coeff("U0");
  double r10 = result.coeff("U10") / U0;
  double r11 = result.coeff("U11") / U0;
  double gsum = 0.0, gsum2 = 0.0;
  for (int j = 0; j < layout.size(); ++j) {
    double g = green_s(x, layout.centers[j]);
    double Cj = result.per_patch_C[j];
    gsum += Cj * g;
    gsum2 += Cj * (0.5 * Cj + r10) * g;
  }
  double lg = std::log(eps / 2.0);
  double u = U0 / eps *
             (1.0 + eps * lg * r10 + eps * (r11 - 2.0 * M_PI * gsum) +
              eps * eps * lg * (0.0 - 2.0 * M_PI * gsum2));  // Ubar2 := 0
  return {u, true};
}

PatchShape PatchShape::disk() {
  return PatchShape{M_PI, 4.0 / (3.0 * M_PI), disk_c3_quadrature(), 0.125};
}

ExpansionResult mfrt_moderate_reactivity(const std::vector<Eigen::Vector3d>& centers,
                                         const std::vector<double>& radii_a,
                                         const std::vector<double>& reactivities_K,
                                         double R, double D,
                                         const std::vector<PatchShape>& shapes_in) {
  const int N = (int)centers.size();
  if ((int)radii_a.size() != N || (int)reactivities_K.size() != N)
    throw std::invalid_argument("mfrt_moderate_reactivity: inconsistent inputs");
  for (double K : reactivities_K)
    if (!std::isfinite(K) || K <= 0.0)
      throw std::invalid_argument(
          "mfrt_moderate_reactivity: reactivities must be finite and positive "
          "(the Dirichlet limit is singular here)");
  std::vector<PatchShape> shapes = shapes_in;
  if (shapes.empty()) shapes.assign(N, PatchShape::disk());
  if ((int)shapes.size() != N)
    throw std::invalid_argument("mfrt_moderate_reactivity: one shape per patch required");

  const double volume = 4.0 * M_PI / 3.0 * R * R * R;
  const double surface = 4.0 * M_PI * R * R;
  // eps-free reductions: L_i = eps R a_i, |dOmega_i| = (eps R a_i)^2 area_rel,
  // Kbar = eps^2 k1, Kbar^(n) = eps^(n+1) kn, K_i = eps^2 ki_i.
  double k1 = 0.0, k2 = 0.0, k3 = 0.0, sum_eK2 = 0.0;
  Eigen::VectorXd kvec(N);
  for (int i = 0; i < N; ++i) {
    double Ai = shapes[i].area_rel * radii_a[i] * radii_a[i];
    double ki = reactivities_K[i] * Ai / (4.0 * M_PI);
    kvec[i] = ki;
    k1 += ki;
    double Ln = R * radii_a[i];  // L_i / eps
    k2 += 2.0 * M_PI / (D * surface) * shapes[i].c2 * std::pow(Ln, 3) *
          reactivities_K[i] * reactivities_K[i];
    k3 += 2.0 * M_PI / (D * D * surface) * shapes[i].c3 * std::pow(Ln, 4) *
          std::pow(reactivities_K[i], 3);
    sum_eK2 += shapes[i].e * ki * ki;
  }
  Eigen::MatrixXd G = green_matrix(centers);
  double kGk = kvec.dot(G * kvec);
  double ktk = kvec.squaredNorm();

  double pref = volume / surface;
  ExpansionResult out;
  out.kind = ExpansionKind::mfrt_moderate;
  out.terms = {
      {"parallel_wires", EpsBasis::inv_eps2, pref / k1},
      {"shape_c2", EpsBasis::inv_eps, pref * k2 / (k1 * k1)},
      {"log", EpsBasis::log_two_eps, pref * surface * ktk / (4.0 * M_PI * D * R * k1 * k1)},
      {"shape_c3", EpsBasis::one, pref * (k2 * k2 - k3 * k1) / (k1 * k1 * k1)},
      {"configuration", EpsBasis::one,
       pref * surface * (2.0 * M_PI * kGk + sum_eK2) / (2.0 * M_PI * R * D * k1 * k1)}};
  return out;
}

ExpansionResult principal_eigenvalue(const PatchLayout& layout,
                                     const std::vector<const CapacitanceModel*>& models) {
  PatchSums s = patch_sums(layout, models, true);
  const double vol = 4.0 * M_PI / 3.0;
  ExpansionResult out;
  out.kind = ExpansionKind::lambda0;
  out.terms = {{"lambda00", EpsBasis::eps, 2.0 * M_PI * s.Cbar / vol},
               {"lambda01", EpsBasis::eps2_log, M_PI * s.CtC / vol},
               {"lambda02", EpsBasis::eps2,
                -2.0 * M_PI / vol * (2.0 * M_PI * s.CtGC + s.Ebar)}};
  out.per_patch_C = s.C;
  out.per_patch_E = s.E;
  return out;
}

ExpansionResult splitting_coeffs(const PatchLayout& layout,
                                 const std::vector<const CapacitanceModel*>& models,
                                 int target_index) {
  const int N = layout.size();
  if (N < 2) throw std::invalid_argument("splitting_coeffs: need at least two patches");
  if (target_index < 0 || target_index >= N)
    throw std::invalid_argument("splitting_coeffs: target index out of range");
  PatchSums s = patch_sums(layout, models, true);
  double C1 = s.C[target_index], E1 = s.E[target_index];
  ExpansionResult out;
  out.kind = ExpansionKind::splitting;
  out.per_patch_C = s.C;
  out.per_patch_E = s.E;
  if (C1 == 0.0) {
    // kappa_target = 0: the patch never reacts, splitting probability is 0.
    out.terms = {{"U0", EpsBasis::one, 0.0},
                 {"U10", EpsBasis::eps_log, 0.0},
                 {"U11", EpsBasis::eps, 0.0}};
    return out;
  }
  double U0 = C1 / s.Cbar;
  double r10 = -(s.CtC - C1 * s.Cbar) / (2.0 * s.Cbar);
  double r11 = (s.Ebar / s.Cbar - E1 / C1) +
               2.0 * M_PI * (s.CtGC / s.Cbar - s.GC[target_index]);
  out.terms = {{"U0", EpsBasis::one, U0},
               {"U10", EpsBasis::eps_log, U0 * r10},
               {"U11", EpsBasis::eps, U0 * r11}};
  return out;
}

double splitting_sum_check(const PatchLayout& layout,
                           const std::vector<const CapacitanceModel*>& models, double eps) {
  double s = 0.0;
  for (int t = 0; t < layout.size(); ++t) s += splitting_coeffs(layout, models, t).evaluate(eps);
  return s - 1.0;
}

double k_eff(double C, double E, double f, double eps, double b1) {
  if (!(f > 0.0) || !(eps > 0.0)) throw std::invalid_argument("k_eff: f and eps must be positive");
  double bracket = 1.0 + 4.0 * b1 * C * std::sqrt(f) +
                   eps * C * (E / (C * C) - 0.25 - 0.25 * std::log(f));
  if (bracket <= 0.0)
    throw numerical_error("k_eff: bracket nonpositive, outside the dilute validity range");
  return 2.0 * f * C / (eps * bracket);
}

double keff_dimensional(double C, double E, double f, double L, double R, double D, double b1) {
  if (!(L > 0.0) || !(R > 0.0) || !(D > 0.0))
    throw std::invalid_argument("keff_dimensional: L, R, D must be positive");
  return D / L * k_eff(C, E, f, L / R, b1);
}

double general_domain_mfrt(double volume, const std::vector<double>& H,
                           const std::vector<double>& C, double eps) {
  if (H.size() != C.size()) throw std::invalid_argument("general_domain_mfrt: size mismatch");
  double Cbar = 0.0, HC2 = 0.0;
  for (size_t i = 0; i < C.size(); ++i) {
    Cbar += C[i];
    HC2 += H[i] * C[i] * C[i];
  }
  if (!(Cbar > 0.0)) throw numerical_error("general_domain_mfrt: total capacitance must be positive");
  return volume / (2.0 * M_PI * Cbar * eps) * (1.0 - HC2 / (2.0 * Cbar) * eps * std::log(eps));
}

}  // namespace sphpatch
