#include "sphpatch/steklov_asym.hpp"

#include <algorithm>
#include <cmath>

#include "sphpatch/eigs.hpp"
#include "sphpatch/errors.hpp"

namespace sphpatch {

const char* regime_name(Regime r) {
  switch (r) {
    case Regime::sdn: return "sdn";
    case Regime::sn_nonresonant: return "sn-nonresonant";
    case Regime::sn_near_resonant: return "sn-near-resonant";
    case Regime::zero_bulk: return "zero-bulk";
  }
  return "?";
}

double EigenBranch::evaluate(double eps) const {
  return sigma0 + eps * std::log(eps / 2.0) * sigma1 + eps * sigma2;
}

namespace {

constexpr double kBisectTol = 1e-11;

// E_i(inf) for a disk of radius a.
double disk_E_inf(double a) {
  return -2.0 * a * a / (M_PI * M_PI) * (std::log(a) + std::log(4.0) - 1.5);
}

// Monotone-decreasing bisection on f over (lo, hi) with a sign audit at the
// endpoints, followed by Newton steps to push the residual to roundoff.
template <typename F, typename DF>
double bisect_decreasing(F&& f, DF&& df, double lo, double hi, const char* what) {
  double flo = f(lo), fhi = f(hi);
  if (!(flo > 0.0) || !(fhi < 0.0))
    throw bracket_error(std::string(what) + ": endpoint sign audit failed");
  while (hi - lo > kBisectTol) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  double s = 0.5 * (lo + hi);
  for (int it = 0; it < 4; ++it) {
    double step = f(s) / df(s);  // df = -d/ds of a decreasing f is handled by caller sign
    double next = s + step;
    if (next <= lo || next >= hi) break;
    s = next;
  }
  return s;
}

// 2 pi int_0^a (1 - w(r; -sigma0))^2 r dr on the spectrum's theta grid.
double patch_norm_integral(const CapacitanceModel& model, double sigma0) {
  const auto& S = model.spectrum();
  int N = S.n_quad + 1;
  double h = (M_PI / 2) / S.n_quad, acc = 0.0;
  for (int i = 0; i < N; ++i) {
    double sw = (i == 0 || i == N - 1) ? h / 3.0 : ((i % 2) ? 4.0 * h / 3.0 : 2.0 * h / 3.0);
    double r = S.r_node(i);
    double jacr = S.radius * S.radius * std::sin(S.theta[i]) * std::cos(S.theta[i]);
    double v = 1.0 - model.patch_solution_w(Reactivity::finite(-sigma0), r);
    acc += sw * v * v * jacr;
  }
  return 2.0 * M_PI * acc;
}

void reject_near_pole(const DiskSteklovSpectrum& S, double sigma0, const char* what) {
  for (double m : S.mu)
    if (std::abs(sigma0 - m) < S.pole_tolerance())
      throw numerical_error(std::string(what) + ": root landed within pole tolerance");
}

}  // namespace

std::vector<EigenBranch> sdn_eigenvalues(const CapacitanceModel& steklov_model,
                                         const std::vector<double>& dirichlet_capacitances,
                                         const PatchLayout& layout, int n_branches) {
  layout.validate();
  const int N = layout.size();
  if (N < 2) throw std::invalid_argument("sdn_eigenvalues: need at least one Dirichlet patch");
  if ((int)dirichlet_capacitances.size() != N - 1)
    throw std::invalid_argument("sdn_eigenvalues: need N-1 Dirichlet capacitances");
  if (n_branches < 1 || n_branches >= steklov_model.spectrum().n_modes)
    throw std::invalid_argument("sdn_eigenvalues: branch count outside the resolved spectrum");

  double target = 0.0, sumCd2 = 0.0, sumCd = 0.0;
  for (double c : dirichlet_capacitances) {
    if (!(c > 0.0)) throw std::invalid_argument("sdn_eigenvalues: capacitances must be positive");
    sumCd += c;
    sumCd2 += c * c;
  }
  target = -sumCd;

  const auto& mu = steklov_model.spectrum().mu;
  Eigen::MatrixXd G = green_matrix(layout.centers);
  Eigen::VectorXd C(N);
  for (int i = 1; i < N; ++i) C[i] = dirichlet_capacitances[i - 1];

  std::vector<EigenBranch> out;
  double ptol = steklov_model.spectrum().pole_tolerance();
  for (int k = 0; k < n_branches; ++k) {
    double lo = (k == 0) ? 1e-9 : mu[k - 1];
    double hi = mu[k];
    double gap = hi - lo;
    double off = std::max(1e-6 * gap, 2.0 * ptol);  // stay clear of the pole guard
    lo += off;
    hi -= off;
    auto f = [&](double s) { return steklov_model.capacitance(-s) - target; };
    auto df = [&](double s) { return steklov_model.capacitance_derivative(-s); };
    double s0 = bisect_decreasing(f, df, lo, hi, "sdn_eigenvalues");
    reject_near_pole(steklov_model.spectrum(), s0, "sdn_eigenvalues");

    double Cp = steklov_model.capacitance_derivative(-s0);
    double sigma1 = (sumCd * sumCd + sumCd2) / (2.0 * Cp);
    C[0] = target;  // C_1(-sigma0) at the root
    double CGC = C.dot(G * C);
    double Esum = steklov_model.monopole_E(Reactivity::finite(-s0));
    for (int i = 1; i < N; ++i) Esum += disk_E_inf(layout.radii[i]);
    EigenBranch b;
    b.regime = Regime::sdn;
    b.k = k;
    b.sigma0 = s0;
    b.sigma1 = sigma1;
    b.sigma2 = -(2.0 * M_PI * CGC + Esum) / Cp;
    b.norm_integral = patch_norm_integral(steklov_model, s0);
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<EigenBranch> sn_nonresonant(const std::vector<const CapacitanceModel*>& models,
                                        const PatchLayout& layout, int n_branches,
                                        bool allow_identical) {
  layout.validate();
  const int N = layout.size();
  if ((int)models.size() != N) throw std::invalid_argument("sn_nonresonant: one model per patch");

  // merged pole set over all patches
  std::vector<double> poles;
  for (const auto* m : models)
    for (double p : m->spectrum().mu) poles.push_back(p);
  std::sort(poles.begin(), poles.end());
  std::vector<double> merged;
  for (double p : poles) {
    if (!merged.empty() && std::abs(p - merged.back()) < 1e-9 * p) {
      if (!allow_identical)
        throw std::invalid_argument(
            "sn_nonresonant: identical patches give a degenerate merged pole set; the missing "
            "branches are near-resonant (use sn_near_resonant), or pass allow_identical");
      continue;
    }
    merged.push_back(p);
  }
  if (n_branches < 1 || n_branches + 1 >= (int)merged.size())
    throw std::invalid_argument("sn_nonresonant: branch count outside the resolved pole set");

  Eigen::MatrixXd G = green_matrix(layout.centers);
  auto script_n = [&](double s) {
    double v = 0.0;
    for (const auto* m : models) v += m->capacitance(-s);
    return v;
  };
  auto script_n_prime = [&](double s) {
    double v = 0.0;
    for (const auto* m : models) v += m->capacitance_derivative(-s);
    return v;
  };

  std::vector<EigenBranch> out;
  double ptol = 0.0;
  for (const auto* m : models) ptol = std::max(ptol, m->spectrum().pole_tolerance());
  for (int k = 0; k < n_branches; ++k) {
    // no root below the first pole (script N < 0 there); use inter-pole gaps
    double lo = merged[k], hi = merged[k + 1];
    double gap = hi - lo;
    double off = std::max(1e-6 * gap, 2.0 * ptol);
    double s0 = bisect_decreasing(script_n, script_n_prime, lo + off, hi - off, "sn_nonresonant");
    for (const auto* m : models) reject_near_pole(m->spectrum(), s0, "sn_nonresonant");

    Eigen::VectorXd C(N);
    double sumCp = 0.0, sumC2 = 0.0, Esum = 0.0, norm_integral = 0.0;
    for (int i = 0; i < N; ++i) {
      C[i] = models[i]->capacitance(-s0);
      sumC2 += C[i] * C[i];
      sumCp += models[i]->capacitance_derivative(-s0);
      Esum += models[i]->monopole_E(Reactivity::finite(-s0));
      norm_integral += patch_norm_integral(*models[i], s0);
    }
    EigenBranch b;
    b.regime = Regime::sn_nonresonant;
    b.k = k;
    b.sigma0 = s0;
    b.sigma1 = 0.5 * sumC2 / sumCp;
    b.sigma2 = -(2.0 * M_PI * C.dot(G * C) + Esum) / sumCp;
    b.norm_integral = norm_integral;
    out.push_back(std::move(b));
  }
  return out;
}

std::vector<EigenBranch> sn_near_resonant(const CapacitanceModel& common_model,
                                          const std::vector<Eigen::Vector3d>& centers,
                                          int k_prime) {
  const int M = (int)centers.size();
  if (M < 2) throw std::invalid_argument("sn_near_resonant: need M >= 2 identical patches");
  const auto& S = common_model.spectrum();
  if (k_prime < 0 || k_prime >= S.n_modes)
    throw std::invalid_argument("sn_near_resonant: k_prime outside the resolved spectrum");
  double mu = S.mu[k_prime], d = S.d[k_prime];
  if (d * d < 1e-12 * M_PI * S.radius * S.radius)
    throw numerical_error(
        "sn_near_resonant: d_k' = 0, this local mode carries no near-resonant branch");

  double sigma1 = mu * mu * d * d / (4.0 * M_PI);

  // J = pi mu^2 int_0^a (1/rho) (int_0^rho eta psi~ deta)^2 drho, psi~ = 2pi/(mu d) psi
  const int n = 20000;
  double a = S.radius;
  double scale = 2.0 * M_PI / (mu * d);
  double acc = 0.0, prev = 0.0, J = 0.0, prev_out = 0.0;
  for (int i = 0; i <= n; ++i) {
    double r = a * i / n;
    double v = r * scale * S.psi_at(k_prime, r);
    if (i) acc += 0.5 * (prev + v) * (a / n);
    prev = v;
    double outv = (i == 0) ? 0.0 : acc * acc / r;
    if (i) J += 0.5 * (prev_out + outv) * (a / n);
    prev_out = outv;
  }
  J *= M_PI * mu * mu;

  // deflated Green's-matrix eigenproblem on the orthogonal complement of e
  Eigen::MatrixXd G = green_matrix(centers);
  Eigen::MatrixXd P = Eigen::MatrixXd::Identity(M, M) -
                      Eigen::MatrixXd::Constant(M, M, 1.0 / M);
  SymEig eig = eig_symmetric(P * G * P);
  Eigen::VectorXd e = Eigen::VectorXd::Ones(M);
  int drop = 0;
  double best = -1.0;
  for (int j = 0; j < M; ++j) {
    double overlap = std::abs(eig.vectors.col(j).dot(e));
    if (overlap > best) {
      best = overlap;
      drop = j;
    }
  }
  std::vector<std::pair<double, int>> alphas;
  for (int j = 0; j < M; ++j)
    if (j != drop) alphas.push_back({eig.values[j], j});
  std::sort(alphas.begin(), alphas.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });  // sigma ascending

  std::vector<EigenBranch> out;
  for (size_t j = 0; j < alphas.size();) {
    double alpha = alphas[j].first;
    size_t j2 = j;
    while (j2 < alphas.size() && std::abs(alphas[j2].first - alpha) < 1e-10 * (1.0 + std::abs(alpha)))
      ++j2;
    EigenBranch b;
    b.regime = Regime::sn_near_resonant;
    b.k = k_prime;
    b.sigma0 = mu;
    b.sigma1 = sigma1;
    b.sigma2 = -sigma1 / M_PI * (4.0 * M_PI * M_PI * alpha + J);
    b.multiplicity = (int)(j2 - j);
    b.amplitudes = eig.vectors.col(alphas[j].second);
    b.psit_norm2 = scale * scale;
    out.push_back(std::move(b));
    j = j2;
  }
  return out;
}

std::vector<EigenBranch> sn_near_resonant_platonic(const CapacitanceModel& common_model, int N,
                                                   int k_prime) {
  return sn_near_resonant(common_model, platonic_layout(N), k_prime);
}

std::vector<EigenBranch> zero_bulk_branches(const CapacitanceModel& model, int k_max) {
  auto zeros = model.neumann_zeros(k_max);
  std::vector<EigenBranch> out;
  for (int k = 1; k <= k_max; ++k) {
    EigenBranch b;
    b.regime = Regime::zero_bulk;
    b.k = k;
    b.sigma0 = zeros[k];
    b.leading_order_only = true;
    out.push_back(std::move(b));
  }
  return out;
}

double eigenfunction_on_patch(const EigenBranch& branch, const CapacitanceModel& model, double r,
                              double eps, int patch_index) {
  if (branch.regime == Regime::zero_bulk)
    throw std::invalid_argument(
        "eigenfunction_on_patch: zero-bulk branches are exposed at leading order for the "
        "eigenvalue only");
  if (branch.regime == Regime::sn_near_resonant) {
    if (patch_index < 0 || patch_index >= branch.amplitudes.size())
      throw std::invalid_argument("eigenfunction_on_patch: bad patch index");
    const auto& S = model.spectrum();
    double mu = S.mu[branch.k], d = S.d[branch.k];
    double psit = 2.0 * M_PI / (mu * d) * S.psi_at(branch.k, r);
    double amp = branch.amplitudes[patch_index] / std::sqrt(eps * branch.psit_norm2);
    return amp * psit;
  }
  double U0 = 1.0 / (eps * std::sqrt(branch.norm_integral));
  return U0 * (1.0 - model.patch_solution_w(Reactivity::finite(-branch.sigma0), r));
}

}  // namespace sphpatch
