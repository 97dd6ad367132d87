#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "sphpatch/errors.hpp"
#include "test_support.hpp"

using namespace sphpatch;
using testsup::adaptive_simpson;
using testsup::unit_model;
using testsup::unit_spectrum;

TEST_CASE("spectrum invariants") {
  const auto& S = unit_spectrum();
  double sum_d2 = 0.0;
  for (int k = 0; k < S.n_modes; ++k) {
    CHECK(S.mu[k] > 0.0);
    if (k) CHECK(S.mu[k] > S.mu[k - 1]);
    CHECK(S.d[k] >= 0.0);
    sum_d2 += S.d[k] * S.d[k];
  }
  CHECK(sum_d2 == doctest::Approx(M_PI).epsilon(2e-4));  // truncated sum rule
  // L2 normalization of a few modes, re-evaluated with an independent rule
  for (int k : {0, 3, 10}) {
    double nrm = 2 * M_PI *
                 adaptive_simpson([&](double r) { return S.psi_at(k, r) * S.psi_at(k, r) * r; },
                                  0.0, 1.0, 1e-10);
    CHECK(nrm == doctest::Approx(1.0).epsilon(5e-3));  // linear interp limits accuracy
  }
}

TEST_CASE("rescaling law") {
  DiskSteklovSpectrum S1 = solve_disk_spectrum(1.0, {8, 120});
  DiskSteklovSpectrum S2 = solve_disk_spectrum(2.0, {8, 120});
  for (int k = 0; k < 8; ++k) {
    CHECK(S2.mu[k] == doctest::Approx(S1.mu[k] / 2.0).epsilon(1e-10));
    CHECK(S2.d[k] == doctest::Approx(2.0 * S1.d[k]).epsilon(1e-10));
  }
  DiskSteklovSpectrum R = S1.rescaled(2.0);
  for (int k = 0; k < 8; ++k) CHECK(R.mu[k] == doctest::Approx(S2.mu[k]).epsilon(1e-10));
}

TEST_CASE("capacitance limits and monotonicity") {
  const auto& M = unit_model();
  CHECK(M.capacitance(Reactivity::infinite()) ==
        doctest::Approx(2.0 / M_PI).epsilon(0.005));  // within 0.5%
  CHECK(M.capacitance(0.0) == 0.0);
  // within 4% of the sigmoidal value at kappa = 1
  CHECK(std::abs(M.capacitance(1.0) - 2.0 / (M_PI + 4.0)) / M.capacitance(1.0) < 0.04);
  double prev = 0.0;
  for (double k = 0.25; k < 60.0; k *= 1.7) {
    double C = M.capacitance(k);
    CHECK(C > prev);
    CHECK(C <= std::min(k / 2.0, 2.0 / M_PI) * (1 + 1e-9));  // upper bounds
    // lower bound from the complementary spectral representation
    double lower = (k / 2.0) / (1.0 + 2.0 * (4.0 / (3 * M_PI)) * k);
    CHECK(C >= lower * (1 - 1e-9));
    prev = C;
  }
}

TEST_CASE("capacitance derivative") {
  const auto& M = unit_model();
  CHECK(M.capacitance_derivative(0.0) == doctest::Approx(0.5).epsilon(1e-6));  // c_1
  double h = 1e-5;
  double fd = (M.capacitance(5.0 + h) - M.capacitance(5.0 - h)) / (2 * h);
  CHECK(M.capacitance_derivative(5.0) == doctest::Approx(fd).epsilon(1e-6));
  CHECK(M.capacitance_derivative(-2.0) > 0.0);  // between poles, sum of squares
}

TEST_CASE("pole rejection") {
  const auto& M = unit_model();
  double mu0 = M.spectrum().mu[0];
  CHECK_THROWS_AS(M.capacitance(-mu0), pole_error);
  CHECK_THROWS_AS(M.capacitance_derivative(-mu0 * (1.0 + 1e-8)), pole_error);
}

TEST_CASE("taylor coefficients against elliptic-integral quadratures") {
  auto c = unit_model().taylor_coeffs(3);
  CHECK(c[0] == 0.5);
  CHECK(c[1] == doctest::Approx(4.0 / (3.0 * M_PI)).epsilon(1e-3));
  CHECK(c[2] == doctest::Approx(0.3651).epsilon(1e-3 / 0.3651));
  CHECK(c[1] == doctest::Approx(disk_c2_quadrature()).epsilon(1e-3));
  CHECK(c[2] == doctest::Approx(disk_c3_quadrature()).epsilon(1e-3));
  // two-mode explicit approximation of c_2
  const auto& S = unit_spectrum();
  double two_mode = S.d[0] * S.d[0] / (2 * M_PI) / S.mu[0] + S.d[1] * S.d[1] / (2 * M_PI) / S.mu[1];
  CHECK(two_mode == doctest::Approx(0.4241).epsilon(2e-3));
}

TEST_CASE("closed-form approximations") {
  CHECK(capacitance_sigmoidal(1.0, 0.0) == 0.0);
  CHECK(capacitance_sigmoidal(1.0, 1e12) == doctest::Approx(2.0 / M_PI).epsilon(1e-9));
  CHECK(capacitance_sigmoidal(1.0, 1.0) == doctest::Approx(2.0 / (M_PI + 4.0)).epsilon(1e-12));
  CHECK(capacitance_large_kappa(1.0, 100.0) == doctest::Approx(0.6227).epsilon(1e-3));
  CHECK(std::abs(capacitance_large_kappa(1.0, 100.0) - unit_model().capacitance(100.0)) /
            unit_model().capacitance(100.0) <
        0.01);
  CHECK(capacitance_large_kappa(1.0, 1e9) == doctest::Approx(2.0 / M_PI).epsilon(1e-6));
  auto c = unit_model().taylor_coeffs(3);
  CHECK(capacitance_taylor(1.0, c[0], c[1], c[2], 0.3) ==
        doctest::Approx(unit_model().capacitance(0.3)).epsilon(2e-3));
  CHECK(unit_model().in_validity_range(0.3));
  CapacitanceModel taylor_model(unit_spectrum(), CapacitanceMode::taylor);
  CHECK(!taylor_model.in_validity_range(0.6));
}

TEST_CASE("charge density") {
  const auto& M = unit_model();
  for (double r : {0.0, 0.3, 0.8})
    CHECK(M.charge_density(Reactivity::infinite(), r) ==
          doctest::Approx(1.0 / (M_PI * std::sqrt(1 - r * r))).epsilon(1e-12));
  // q -> kappa/2 uniformly for small kappa
  for (double r : {0.1, 0.5, 0.9})
    CHECK(M.charge_density(Reactivity::finite(1e-4), r) / (0.5e-4) ==
          doctest::Approx(1.0).epsilon(2e-3));
  // self-consistency 2 int q r dr = C
  double I = adaptive_simpson(
      [&](double r) { return r * M.charge_density(Reactivity::finite(1.0), r); }, 0.0,
      1.0 - 1e-12, 1e-10);
  CHECK(2 * I == doctest::Approx(M.capacitance(1.0)).epsilon(1e-4));
  // flux identity against the patch solution
  for (double r : {0.2, 0.6})
    CHECK(M.charge_density(Reactivity::finite(2.0), r) ==
          doctest::Approx(0.5 * 2.0 * (1.0 - M.patch_solution_w(Reactivity::finite(2.0), r)))
              .epsilon(1e-4));
}

TEST_CASE("monopole E") {
  const auto& M = unit_model();
  double Einf = (3.0 - 4.0 * std::log(2.0)) / (M_PI * M_PI);
  CHECK(M.monopole_E(Reactivity::infinite()) == doctest::Approx(Einf).epsilon(1e-4 / Einf));
  // small-kappa law E ~ kappa^2/32 (leading order; subleading decay checked below)
  CHECK(M.monopole_E(Reactivity::finite(0.01)) ==
        doctest::Approx(0.01 * 0.01 / 32.0).epsilon(0.05));
  // heuristic within 0.7% at kappa = 2
  double E2 = M.monopole_E(Reactivity::finite(2.0));
  CHECK(std::abs(monopole_E_heuristic(1.0, 2.0) - E2) / E2 < 0.007);
  // positivity for kappa > 0 and inside (-mu_0, 0)
  for (double k : {0.05, 0.5, 3.0, 20.0, -0.3, -0.9})
    CHECK(M.monopole_E(Reactivity::finite(k)) > 0.0);
  // E/C^2 decreases from 1/8 to 3/4 - log 2. Beyond kappa ~ 500 the series
  // truncation pulls the quadrature below the limit, hence the capped grid.
  double prev = 0.1251;
  for (double k : {1e-2, 0.1, 1.0, 10.0, 100.0, 200.0}) {
    double ratio = M.monopole_E(Reactivity::finite(k)) / std::pow(M.capacitance(k), 2);
    CHECK(ratio < prev);
    CHECK(ratio > 0.75 - std::log(2.0) - 1e-3);
    prev = ratio;
  }
  CHECK(prev == doctest::Approx(0.75 - std::log(2.0)).epsilon(0.06));
  double inf_ratio = M.monopole_E(Reactivity::infinite()) /
                     std::pow(M.capacitance(Reactivity::infinite()), 2);
  CHECK(inf_ratio == doctest::Approx(0.75 - std::log(2.0)).epsilon(5e-3));
}

TEST_CASE("neumann zeros and interlacing") {
  const auto& M = unit_model();
  auto z = M.neumann_zeros(4);
  CHECK(z[0] == 0.0);
  CHECK(z[1] == doctest::Approx(4.1213).epsilon(5e-4));
  CHECK(z[2] == doctest::Approx(7.3421).epsilon(5e-4));
  CHECK(z[3] == doctest::Approx(10.517).epsilon(5e-4));
  const auto& mu = M.spectrum().mu;
  for (int k = 1; k <= 4; ++k) {
    CHECK(z[k] > mu[k - 1]);
    CHECK(z[k] < mu[k]);
  }
  CHECK_THROWS_AS(M.neumann_zeros(M.spectrum().n_modes), bracket_error);
}

TEST_CASE("patch solutions w and w_c") {
  const auto& M = unit_model();
  CHECK(M.patch_solution_w(Reactivity::infinite(), 0.4) == 1.0);
  CHECK(M.patch_solution_w(Reactivity::finite(0.0), 0.4) == 0.0);
  // w_c = d w(-sigma)/d sigma by finite differences
  double sig = 0.5, h = 1e-6, r = 0.37;
  double fd = (M.patch_solution_w(Reactivity::finite(-(sig + h)), r) -
               M.patch_solution_w(Reactivity::finite(-(sig - h)), r)) /
              (2 * h);
  CHECK(M.patch_solution_wc(sig, r) == doctest::Approx(fd).epsilon(1e-6));
}

TEST_CASE("geometric coefficients of a polygonal disk") {
  int n = 512;
  std::vector<Eigen::Vector2d> poly;
  for (int i = 0; i < n; ++i) {
    double t = 2 * M_PI * i / n;
    poly.emplace_back(std::cos(t), std::sin(t));
  }
  GeometricCoeffs g = geometric_coeffs_arbitrary(poly);
  CHECK(g.area == doctest::Approx(M_PI).epsilon(1e-3 / M_PI));
  CHECK(std::abs(g.c2 - 4.0 / (3 * M_PI)) < 1e-3);
  CHECK(std::abs(g.c3 - 0.3651) < 2e-3);
  // self-intersecting bowtie rejected
  std::vector<Eigen::Vector2d> bowtie = {{0, 0}, {1, 1}, {1, 0}, {0, 1}};
  CHECK_THROWS_AS(geometric_coeffs_arbitrary(bowtie), std::invalid_argument);
  std::vector<Eigen::Vector2d> cw = {{0, 0}, {0, 1}, {1, 1}, {1, 0}};
  CHECK_THROWS_AS(geometric_coeffs_arbitrary(cw), std::invalid_argument);
}

TEST_CASE("spectrum serialization round trip is bit exact") {
  DiskSteklovSpectrum S = solve_disk_spectrum(0.75, {8, 96});
  std::stringstream ss;
  S.save(ss);
  DiskSteklovSpectrum L = DiskSteklovSpectrum::load(ss);
  CHECK(L.radius == S.radius);
  CHECK(L.n_quad == S.n_quad);
  CHECK(L.n_modes == S.n_modes);
  for (int k = 0; k < S.n_modes; ++k) {
    CHECK(L.mu[k] == S.mu[k]);
    CHECK(L.d[k] == S.d[k]);
  }
  CHECK((L.psi - S.psi).cwiseAbs().maxCoeff() == 0.0);
  // downstream results identical bit for bit
  CapacitanceModel m1(S), m2(L);
  for (double k : {0.3, 2.0, -0.5})
    CHECK(m1.capacitance(k) == m2.capacitance(k));
  std::stringstream bad("sphpatch-spectrum v9\n");
  CHECK_THROWS_AS(DiskSteklovSpectrum::load(bad), std::invalid_argument);
}

TEST_CASE("solver argument validation") {
  CHECK_THROWS_AS(solve_disk_spectrum(1.0, {16, 32}), std::invalid_argument);  // n_quad < 4 n_modes
  CHECK_THROWS_AS(solve_disk_spectrum(-1.0, {8, 96}), std::invalid_argument);
  CHECK_THROWS_AS(nystrom_matrix(1.0, 33), std::invalid_argument);  // odd panel count
}
