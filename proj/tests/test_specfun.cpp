#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sphpatch/specfun.hpp"
#include "test_support.hpp"

using namespace sphpatch;

TEST_CASE("legendre closed forms") {
  CHECK(legendre_p(0, 0.7) == doctest::Approx(1.0));
  CHECK(legendre_p(1, 0.5) == doctest::Approx(0.5));
  CHECK(legendre_p(2, 0.3) == doctest::Approx((3 * 0.3 * 0.3 - 1) / 2.0));  // -0.365
  for (double x : {-0.9, -0.3, 0.0, 0.41, 0.77, 1.0}) {
    CHECK(legendre_p(2, x) == doctest::Approx((3 * x * x - 1) / 2).epsilon(1e-13));
    CHECK(legendre_p(3, x) == doctest::Approx((5 * x * x * x - 3 * x) / 2).epsilon(1e-13));
    CHECK(legendre_p(4, x) ==
          doctest::Approx((35 * x * x * x * x - 30 * x * x + 3) / 8).epsilon(1e-13));
  }
  CHECK_THROWS_AS(legendre_p(-1, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(legendre_p(3, 1.5), std::invalid_argument);
}

TEST_CASE("legendre orthogonality by quadrature") {
  GaussRule g = gauss_legendre(64);  // exact for degree <= 127
  std::vector<double> row(51);
  std::vector<std::vector<double>> P(g.x.size(), std::vector<double>(51));
  for (size_t i = 0; i < g.x.size(); ++i) {
    legendre_row(50, g.x[i], row);
    P[i] = row;
  }
  for (int m = 0; m <= 50; m += 7)
    for (int n = 0; n <= 50; ++n) {
      double s = 0;
      for (size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * P[i][m] * P[i][n];
      double expect = (m == n) ? 1.0 : 0.0;
      CHECK(std::abs((m + 0.5) * s - expect) < 1e-10);
    }
}

TEST_CASE("elliptic integral endpoints and identities") {
  CHECK(elliptic_e(0.0) == doctest::Approx(M_PI_2));
  CHECK(elliptic_e(1.0) == doctest::Approx(1.0));
  CHECK(elliptic_k(0.0) == doctest::Approx(M_PI_2));
  // Landen transformation K(2 sqrt(s)/(1+s)) = (1+s) K(s)
  double s = 0.4;
  CHECK(elliptic_k(2 * std::sqrt(s) / (1 + s)) ==
        doctest::Approx((1 + s) * elliptic_k(s)).epsilon(1e-12));
  // adaptive quadrature as an independent reference near the singular end
  double k = 0.99;
  double ref = testsup::adaptive_simpson(
      [&](double t) { return 1.0 / std::sqrt(1.0 - k * k * std::sin(t) * std::sin(t)); }, 0.0,
      M_PI_2, 1e-13);
  CHECK(elliptic_k(k) == doctest::Approx(ref).epsilon(1e-11));
  CHECK(elliptic_k(k) > 3.0);
  CHECK_THROWS_AS(elliptic_k(1.0), std::invalid_argument);
  CHECK_THROWS_AS(elliptic_e(1.2), std::invalid_argument);
  CHECK_THROWS_AS(elliptic_k(-0.1), std::invalid_argument);
}

TEST_CASE("int_0^1 z E(z) dz = 2/3") {
  double v = testsup::adaptive_simpson([](double z) { return z * elliptic_e(z); }, 0.0, 1.0, 1e-13);
  CHECK(v == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("monotonicity of E and K") {
  double prevE = elliptic_e(0.0), prevK = elliptic_k(0.0);
  for (double k = 0.05; k < 0.999; k += 0.05) {
    double E = elliptic_e(k), K = elliptic_k(k);
    CHECK(E < prevE);
    CHECK(K > prevK);
    prevE = E;
    prevK = K;
  }
}

TEST_CASE("log split identity for K") {
  for (double mp : {0.02, 0.1, 0.2, 0.29}) {
    double x = mp * mp, F, D;
    elliptic_log_split(x, F, D);
    double lhs = std::log(4.0 / mp) * F - D;
    double m = std::sqrt(1.0 - x);
    CHECK(lhs == doctest::Approx(elliptic_k(m)).epsilon(1e-14));
  }
}

TEST_CASE("gauss rule integrates polynomials exactly") {
  GaussRule g = gauss_legendre(12);
  double s = 0;
  for (size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * std::pow(g.x[i], 22);
  CHECK(s == doctest::Approx(2.0 / 23.0).epsilon(1e-13));
}
