#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sphpatch/errors.hpp"
#include "sphpatch/oracle.hpp"
#include "test_support.hpp"

using namespace sphpatch;

TEST_CASE("a sequence") {
  auto A = a_sequence(20);
  CHECK(A[0] == 1.0);
  CHECK(A[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(A[2] == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
  // against the Gamma-function form
  for (int k : {5, 12, 20}) {
    double ref = std::exp(std::lgamma(k + 0.5) - std::lgamma(k + 1.0)) / std::sqrt(M_PI);
    CHECK(A[k] == doctest::Approx(ref).epsilon(1e-13));
  }
}

TEST_CASE("k element analytic cases and symmetry") {
  for (double eps : {0.1, 0.5, 1.2}) {
    CHECK(k_element(0, 0, eps) == doctest::Approx(0.5 * (1 - std::cos(eps))).epsilon(1e-14));
    // integrand symmetry: K_{m,n}/(m+1/2) = K_{n,m}/(n+1/2)
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 4}, {3, 10}, {7, 2}})
      CHECK(k_element(m, n, eps) / (m + 0.5) ==
            doctest::Approx(k_element(n, m, eps) / (n + 0.5)).epsilon(1e-13));
  }
  CHECK_THROWS_AS(k_element(0, 0, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(k_element(0, 0, 3.5), std::invalid_argument);
}

TEST_CASE("closed form reconciles with the defining integral") {
  // The printed closed form evaluates the unweighted integral (at m = n = 0 it
  // gives 1 - cos eps, twice the weighted definition); with the (m + 1/2)
  // factor restored the two paths agree to quadrature accuracy.
  for (double eps : {0.1, 0.5, 1.0})
    for (int m = 0; m <= 40; m += 5)
      for (int n = 0; n <= 40; n += 7)
        CHECK(std::abs(k_element_closed(m, n, eps) - k_element(m, n, eps)) < 1e-10);
}

TEST_CASE("gram matrix matches per-element quadrature") {
  auto I = legendre_gram(24, 0.7);
  for (int m = 0; m <= 24; m += 6)
    for (int n = 0; n <= 24; n += 5)
      CHECK(I(m, n) * (m + 0.5) == doctest::Approx(k_element(m, n, 0.7)).epsilon(1e-12));
}

TEST_CASE("two-patch element parity identity") {
  int nmax = 12;
  double e1 = 0.25, e2 = 0.4;
  auto I1 = legendre_gram(nmax, e1);
  auto I2 = legendre_gram(nmax, e2);
  // K = K^(1)(e1) + (-1)^{m+n} K^(1)(e2) entry by entry
  for (int m = 0; m <= nmax; ++m)
    for (int n = 0; n <= nmax; ++n) {
      double expect = I1(m, n) + ((m + n) % 2 ? -1.0 : 1.0) * I2(m, n);
      double south = ((m + n) % 2 ? -1.0 : 1.0) * I2(m, n);
      CHECK(expect - I1(m, n) == doctest::Approx(south).epsilon(1e-14));
    }
}

TEST_CASE("oracle eigenvalues: structure and truncation stability") {
  OracleResult a = sn_oracle({0.2}, 300, 6);
  CHECK(a.n_max == 300);
  CHECK(a.patch_chords[0] == doctest::Approx(2 * std::sin(0.1)).epsilon(1e-14));
  for (size_t j = 1; j < a.sigma.size(); ++j) CHECK(a.sigma[j] > a.sigma[j - 1]);
  for (double s : a.sigma) CHECK(s > 0.0);
  // truncation stability of the first five eigenvalues at the production orders
  OracleResult b = sn_oracle({0.2, 0.2}, 1000, 5);
  OracleResult c = sn_oracle({0.2, 0.2}, 2000, 5);
  for (int j = 0; j < 5; ++j) CHECK(std::abs(b.sigma[j] - c.sigma[j]) < 5e-4);
  // published single-patch value at the full truncation
  OracleResult d = sn_oracle({0.2}, 1000, 1);
  CHECK(d.sigma[0] == doctest::Approx(4.0080).epsilon(5e-5 / 4.008));
}

TEST_CASE("oracle argument validation") {
  CHECK_THROWS_AS(sn_oracle({}, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(sn_oracle({0.2, 0.3, 0.4}, 100, 1), std::invalid_argument);
  CHECK_THROWS_AS(sn_oracle({1.6, 1.6}, 100, 1), std::invalid_argument);  // overlap
  CHECK_THROWS_AS(sn_oracle({0.2}, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(sn_oracle({0.2}, 100, 200), std::invalid_argument);
}
