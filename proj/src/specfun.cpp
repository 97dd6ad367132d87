#include "sphpatch/specfun.hpp"

#include <cmath>
#include <stdexcept>

#include "sphpatch/errors.hpp"

namespace sphpatch {

static constexpr double kDomainTol = 1e-12;

double legendre_p(int n, double x) {
  if (n < 0) throw std::invalid_argument("legendre_p: n must be nonnegative");
  if (std::abs(x) > 1.0 + kDomainTol) throw std::invalid_argument("legendre_p: |x| > 1");
  x = std::clamp(x, -1.0, 1.0);
  if (n == 0) return 1.0;
  double p0 = 1.0, p1 = x;
  for (int j = 2; j <= n; ++j) {
    double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  return p1;
}

void legendre_row(int nmax, double x, std::span<double> out) {
  if (nmax < 0 || (int)out.size() < nmax + 1)
    throw std::invalid_argument("legendre_row: bad size");
  if (std::abs(x) > 1.0 + kDomainTol) throw std::invalid_argument("legendre_row: |x| > 1");
  x = std::clamp(x, -1.0, 1.0);
  out[0] = 1.0;
  if (nmax >= 1) out[1] = x;
  for (int j = 2; j <= nmax; ++j)
    out[j] = ((2 * j - 1) * x * out[j - 1] - (j - 1) * out[j - 2]) / j;
}

double elliptic_k(double k) {
  if (k < 0.0 || !(k < 1.0)) throw std::invalid_argument("elliptic_k: modulus outside [0,1)");
  double a = 1.0, g = std::sqrt((1.0 - k) * (1.0 + k));
  for (int it = 0; it < 60 && std::abs(a - g) > 1e-17 * a; ++it) {
    double an = 0.5 * (a + g);
    g = std::sqrt(a * g);
    a = an;
  }
  return M_PI / (2.0 * a);
}

double elliptic_e(double k) {
  if (k < 0.0 || k > 1.0) throw std::invalid_argument("elliptic_e: modulus outside [0,1]");
  if (k == 0.0) return M_PI_2;
  if (k == 1.0) return 1.0;
  double a = 1.0, g = std::sqrt((1.0 - k) * (1.0 + k));
  double two_n = 0.5, sum = 0.5 * k * k;
  for (int it = 0; it < 60 && std::abs(a - g) > 1e-17 * a; ++it) {
    double an = 0.5 * (a + g), gn = std::sqrt(a * g), c = 0.5 * (a - g);
    a = an;
    g = gn;
    two_n *= 2.0;
    sum += two_n * c * c;
  }
  return (M_PI / (2.0 * a)) * (1.0 - sum);
}

void elliptic_log_split(double x, double& F, double& D) {
  // F(x) = sum a_j x^j with a_j = ((2j-1)!!/(2j)!!)^2, D(x) = sum a_j d_j x^j,
  // d_j = sum_{i<=j} 1/(i(2i-1)). Converges for x < 1; callers keep x well away.
  if (x < 0.0 || !(x < 1.0)) throw std::invalid_argument("elliptic_log_split: x outside [0,1)");
  double term = 1.0, dsum = 0.0, f = 1.0, d = 0.0;
  for (int j = 1; j < 2000; ++j) {
    double aj = (2.0 * j - 1.0) / (2.0 * j);
    term *= aj * aj * x;
    dsum += 1.0 / (j * (2.0 * j - 1.0));
    f += term;
    d += term * dsum;
    if (term < 1e-18 * f) break;
  }
  F = f;
  D = d;
}

GaussRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: n must be positive");
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < n / 2 + n % 2; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = t;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-15) break;
    }
    double p0 = 1.0, p1 = t;
    for (int j = 2; j <= n; ++j) {
      double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (t * p1 - p0) / (t * t - 1.0);
    double w = 2.0 / ((1.0 - t * t) * dp * dp);
    r.x[i] = -t;            // ascending order
    r.w[i] = w;
    r.x[n - 1 - i] = t;
    r.w[n - 1 - i] = w;
  }
  return r;
}

}  // namespace sphpatch
