// Timing comparison of the OpenMP kernels against their serial references.
// Usage: bench_kernels [n_quad] [n_max] [n_points]

#include <omp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "sphpatch/disk_steklov.hpp"
#include "sphpatch/oracle.hpp"
#include "sphpatch/sphere_geometry.hpp"

using namespace sphpatch;
using clk = std::chrono::steady_clock;

namespace {

double secs(clk::time_point a, clk::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <typename F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    auto t0 = clk::now();
    f();
    best = std::min(best, secs(t0, clk::now()));
  }
  return best;
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-28s %10.3f s %10.3f s %8.2fx\n", name, serial, parallel, serial / parallel);
}

}  // namespace

int main(int argc, char** argv) {
  int n_quad = argc > 1 ? std::atoi(argv[1]) : 800;
  int n_max = argc > 2 ? std::atoi(argv[2]) : 800;
  int n_points = argc > 3 ? std::atoi(argv[3]) : 2000;
  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-28s %12s %12s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    volatile double sink = 0.0;
    double ts = time_best_of(2, [&] { sink += nystrom_matrix_serial(1.0, n_quad)(0, 0); });
    double tp = time_best_of(2, [&] { sink += nystrom_matrix(1.0, n_quad)(0, 0); });
    row("nystrom assembly", ts, tp);
  }
  {
    volatile double sink = 0.0;
    double ts = time_best_of(2, [&] { sink += legendre_gram_serial(n_max, 0.2)(1, 1); });
    double tp = time_best_of(2, [&] { sink += legendre_gram(n_max, 0.2)(1, 1); });
    row("legendre gram assembly", ts, tp);
  }
  {
    auto pts = fibonacci_layout(n_points);
    volatile double sink = 0.0;
    double ts = time_best_of(3, [&] { sink += discrete_energy_serial(pts); });
    double tp = time_best_of(3, [&] { sink += discrete_energy(pts); });
    row("discrete energy", ts, tp);
  }
  {
    DiskSteklovSpectrum S = solve_disk_spectrum(1.0, {64, std::max(n_quad, 256)});
    CapacitanceModel M(S);
    volatile double sink = 0.0;
    // the charge-density sampling inside the nested quadrature is the hot loop
    double tp = time_best_of(2, [&] { sink += M.monopole_E(Reactivity::finite(2.0), 2e-5); });
    omp_set_num_threads(1);
    double ts = time_best_of(2, [&] { sink += M.monopole_E(Reactivity::finite(2.0), 2e-5); });
    omp_set_num_threads(omp_get_num_procs());
    row("monopole quadrature", ts, tp);
  }
  return 0;
}
