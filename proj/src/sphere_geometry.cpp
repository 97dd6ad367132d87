#include "sphpatch/sphere_geometry.hpp"

#include <omp.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "sphpatch/errors.hpp"

namespace sphpatch {

void PatchLayout::validate() const {
  const int N = size();
  if (N < 1) throw std::invalid_argument("layout: empty");
  if ((int)radii.size() != N || (int)kappas.size() != N)
    throw std::invalid_argument("layout: inconsistent field lengths");
  if (!(epsilon > 0.0)) throw std::invalid_argument("layout: epsilon must be positive");
  double amax = 0.0;
  for (int i = 0; i < N; ++i) {
    if (std::abs(centers[i].norm() - 1.0) > 1e-12)
      throw std::invalid_argument("layout: center " + std::to_string(i) + " not on the unit sphere");
    if (!(radii[i] > 0.0)) throw std::invalid_argument("layout: radii must be positive");
    amax = std::max(amax, radii[i]);
  }
  if (std::abs(amax - 1.0) > 1e-12)
    throw std::invalid_argument("layout: radii must be normalized so that max a_i = 1");
  double sep = 4.0 * epsilon * amax;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      if ((centers[i] - centers[j]).norm() < sep)
        throw std::invalid_argument("layout: patches " + std::to_string(i) + "," +
                                    std::to_string(j) + " violate the well-separation threshold");
}

double green_s(const Eigen::Vector3d& x, const Eigen::Vector3d& xi) {
  double dist = (x - xi).norm();
  if (dist < 1e-14) throw singularity_error("green_s: evaluation at the source point");
  double r2 = x.squaredNorm();
  return 1.0 / (2.0 * M_PI * dist) + (r2 + 1.0) / (8.0 * M_PI) +
         std::log(2.0 / (1.0 - x.dot(xi) + dist)) / (4.0 * M_PI) - 7.0 / (10.0 * M_PI);
}

Eigen::MatrixXd green_matrix(const std::vector<Eigen::Vector3d>& centers) {
  const int N = (int)centers.size();
  Eigen::MatrixXd G(N, N);
  for (int i = 0; i < N; ++i) {
    G(i, i) = green_self();
    for (int j = i + 1; j < N; ++j) G(i, j) = G(j, i) = green_s(centers[i], centers[j]);
  }
  return G;
}

Eigen::MatrixXd green_matrix(const PatchLayout& layout) {
  layout.validate();
  return green_matrix(layout.centers);
}

namespace {
double pair_energy(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  double d = (a - b).norm();
  if (d < 1e-14) throw std::invalid_argument("discrete_energy: coincident centers");
  return 1.0 / d - 0.5 * std::log(d) - 0.5 * std::log(2.0 + d);
}
}  // namespace

double discrete_energy(const std::vector<Eigen::Vector3d>& centers) {
  const int N = (int)centers.size();
  int nt = omp_get_max_threads();
  std::vector<double> partial(nt, 0.0);
#pragma omp parallel
  {
    int t = omp_get_thread_num();
    double local = 0.0;
#pragma omp for schedule(static)
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) local += pair_energy(centers[i], centers[j]);
    partial[t] = local;
  }
  double s = 0.0;
  for (double v : partial) s += v;  // fixed combination order
  return s;
}

double discrete_energy_serial(const std::vector<Eigen::Vector3d>& centers) {
  const int N = (int)centers.size();
  double s = 0.0;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) s += pair_energy(centers[i], centers[j]);
  return s;
}

double discrete_energy_asymptotic(int N, double b1) {
  double n = N;
  return 0.5 * n * n * (1.0 - std::log(2.0)) + b1 * std::pow(n, 1.5) - n * std::log(n) / 8.0 +
         0.5 * n * (std::log(2.0) - 0.25);
}

std::vector<Eigen::Vector3d> fibonacci_layout(int N) {
  if (N < 1) throw std::invalid_argument("fibonacci_layout: N must be >= 1");
  std::vector<Eigen::Vector3d> pts;
  pts.reserve(N);
  if (N == 1) {
    pts.emplace_back(0.0, 0.0, 1.0);
    return pts;
  }
  const double golden = M_PI * (3.0 - std::sqrt(5.0));
  for (int i = 0; i < N; ++i) {
    double z = 1.0 - 2.0 * i / (N - 1.0);  // poles included
    double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    double phi = golden * i;
    pts.emplace_back(rho * std::cos(phi), rho * std::sin(phi), z);
  }
  return pts;
}

std::vector<Eigen::Vector3d> platonic_layout(int N) {
  std::vector<Eigen::Vector3d> v;
  const double s3 = 1.0 / std::sqrt(3.0);
  const double phi = 0.5 * (1.0 + std::sqrt(5.0));
  switch (N) {
    case 4:
      v = {{s3, s3, s3}, {s3, -s3, -s3}, {-s3, s3, -s3}, {-s3, -s3, s3}};
      break;
    case 6:
      v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
      break;
    case 8:
      for (int sx : {-1, 1})
        for (int sy : {-1, 1})
          for (int sz : {-1, 1}) v.emplace_back(sx * s3, sy * s3, sz * s3);
      break;
    case 12: {
      double nrm = std::sqrt(1.0 + phi * phi);
      for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
          v.emplace_back(0.0, s1 / nrm, s2 * phi / nrm);
          v.emplace_back(s1 / nrm, s2 * phi / nrm, 0.0);
          v.emplace_back(s2 * phi / nrm, 0.0, s1 / nrm);
        }
      break;
    }
    case 20: {
      for (int sx : {-1, 1})
        for (int sy : {-1, 1})
          for (int sz : {-1, 1}) v.emplace_back(sx * s3, sy * s3, sz * s3);
      double b = 1.0 / phi, nrm = std::sqrt(b * b + phi * phi);
      for (int s1 : {-1, 1})
        for (int s2 : {-1, 1}) {
          v.emplace_back(0.0, s1 * b / nrm, s2 * phi / nrm);
          v.emplace_back(s1 * b / nrm, s2 * phi / nrm, 0.0);
          v.emplace_back(s2 * phi / nrm, 0.0, s1 * b / nrm);
        }
      break;
    }
    default:
      throw std::invalid_argument("platonic_layout: N must be one of 4, 6, 8, 12, 20");
  }
  for (auto& p : v) p.normalize();
  return v;
}

double chord_from_angle(double theta) { return 2.0 * std::sin(0.5 * theta); }

// Layout files: one header line "epsilon <value>", then per patch either
//   xyz <x> <y> <z> <radius> <kappa|inf>
//   ang <theta> <phi> <radius> <kappa|inf>
void PatchLayout::save(std::ostream& os) const {
  os << "epsilon " << std::hexfloat << epsilon << std::defaultfloat << "\n";
  for (int i = 0; i < size(); ++i) {
    os << "xyz " << std::hexfloat << centers[i].x() << " " << centers[i].y() << " "
       << centers[i].z() << " " << radii[i] << std::defaultfloat << " " << kappas[i].str() << "\n";
  }
}

namespace {
// strtod handles both decimal and hexfloat fields
double parse_double(const std::string& s, const std::string& line) {
  const char* c = s.c_str();
  char* end = nullptr;
  double v = std::strtod(c, &end);
  if (end != c + s.size()) throw std::invalid_argument("layout: malformed line: " + line);
  return v;
}
}  // namespace

PatchLayout PatchLayout::load(std::istream& is) {
  PatchLayout L;
  std::string line;
  bool have_eps = false;
  while (std::getline(is, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    std::vector<std::string> fields;
    std::string f;
    while (ls >> f) fields.push_back(f);
    if (tag == "epsilon") {
      if (fields.size() != 1) throw std::invalid_argument("layout: malformed line: " + line);
      L.epsilon = parse_double(fields[0], line);
      have_eps = true;
    } else if (tag == "xyz") {
      if (fields.size() != 5) throw std::invalid_argument("layout: malformed line: " + line);
      L.centers.emplace_back(parse_double(fields[0], line), parse_double(fields[1], line),
                             parse_double(fields[2], line));
      L.radii.push_back(parse_double(fields[3], line));
      L.kappas.push_back(Reactivity::parse(fields[4]));
    } else if (tag == "ang") {
      if (fields.size() != 4) throw std::invalid_argument("layout: malformed line: " + line);
      double th = parse_double(fields[0], line), ph = parse_double(fields[1], line);
      L.centers.emplace_back(std::sin(th) * std::cos(ph), std::sin(th) * std::sin(ph),
                             std::cos(th));
      L.radii.push_back(parse_double(fields[2], line));
      L.kappas.push_back(Reactivity::parse(fields[3]));
    } else {
      throw std::invalid_argument("layout: unknown record '" + tag + "'");
    }
  }
  if (!have_eps) throw std::invalid_argument("layout: missing epsilon record");
  L.validate();
  return L;
}

PatchLayout PatchLayout::load_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("layout: cannot open " + path);
  return load(is);
}

}  // namespace sphpatch
