#include <cstdio>
#include <fstream>
#include <sstream>

#include "sphpatch/disk_steklov.hpp"
#include "sphpatch/errors.hpp"

namespace sphpatch {

namespace {
constexpr const char* kMagic = "sphpatch-spectrum";
constexpr int kVersion = 1;

std::string hex(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

double unhex(const std::string& s) {
  double v = 0.0;
  if (std::sscanf(s.c_str(), "%la", &v) != 1)
    throw std::invalid_argument("spectrum load: bad float field '" + s + "'");
  return v;
}
}  // namespace

void DiskSteklovSpectrum::save(std::ostream& os) const {
  os << kMagic << " v" << kVersion << "\n";
  os << "radius " << hex(radius) << "\n";
  os << "n_quad " << n_quad << "\n";
  os << "n_modes " << n_modes << "\n";
  for (int k = 0; k < n_modes; ++k) {
    os << "mode " << k << " " << hex(mu[k]) << " " << hex(d[k]);
    for (int i = 0; i <= n_quad; ++i) os << " " << hex(psi(i, k));
    os << "\n";
  }
  os << "end\n";
}

void DiskSteklovSpectrum::save_file(const std::string& path) const {
  std::ofstream os(path);
  if (!os) throw std::invalid_argument("spectrum save: cannot open " + path);
  save(os);
}

DiskSteklovSpectrum DiskSteklovSpectrum::load(std::istream& is) {
  std::string magic, ver;
  is >> magic >> ver;
  if (magic != kMagic || ver != "v1")
    throw std::invalid_argument("spectrum load: unrecognized header");
  DiskSteklovSpectrum S;
  std::string key, field;
  is >> key >> field;
  if (key != "radius") throw std::invalid_argument("spectrum load: expected radius");
  S.radius = unhex(field);
  is >> key >> S.n_quad;
  if (key != "n_quad") throw std::invalid_argument("spectrum load: expected n_quad");
  is >> key >> S.n_modes;
  if (key != "n_modes") throw std::invalid_argument("spectrum load: expected n_modes");
  if (S.n_quad < 4 || S.n_modes < 1) throw std::invalid_argument("spectrum load: bad sizes");
  int N = S.n_quad + 1;
  S.theta.resize(N);
  double h = (M_PI / 2) / S.n_quad;
  for (int i = 0; i < N; ++i) S.theta[i] = i * h;
  S.mu.resize(S.n_modes);
  S.d.resize(S.n_modes);
  S.psi.resize(N, S.n_modes);
  for (int k = 0; k < S.n_modes; ++k) {
    int kk = -1;
    is >> key >> kk;
    if (key != "mode" || kk != k) throw std::invalid_argument("spectrum load: bad mode record");
    is >> field;
    S.mu[k] = unhex(field);
    is >> field;
    S.d[k] = unhex(field);
    for (int i = 0; i < N; ++i) {
      is >> field;
      S.psi(i, k) = unhex(field);
    }
  }
  is >> key;
  if (key != "end") throw std::invalid_argument("spectrum load: missing end marker");
  return S;
}

DiskSteklovSpectrum DiskSteklovSpectrum::load_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::invalid_argument("spectrum load: cannot open " + path);
  return load(is);
}

}  // namespace sphpatch
