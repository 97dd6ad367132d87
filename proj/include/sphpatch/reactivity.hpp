#pragma once

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace sphpatch {

// Surface reactivity with an explicit Dirichlet (kappa = inf) sentinel, so the
// exact limits C(inf), E(inf) and w = 1 are used instead of a large float.
// Negative values are allowed: the Steklov solvers evaluate C(-sigma).
class Reactivity {
 public:
  Reactivity() = default;
  static Reactivity finite(double v) { return Reactivity(v, false); }
  static Reactivity infinite() { return Reactivity(0.0, true); }

  bool is_infinite() const { return inf_; }
  double value() const {
    if (inf_) throw std::logic_error("Reactivity: value() on the inf sentinel");
    return v_;
  }

  static Reactivity parse(const std::string& s) {
    if (s == "inf" || s == "Inf" || s == "INF") return infinite();
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("Reactivity: cannot parse '" + s + "'");
    if (std::isnan(v) || std::isinf(v))
      throw std::invalid_argument("Reactivity: use the literal 'inf' for Dirichlet patches");
    return finite(v);
  }
  std::string str() const {
    if (inf_) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v_);  // value-exact round trip
    return buf;
  }

  bool operator==(const Reactivity& o) const {
    return inf_ == o.inf_ && (inf_ || v_ == o.v_);
  }

 private:
  Reactivity(double v, bool inf) : v_(v), inf_(inf) {}
  double v_ = 0.0;
  bool inf_ = false;
};

}  // namespace sphpatch
