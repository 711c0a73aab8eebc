#pragma once

#include <map>
#include <string>

namespace phaselab {

/// Pass/fail thresholds shared by the CLI and the acceptance tests. Every field can be
/// overridden by name (see `set`).
struct Tolerances {
  /// Largest |norm(t) - norm(0)| for the linear scheme over 1000 steps.
  double norm_drift = 1e-10;
  /// Lab/primed mismatch for the linear equation at n = 256.
  double boost_mismatch = 1e-8;
  /// Smallest final mismatch that counts as a covariance violation for the pure-gauge system.
  double pure_gauge_mismatch = 1e-3;
  /// Largest |width^2 - analytic| in the free dispersion run.
  double dispersion = 1e-6;
  /// Largest Schmidt defect allowed for a linear product state.
  double schmidt_linear = 1e-10;
  /// Smallest final Schmidt defect for the cubic scheme.
  double schmidt_cubic = 1e-3;
  /// Continuity residual for a linear run at dt = 1e-3.
  double continuity = 1e-4;
  /// Accepted ratio range of continuity residuals when dt is halved.
  double continuity_ratio_min = 3.5;
  double continuity_ratio_max = 4.5;
  /// Madelung reconstruction sqrt(rho) exp(iS) against psi.
  double reconstruction = 1e-12;

  /// Names as in the fields above; returns false for an unknown name.
  bool set(const std::string& name, double value) {
    auto it = fields().find(name);
    if (it == fields().end()) return false;
    this->*(it->second) = value;
    return true;
  }

  static const std::map<std::string, double Tolerances::*>& fields() {
    static const std::map<std::string, double Tolerances::*> table{
        {"norm_drift", &Tolerances::norm_drift},
        {"boost_mismatch", &Tolerances::boost_mismatch},
        {"pure_gauge_mismatch", &Tolerances::pure_gauge_mismatch},
        {"dispersion", &Tolerances::dispersion},
        {"schmidt_linear", &Tolerances::schmidt_linear},
        {"schmidt_cubic", &Tolerances::schmidt_cubic},
        {"continuity", &Tolerances::continuity},
        {"continuity_ratio_min", &Tolerances::continuity_ratio_min},
        {"continuity_ratio_max", &Tolerances::continuity_ratio_max},
        {"reconstruction", &Tolerances::reconstruction},
    };
    return table;
  }
};

}  // namespace phaselab
