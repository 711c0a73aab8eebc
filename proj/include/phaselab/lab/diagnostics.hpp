#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <limits>
#include <optional>
#include <vector>

#include "phaselab/lab/madelung.hpp"

namespace phaselab::lab {

enum class Metric { Norm, Energy, ContinuityResidual, BoostMismatch, SchmidtDefect };

/// One sampled time; metrics an experiment does not measure stay empty.
template <typename Scalar>
struct DiagnosticsRow {
  Scalar t = 0;
  std::optional<Scalar> norm, energy, continuity_residual, boost_mismatch, schmidt_defect;

  std::optional<Scalar> get(Metric m) const {
    switch (m) {
      case Metric::Norm: return norm;
      case Metric::Energy: return energy;
      case Metric::ContinuityResidual: return continuity_residual;
      case Metric::BoostMismatch: return boost_mismatch;
      case Metric::SchmidtDefect: return schmidt_defect;
    }
    return std::nullopt;
  }
};

template <typename Scalar>
struct Diagnostics {
  std::vector<DiagnosticsRow<Scalar>> rows;

  bool all_finite() const {
    for (const auto& r : rows)
      for (Metric m : {Metric::Norm, Metric::Energy, Metric::ContinuityResidual, Metric::BoostMismatch, Metric::SchmidtDefect})
        if (auto v = r.get(m); v && !std::isfinite(*v)) return false;
    return std::isfinite(rows.empty() ? Scalar(0) : rows.back().t);
  }

  /// Values of one metric, skipping rows where it is absent.
  std::vector<Scalar> series(Metric m) const {
    std::vector<Scalar> out;
    for (const auto& r : rows)
      if (auto v = r.get(m)) out.push_back(*v);
    return out;
  }

  std::optional<Scalar> max(Metric m) const {
    const auto s = series(m);
    if (s.empty()) return std::nullopt;
    return *std::max_element(s.begin(), s.end());
  }

  std::optional<Scalar> last(Metric m) const {
    const auto s = series(m);
    if (s.empty()) return std::nullopt;
    return s.back();
  }

  /// Largest |norm(t) - norm(0)|.
  std::optional<Scalar> drift(Metric m) const {
    const auto s = series(m);
    if (s.empty()) return std::nullopt;
    Scalar worst = 0;
    for (Scalar v : s) worst = std::max(worst, std::abs(v - s.front()));
    return worst;
  }
};

namespace detail {

template <typename Scalar>
void put(std::ostream& os, const std::optional<Scalar>& v) {
  if (v) os << *v;
}

inline std::ofstream open_csv(const std::filesystem::path& path) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream os(path);
  if (!os) throw LabError("cannot write " + path.string());
  os << std::setprecision(17);
  return os;
}

}  // namespace detail

/// Columns t, norm, energy, continuity_residual, boost_mismatch, schmidt_defect; absent
/// metrics are empty cells.
template <typename Scalar>
void write_diagnostics_csv(const std::filesystem::path& path, const Diagnostics<Scalar>& d) {
  std::ofstream os = detail::open_csv(path);
  os << "t,norm,energy,continuity_residual,boost_mismatch,schmidt_defect\n";
  for (const auto& r : d.rows) {
    os << r.t << ',';
    detail::put(os, r.norm);
    os << ',';
    detail::put(os, r.energy);
    os << ',';
    detail::put(os, r.continuity_residual);
    os << ',';
    detail::put(os, r.boost_mismatch);
    os << ',';
    detail::put(os, r.schmidt_defect);
    os << '\n';
  }
}

/// One row per sample: x (and y), re, im, rho, S, mask.
template <typename Scalar>
void write_snapshot_csv(const std::filesystem::path& path, const WaveField<Scalar>& w) {
  const MadelungFields<Scalar> m = madelung_extract(w);
  std::ofstream os = detail::open_csv(path);
  const auto x = w.grid.coordinates(0);
  const bool planar = w.grid.dim() == 2;
  const auto y = planar ? w.grid.coordinates(1) : x;
  os << (planar ? "x,y," : "x,") << "re,im,rho,S,mask\n";
  for (Eigen::Index j = 0; j < w.psi.cols(); ++j)
    for (Eigen::Index i = 0; i < w.psi.rows(); ++i) {
      os << x[i] << ',';
      if (planar) os << y[j] << ',';
      os << w.psi(i, j).real() << ',' << w.psi(i, j).imag() << ',' << m.rho(i, j) << ',' << m.phase(i, j) << ','
         << (m.mask(i, j) ? 1 : 0) << '\n';
    }
}

/// "snapshot_00012.csv"
inline std::string snapshot_name(long index) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "snapshot_%05ld.csv", index);
  return buf;
}

}  // namespace phaselab::lab
