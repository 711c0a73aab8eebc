#pragma once

#include <Eigen/SVD>
#include <functional>

#include "phaselab/lab/boost.hpp"
#include "phaselab/lab/diagnostics.hpp"

namespace phaselab::lab {

/// Shared knobs for the experiments. `samples` diagnostics rows are taken at evenly spaced
/// step counts, plus the initial state.
template <typename Scalar>
struct ExperimentOptions {
  Scalar mass = 1;
  Scalar dt = Scalar(1e-3);
  Scalar width = 1;
  long samples = 10;
  /// Called with every sampled lab-frame field and its sample index.
  std::function<void(long, const WaveField<Scalar>&)> on_sample;
};

namespace detail {

inline long step_count(double duration, double dt) {
  if (!(duration >= 0) || !(dt > 0)) throw LabError("duration must be non-negative and dt positive");
  return static_cast<long>(std::llround(duration / dt));
}

/// Step indices at which rows are recorded: 0 and `samples` evenly spaced ones up to `steps`.
inline std::vector<long> sample_steps(long steps, long samples) {
  std::vector<long> out{0};
  samples = std::max(1L, std::min(samples, steps));
  for (long k = 1; k <= samples && steps > 0; ++k) out.push_back(steps * k / samples);
  return out;
}

}  // namespace detail

/// 1 - s1^2 / sum s_k^2 over the singular values of the two-coordinate sample matrix,
/// evaluated as sum_{k>1} s_k^2 / sum s_k^2. Zero iff the samples form a product.
template <typename Scalar>
Scalar schmidt_defect(const WaveField<Scalar>& w) {
  if (w.grid.dim() != 2) throw LabError("Schmidt defect needs a two-dimensional field");
  Eigen::BDCSVD<Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>> svd(w.psi.matrix());
  const auto s2 = svd.singularValues().array().square();
  return s2.tail(s2.size() - 1).sum() / s2.sum();
}

/// Evolves a packet at rest in the lab frame and its boosted image in the primed frame with
/// the same scheme, recording || boost(psi(t)) - psi'(t) || at each sample. The velocity is
/// given by its commensurability index, v = 2 pi index / (m L).
template <typename Scalar>
Diagnostics<Scalar> run_boost_experiment(const Grid<Scalar>& grid, std::array<long, 2> velocity_index, Scalar duration,
                                         Scheme<Scalar> scheme, const ExperimentOptions<Scalar>& opts = {}) {
  const auto v = commensurate_velocity(grid, opts.mass, velocity_index);
  WaveField<Scalar> lab = init_gaussian<Scalar>(grid, {0, 0}, {0, 0}, {opts.width, opts.width}, opts.mass);
  WaveField<Scalar> primed = boost_wavefield(lab, v);
  Propagator<Scalar> p_lab(grid, opts.mass, opts.dt, scheme), p_primed(grid, opts.mass, opts.dt, scheme);
  const Scalar g = scheme.kind == Scheme<Scalar>::Cubic ? scheme.g : Scalar(0);

  Diagnostics<Scalar> d;
  long done = 0, index = 0;
  for (long step : detail::sample_steps(detail::step_count(duration, opts.dt), opts.samples)) {
    p_lab.advance(lab, step - done, done);
    p_primed.advance(primed, step - done, done);
    done = step;
    DiagnosticsRow<Scalar> row;
    row.t = lab.time;
    row.norm = norm(lab);
    if (scheme.kind != Scheme<Scalar>::PureGauge) row.energy = energy<Scalar>(lab, std::nullopt, g);
    row.boost_mismatch = l2_distance(boost_wavefield(lab, v), primed);
    d.rows.push_back(row);
    if (opts.on_sample) opts.on_sample(index++, lab);
  }
  return d;
}

/// Heavy, narrow packets: with m = 1 and unit width the packets spread before the cubic
/// phase builds up, and the defect stalls near 1e-4.
template <typename Scalar>
ExperimentOptions<Scalar> separability_defaults() {
  ExperimentOptions<Scalar> opts;
  opts.mass = 10;
  opts.width = Scalar(0.5);
  opts.dt = Scalar(2e-3);
  return opts;
}

/// Product of two Gaussians evolved on a 2D grid; the Schmidt defect of every sample.
template <typename Scalar>
Diagnostics<Scalar> run_separability_experiment(const Grid<Scalar>& grid, Scheme<Scalar> scheme, Scalar duration,
                                                const ExperimentOptions<Scalar>& opts = separability_defaults<Scalar>()) {
  if (grid.dim() != 2) throw LabError("separability experiment needs a two-dimensional grid");
  const Scalar kx = 2 * std::numbers::pi_v<Scalar> * 2 / grid.length(0);
  WaveField<Scalar> w = init_gaussian<Scalar>(grid, {-grid.length(0) / 16, grid.length(1) / 32}, {kx, 0},
                                              {opts.width, Scalar(0.8) * opts.width}, opts.mass);
  Propagator<Scalar> p(grid, opts.mass, opts.dt, scheme);
  const Scalar g = scheme.kind == Scheme<Scalar>::Cubic ? scheme.g : Scalar(0);

  Diagnostics<Scalar> d;
  long done = 0, index = 0;
  for (long step : detail::sample_steps(detail::step_count(duration, opts.dt), opts.samples)) {
    p.advance(w, step - done, done);
    done = step;
    DiagnosticsRow<Scalar> row;
    row.t = w.time;
    row.norm = norm(w);
    if (scheme.kind != Scheme<Scalar>::PureGauge) row.energy = energy<Scalar>(w, std::nullopt, g);
    row.schmidt_defect = schmidt_defect(w);
    d.rows.push_back(row);
    if (opts.on_sample) opts.on_sample(index++, w);
  }
  return d;
}

template <typename Scalar>
struct WidthSample {
  Scalar t, measured, analytic;
};

template <typename Scalar>
struct DispersionRun {
  Diagnostics<Scalar> diagnostics;
  std::vector<WidthSample<Scalar>> widths;
  Scalar max_width_error = 0;
};

/// Free packet at rest with the closed-form spreading law
///   width^2(t) = width0^2 (1 + (t / (2 m width0^2))^2).
template <typename Scalar>
Scalar free_width_squared(Scalar width0, Scalar mass, Scalar t) {
  const Scalar tau = t / (2 * mass * width0 * width0);
  return width0 * width0 * (1 + tau * tau);
}

/// Free Gaussian in 1D: measured against the analytic width law, with norm, energy and the
/// continuity residual (from the neighbouring steps) at every sample after the first.
template <typename Scalar>
DispersionRun<Scalar> run_dispersion_experiment(const Grid<Scalar>& grid, Scalar duration,
                                                const ExperimentOptions<Scalar>& opts = {}) {
  if (grid.dim() != 1) throw LabError("dispersion experiment needs a one-dimensional grid");
  WaveField<Scalar> w = init_gaussian<Scalar>(grid, 0, 0, opts.width, opts.mass);
  Propagator<Scalar> p(grid, opts.mass, opts.dt, Scheme<Scalar>::linear());
  const long steps = detail::step_count(duration, opts.dt);
  const std::vector<long> samples = detail::sample_steps(steps, opts.samples);

  DispersionRun<Scalar> run;
  std::optional<MadelungFields<Scalar>> before, at;
  std::size_t at_row = 0, next = 0;
  long index = 0;
  for (long step = 0; step <= steps; ++step) {
    if (step > 0) p.advance(w, 1, step - 1);
    if (at && before) {
      const std::vector<MadelungFields<Scalar>> window{*before, *at, madelung_extract(w)};
      run.diagnostics.rows[at_row].continuity_residual = continuity_residual(window, opts.dt);
      before.reset();
      at.reset();
    }
    if (next < samples.size() && step + 1 == samples[next] && samples[next] > 0) before = madelung_extract(w);
    if (next < samples.size() && step == samples[next]) {
      DiagnosticsRow<Scalar> row;
      row.t = w.time;
      row.norm = norm(w);
      row.energy = energy<Scalar>(w, std::nullopt);
      const Scalar measured = position_variance(w);
      const Scalar analytic = free_width_squared(opts.width, opts.mass, w.time);
      run.widths.push_back({w.time, measured, analytic});
      run.max_width_error = std::max(run.max_width_error, std::abs(measured - analytic));
      if (before) {
        at = madelung_extract(w);
        at_row = run.diagnostics.rows.size();
      }
      run.diagnostics.rows.push_back(row);
      if (opts.on_sample) opts.on_sample(index++, w);
      ++next;
    }
  }
  return run;
}

template <typename Scalar>
struct ContinuityStudy {
  Scalar coarse, fine;
  Scalar ratio() const { return coarse / fine; }
};

/// Continuity residual at time `t` from snapshots spaced dt apart, for dt and dt / 2, on a
/// moving packet evolved with the linear scheme and an optional sampled potential.
template <typename Scalar>
ContinuityStudy<Scalar> run_continuity_study(const Grid<Scalar>& grid, Scalar t, Scalar dt,
                                             const std::optional<Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>>& potential,
                                             const ExperimentOptions<Scalar>& opts = {}) {
  const Scalar k = 2 * std::numbers::pi_v<Scalar> * 2 / grid.length(0);
  const WaveField<Scalar> start = init_gaussian<Scalar>(grid, {0, 0}, {k, 0}, {opts.width, opts.width}, opts.mass);
  auto residual_at = [&](Scalar h) {
    Propagator<Scalar> p(grid, opts.mass, h, Scheme<Scalar>::linear(), potential);
    WaveField<Scalar> w = start;
    const long steps = detail::step_count(t, h);
    p.advance(w, steps - 1);
    std::vector<MadelungFields<Scalar>> window{madelung_extract(w)};
    for (int s = 0; s < 2; ++s) {
      p.advance(w, 1, steps - 1 + s);
      window.push_back(madelung_extract(w));
    }
    return continuity_residual(window, h);
  };
  return {residual_at(dt), residual_at(dt / 2)};
}

}  // namespace phaselab::lab
