#pragma once

#include "phaselab/lab/wavefield.hpp"

namespace phaselab::lab {

enum class BoostDirection { ToPrimed, ToUnprimed };

/// Velocity with m v L / (2 pi) = index on each axis.
template <typename Scalar>
std::array<Scalar, 2> commensurate_velocity(const Grid<Scalar>& grid, Scalar mass, std::array<long, 2> index) {
  std::array<Scalar, 2> v{0, 0};
  for (int a = 0; a < grid.dim(); ++a) v[a] = 2 * std::numbers::pi_v<Scalar> * Scalar(index[a]) / (mass * grid.length(a));
  return v;
}

/// Galilean boost of a sampled field, frame x = x' + v t:
///   to primed:   psi'(x', t) = exp(-i (m v.x' + m v^2 t / 2)) psi(x' + v t, t)
///   to unprimed: the inverse, i.e. the same map with -v.
/// The translation is spectral and so exact for band-limited fields; the plane-wave factor
/// requires m v L / (2 pi) to be an integer on each axis.
template <typename Scalar>
WaveField<Scalar> boost_wavefield(const WaveField<Scalar>& w, std::array<Scalar, 2> velocity,
                                  BoostDirection direction = BoostDirection::ToPrimed) {
  typedef typename WaveField<Scalar>::Complex Complex;
  typedef typename WaveField<Scalar>::RealArray RealArray;
  const Grid<Scalar>& grid = w.grid;
  if (direction == BoostDirection::ToUnprimed) velocity = {-velocity[0], -velocity[1]};
  if (grid.dim() == 1) velocity[1] = 0;
  for (int a = 0; a < grid.dim(); ++a) grid.commensurate_index(w.mass * velocity[a], a, "boost momentum m v");

  Spectral<Scalar> spectral(grid);
  WaveField<Scalar> out = w;
  out.psi = spectral.translate(w.psi, velocity[0] * w.time, velocity[1] * w.time);

  const Scalar v2 = velocity[0] * velocity[0] + velocity[1] * velocity[1];
  RealArray phase = grid.coordinates(0).replicate(1, grid.cols()) * (w.mass * velocity[0]);
  if (grid.dim() == 2) phase += grid.coordinates(1).transpose().replicate(grid.rows(), 1) * (w.mass * velocity[1]);
  phase += w.mass * v2 * w.time / 2;
  out.psi *= (Complex(0, -1) * phase.template cast<Complex>()).exp();
  return out;
}

}  // namespace phaselab::lab
