#pragma once

#include <optional>

#include "phaselab/lab/spectral.hpp"

namespace phaselab::lab {

/// Complex samples on a grid, with the particle mass and the current time.
template <typename Scalar_>
struct WaveField {
  typedef Scalar_ Scalar;
  typedef std::complex<Scalar> Complex;
  typedef Eigen::Array<Complex, Eigen::Dynamic, Eigen::Dynamic> ComplexArray;
  typedef Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic> RealArray;

  Grid<Scalar> grid;
  ComplexArray psi;
  Scalar mass = 1;
  Scalar time = 0;

  RealArray density() const { return psi.abs2(); }
};

typedef WaveField<double> WaveFieldd;

/// Discrete L2 norm squared, sum |psi|^2 dV.
template <typename Scalar>
Scalar norm(const WaveField<Scalar>& w) {
  return w.psi.abs2().sum() * w.grid.cell();
}

/// L2 distance sqrt(sum |a - b|^2 dV) between fields on the same grid.
template <typename Scalar>
Scalar l2_distance(const WaveField<Scalar>& a, const WaveField<Scalar>& b) {
  return std::sqrt((a.psi - b.psi).abs2().sum() * a.grid.cell());
}

/// Normalized Gaussian packet, a product of one factor per axis:
///   exp(-(x - x0)^2 / (4 width^2) + i p x)
/// so that |psi|^2 has standard deviation `width`. Distances are taken to the nearest
/// periodic image of the center.
template <typename Scalar>
WaveField<Scalar> init_gaussian(const Grid<Scalar>& grid, std::array<Scalar, 2> center, std::array<Scalar, 2> momentum,
                                std::array<Scalar, 2> width, Scalar mass = 1) {
  typedef typename WaveField<Scalar>::Complex Complex;
  typedef Eigen::Array<Complex, Eigen::Dynamic, 1> Factor;
  if (!(mass > 0)) throw LabError("mass must be positive");
  std::array<Factor, 2> factors;
  for (int a = 0; a < 2; ++a) {
    if (a >= grid.dim()) {
      factors[a] = Factor::Ones(1);
      continue;
    }
    if (!(width[a] > 2 * grid.spacing(a)))
      throw UnderResolvedError("packet width " + std::to_string(width[a]) + " must exceed two grid spacings (" +
                               std::to_string(2 * grid.spacing(a)) + ")");
    grid.commensurate_index(momentum[a], a, "packet momentum");
    const auto x = grid.coordinates(a);
    const Scalar len = grid.length(a);
    factors[a].resize(x.size());
    for (Eigen::Index j = 0; j < x.size(); ++j) {
      Scalar d = x[j] - center[a];
      d -= len * std::round(d / len);
      factors[a][j] = std::exp(Complex(-d * d / (4 * width[a] * width[a]), momentum[a] * x[j]));
    }
  }
  WaveField<Scalar> w{grid, factors[0].matrix() * factors[1].matrix().transpose(), mass, 0};
  w.psi /= std::sqrt(norm(w));
  return w;
}

template <typename Scalar>
WaveField<Scalar> init_gaussian(const Grid<Scalar>& grid, Scalar center, Scalar momentum, Scalar width,
                                Scalar mass = 1) {
  return init_gaussian<Scalar>(grid, {center, 0}, {momentum, 0}, {width, width}, mass);
}

/// <p> along `axis` from the spectral density.
template <typename Scalar>
Scalar mean_momentum(const WaveField<Scalar>& w, int axis = 0) {
  Spectral<Scalar> spectral(w.grid);
  typename WaveField<Scalar>::ComplexArray hat = w.psi;
  spectral.forward(hat);
  const auto weight = hat.abs2();
  return (spectral.k(axis) * weight).sum() / weight.sum();
}

/// <x^2> - <x>^2 along `axis` (for packets well inside the box).
template <typename Scalar>
Scalar position_variance(const WaveField<Scalar>& w, int axis = 0) {
  const auto rho = w.density();
  const auto x = w.grid.coordinates(axis);
  const Scalar total = rho.sum();
  const auto marginal = axis == 0 ? Eigen::Array<Scalar, Eigen::Dynamic, 1>(rho.rowwise().sum())
                                  : Eigen::Array<Scalar, Eigen::Dynamic, 1>(rho.colwise().sum().transpose());
  const Scalar mean = (x * marginal).sum() / total;
  return ((x - mean).square() * marginal).sum() / total;
}

/// Kinetic + potential + (g/2)|psi|^4 energy, kinetic part evaluated spectrally.
template <typename Scalar>
Scalar energy(const WaveField<Scalar>& w, const std::optional<Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic>>& potential,
              Scalar g = 0) {
  Spectral<Scalar> spectral(w.grid);
  typename WaveField<Scalar>::ComplexArray hat = w.psi;
  spectral.forward(hat);
  const Scalar points = Scalar(w.psi.size());
  const Scalar kinetic = (spectral.k2() * hat.abs2()).sum() / (2 * w.mass * points);
  const auto rho = w.density();
  Scalar total = kinetic + g / 2 * rho.square().sum();
  if (potential) total += (*potential * rho).sum();
  return total * w.grid.cell();
}

}  // namespace phaselab::lab
