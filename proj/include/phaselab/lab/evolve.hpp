#pragma once

#include <optional>
#include <string>

#include "phaselab/lab/wavefield.hpp"

namespace phaselab::lab {

/// A non-finite sample appeared during evolution.
class NumericalAbort : public LabError {
 public:
  explicit NumericalAbort(long step)
      : LabError("non-finite field after step " + std::to_string(step)), m_step(step) {}
  long step() const { return m_step; }

 private:
  long m_step;
};

template <typename Scalar>
struct Scheme {
  enum Kind { Linear, Cubic, PureGauge };

  Kind kind = Linear;
  /// Cubic coupling in i dt psi = -(1/2m) lap psi + V psi + g |psi|^2 psi.
  Scalar g = 0;

  static Scheme linear() { return {Linear, 0}; }
  static Scheme cubic(Scalar g) { return {Cubic, g}; }
  /// Frozen amplitude with the phase driven pointwise by dt S = lap R / (4 m R) - V / 2.
  static Scheme pure_gauge() { return {PureGauge, 0}; }

  std::string name() const { return kind == Linear ? "linear" : kind == Cubic ? "cubic" : "pure_gauge"; }
};

/// Samples |psi| below this fraction of the maximum count as nodes.
template <typename Scalar>
constexpr Scalar kNodeFraction = Scalar(1e-8);

/// Fixed-step propagator. Linear and cubic schemes use Strang splitting
///   half potential/nonlinear phase, exact kinetic step in Fourier space, half phase;
/// the pure-gauge scheme is an explicit Euler step on the phase, which is exact here
/// because the driving term depends only on the frozen amplitude.
template <typename Scalar_>
class Propagator {
 public:
  typedef Scalar_ Scalar;
  typedef std::complex<Scalar> Complex;
  typedef Eigen::Array<Complex, Eigen::Dynamic, Eigen::Dynamic> ComplexArray;
  typedef Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic> RealArray;

  Propagator(const Grid<Scalar>& grid, Scalar mass, Scalar dt, Scheme<Scalar> scheme,
             std::optional<RealArray> potential = std::nullopt)
      : m_spectral(grid), m_mass(mass), m_dt(dt), m_scheme(scheme), m_potential(std::move(potential)) {
    if (!(dt > 0)) throw LabError("time step must be positive");
    if (m_potential && (m_potential->rows() != grid.rows() || m_potential->cols() != grid.cols()))
      throw LabError("potential shape does not match the grid");
    m_kinetic = (Complex(0, -dt / (2 * mass)) * m_spectral.k2().template cast<Complex>()).exp();
    if (m_potential) m_half_potential = (Complex(0, -dt / 2) * m_potential->template cast<Complex>()).exp();
  }

  Scalar dt() const { return m_dt; }
  const Scheme<Scalar>& scheme() const { return m_scheme; }
  const std::optional<RealArray>& potential() const { return m_potential; }

  /// Advances `steps` steps; `first_step` only labels the abort index.
  void advance(WaveField<Scalar>& w, long steps, long first_step = 0) {
    if (m_scheme.kind == Scheme<Scalar>::PureGauge) {
      const ComplexArray factor = (Complex(0, m_dt) * pure_gauge_rate(w).template cast<Complex>()).exp();
      for (long s = 0; s < steps; ++s) {
        w.psi *= factor;
        finish(w, first_step + s + 1);
      }
      return;
    }
    for (long s = 0; s < steps; ++s) {
      half_phase(w);
      m_spectral.forward(w.psi);
      w.psi *= m_kinetic;
      m_spectral.inverse(w.psi);
      half_phase(w);
      finish(w, first_step + s + 1);
    }
  }

 private:
  void half_phase(WaveField<Scalar>& w) {
    if (m_potential) w.psi *= m_half_potential;
    if (m_scheme.kind == Scheme<Scalar>::Cubic && m_scheme.g != 0)
      w.psi *= (Complex(0, -m_scheme.g * m_dt / 2) * w.psi.abs2().template cast<Complex>()).exp();
  }

  void finish(WaveField<Scalar>& w, long step) {
    w.time += m_dt;
    if (!w.psi.allFinite()) throw NumericalAbort(step);
  }

  RealArray pure_gauge_rate(const WaveField<Scalar>& w) {
    const RealArray amplitude = w.psi.abs();
    const RealArray lap = m_spectral.laplacian(amplitude);
    const Scalar floor = kNodeFraction<Scalar> * amplitude.maxCoeff();
    RealArray rate = (amplitude > floor).select(lap / (4 * m_mass * amplitude), Scalar(0));
    if (m_potential) rate -= *m_potential / 2;
    return rate;
  }

  Spectral<Scalar> m_spectral;
  Scalar m_mass, m_dt;
  Scheme<Scalar> m_scheme;
  std::optional<RealArray> m_potential;
  ComplexArray m_kinetic, m_half_potential;
};

/// Evolves `steps` steps of size `dt` and returns the new field.
template <typename Scalar>
WaveField<Scalar> evolve(WaveField<Scalar> w, const std::optional<typename WaveField<Scalar>::RealArray>& potential,
                         Scheme<std::type_identity_t<Scalar>> scheme, std::type_identity_t<Scalar> dt, long steps) {
  Propagator<Scalar> p(w.grid, w.mass, dt, scheme, potential);
  p.advance(w, steps);
  return w;
}

}  // namespace phaselab::lab
