#pragma once

#include <unsupported/Eigen/FFT>
#include <vector>

#include "phaselab/lab/grid.hpp"

namespace phaselab::lab {

/// Fourier transforms and spectral derivatives on a periodic grid.
///
/// Transforms act on whole nx-by-ny arrays: along x for every column, then along y for
/// every row in 2D. The inverse is scaled so inverse(forward(a)) == a.
template <typename Scalar_>
class Spectral {
 public:
  typedef Scalar_ Scalar;
  typedef std::complex<Scalar> Complex;
  typedef Eigen::Array<Complex, Eigen::Dynamic, Eigen::Dynamic> ComplexArray;
  typedef Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic> RealArray;

  explicit Spectral(const Grid<Scalar>& grid)
      : m_grid(grid),
        m_kx(grid.wavenumbers(0).replicate(1, grid.cols())),
        m_ky(grid.dim() == 2 ? RealArray(grid.wavenumbers(1).transpose().replicate(grid.rows(), 1))
                             : RealArray::Zero(grid.rows(), 1)),
        m_in(std::max(grid.rows(), grid.cols())),
        m_out(m_in.size()) {
    m_k2 = m_kx.square() + m_ky.square();
    // First derivatives drop the Nyquist mode, whose derivative of a real field is not real.
    m_dx = (m_kx.abs() < grid.wavenumbers(0).abs().maxCoeff()).select(m_kx, Scalar(0));
    m_dy = grid.dim() == 2 ? RealArray((m_ky.abs() < grid.wavenumbers(1).abs().maxCoeff()).select(m_ky, Scalar(0))) : m_ky;
  }

  const Grid<Scalar>& grid() const { return m_grid; }
  /// Wavenumber arrays broadcast to the field shape.
  const RealArray& kx() const { return m_kx; }
  const RealArray& ky() const { return m_ky; }
  const RealArray& k(int axis) const { return axis == 0 ? m_kx : m_ky; }
  const RealArray& k2() const { return m_k2; }

  void forward(ComplexArray& a) { transform(a, true); }
  void inverse(ComplexArray& a) { transform(a, false); }

  ComplexArray derivative(ComplexArray a, int axis) {
    forward(a);
    a *= Complex(0, 1) * (axis == 0 ? m_dx : m_dy).template cast<Complex>();
    inverse(a);
    return a;
  }

  RealArray derivative(const RealArray& a, int axis) {
    return derivative(ComplexArray(a.template cast<Complex>()), axis).real();
  }

  RealArray laplacian(const RealArray& a) {
    ComplexArray c = a.template cast<Complex>();
    forward(c);
    c *= -m_k2.template cast<Complex>();
    inverse(c);
    return c.real();
  }

  /// a(x + shift) by multiplying each mode with exp(i k.shift).
  ComplexArray translate(ComplexArray a, Scalar shift_x, Scalar shift_y = 0) {
    forward(a);
    const RealArray phase = m_kx * shift_x + m_ky * shift_y;
    a *= (Complex(0, 1) * phase.template cast<Complex>()).exp();
    inverse(a);
    return a;
  }

 private:
  void transform(ComplexArray& a, bool forward) {
    const Eigen::Index nx = a.rows(), ny = a.cols();
    for (Eigen::Index j = 0; j < ny; ++j) {
      Complex* col = a.data() + j * nx;
      std::copy(col, col + nx, m_in.begin());
      apply(forward, nx);
      std::copy(m_out.begin(), m_out.begin() + nx, col);
    }
    if (ny == 1) return;
    for (Eigen::Index i = 0; i < nx; ++i) {
      for (Eigen::Index j = 0; j < ny; ++j) m_in[j] = a(i, j);
      apply(forward, ny);
      for (Eigen::Index j = 0; j < ny; ++j) a(i, j) = m_out[j];
    }
  }

  void apply(bool forward, Eigen::Index n) {
    if (forward)
      m_fft.fwd(m_out.data(), m_in.data(), n);
    else
      m_fft.inv(m_out.data(), m_in.data(), n);
  }

  Grid<Scalar> m_grid;
  RealArray m_kx, m_ky, m_k2, m_dx, m_dy;
  Eigen::FFT<Scalar> m_fft;
  std::vector<Complex> m_in, m_out;
};

}  // namespace phaselab::lab
