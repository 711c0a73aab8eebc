#pragma once

#include <Eigen/Core>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace phaselab::lab {

class LabError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidGridError : public LabError {
 public:
  using LabError::LabError;
};

/// Width at or below two grid spacings.
class UnderResolvedError : public LabError {
 public:
  using LabError::LabError;
};

/// A momentum or velocity whose plane-wave factor is not periodic on the box.
class IncommensurateError : public LabError {
 public:
  using LabError::LabError;
};

/// Uniform periodic grid in one or two dimensions. Samples sit at x_j = -L/2 + j L/n.
///
/// Fields on the grid are stored as nx-by-ny arrays (ny = 1 in 1D), column-major, so the
/// x index runs fastest and a 2D field is directly the two-coordinate sample matrix.
template <typename Scalar_>
class Grid {
 public:
  typedef Scalar_ Scalar;
  typedef Eigen::Array<Scalar, Eigen::Dynamic, 1> Axis;

  static Grid line(Eigen::Index n, Scalar length) { return Grid(1, {n, 1}, {length, length}); }
  static Grid square(Eigen::Index n, Scalar length) { return Grid(2, {n, n}, {length, length}); }
  static Grid rectangle(Eigen::Index nx, Eigen::Index ny, Scalar lx, Scalar ly) { return Grid(2, {nx, ny}, {lx, ly}); }

  int dim() const { return m_dim; }
  Eigen::Index size(int axis) const { return m_size[axis]; }
  Eigen::Index rows() const { return m_size[0]; }
  Eigen::Index cols() const { return m_size[1]; }
  Scalar length(int axis) const { return m_length[axis]; }
  Scalar spacing(int axis) const { return m_length[axis] / Scalar(m_size[axis]); }
  /// Volume element dx (1D) or dx dy (2D).
  Scalar cell() const { return m_dim == 1 ? spacing(0) : spacing(0) * spacing(1); }

  Axis coordinates(int axis) const {
    return Axis::LinSpaced(m_size[axis], Scalar(0), Scalar(m_size[axis] - 1)) * spacing(axis) - m_length[axis] / 2;
  }

  /// FFT-ordered angular wavenumbers 2 pi j / L, j = 0..n/2-1, -n/2..-1.
  Axis wavenumbers(int axis) const {
    const Eigen::Index n = m_size[axis];
    Axis k(n);
    const Scalar base = 2 * std::numbers::pi_v<Scalar> / m_length[axis];
    for (Eigen::Index j = 0; j < n; ++j) k[j] = base * Scalar(j < n / 2 ? j : j - n);
    return k;
  }

  /// Number of plane-wave periods of wavenumber k in the box; throws unless an integer.
  long commensurate_index(Scalar k, int axis, const char* what) const {
    const Scalar periods = k * m_length[axis] / (2 * std::numbers::pi_v<Scalar>);
    const Scalar rounded = std::round(periods);
    if (std::abs(periods - rounded) > Scalar(1e-9) * std::max(Scalar(1), std::abs(periods)))
      throw IncommensurateError(std::string(what) + " is not a multiple of 2 pi / L on axis " + std::to_string(axis));
    return static_cast<long>(rounded);
  }

  friend bool operator==(const Grid& a, const Grid& b) {
    return a.m_dim == b.m_dim && a.m_size == b.m_size && a.m_length == b.m_length;
  }

 private:
  Grid(int dim, std::array<Eigen::Index, 2> size, std::array<Scalar, 2> length)
      : m_dim(dim), m_size(size), m_length(length) {
    if (dim == 1) m_size[1] = 1;
    for (int a = 0; a < dim; ++a) {
      const Eigen::Index n = m_size[a];
      if (n < 16 || (n & (n - 1)) != 0)
        throw InvalidGridError("grid size must be a power of two and at least 16, got " + std::to_string(n));
      if (!(m_length[a] > 0)) throw InvalidGridError("box length must be positive");
    }
  }

  int m_dim;
  std::array<Eigen::Index, 2> m_size;
  std::array<Scalar, 2> m_length;
};

typedef Grid<double> Gridd;

}  // namespace phaselab::lab
