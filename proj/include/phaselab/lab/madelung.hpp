#pragma once

#include <queue>
#include <span>
#include <tuple>

#include "phaselab/lab/evolve.hpp"

namespace phaselab::lab {

/// The field is numerically zero everywhere.
class AllMaskedError : public LabError {
 public:
  using LabError::LabError;
};

/// Density and unwrapped phase of a wave field. `mask` is true at nodes, where the phase
/// is not meaningful.
template <typename Scalar_>
struct MadelungFields {
  typedef Scalar_ Scalar;
  typedef Eigen::Array<Scalar, Eigen::Dynamic, Eigen::Dynamic> RealArray;
  typedef Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic> MaskArray;

  Grid<Scalar> grid;
  Scalar mass = 1;
  Scalar time = 0;
  RealArray rho;
  RealArray phase;
  MaskArray mask;

  /// sqrt(rho) exp(i S)
  typename WaveField<Scalar>::ComplexArray reconstruct() const {
    typedef std::complex<Scalar> Complex;
    return rho.sqrt().template cast<Complex>() * (Complex(0, 1) * phase.template cast<Complex>()).exp();
  }
};

/// rho = |psi|^2 and the phase unwrapped by region growing from the largest sample: each
/// step takes the unvisited neighbour of highest |psi| and adds the wrapped phase
/// difference to its visited neighbour's value. In 1D this is the cumulative unwrap
/// outward from the seed. Neighbours do not wrap around the periodic box, since the
/// unwrapped phase of a moving packet is not periodic. Nodes keep their raw argument.
template <typename Scalar>
MadelungFields<Scalar> madelung_extract(const WaveField<Scalar>& w) {
  typedef typename MadelungFields<Scalar>::MaskArray MaskArray;
  const Eigen::Index nx = w.psi.rows(), ny = w.psi.cols();
  const auto amplitude = w.psi.abs().eval();
  const Scalar peak = amplitude.maxCoeff();
  if (!(peak > 0)) throw AllMaskedError("field is zero everywhere; no phase to extract");

  MadelungFields<Scalar> out{w.grid, w.mass, w.time, w.psi.abs2(), w.psi.arg(), amplitude < kNodeFraction<Scalar> * peak};
  MaskArray visited = out.mask;

  Eigen::Index si = 0, sj = 0;
  amplitude.maxCoeff(&si, &sj);
  typedef std::tuple<Scalar, Eigen::Index, Eigen::Index, Eigen::Index, Eigen::Index> Edge;  // quality, to, from
  std::priority_queue<Edge> frontier;
  auto push_neighbours = [&](Eigen::Index i, Eigen::Index j) {
    const std::array<std::array<Eigen::Index, 2>, 4> steps{{{1, 0}, {-1, 0}, {0, 1}, {0, -1}}};
    for (const auto& [di, dj] : steps) {
      const Eigen::Index a = i + di, b = j + dj;
      if (a < 0 || a >= nx || b < 0 || b >= ny || visited(a, b)) continue;
      frontier.emplace(amplitude(a, b), a, b, i, j);
    }
  };
  visited(si, sj) = true;
  push_neighbours(si, sj);
  while (!frontier.empty()) {
    const auto [quality, i, j, fi, fj] = frontier.top();
    frontier.pop();
    if (visited(i, j)) continue;
    visited(i, j) = true;
    Scalar delta = out.phase(i, j) - out.phase(fi, fj);
    delta -= 2 * std::numbers::pi_v<Scalar> * std::round(delta / (2 * std::numbers::pi_v<Scalar>));
    out.phase(i, j) = out.phase(fi, fj) + delta;
    push_neighbours(i, j);
  }
  return out;
}

/// Discrete continuity-equation residual
///   || (rho[k+1] - rho[k-1]) / (2 dt) + div j[k] || / || rho[k] ||,  j = Im(psi* grad psi) / m
/// with psi rebuilt from (rho, S) and spectral gradients, over points unmasked in all three
/// snapshots. Returns the largest value over the interior snapshots.
template <typename Scalar>
Scalar continuity_residual(std::span<const MadelungFields<Scalar>> series, Scalar dt) {
  typedef typename MadelungFields<Scalar>::RealArray RealArray;
  typedef typename WaveField<Scalar>::ComplexArray ComplexArray;
  if (series.size() < 3) throw LabError("continuity residual needs at least three snapshots");
  Spectral<Scalar> spectral(series.front().grid);
  Scalar worst = 0;
  for (std::size_t k = 1; k + 1 < series.size(); ++k) {
    const auto& cur = series[k];
    const auto valid = (!series[k - 1].mask && !cur.mask && !series[k + 1].mask).eval();
    if (!valid.any()) throw AllMaskedError("no unmasked points shared by consecutive snapshots");
    const ComplexArray psi = cur.reconstruct();
    RealArray divergence = RealArray::Zero(psi.rows(), psi.cols());
    for (int a = 0; a < cur.grid.dim(); ++a) {
      const RealArray current = (psi.conjugate() * spectral.derivative(psi, a)).imag() / cur.mass;
      divergence += spectral.derivative(current, a);
    }
    const RealArray r = (series[k + 1].rho - series[k - 1].rho) / (2 * dt) + divergence;
    const Scalar num = valid.select(r.square(), Scalar(0)).sum();
    const Scalar den = valid.select(cur.rho.square(), Scalar(0)).sum();
    worst = std::max(worst, std::sqrt(num / den));
  }
  return worst;
}

template <typename Scalar>
Scalar continuity_residual(const std::vector<MadelungFields<Scalar>>& series, Scalar dt) {
  return continuity_residual(std::span<const MadelungFields<Scalar>>(series), dt);
}

}  // namespace phaselab::lab
