#pragma once

#include <array>
#include <string>

#include "phaselab/sym/canonical.hpp"
#include "phaselab/sym/expr.hpp"

namespace phaselab {

/// Galilean boost t = t', x = x' + v t with a symbolic velocity.
///
/// The velocity components are expressions free of field atoms; by default they are the
/// parameters (vx, vy, vz), so every boosted residual is an exact polynomial in them.
struct BoostSpec {
  std::array<sym::Expr, 3> velocity{sym::param(sym::Param::vx), sym::param(sym::Param::vy),
                                    sym::param(sym::Param::vz)};

  static BoostSpec symbolic() { return {}; }
  static BoostSpec zero() { return {{sym::Expr(), sym::Expr(), sym::Expr()}}; }
  BoostSpec negated() const;

  /// v.v
  sym::Expr speed_squared() const;
  /// Printed velocity components, e.g. {"vx", "vy", "vz"}.
  std::array<std::string, 3> describe() const;
};

/// How potential atoms are carried into the primed frame by `apply_boost`.
enum class PotentialLaw {
  /// Phi -> Phi', A -> A' (relabel only). Potential transformation is then done
  /// explicitly by `transform_potentials`.
  scalar,
  /// Phi -> Phi' + v.A', A -> A', the inverse of Phi' = Phi - v.A.
  galilean,
};

/// Rewrites an unprimed expression in primed atoms:
///   d/dt -> d/dt' - v.grad',  grad -> grad'
///   S -> S' + m v.x' + (m/2) v^2 t'
///   R, V, chi (and by default Phi, A) -> their primed counterparts.
/// Throws sym::FrameError if `e` already contains primed atoms and sym::ComplexAtomError
/// for Psi/PsiC (polar-split first).
sym::Expr apply_boost(const sym::Expr& e, const BoostSpec& b, PotentialLaw law = PotentialLaw::scalar);

/// Scalar and vector potential as a pair of expressions.
struct Potentials {
  sym::Expr phi;
  std::array<sym::Expr, 3> a;

  /// The bare atoms (Phi, Ax, Ay, Az) in the given frame.
  static Potentials atoms(sym::Frame frame = sym::Frame::unprimed);
};

/// Phi' = Phi - v.A, A' = A, with the right-hand sides re-expressed in primed atoms.
Potentials transform_potentials(const Potentials& p, const BoostSpec& b);

/// U(1) gauge map with gauge function chi.
struct GaugeSpec {
  /// Constant chi: every derivative of chi vanishes (a global phase change).
  bool constant = false;

  static GaugeSpec local() { return {}; }
  static GaugeSpec global() { return {true}; }
  std::string describe() const;
};

/// Simultaneous A -> A + grad chi, Phi -> Phi - d_t chi, S -> S + e chi, chaining through
/// derivatives. Works in either frame. Throws sym::ComplexAtomError on Psi/PsiC.
sym::Expr apply_gauge(const sym::Expr& e, const GaugeSpec& g);

/// Pure-gauge identification: Phi -> (1/e) d_t S, A_i -> (1/e) d_i S, chaining through
/// derivatives. Works in either frame.
sym::Expr pure_gauge_substitute(const sym::Expr& e);

}  // namespace phaselab
