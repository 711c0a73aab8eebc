#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include "phaselab/catalog.hpp"
#include "phaselab/sym/canonical.hpp"
#include "phaselab/transforms.hpp"

namespace phaselab {

enum class TransformKind { boost, gauge };

/// One compared quantity: an equation residual or a potential component.
struct Channel {
  std::string name;
  sym::CanonicalForm transformed;
  sym::CanonicalForm expected;
  /// transformed - expected
  sym::CanonicalForm residual;
};

/// Outcome of a covariance or invariance check. Covariant iff every channel residual is zero.
struct Report {
  std::string system;
  TransformKind kind = TransformKind::boost;
  std::vector<std::string> params;
  std::vector<Channel> channels;

  bool covariant() const;
  /// Nonzero channels only.
  std::vector<const Channel*> violations() const;
  /// Every monomial of every nonzero residual, printed, in canonical order per channel.
  std::vector<std::string> witness_terms() const;
  /// "0" when covariant; the lone canonical residual for a single violated channel;
  /// otherwise "name: residual" entries joined by "; ".
  std::string residual_string() const;
};

/// Boosts each (unprimed) residual and compares it with the same equation rebuilt on
/// primed atoms. Complex equations must be polar-split first.
Report check_boost_covariance(std::span<const EquationSpec> system, const BoostSpec& b,
                              std::string name = "system", PotentialLaw law = PotentialLaw::scalar);

/// A transformed quantity next to what the pure-gauge identification demands in the
/// primed frame.
struct ChannelPair {
  sym::Expr transformed;
  sym::Expr expected;
  sym::CanonicalForm difference() const;
};

struct PureGaugeObstruction {
  /// (transformed pure-gauge Phi, (1/e) dt'(S'))
  ChannelPair phi;
  /// (transformed pure-gauge A_i, (1/e) d_i'(S'))
  std::array<ChannelPair, 3> a;
};

/// Pure-gauge potentials pushed through the potential boost law, against the pure-gauge
/// potentials of the primed phase.
PureGaugeObstruction pure_gauge_obstruction(const BoostSpec& b);

/// The pure-gauge system {pg_real, pg_imag} under a boost, together with the potential
/// channels phi, ax, ay, az from `pure_gauge_obstruction`.
Report check_pure_gauge_boost(const BoostSpec& b);

/// Residual apply_gauge(x) - x per target.
Report check_gauge_invariance(const EquationSpec& target, const GaugeSpec& g);
Report check_gauge_invariance(const LagrangianSpec& target, const GaugeSpec& g);
Report check_gauge_invariance(std::span<const EquationSpec> targets, const GaugeSpec& g, std::string name);

}  // namespace phaselab
