#include "phaselab/invariance.hpp"

#include "phaselab/sym/calculus.hpp"

namespace phaselab {

using namespace sym;

namespace {

Channel make_channel(std::string name, CanonicalForm transformed, CanonicalForm expected) {
  Channel c{std::move(name), std::move(transformed), std::move(expected), {}};
  c.residual = c.transformed - c.expected;
  return c;
}

std::vector<std::string> boost_params(const BoostSpec& b) {
  const auto v = b.describe();
  return {v.begin(), v.end()};
}

Expr pure_gauge_primed(Axis a) {
  MultiIndex mi{};
  mi[index(a)] = 1;
  return pow(param(Param::e), -1) * field(Field::S, Frame::primed, mi);
}

}  // namespace

bool Report::covariant() const {
  for (const auto& c : channels)
    if (!c.residual.is_zero()) return false;
  return true;
}

std::vector<const Channel*> Report::violations() const {
  std::vector<const Channel*> out;
  for (const auto& c : channels)
    if (!c.residual.is_zero()) out.push_back(&c);
  return out;
}

std::vector<std::string> Report::witness_terms() const {
  std::vector<std::string> out;
  for (const Channel* c : violations())
    for (const auto& [m, coeff] : c->residual.terms()) out.push_back(print_monomial(m, coeff));
  return out;
}

std::string Report::residual_string() const {
  const auto bad = violations();
  if (bad.empty()) return "0";
  if (bad.size() == 1 && channels.size() == 1) return print_canonical(bad.front()->residual);
  std::string out;
  for (const Channel* c : bad) {
    if (!out.empty()) out += "; ";
    out += c->name + ": " + print_canonical(c->residual);
  }
  return out;
}

Report check_boost_covariance(std::span<const EquationSpec> system, const BoostSpec& b, std::string name,
                              PotentialLaw law) {
  Report r{std::move(name), TransformKind::boost, boost_params(b), {}};
  for (const EquationSpec& eq : system) {
    if (eq.frame != Frame::unprimed)
      throw FrameError("boost check expects unprimed equations, got '" + eq.name + "'");
    r.channels.push_back(make_channel(eq.name, normalize(apply_boost(eq.residual, b, law)),
                                      normalize(relabel(eq.residual, Frame::primed))));
  }
  return r;
}

CanonicalForm ChannelPair::difference() const { return normalize(transformed) - normalize(expected); }

PureGaugeObstruction pure_gauge_obstruction(const BoostSpec& b) {
  const Potentials lab = Potentials::atoms();
  Potentials pg;
  pg.phi = pure_gauge_substitute(lab.phi);
  for (std::size_t i = 0; i < 3; ++i) pg.a[i] = pure_gauge_substitute(lab.a[i]);
  const Potentials boosted = transform_potentials(pg, b);

  PureGaugeObstruction out;
  out.phi = {boosted.phi, pure_gauge_primed(Axis::t)};
  for (std::size_t i = 0; i < 3; ++i) out.a[i] = {boosted.a[i], pure_gauge_primed(kSpatialAxes[i])};
  return out;
}

Report check_pure_gauge_boost(const BoostSpec& b) {
  const std::array<EquationSpec, 2> system{build_equation("pg_real"), build_equation("pg_imag")};
  Report r = check_boost_covariance(system, b, "pure-gauge");
  const PureGaugeObstruction ob = pure_gauge_obstruction(b);
  r.channels.push_back(make_channel("phi", normalize(ob.phi.transformed), normalize(ob.phi.expected)));
  static constexpr std::array<const char*, 3> kNames{"ax", "ay", "az"};
  for (std::size_t i = 0; i < 3; ++i)
    r.channels.push_back(make_channel(kNames[i], normalize(ob.a[i].transformed), normalize(ob.a[i].expected)));
  return r;
}

Report check_gauge_invariance(std::span<const EquationSpec> targets, const GaugeSpec& g, std::string name) {
  Report r{std::move(name), TransformKind::gauge, {g.describe()}, {}};
  for (const EquationSpec& eq : targets)
    r.channels.push_back(make_channel(eq.name, normalize(apply_gauge(eq.residual, g)), normalize(eq.residual)));
  return r;
}

Report check_gauge_invariance(const EquationSpec& target, const GaugeSpec& g) {
  return check_gauge_invariance(std::span<const EquationSpec>(&target, 1), g, target.name);
}

Report check_gauge_invariance(const LagrangianSpec& target, const GaugeSpec& g) {
  Report r{target.name, TransformKind::gauge, {g.describe()}, {}};
  r.channels.push_back(
      make_channel(target.name, normalize(apply_gauge(target.density, g)), normalize(target.density)));
  return r;
}

}  // namespace phaselab
