#include "phaselab/transforms.hpp"

#include <map>

#include "phaselab/sym/calculus.hpp"
#include "phaselab/sym/errors.hpp"

namespace phaselab {

using namespace sym;

namespace {

CanonicalForm atom_cf(Field f, Frame frame, MultiIndex mi = {}) {
  Monomial m;
  m.fields[FieldAtom{f, frame, mi}] = 1;
  return CanonicalForm(m, Rational(1));
}

CanonicalForm coord_cf(Axis a, Frame frame) {
  Monomial m;
  m.coords[Coordinate{a, frame}] = 1;
  return CanonicalForm(m, Rational(1));
}

class Booster {
 public:
  Booster(const BoostSpec& b, PotentialLaw law) : law_(law) {
    for (std::size_t i = 0; i < 3; ++i) {
      v_[i] = normalize(b.velocity[i]);
      if (!frames_of(v_[i]).empty()) throw DomainError("boost velocity must not contain fields or coordinates");
    }
    v2_ = v_[0] * v_[0] + v_[1] * v_[1] + v_[2] * v_[2];
  }

  CanonicalForm run(const CanonicalForm& cf) {
    CanonicalForm out;
    for (const auto& [m, c] : cf.terms()) {
      Monomial rest;
      rest.params = m.params;
      rest.imaginary = m.imaginary;
      CanonicalForm term(rest, c);
      for (const auto& [atom, k] : m.fields) term = term * pow(boosted(atom), k);
      for (const auto& [x, k] : m.coords) term = term * pow(boosted(x), k);
      out += term;
    }
    return out;
  }

 private:
  // d/dt at fixed x, written in primed variables.
  CanonicalForm time_derivative(const CanonicalForm& f) const {
    CanonicalForm out = diff(f, Coordinate{Axis::t, Frame::primed});
    for (std::size_t i = 0; i < 3; ++i) out -= v_[i] * diff(f, Coordinate{kSpatialAxes[i], Frame::primed});
    return out;
  }

  CanonicalForm base(Field f) const {
    const CanonicalForm m = normalize(param(Param::m));
    switch (f) {
      case Field::S: {
        CanonicalForm s = atom_cf(Field::S, Frame::primed);
        for (std::size_t i = 0; i < 3; ++i) s += m * v_[i] * coord_cf(kSpatialAxes[i], Frame::primed);
        s += make_rational(1, 2) * m * v2_ * coord_cf(Axis::t, Frame::primed);
        return s;
      }
      case Field::Phi:
        if (law_ == PotentialLaw::galilean) {
          CanonicalForm phi = atom_cf(Field::Phi, Frame::primed);
          for (std::size_t i = 0; i < 3; ++i)
            phi += v_[i] * atom_cf(potential_component(kSpatialAxes[i]), Frame::primed);
          return phi;
        }
        return atom_cf(f, Frame::primed);
      case Field::Psi:
      case Field::PsiC:
        throw ComplexAtomError("apply_boost: complex field present; boost the polar form instead");
      default: return atom_cf(f, Frame::primed);
    }
  }

  const CanonicalForm& boosted(const FieldAtom& atom) {
    if (auto it = cache_.find(atom); it != cache_.end()) return it->second;
    CanonicalForm out = base(atom.field);
    for (Axis a : kSpatialAxes)
      for (int k = 0; k < atom.deriv[index(a)]; ++k) out = diff(out, Coordinate{a, Frame::primed});
    for (int k = 0; k < atom.deriv[index(Axis::t)]; ++k) out = time_derivative(out);
    return cache_.emplace(atom, std::move(out)).first->second;
  }

  CanonicalForm boosted(const Coordinate& c) const {
    if (c.axis == Axis::t) return coord_cf(Axis::t, Frame::primed);
    const std::size_t i = index(c.axis) - 1;
    return coord_cf(c.axis, Frame::primed) + v_[i] * coord_cf(Axis::t, Frame::primed);
  }

  PotentialLaw law_;
  std::array<CanonicalForm, 3> v_;
  CanonicalForm v2_;
  std::map<FieldAtom, CanonicalForm> cache_;
};

}  // namespace

BoostSpec BoostSpec::negated() const {
  return {{-velocity[0], -velocity[1], -velocity[2]}};
}

Expr BoostSpec::speed_squared() const {
  return velocity[0] * velocity[0] + velocity[1] * velocity[1] + velocity[2] * velocity[2];
}

std::array<std::string, 3> BoostSpec::describe() const {
  return {print_canonical(velocity[0]), print_canonical(velocity[1]), print_canonical(velocity[2])};
}

Expr apply_boost(const Expr& e, const BoostSpec& b, PotentialLaw law) {
  const CanonicalForm cf = normalize(e);
  if (frames_of(cf).contains(Frame::primed))
    throw FrameError("apply_boost: expression already contains primed atoms");
  for (Field f : fields_of(cf))
    if (is_complex(f)) throw ComplexAtomError("apply_boost: complex field present; boost the polar form instead");
  return to_expr(Booster(b, law).run(cf));
}

Potentials Potentials::atoms(Frame frame) {
  return {field(Field::Phi, frame),
          {field(Field::Ax, frame), field(Field::Ay, frame), field(Field::Az, frame)}};
}

Potentials transform_potentials(const Potentials& p, const BoostSpec& b) {
  Expr phi = p.phi;
  for (std::size_t i = 0; i < 3; ++i) phi = phi - b.velocity[i] * p.a[i];
  Potentials out;
  out.phi = apply_boost(phi, b);
  for (std::size_t i = 0; i < 3; ++i) out.a[i] = apply_boost(p.a[i], b);
  return out;
}

std::string GaugeSpec::describe() const { return constant ? "chi=const" : "chi"; }

Expr apply_gauge(const Expr& e, const GaugeSpec& g) {
  std::vector<Rule> rules;
  for (Frame frame : {Frame::unprimed, Frame::primed}) {
    const Expr chi = field(Field::chi, frame);
    rules.push_back({FieldAtom{Field::S, frame, {}}, field(Field::S, frame) + param(Param::e) * chi});
    rules.push_back({FieldAtom{Field::Phi, frame, {}},
                     field(Field::Phi, frame) - diff(chi, Coordinate{Axis::t, frame})});
    for (Axis a : kSpatialAxes) {
      const Field ai = potential_component(a);
      rules.push_back({FieldAtom{ai, frame, {}}, field(ai, frame) + diff(chi, Coordinate{a, frame})});
    }
  }
  const CanonicalForm cf = normalize(substitute(e, rules));
  for (Field f : fields_of(cf))
    if (is_complex(f)) throw ComplexAtomError("apply_gauge: complex field present; use the polar form");
  if (!g.constant) return to_expr(cf);

  CanonicalForm kept;
  for (const auto& [m, c] : cf.terms()) {
    bool drops = false;
    for (const auto& [atom, k] : m.fields) drops |= atom.field == Field::chi && !atom.underived();
    if (!drops) kept.add_term(m, c);
  }
  return to_expr(kept);
}

Expr pure_gauge_substitute(const Expr& e) {
  std::vector<Rule> rules;
  const Expr inv_e = pow(param(Param::e), -1);
  for (Frame frame : {Frame::unprimed, Frame::primed}) {
    const Expr s = field(Field::S, frame);
    rules.push_back({FieldAtom{Field::Phi, frame, {}}, inv_e * diff(s, Coordinate{Axis::t, frame})});
    for (Axis a : kSpatialAxes)
      rules.push_back({FieldAtom{potential_component(a), frame, {}}, inv_e * diff(s, Coordinate{a, frame})});
  }
  return substitute(e, rules);
}

}  // namespace phaselab
