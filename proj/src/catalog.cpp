#include "phaselab/catalog.hpp"

#include <array>
#include <map>

#include "phaselab/sym/calculus.hpp"
#include "phaselab/sym/canonical.hpp"
#include "phaselab/sym/parse.hpp"
#include "phaselab/transforms.hpp"

namespace phaselab {

using namespace sym;

namespace {

struct Transcription {
  std::string_view key;
  bool lagrangian;
  std::string_view text;
  std::string_view description;
};

// Residuals are written as (left-hand side) - (right-hand side) of the printed equations.
constexpr std::string_view kPolarDensity =
    "R^2*dt(S) + 1/(2*m)*(gradsq(R) + R^2*gradsq(S)) + R^2*V";

constexpr std::array<Transcription, 10> kCatalog{{
    {"se", false, "i*dt(Psi) + 1/(2*m)*lap(Psi) - V*Psi",
     "Schroedinger equation i dPsi/dt = -(1/2m) lap Psi + V Psi"},
    {"madelung_continuity", false, "dt(R^2) + 1/m*divg(R^2, S)",
     "continuity equation d(R^2)/dt + (1/m) div(R^2 grad S) = 0"},
    {"madelung_hj", false, "1/m*lap(R) - 2*R*dt(S) - 2*R*V - 1/m*R*gradsq(S)",
     "quantum Hamilton-Jacobi equation for the amplitude R"},
    {"lagrangian_se_complex", true,
     "i/2*(PsiC*dt(Psi) - dt(PsiC)*Psi) - 1/(2*m)*gdot(PsiC, Psi) + PsiC*V*Psi",
     "Schroedinger Lagrangian in Psi, Psi*"},
    {"lagrangian_se_polar", true, kPolarDensity, "Schroedinger Lagrangian in R, S"},
    {"lagrangian_staruszkiewicz", true,
     "R^2*dt(S) + 1/(2*m)*(gradsq(R) + R^2*gradsq(S)) + R^2*V + 2*gamma*lap(S)^2",
     "polar Lagrangian plus 2 gamma (lap S)^2"},
    {"minimal_coupling_se", false,
     "i*dt(Psi) + 1/(2*m)*(lap(Psi) - i*e*(dx(Ax*Psi) + dy(Ay*Psi) + dz(Az*Psi))"
     " - i*e*(Ax*dx(Psi) + Ay*dy(Psi) + Az*dz(Psi)) - e^2*(Ax^2 + Ay^2 + Az^2)*Psi)"
     " - e*Phi*Psi - V*Psi",
     "charged Schroedinger equation, (grad - ieA)^2 minimal coupling plus e Phi"},
    {"pg_real", false, "1/(2*m)*lap(R) - 2*R*dt(S) - R*V",
     "real part of the minimally coupled equation under pure-gauge potentials"},
    {"pg_imag", false, "dt(R^2)",
     "imaginary part of the minimally coupled equation under pure-gauge potentials"},
    {"cubic_nls", false, "i*dt(Psi) + 1/(2*m)*lap(Psi) - V*Psi - g*PsiC*Psi*Psi",
     "cubic nonlinear Schroedinger equation with coupling g"},
}};

const std::array<std::string_view, kCatalog.size()>& keys_array() {
  static const auto keys = [] {
    std::array<std::string_view, kCatalog.size()> out{};
    for (std::size_t i = 0; i < kCatalog.size(); ++i) out[i] = kCatalog[i].key;
    return out;
  }();
  return keys;
}

const Transcription& lookup(std::string_view key) {
  for (const auto& t : kCatalog)
    if (t.key == key) return t;
  throw UnknownKeyError("unknown catalog key '" + std::string(key) + "'");
}

std::optional<PolarSplit> polar_links(std::string_view name) {
  if (name == "se")
    return PolarSplit{{}, {}, CofactorLink{"madelung_hj", Expr(2L)}, CofactorLink{"madelung_continuity", parse("2*R")}};
  if (name == "minimal_coupling_se:pure_gauge")
    return PolarSplit{{}, {}, CofactorLink{"pg_real", Expr(1L)}, CofactorLink{"pg_imag", parse("2*R")}};
  return std::nullopt;
}

CanonicalForm atom_cf(const FieldAtom& a) {
  Monomial m;
  m.fields[a] = 1;
  return CanonicalForm(m, Rational(1));
}

/// Coefficient P with D^a (R e^{i sign S}) = P e^{i sign S}.
class PolarFactors {
 public:
  const CanonicalForm& get(const FieldAtom& atom) {
    if (auto it = cache_.find(atom); it != cache_.end()) return it->second;
    const bool conj = atom.field == Field::PsiC;
    const Frame frame = atom.frame;
    Monomial im;
    im.imaginary = true;
    const CanonicalForm i_sign(im, Rational(conj ? -1 : 1));
    CanonicalForm p = atom_cf(FieldAtom{Field::R, frame, {}});
    for (Axis a : kAxes)
      for (int k = 0; k < atom.deriv[index(a)]; ++k) {
        const Coordinate c{a, frame};
        const CanonicalForm ds = atom_cf(FieldAtom{Field::S, frame, {}}.differentiated(a));
        p = diff(p, c) + i_sign * p * ds;
      }
    return cache_.emplace(atom, std::move(p)).first->second;
  }

 private:
  std::map<FieldAtom, CanonicalForm> cache_;
};

}  // namespace

std::span<const std::string_view> catalog_keys() { return keys_array(); }

std::string_view catalog_description(std::string_view key) { return lookup(key).description; }

EquationSpec make_equation(std::string name, Expr residual) {
  const CanonicalForm cf = normalize(residual);
  const auto frames = frames_of(cf);
  if (frames.size() > 1) throw FrameError("equation '" + name + "' mixes primed and unprimed atoms");
  EquationSpec eq;
  eq.name = std::move(name);
  eq.residual = std::move(residual);
  eq.frame = frames.empty() ? Frame::unprimed : *frames.begin();
  eq.fields = fields_of(cf);
  return eq;
}

CatalogEntry build(std::string_view key) {
  const Transcription& t = lookup(key);
  if (t.lagrangian) return build_lagrangian(key);
  return build_equation(key);
}

EquationSpec build_equation(std::string_view key, Frame frame) {
  const Transcription& t = lookup(key);
  if (t.lagrangian) throw UnknownKeyError("'" + std::string(key) + "' is a Lagrangian, not an equation");
  Expr residual = parse(t.text);
  if (frame == Frame::primed) residual = relabel(residual, Frame::primed);
  return make_equation(std::string(key), residual);
}

LagrangianSpec build_lagrangian(std::string_view key) {
  const Transcription& t = lookup(key);
  if (!t.lagrangian) throw UnknownKeyError("'" + std::string(key) + "' is an equation, not a Lagrangian");
  LagrangianSpec l;
  l.name = std::string(key);
  l.density = parse(t.text);
  if (key == "lagrangian_se_complex")
    l.varied = {Field::Psi, Field::PsiC};
  else
    l.varied = {Field::R, Field::S};
  return l;
}

LagrangianSpec staruszkiewicz_term() {
  return {"staruszkiewicz_term", parse("2*gamma*lap(S)^2"), {Field::S}};
}

EquationSpec pure_gauge(const EquationSpec& eq) {
  return make_equation(eq.name + ":pure_gauge", pure_gauge_substitute(eq.residual));
}

Expr polar_substitute(const Expr& e, int phase) {
  PolarFactors factors;
  CanonicalForm out;
  const CanonicalForm cf = normalize(e);
  for (const auto& [m, c] : cf.terms()) {
    const int net = m.degree_in(Field::Psi) - m.degree_in(Field::PsiC);
    if (net != phase)
      throw NonlinearityError("polar substitution: monomial " + print_monomial(m, c) + " carries phase " +
                              std::to_string(net) + ", expected " + std::to_string(phase));
    Monomial rest = m;
    std::erase_if(rest.fields, [](const auto& kv) { return is_complex(kv.first.field); });
    CanonicalForm term(rest, c);
    for (const auto& [atom, k] : m.fields)
      if (is_complex(atom.field)) term = term * pow(factors.get(atom), k);
    out += term;
  }
  return to_expr(out);
}

PolarSplit polar_split(const EquationSpec& eq) {
  auto [re, im] = split_by_i(polar_substitute(eq.residual, 1));
  PolarSplit out = polar_links(eq.name).value_or(PolarSplit{});
  out.real = make_equation(eq.name + ":real", re);
  out.imag = make_equation(eq.name + ":imag", im);
  return out;
}

EquationSpec euler_lagrange(const LagrangianSpec& lagrangian, Field f) {
  const CanonicalForm density = normalize(lagrangian.density);
  std::set<FieldAtom> atoms;
  for (const auto& [m, c] : density.terms())
    for (const auto& [atom, k] : m.fields)
      if (atom.field == f) atoms.insert(atom);

  CanonicalForm residual;
  for (const FieldAtom& atom : atoms) {
    const int n = order(atom.deriv);
    if (n > 2)
      throw UnsupportedDependencyError("Lagrangian '" + lagrangian.name + "' depends on a derivative of order " +
                                       std::to_string(n) + " of " + std::string(field_name(f)));
    CanonicalForm term = diff(partial(density, atom), atom.deriv, atom.frame);
    if (n % 2 == 1) term *= Rational(-1);
    residual += term;
  }
  return make_equation("euler_lagrange(" + lagrangian.name + "," + std::string(field_name(f)) + ")",
                       to_expr(residual));
}

std::optional<CofactorLink> euler_lagrange_link(std::string_view lagrangian, Field f) {
  if (lagrangian == "lagrangian_se_polar" || lagrangian == "lagrangian_staruszkiewicz") {
    if (f == Field::R) return CofactorLink{"madelung_hj", Expr(-1L)};
    if (f == Field::S && lagrangian == "lagrangian_se_polar") return CofactorLink{"madelung_continuity", Expr(-1L)};
  }
  return std::nullopt;
}

}  // namespace phaselab
