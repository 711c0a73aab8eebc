#include "phaselab/sym/calculus.hpp"

#include "phaselab/sym/errors.hpp"

namespace phaselab::sym {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

void collect_frames(const Expr& e, std::set<Frame>& out) {
  std::visit(Overloaded{
                 [&](const Coordinate& c) { out.insert(c.frame); },
                 [&](const FieldAtom& a) { out.insert(a.frame); },
                 [&](const Sum& s) {
                   for (const auto& t : s.terms) collect_frames(t, out);
                 },
                 [&](const Product& p) {
                   for (const auto& f : p.factors) collect_frames(f, out);
                 },
                 [&](const Power& p) { collect_frames(p.base, out); },
                 [](const auto&) {},
             },
             e.node().value);
}

void require_frame(const std::set<Frame>& present, Frame frame) {
  for (Frame f : present)
    if (f != frame)
      throw FrameError(frame == Frame::primed
                           ? "unprimed atom differentiated by a primed coordinate"
                           : "primed atom differentiated by an unprimed coordinate");
}

Expr diff_unchecked(const Expr& e, Coordinate c) {
  return std::visit(
      Overloaded{
          [&](const Coordinate& x) { return x == c ? Expr(1L) : Expr(); },
          [&](const FieldAtom& a) { return Expr(a.differentiated(c.axis)); },
          [&](const Sum& s) {
            std::vector<Expr> terms;
            terms.reserve(s.terms.size());
            for (const auto& t : s.terms) terms.push_back(diff_unchecked(t, c));
            return Expr::sum(std::move(terms));
          },
          [&](const Product& p) {
            std::vector<Expr> terms;
            for (std::size_t k = 0; k < p.factors.size(); ++k) {
              std::vector<Expr> factors = p.factors;
              factors[k] = diff_unchecked(p.factors[k], c);
              terms.push_back(Expr::product(std::move(factors)));
            }
            return Expr::sum(std::move(terms));
          },
          [&](const Power& p) {
            if (p.exponent <= 0) return Expr();  // negative powers only wrap constants
            return Expr::product({Expr(static_cast<long>(p.exponent)),
                                  Expr::power(p.base, p.exponent - 1), diff_unchecked(p.base, c)});
          },
          [](const auto&) { return Expr(); },
      },
      e.node().value);
}

}  // namespace

std::set<Frame> frames_of(const Expr& e) {
  std::set<Frame> out;
  collect_frames(e, out);
  return out;
}

std::set<Frame> frames_of(const CanonicalForm& cf) {
  std::set<Frame> out;
  for (const auto& [m, c] : cf.terms()) {
    for (const auto& [a, k] : m.fields) out.insert(a.frame);
    for (const auto& [x, k] : m.coords) out.insert(x.frame);
  }
  return out;
}

std::set<Field> fields_of(const CanonicalForm& cf) {
  std::set<Field> out;
  for (const auto& [m, c] : cf.terms())
    for (const auto& [a, k] : m.fields) out.insert(a.field);
  return out;
}

Expr diff(const Expr& e, Coordinate c) {
  require_frame(frames_of(e), c.frame);
  return diff_unchecked(e, c);
}

CanonicalForm diff(const CanonicalForm& cf, Coordinate c) {
  require_frame(frames_of(cf), c.frame);
  CanonicalForm out;
  for (const auto& [m, coeff] : cf.terms()) {
    for (const auto& [a, k] : m.fields) {
      Monomial d = m;
      if (k == 1)
        d.fields.erase(a);
      else
        d.fields[a] = k - 1;
      ++d.fields[a.differentiated(c.axis)];
      out.add_term(d, coeff * k);
    }
    if (auto it = m.coords.find(c); it != m.coords.end()) {
      Monomial d = m;
      if (it->second == 1)
        d.coords.erase(c);
      else
        d.coords[c] = it->second - 1;
      out.add_term(d, coeff * it->second);
    }
  }
  return out;
}

CanonicalForm diff(const CanonicalForm& cf, const MultiIndex& mi, Frame frame) {
  CanonicalForm out = cf;
  for (Axis a : kAxes)
    for (int k = 0; k < mi[index(a)]; ++k) out = diff(out, Coordinate{a, frame});
  return out;
}

Expr map_atoms(const Expr& e, const std::function<std::optional<Expr>(const FieldAtom&)>& fn) {
  return std::visit(
      Overloaded{
          [&](const FieldAtom& a) {
            if (auto r = fn(a)) return *r;
            return e;
          },
          [&](const Sum& s) {
            std::vector<Expr> terms;
            terms.reserve(s.terms.size());
            for (const auto& t : s.terms) terms.push_back(map_atoms(t, fn));
            return Expr::sum(std::move(terms));
          },
          [&](const Product& p) {
            std::vector<Expr> factors;
            factors.reserve(p.factors.size());
            for (const auto& f : p.factors) factors.push_back(map_atoms(f, fn));
            return Expr::product(std::move(factors));
          },
          [&](const Power& p) { return Expr::power(map_atoms(p.base, fn), p.exponent); },
          [&](const auto&) { return e; },
      },
      e.node().value);
}

Expr substitute(const Expr& e, std::span<const Rule> rules) {
  return map_atoms(e, [&](const FieldAtom& a) -> std::optional<Expr> {
    for (const auto& rule : rules) {
      if (rule.target.field != a.field || rule.target.frame != a.frame) continue;
      if (rule.target.underived()) {
        if (a.underived()) return rule.replacement;
        return to_expr(diff(normalize(rule.replacement), a.deriv, a.frame));
      }
      if (rule.target == a) return rule.replacement;
    }
    return std::nullopt;
  });
}

Expr substitute(const Expr& e, const FieldAtom& target, const Expr& replacement) {
  const Rule rule{target, replacement};
  return substitute(e, std::span<const Rule>(&rule, 1));
}

Expr relabel(const Expr& e, Frame frame) {
  return std::visit(
      Overloaded{
          [&](const FieldAtom& a) { return Expr(FieldAtom{a.field, frame, a.deriv}); },
          [&](const Coordinate& c) { return Expr(Coordinate{c.axis, frame}); },
          [&](const Sum& s) {
            std::vector<Expr> terms;
            for (const auto& t : s.terms) terms.push_back(relabel(t, frame));
            return Expr::sum(std::move(terms));
          },
          [&](const Product& p) {
            std::vector<Expr> factors;
            for (const auto& f : p.factors) factors.push_back(relabel(f, frame));
            return Expr::product(std::move(factors));
          },
          [&](const Power& p) { return Expr::power(relabel(p.base, frame), p.exponent); },
          [&](const auto&) { return e; },
      },
      e.node().value);
}

CanonicalForm relabel(const CanonicalForm& cf, Frame frame) {
  CanonicalForm out;
  for (const auto& [m, c] : cf.terms()) {
    Monomial r;
    r.params = m.params;
    r.imaginary = m.imaginary;
    for (const auto& [a, k] : m.fields) r.fields[FieldAtom{a.field, frame, a.deriv}] += k;
    for (const auto& [x, k] : m.coords) r.coords[Coordinate{x.axis, frame}] += k;
    out.add_term(r, c);
  }
  return out;
}

std::pair<Expr, Expr> split_by_i(const Expr& e) {
  const CanonicalForm cf = normalize(e);
  CanonicalForm re;
  CanonicalForm im;
  for (const auto& [m, c] : cf.terms()) {
    for (const auto& [a, k] : m.fields)
      if (is_complex(a.field))
        throw ComplexAtomError("split_by_i: complex atom " + std::string(field_name(a.field)) +
                               " present; substitute the polar form first");
    if (m.imaginary) {
      Monomial real_part = m;
      real_part.imaginary = false;
      im.add_term(real_part, c);
    } else {
      re.add_term(m, c);
    }
  }
  return {to_expr(re), to_expr(im)};
}

bool equals_modulo_cofactor(const Expr& a, const Expr& b, const Expr& cofactor) {
  const CanonicalForm cof = normalize(cofactor);
  if (cof.is_zero()) throw ZeroCofactorError("cofactor is zero");
  if (cof.size() != 1 || cof.terms().begin()->first.imaginary || !cof.terms().begin()->first.coords.empty())
    throw DomainError("cofactor must be a single real monomial in parameters and fields");
  return (cof * normalize(a) - normalize(b)).is_zero();
}

}  // namespace phaselab::sym
