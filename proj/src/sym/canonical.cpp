#include "phaselab/sym/canonical.hpp"

#include <sstream>

#include "phaselab/sym/errors.hpp"

namespace phaselab::sym {

namespace {

template <typename K>
void bump(std::map<K, int>& powers, const K& key, int by) {
  int& slot = powers[key];
  slot += by;
  if (slot == 0) powers.erase(key);
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

std::string atom_string(const FieldAtom& a) {
  const char* prime = a.frame == Frame::primed ? "'" : "";
  std::string name = std::string(field_name(a.field)) + prime;
  if (a.underived()) return name;
  std::string out;
  for (Axis ax : kAxes)
    for (int k = 0; k < a.deriv[index(ax)]; ++k) out += "d" + std::string(axis_name(ax)) + prime;
  return out + "(" + name + ")";
}

std::string coord_string(const Coordinate& c) {
  return std::string(axis_name(c.axis)) + (c.frame == Frame::primed ? "'" : "");
}

std::string with_power(std::string base, int k) {
  return k == 1 ? base : base + "^" + std::to_string(k);
}

}  // namespace

int Monomial::degree_in(Field f) const {
  int d = 0;
  for (const auto& [atom, k] : fields)
    if (atom.field == f) d += k;
  return d;
}

std::pair<Monomial, int> multiply(const Monomial& a, const Monomial& b) {
  Monomial out = a;
  for (const auto& [atom, k] : b.fields) bump(out.fields, atom, k);
  for (const auto& [c, k] : b.coords) bump(out.coords, c, k);
  for (const auto& [p, k] : b.params) bump(out.params, p, k);
  int sign = 1;
  if (a.imaginary && b.imaginary) {
    out.imaginary = false;
    sign = -1;
  } else {
    out.imaginary = a.imaginary || b.imaginary;
  }
  return {out, sign};
}

CanonicalForm::CanonicalForm(const Rational& c) { add_term(Monomial{}, c); }

CanonicalForm::CanonicalForm(const Monomial& m, const Rational& c) { add_term(m, c); }

void CanonicalForm::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

CanonicalForm& CanonicalForm::operator+=(const CanonicalForm& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

CanonicalForm& CanonicalForm::operator-=(const CanonicalForm& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

CanonicalForm& CanonicalForm::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coeff] : terms_) coeff *= c;
  return *this;
}

CanonicalForm operator*(const CanonicalForm& a, const CanonicalForm& b) {
  CanonicalForm out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      auto [m, sign] = multiply(ma, mb);
      out.add_term(m, sign * ca * cb);
    }
  return out;
}

std::vector<CanonicalForm> CanonicalForm::split_terms() const {
  std::vector<CanonicalForm> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.emplace_back(m, c);
  return out;
}

CanonicalForm pow(const CanonicalForm& base, int exponent) {
  if (exponent < 0) {
    // Only single monomials in parameters (and a nonzero rational) can be inverted.
    if (base.size() != 1) throw DomainError("cannot invert a sum");
    const auto& [m, c] = *base.terms().begin();
    if (!m.fields.empty() || !m.coords.empty() || m.imaginary)
      throw DomainError("cannot invert a monomial containing fields, coordinates or i");
    Monomial inv;
    for (const auto& [p, k] : m.params) inv.params[p] = k * exponent;
    Rational coeff(1);
    Rational inv_c = 1 / c;
    for (int i = 0; i < -exponent; ++i) coeff *= inv_c;
    return CanonicalForm(inv, coeff);
  }
  CanonicalForm out(Rational(1));
  CanonicalForm b = base;
  // Square-and-multiply; exponents here are small but this keeps the cost logarithmic.
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) out = out * b;
    if (e > 1) b = b * b;
  }
  return out;
}

CanonicalForm normalize(const Expr& e) {
  return std::visit(
      Overloaded{
          [](const Rational& q) { return CanonicalForm(q); },
          [](const ImaginaryUnit&) {
            Monomial m;
            m.imaginary = true;
            return CanonicalForm(m, Rational(1));
          },
          [](const Param& p) {
            Monomial m;
            m.params[p] = 1;
            return CanonicalForm(m, Rational(1));
          },
          [](const Coordinate& c) {
            Monomial m;
            m.coords[c] = 1;
            return CanonicalForm(m, Rational(1));
          },
          [](const FieldAtom& a) {
            Monomial m;
            m.fields[a] = 1;
            return CanonicalForm(m, Rational(1));
          },
          [](const Sum& s) {
            CanonicalForm out;
            for (const auto& t : s.terms) out += normalize(t);
            return out;
          },
          [](const Product& p) {
            CanonicalForm out(Rational(1));
            for (const auto& f : p.factors) {
              out = out * normalize(f);
              if (out.is_zero()) break;
            }
            return out;
          },
          [](const Power& p) { return pow(normalize(p.base), p.exponent); },
      },
      e.node().value);
}

Expr to_expr(const CanonicalForm& cf) {
  std::vector<Expr> terms;
  terms.reserve(cf.size());
  for (const auto& [m, c] : cf.terms()) {
    std::vector<Expr> factors;
    if (c != 1) factors.emplace_back(c);
    if (m.imaginary) factors.push_back(imag());
    for (const auto& [p, k] : m.params) factors.push_back(Expr::power(Expr(p), k));
    for (const auto& [a, k] : m.fields) factors.push_back(Expr::power(Expr(a), k));
    for (const auto& [x, k] : m.coords) factors.push_back(Expr::power(Expr(x), k));
    terms.push_back(Expr::product(std::move(factors)));
  }
  return Expr::sum(std::move(terms));
}

CanonicalForm partial(const CanonicalForm& cf, const FieldAtom& atom) {
  CanonicalForm out;
  for (const auto& [m, c] : cf.terms()) {
    auto it = m.fields.find(atom);
    if (it == m.fields.end()) continue;
    const int k = it->second;
    Monomial reduced = m;
    bump(reduced.fields, atom, -1);
    out.add_term(reduced, c * k);
  }
  return out;
}

CanonicalForm rescale_parameter(const CanonicalForm& cf, Param p, const Rational& factor) {
  if (factor == 0) throw DomainError("rescaling a parameter by zero");
  CanonicalForm out;
  for (const auto& [m, c] : cf.terms()) {
    auto it = m.params.find(p);
    if (it == m.params.end()) {
      out.add_term(m, c);
      continue;
    }
    Rational scale(1);
    const Rational step = it->second > 0 ? factor : Rational(1 / factor);
    for (int i = 0; i < std::abs(it->second); ++i) scale *= step;
    out.add_term(m, c * scale);
  }
  return out;
}

CanonicalForm evaluate_parameter(const CanonicalForm& cf, Param p, const Rational& value) {
  CanonicalForm out;
  for (const auto& [m, c] : cf.terms()) {
    auto it = m.params.find(p);
    if (it == m.params.end()) {
      out.add_term(m, c);
      continue;
    }
    if (value == 0 && it->second < 0)
      throw DomainError("parameter '" + std::string(param_name(p)) + "' set to zero in a denominator");
    Rational scale(1);
    const Rational step = it->second > 0 ? value : Rational(1 / value);
    for (int i = 0; i < std::abs(it->second); ++i) scale *= step;
    Monomial reduced = m;
    reduced.params.erase(p);
    out.add_term(reduced, c * scale);
  }
  return out;
}

std::string print_monomial(const Monomial& m, const Rational& coeff) {
  std::vector<std::string> numer;
  std::vector<std::string> denom;
  if (m.imaginary) numer.emplace_back("i");
  for (const auto& [p, k] : m.params)
    if (k > 0) numer.push_back(with_power(std::string(param_name(p)), k));
  for (const auto& [a, k] : m.fields) numer.push_back(with_power(atom_string(a), k));
  for (const auto& [c, k] : m.coords) numer.push_back(with_power(coord_string(c), k));
  for (const auto& [p, k] : m.params)
    if (k < 0) denom.push_back(with_power(std::string(param_name(p)), -k));

  std::ostringstream os;
  if (coeff < 0) os << "-";
  const Rational mag = abs(coeff);
  bool first = true;
  if (mag != 1 || numer.empty()) {
    os << mag.get_num().get_str();
    if (mag.get_den() != 1) os << "/" << mag.get_den().get_str();
    first = false;
  }
  for (const auto& f : numer) {
    if (!first) os << "*";
    os << f;
    first = false;
  }
  for (const auto& d : denom) os << "/" << d;
  return os.str();
}

std::string print_canonical(const CanonicalForm& cf) {
  if (cf.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : cf.terms()) {
    if (first) {
      out += print_monomial(m, c);
      first = false;
    } else if (c < 0) {
      out += " - " + print_monomial(m, -c);
    } else {
      out += " + " + print_monomial(m, c);
    }
  }
  return out;
}

std::string print_canonical(const Expr& e) { return print_canonical(normalize(e)); }

}  // namespace phaselab::sym
