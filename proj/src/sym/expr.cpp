#include "phaselab/sym/expr.hpp"

#include "phaselab/sym/errors.hpp"

namespace phaselab::sym {

namespace {

std::shared_ptr<const Node> make(auto value) {
  return std::make_shared<const Node>(Node{std::move(value)});
}

}  // namespace

Expr::Expr() : node_(make(Rational(0))) {}
Expr::Expr(Rational value) : node_(make(std::move(value))) {}
Expr::Expr(long value) : node_(make(Rational(value))) {}
Expr::Expr(Param p) : node_(make(p)) {}
Expr::Expr(Coordinate c) : node_(make(c)) {}
Expr::Expr(FieldAtom a) : node_(make(a)) {}

Expr Expr::imaginary_unit() { return Expr(make(ImaginaryUnit{})); }

Expr Expr::sum(std::vector<Expr> terms) {
  if (terms.empty()) return Expr();
  if (terms.size() == 1) return terms.front();
  return Expr(make(Sum{std::move(terms)}));
}

Expr Expr::product(std::vector<Expr> factors) {
  if (factors.empty()) return Expr(1L);
  if (factors.size() == 1) return factors.front();
  return Expr(make(Product{std::move(factors)}));
}

Expr Expr::power(Expr base, int exponent) {
  if (exponent == 1) return base;
  if (exponent < 0) {
    if (base.is<Rational>()) {
      if (base.as<Rational>() == 0) throw DomainError("division by zero");
    } else if (!base.is<Param>()) {
      throw DomainError("negative powers are only allowed on parameters");
    }
  }
  return Expr(make(Power{std::move(base), exponent}));
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::sum({a, b}); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::sum({a, -b}); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::product({a, b}); }
Expr operator-(const Expr& a) { return Expr::product({Expr(-1L), a}); }
Expr pow(const Expr& base, int exponent) { return Expr::power(base, exponent); }

Expr field(Field f, Frame frame) { return Expr(FieldAtom{f, frame, {}}); }
Expr field(Field f, Frame frame, MultiIndex deriv) { return Expr(FieldAtom{f, frame, deriv}); }
Expr coordinate(Axis a, Frame frame) { return Expr(Coordinate{a, frame}); }
Expr param(Param p) { return Expr(p); }
Expr imag() { return Expr::imaginary_unit(); }

}  // namespace phaselab::sym
