#pragma once

#include <memory>
#include <variant>
#include <vector>

#include "phaselab/sym/atoms.hpp"
#include "phaselab/sym/rational.hpp"

namespace phaselab::sym {

struct Node;

/// Immutable symbolic expression tree. Copies share structure; nothing is mutated after
/// construction, so values may be passed freely between threads.
///
/// Leaves are exact rationals, the imaginary unit, parameters, coordinates and field
/// atoms. Interior nodes are n-ary sums, n-ary products and integer powers. Negative
/// powers are only allowed on parameters (division by a nonzero parameter monomial).
class Expr {
 public:
  Expr();  // the constant 0
  Expr(Rational value);
  Expr(long value);
  Expr(Param p);
  Expr(Coordinate c);
  Expr(FieldAtom a);

  static Expr imaginary_unit();
  static Expr sum(std::vector<Expr> terms);
  static Expr product(std::vector<Expr> factors);
  /// Throws DomainError for a negative exponent on anything but a parameter or a
  /// nonzero rational.
  static Expr power(Expr base, int exponent);

  const Node& node() const { return *node_; }

  template <typename T>
  bool is() const;
  template <typename T>
  const T& as() const;

 private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  std::shared_ptr<const Node> node_;
};

struct ImaginaryUnit {
  auto operator<=>(const ImaginaryUnit&) const = default;
};
struct Sum {
  std::vector<Expr> terms;
};
struct Product {
  std::vector<Expr> factors;
};
struct Power {
  Expr base;
  int exponent;
};

struct Node {
  std::variant<Rational, ImaginaryUnit, Param, Coordinate, FieldAtom, Sum, Product, Power> value;
};

template <typename T>
bool Expr::is() const {
  return std::holds_alternative<T>(node_->value);
}

template <typename T>
const T& Expr::as() const {
  return std::get<T>(node_->value);
}

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);
Expr pow(const Expr& base, int exponent);

// Atom shorthands.
Expr field(Field f, Frame frame = Frame::unprimed);
Expr field(Field f, Frame frame, MultiIndex deriv);
Expr coordinate(Axis a, Frame frame = Frame::unprimed);
Expr param(Param p);
Expr imag();

}  // namespace phaselab::sym
