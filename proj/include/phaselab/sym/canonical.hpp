#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "phaselab/sym/atoms.hpp"
#include "phaselab/sym/expr.hpp"
#include "phaselab/sym/rational.hpp"

namespace phaselab::sym {

/// Power product of atoms with an optional factor of i. Zero exponents are never stored.
///
/// Ordering: field atoms first (field name, frame, multi-index), then coordinates, then
/// parameters, then the i flag. Any total order works for canonical equality; this one
/// keeps printed forms readable.
struct Monomial {
  std::map<FieldAtom, int> fields;
  std::map<Coordinate, int> coords;
  std::map<Param, int> params;  // may be negative
  bool imaginary = false;

  auto operator<=>(const Monomial&) const = default;

  bool is_one() const { return fields.empty() && coords.empty() && params.empty() && !imaginary; }
  int degree_in(Field f) const;
};

/// Fully expanded sum of monomials over Q with i*i rewritten to -1.
/// Two expressions are equal as polynomials iff their canonical forms compare equal.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(const Rational& c);
  CanonicalForm(const Monomial& m, const Rational& c);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds c*m, dropping the term if the coefficient cancels.
  void add_term(const Monomial& m, const Rational& c);

  CanonicalForm& operator+=(const CanonicalForm& o);
  CanonicalForm& operator-=(const CanonicalForm& o);
  CanonicalForm& operator*=(const Rational& c);

  friend CanonicalForm operator+(CanonicalForm a, const CanonicalForm& b) { return a += b; }
  friend CanonicalForm operator-(CanonicalForm a, const CanonicalForm& b) { return a -= b; }
  friend CanonicalForm operator-(CanonicalForm a) { return a *= Rational(-1); }
  friend CanonicalForm operator*(const CanonicalForm& a, const CanonicalForm& b);
  friend CanonicalForm operator*(CanonicalForm a, const Rational& c) { return a *= c; }
  friend CanonicalForm operator*(const Rational& c, CanonicalForm a) { return a *= c; }

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

  /// Individual terms as one-monomial forms, in canonical order.
  std::vector<CanonicalForm> split_terms() const;

 private:
  std::map<Monomial, Rational> terms_;
};

/// Monomial product with the i*i = -1 rewrite; the returned sign is +1 or -1.
std::pair<Monomial, int> multiply(const Monomial& a, const Monomial& b);

/// Expands `e` into canonical form. Total, and idempotent through `to_expr`.
CanonicalForm normalize(const Expr& e);

/// Rebuilds an expression tree whose canonical form is `cf`.
Expr to_expr(const CanonicalForm& cf);

CanonicalForm pow(const CanonicalForm& base, int exponent);

/// Formal partial derivative with respect to one atom, treating all other atoms as
/// independent variables.
CanonicalForm partial(const CanonicalForm& cf, const FieldAtom& atom);

/// Replaces every power p^k by (factor*p)^k. Used to rescale a parameter, e.g. e -> 3e.
CanonicalForm rescale_parameter(const CanonicalForm& cf, Param p, const Rational& factor);

/// Replaces a parameter by a rational value. Throws DomainError when the value is zero and
/// the parameter occurs with a negative power.
CanonicalForm evaluate_parameter(const CanonicalForm& cf, Param p, const Rational& value);

/// Print form following the expression grammar; deterministic for a given canonical form.
std::string print_canonical(const CanonicalForm& cf);
std::string print_canonical(const Expr& e);
std::string print_monomial(const Monomial& m, const Rational& coeff);

}  // namespace phaselab::sym
