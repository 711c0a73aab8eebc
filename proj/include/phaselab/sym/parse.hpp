#pragma once

#include <string_view>

#include "phaselab/sym/expr.hpp"

namespace phaselab::sym {

/// Parses the expression grammar:
///
///   expr   := term (("+"|"-") term)*
///   term   := ["-"] factor (("*" factor) | ("/" ratfac))*
///   factor := rational | param | coord | field | deriv | macro | "i" | "(" expr ")"
///             | factor "^" integer
///   deriv  := ("dt"|"dx"|"dy"|"dz")+ "(" expr ")"
///   macro  := "lap(f)" | "gradsq(f)" | "divg(f,g)" | "gdot(f,g)"
///
/// `ratfac` is a factor that normalizes to a nonzero monomial in rationals and parameters.
/// A trailing apostrophe marks the primed frame on atoms, derivative tokens and macros:
/// `dt'(S')`, `lap'(R')`. Derivative tokens may be concatenated (`dtdx(S)`).
///
/// Macros expand componentwise in three dimensions:
///   lap(f)    = dxdx(f) + dydy(f) + dzdz(f)
///   gradsq(f) = sum_i (d_i f)^2
///   divg(f,g) = sum_i d_i(f * d_i g)
///   gdot(f,g) = sum_i (d_i f)(d_i g)
///
/// Throws ParseError (with byte offset) or UnknownIdentifierError.
Expr parse(std::string_view text);

}  // namespace phaselab::sym
