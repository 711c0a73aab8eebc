#pragma once

#include <functional>
#include <optional>
#include <set>
#include <span>
#include <utility>

#include "phaselab/sym/canonical.hpp"
#include "phaselab/sym/expr.hpp"

namespace phaselab::sym {

/// Frames of every coordinate and field atom in `e`.
std::set<Frame> frames_of(const Expr& e);
std::set<Frame> frames_of(const CanonicalForm& cf);
std::set<Field> fields_of(const CanonicalForm& cf);

/// Partial derivative. Parameters, rationals and i are constants; field atoms get their
/// multi-index incremented, so mixed partials commute by construction.
/// Throws FrameError if `e` contains atoms of the other frame than `c`.
Expr diff(const Expr& e, Coordinate c);
CanonicalForm diff(const CanonicalForm& cf, Coordinate c);

/// Applies `diff` once per entry of the multi-index, in frame `frame`.
CanonicalForm diff(const CanonicalForm& cf, const MultiIndex& mi, Frame frame);

/// One rewrite rule for `substitute`. An underived target matches every derivative of the
/// field (chain-through); a derived target matches only that exact atom.
struct Rule {
  FieldAtom target;
  Expr replacement;
};

/// Simultaneous substitution. The result is not normalized.
Expr substitute(const Expr& e, std::span<const Rule> rules);
Expr substitute(const Expr& e, const FieldAtom& target, const Expr& replacement);

/// Rewrites each field atom for which `fn` returns a value; other leaves are kept.
Expr map_atoms(const Expr& e, const std::function<std::optional<Expr>(const FieldAtom&)>& fn);

/// Moves every coordinate and field atom into `frame`.
Expr relabel(const Expr& e, Frame frame);
CanonicalForm relabel(const CanonicalForm& cf, Frame frame);

/// Splits into (real, imaginary) parts with e = re + i*im.
/// Throws ComplexAtomError if a Psi or PsiC atom is present.
std::pair<Expr, Expr> split_by_i(const Expr& e);

/// True iff normalize(cofactor*a - b) is zero. The cofactor must be a nonzero monomial
/// without i: ZeroCofactorError for zero, DomainError for anything else.
bool equals_modulo_cofactor(const Expr& a, const Expr& b, const Expr& cofactor);

}  // namespace phaselab::sym
