#pragma once

#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "phaselab/sym/errors.hpp"
#include "phaselab/sym/expr.hpp"

namespace phaselab {

/// Bumped whenever a transcription changes, so golden reports fail loudly.
inline constexpr std::string_view kCatalogVersion = "phaselab-catalog/1";

/// A named residual with the contract residual = 0.
struct EquationSpec {
  std::string name;
  sym::Expr residual;
  sym::Frame frame = sym::Frame::unprimed;
  std::set<sym::Field> fields;
};

struct LagrangianSpec {
  std::string name;
  sym::Expr density;
  std::vector<sym::Field> varied;
};

using CatalogEntry = std::variant<EquationSpec, LagrangianSpec>;

class UnknownKeyError : public sym::SymbolicError {
 public:
  using sym::SymbolicError::SymbolicError;
};

/// The Psi structure of a residual cannot be reduced by the polar substitution.
class NonlinearityError : public sym::SymbolicError {
 public:
  using sym::SymbolicError::SymbolicError;
};

/// A Lagrangian depends on a varied field through derivatives of order three or more.
class UnsupportedDependencyError : public sym::SymbolicError {
 public:
  using sym::SymbolicError::SymbolicError;
};

/// Stable catalog keys:
///   se, madelung_continuity, madelung_hj, lagrangian_se_complex, lagrangian_se_polar,
///   lagrangian_staruszkiewicz, minimal_coupling_se, pg_real, pg_imag, cubic_nls
std::span<const std::string_view> catalog_keys();

/// Human-readable one-liner for `list`.
std::string_view catalog_description(std::string_view key);

CatalogEntry build(std::string_view key);
EquationSpec build_equation(std::string_view key, sym::Frame frame = sym::Frame::unprimed);
LagrangianSpec build_lagrangian(std::string_view key);

/// Validates frame homogeneity and fills in frame and field set.
EquationSpec make_equation(std::string name, sym::Expr residual);

/// The modification term 2 gamma (lap S)^2 on its own.
LagrangianSpec staruszkiewicz_term();

/// Applies the pure-gauge identification to an equation; the name gets a ":pure_gauge" suffix.
EquationSpec pure_gauge(const EquationSpec& eq);

/// Monomial factor relating a derived equation to a catalog equation:
/// cofactor * derived == catalog residual.
struct CofactorLink {
  std::string target;
  sym::Expr cofactor;
};

struct PolarSplit {
  EquationSpec real;
  EquationSpec imag;
  std::optional<CofactorLink> real_link;
  std::optional<CofactorLink> imag_link;
};

/// Substitutes Psi = R e^{iS}, PsiC = R e^{-iS} and divides out e^{i phase S}. Every monomial
/// must carry net phase `phase` (count of Psi minus count of PsiC); otherwise
/// NonlinearityError.
sym::Expr polar_substitute(const sym::Expr& e, int phase);

/// Splits a complex equation linear in Psi (cubic |Psi|^2 Psi allowed) into real and
/// imaginary residuals. Cofactor links come from the catalog's bookkeeping for known names.
PolarSplit polar_split(const EquationSpec& eq);

/// Euler-Lagrange residual sum over multi-indices a of (-1)^|a| D^a (dL / d(D^a f)).
/// Supports dependence through derivatives up to second order.
EquationSpec euler_lagrange(const LagrangianSpec& lagrangian, sym::Field f);

/// Catalog link for an Euler-Lagrange equation, e.g. (lagrangian_se_polar, S) ->
/// madelung_continuity with cofactor -1.
std::optional<CofactorLink> euler_lagrange_link(std::string_view lagrangian, sym::Field f);

}  // namespace phaselab
