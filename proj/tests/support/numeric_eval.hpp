#pragma once

// Finite-difference evaluation of canonical forms on concrete fields. Test-only: this is
// an oracle independent of the symbolic differentiation it is used to check.

#include <array>
#include <complex>
#include <functional>
#include <map>
#include <stdexcept>

#include "phaselab/sym/canonical.hpp"

namespace phaselab::testing {

using Point = std::array<double, 4>;  // (t, x, y, z)
using ScalarField = std::function<double(const Point&)>;

struct NumericModel {
  std::map<std::pair<sym::Field, sym::Frame>, ScalarField> fields;
  std::map<sym::Param, double> params;
  double step = 1e-3;

  void set(sym::Field f, sym::Frame frame, ScalarField fn) { fields[{f, frame}] = std::move(fn); }
};

/// Central-difference partial derivative of `fn` with multi-index `mi` at `p`.
inline double finite_difference(const ScalarField& fn, sym::MultiIndex mi, Point p, double h) {
  for (std::size_t a = 0; a < 4; ++a) {
    if (mi[a] == 0) continue;
    --mi[a];
    Point plus = p, minus = p;
    plus[a] += h;
    minus[a] -= h;
    return (finite_difference(fn, mi, plus, h) - finite_difference(fn, mi, minus, h)) / (2 * h);
  }
  return fn(p);
}

/// Evaluates `cf` with unprimed atoms at `unprimed` and primed atoms at `primed`.
inline std::complex<double> evaluate(const sym::CanonicalForm& cf, const NumericModel& model,
                                     const Point& unprimed, const Point& primed) {
  std::complex<double> total = 0;
  for (const auto& [m, c] : cf.terms()) {
    std::complex<double> term = c.get_d();
    if (m.imaginary) term *= std::complex<double>(0, 1);
    for (const auto& [p, k] : m.params) term *= std::pow(model.params.at(p), k);
    for (const auto& [x, k] : m.coords) {
      const Point& at = x.frame == sym::Frame::primed ? primed : unprimed;
      term *= std::pow(at[sym::index(x.axis)], k);
    }
    for (const auto& [atom, k] : m.fields) {
      auto it = model.fields.find({atom.field, atom.frame});
      if (it == model.fields.end()) throw std::out_of_range("no numeric model for a field atom");
      const Point& at = atom.frame == sym::Frame::primed ? primed : unprimed;
      term *= std::pow(finite_difference(it->second, atom.deriv, at, model.step), k);
    }
    total += term;
  }
  return total;
}

}  // namespace phaselab::testing
