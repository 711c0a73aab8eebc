#pragma once

// Random expression trees for property tests.

#include <random>

#include "phaselab/sym/expr.hpp"

namespace phaselab::testing {

class RandomExpr {
 public:
  explicit RandomExpr(std::uint32_t seed, sym::Frame frame = sym::Frame::unprimed)
      : rng_(seed), frame_(frame) {}

  /// Real-valued tree (no Psi) of at most `depth` levels.
  sym::Expr real(int depth) { return make(depth, false); }
  /// Same, but i may appear as a leaf.
  sym::Expr with_i(int depth) { return make(depth, true); }

  sym::Coordinate coordinate() {
    return {sym::kAxes[pick(4)], frame_};
  }

 private:
  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }

  sym::Expr leaf(bool allow_i) {
    using namespace phaselab::sym;
    static constexpr std::array<Field, 5> fields{Field::R, Field::S, Field::V, Field::Phi, Field::chi};
    static constexpr std::array<Param, 4> params{Param::m, Param::e, Param::vx, Param::gamma};
    switch (pick(allow_i ? 5 : 4)) {
      case 0: return Expr(make_rational(pick(7) - 3, 1 + pick(3)));
      case 1: return param(params[pick(4)]);
      case 2: {
        MultiIndex mi{};
        mi[pick(4)] = static_cast<std::uint8_t>(pick(2));
        return field(fields[pick(5)], frame_, mi);
      }
      case 3: return field(fields[pick(5)], frame_);
      default: return imag();
    }
  }

  sym::Expr make(int depth, bool allow_i) {
    using namespace phaselab::sym;
    if (depth <= 0 || pick(4) == 0) return leaf(allow_i);
    switch (pick(4)) {
      case 0:
      case 1: {
        std::vector<Expr> terms;
        for (int k = 0, n = 2 + pick(2); k < n; ++k) terms.push_back(make(depth - 1, allow_i));
        return Expr::sum(std::move(terms));
      }
      case 2: {
        std::vector<Expr> factors;
        for (int k = 0, n = 2 + pick(2); k < n; ++k) factors.push_back(make(depth - 1, allow_i));
        return Expr::product(std::move(factors));
      }
      default:
        if (pick(3) == 0) return Expr::power(param(Param::m), -1 - pick(2));
        // Squaring deep subtrees makes the expansion explode; keep powers near the leaves.
        if (depth > 2) return Expr::power(leaf(allow_i), pick(3));
        return Expr::power(make(depth - 1, allow_i), pick(3));
    }
  }

  std::mt19937 rng_;
  sym::Frame frame_;
};

}  // namespace phaselab::testing
