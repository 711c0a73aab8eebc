#include <doctest.h>

#include "phaselab/sym/calculus.hpp"
#include "phaselab/sym/canonical.hpp"
#include "phaselab/sym/errors.hpp"
#include "phaselab/sym/parse.hpp"
#include "support/random_expr.hpp"

using namespace phaselab::sym;
using phaselab::testing::RandomExpr;

namespace {

CanonicalForm nf(std::string_view text) { return normalize(parse(text)); }

const Coordinate kT{Axis::t, Frame::unprimed};
const Coordinate kX{Axis::x, Frame::unprimed};

}  // namespace

TEST_SUITE("parse") {
  TEST_CASE("grammar examples map onto the expected trees") {
    CHECK(nf("dt(S) + 1/(2*m)*lap(R)") ==
          normalize(field(Field::S, Frame::unprimed, {1, 0, 0, 0}) +
                    Expr(make_rational(1, 2)) * pow(param(Param::m), -1) *
                        (field(Field::R, Frame::unprimed, {0, 2, 0, 0}) +
                         field(Field::R, Frame::unprimed, {0, 0, 2, 0}) +
                         field(Field::R, Frame::unprimed, {0, 0, 0, 2}))));

    const Expr e = parse("R^2*dt(S)");
    REQUIRE(e.is<Product>());
    const auto& factors = e.as<Product>().factors;
    REQUIRE(factors.size() == 2);
    REQUIRE(factors[0].is<Power>());
    CHECK(factors[0].as<Power>().exponent == 2);
    CHECK(factors[1].is<FieldAtom>());
    CHECK(factors[1].as<FieldAtom>() == FieldAtom{Field::S, Frame::unprimed, {1, 0, 0, 0}});
  }

  TEST_CASE("truncated input reports the end offset") {
    try {
      parse("dt(");
      FAIL("expected a parse error");
    } catch (const ParseError& err) {
      CHECK(err.position() == 3);
    }
  }

  TEST_CASE("unknown identifiers are rejected with their position") {
    try {
      parse("R + foo");
      FAIL("expected an unknown-identifier error");
    } catch (const UnknownIdentifierError& err) {
      CHECK(err.position() == 4);
      CHECK(err.name() == "foo");
    }
    CHECK_THROWS_AS(parse("m'"), UnknownIdentifierError);
  }

  TEST_CASE("division only by parameter monomials") {
    CHECK(nf("R/(2*m*e)") == nf("1/2*R*m^-1*e^-1"));
    CHECK_THROWS_AS(parse("R/S"), ParseError);
    CHECK_THROWS_AS(parse("R/(m+e)"), ParseError);
    CHECK_THROWS_AS(parse("R/0"), ParseError);
  }

  TEST_CASE("primed atoms, derivative chains and macros") {
    CHECK(nf("dt'dx'(S')") == nf("dx'(dt'(S'))"));
    CHECK(nf("dtdx(S)") == nf("dx(dt(S))"));
    CHECK(nf("lap'(R')") == nf("dx'dx'(R') + dy'dy'(R') + dz'dz'(R')"));
    CHECK(nf("gradsq(S)") == nf("dx(S)^2 + dy(S)^2 + dz(S)^2"));
    CHECK(nf("divg(R^2, S)") == nf("dx(R^2*dx(S)) + dy(R^2*dy(S)) + dz(R^2*dz(S))"));
    CHECK(nf("gdot(R, S)") == nf("dx(R)*dx(S) + dy(R)*dy(S) + dz(R)*dz(S)"));
    CHECK_THROWS_AS(parse("dt'(S)"), ParseError);
  }

  TEST_CASE("printing is parseable and stable") {
    const CanonicalForm cf = nf("1/(2*m)*lap(R) - 2*R*dt(S) - R*V + 3/2*i*m*vx^2/e");
    const std::string printed = print_canonical(cf);
    CHECK(normalize(parse(printed)) == cf);
    CHECK(print_canonical(normalize(parse(printed))) == printed);
    CHECK(print_canonical(CanonicalForm{}) == "0");
    CHECK(print_canonical(nf("-dt'(S')/e")) == "-dt'(S')/e");
  }
}

TEST_SUITE("normalize") {
  TEST_CASE("examples") {
    CHECK(nf("(R+S)^2") == nf("R^2 + 2*R*S + S^2"));
    CHECK(nf("i*i*R") == nf("-R"));
    CHECK(nf("R - R").is_zero());
    CHECK(nf("m*m^-1") == CanonicalForm(Rational(1)));
  }

  TEST_CASE("idempotence on random trees up to depth 6") {
    RandomExpr gen(11);
    for (int k = 0; k < 200; ++k) {
      const Expr e = gen.with_i(6);
      const CanonicalForm once = normalize(e);
      CHECK(normalize(to_expr(once)) == once);
    }
  }

  TEST_CASE("ring laws") {
    RandomExpr gen(12);
    for (int k = 0; k < 100; ++k) {
      const Expr a = gen.with_i(3), b = gen.with_i(3), c = gen.with_i(3);
      CHECK(normalize(a + b) == normalize(b + a));
      CHECK(normalize(a * b) == normalize(b * a));
      CHECK(normalize((a + b) + c) == normalize(a + (b + c)));
      CHECK(normalize((a * b) * c) == normalize(a * (b * c)));
      CHECK(normalize(a * (b + c)) == normalize(a * b + a * c));
    }
  }

  TEST_CASE("parser round trip") {
    RandomExpr gen(13);
    for (int k = 0; k < 100; ++k) {
      const CanonicalForm cf = normalize(gen.with_i(4));
      CHECK(normalize(parse(print_canonical(cf))) == cf);
    }
    RandomExpr primed(14, Frame::primed);
    for (int k = 0; k < 50; ++k) {
      const CanonicalForm cf = normalize(primed.real(4));
      CHECK(normalize(parse(print_canonical(cf))) == cf);
    }
  }

  TEST_CASE("parameter rescaling and evaluation") {
    const CanonicalForm cf = nf("dt(S)/e + m*vx/e^2");
    CHECK(rescale_parameter(cf, Param::e, Rational(3)) == nf("1/3*dt(S)/e + 1/9*m*vx/e^2"));
    CHECK(evaluate_parameter(cf, Param::vx, Rational(0)) == nf("dt(S)/e"));
    CHECK_THROWS_AS(evaluate_parameter(cf, Param::e, Rational(0)), DomainError);
  }
}

TEST_SUITE("diff") {
  TEST_CASE("examples") {
    CHECK(normalize(diff(parse("R^2"), kX)) == nf("2*R*dx(R)"));
    CHECK(normalize(diff(parse("m*dt(S)"), kX)) == nf("m*dtdx(S)"));
    // Hand expansion of the x-component of div(R^2 grad S).
    CHECK(normalize(diff(parse("R^2*dx(S)"), kX)) == nf("2*R*dx(R)*dx(S) + R^2*dxdx(S)"));
    CHECK(normalize(diff(parse("x*t + x^2"), kX)) == nf("t + 2*x"));
  }

  TEST_CASE("frame mismatch") {
    CHECK_THROWS_AS(diff(parse("S'"), kX), FrameError);
    CHECK_THROWS_AS(diff(nf("R*S'"), kX), FrameError);
    CHECK(normalize(diff(parse("m*e"), Coordinate{Axis::x, Frame::primed})).is_zero());
  }

  TEST_CASE("tree and canonical differentiation agree") {
    RandomExpr gen(21);
    for (int k = 0; k < 100; ++k) {
      const Expr e = gen.with_i(4);
      const Coordinate c = gen.coordinate();
      CHECK(normalize(diff(e, c)) == diff(normalize(e), c));
    }
  }

  TEST_CASE("Leibniz rule") {
    RandomExpr gen(22);
    for (int k = 0; k < 100; ++k) {
      const Expr a = gen.with_i(3), b = gen.with_i(3);
      const Coordinate c = gen.coordinate();
      CHECK(normalize(diff(a * b, c) - diff(a, c) * b - a * diff(b, c)).is_zero());
    }
  }

  TEST_CASE("mixed partials commute") {
    RandomExpr gen(23);
    for (int k = 0; k < 100; ++k) {
      const Expr e = gen.real(4);
      const Coordinate c1 = gen.coordinate(), c2 = gen.coordinate();
      CHECK(normalize(diff(diff(e, c1), c2)) == normalize(diff(diff(e, c2), c1)));
    }
  }
}

TEST_SUITE("substitute") {
  TEST_CASE("examples") {
    const FieldAtom phi{Field::Phi, Frame::unprimed, {}};
    const FieldAtom s{Field::S, Frame::unprimed, {}};
    CHECK(normalize(substitute(parse("Phi"), phi, parse("1/e*dt(S)"))) == nf("dt(S)/e"));
    CHECK(normalize(substitute(parse("R^2"), s, parse("m*x + R"))) == nf("R^2"));
  }

  TEST_CASE("underived targets chain through derivatives") {
    const FieldAtom s{Field::S, Frame::unprimed, {}};
    CHECK(normalize(substitute(parse("dx(S) + dtdt(S)"), s, parse("S + m*x*t^2"))) ==
          nf("dx(S) + m*t^2 + dtdt(S) + 2*m*x"));
  }

  TEST_CASE("derived targets match exactly one atom") {
    const FieldAtom dxs{Field::S, Frame::unprimed, {0, 1, 0, 0}};
    CHECK(normalize(substitute(parse("S + dx(S) + dxdx(S)"), dxs, parse("m"))) == nf("S + m + dxdx(S)"));
  }

  TEST_CASE("rules apply simultaneously") {
    const std::vector<Rule> swap{{FieldAtom{Field::R, Frame::unprimed, {}}, parse("S")},
                                {FieldAtom{Field::S, Frame::unprimed, {}}, parse("R")}};
    CHECK(normalize(substitute(parse("R + 2*S"), swap)) == nf("S + 2*R"));
  }

  TEST_CASE("substituting a field by itself is the identity") {
    RandomExpr gen(31);
    const FieldAtom s{Field::S, Frame::unprimed, {}};
    for (int k = 0; k < 50; ++k) {
      const Expr e = gen.real(4);
      CHECK(normalize(substitute(e, s, field(Field::S))) == normalize(e));
    }
  }
}

TEST_SUITE("split_by_i") {
  TEST_CASE("examples") {
    auto [re1, im1] = split_by_i(parse("R + i*S"));
    CHECK(normalize(re1) == nf("R"));
    CHECK(normalize(im1) == nf("S"));
    auto [re2, im2] = split_by_i(parse("i*i*R + i*dt(S)"));
    CHECK(normalize(re2) == nf("-R"));
    CHECK(normalize(im2) == nf("dt(S)"));
    CHECK_THROWS_AS(split_by_i(parse("i*Psi")), ComplexAtomError);
  }

  TEST_CASE("parts recombine") {
    RandomExpr gen(41);
    for (int k = 0; k < 100; ++k) {
      const Expr e = gen.with_i(4);
      auto [re, im] = split_by_i(e);
      CHECK(normalize(re + imag() * im - e).is_zero());
      bool real_part_has_i = false;
      const CanonicalForm real_part = normalize(re);
      for (const auto& [m, c] : real_part.terms()) real_part_has_i |= m.imaginary;
      CHECK_FALSE(real_part_has_i);
    }
  }
}

TEST_SUITE("equals_modulo_cofactor") {
  TEST_CASE("examples") {
    // Imaginary part of the polar Schroedinger residual times 2R is the continuity equation.
    const Expr im = parse("dt(R) + 1/(2*m)*(2*gdot(R, S) + R*lap(S))");
    const Expr continuity = parse("dt(R^2) + 1/m*divg(R^2, S)");
    CHECK(equals_modulo_cofactor(im, continuity, parse("2*R")));
    CHECK(equals_modulo_cofactor(parse("R"), parse("3*R"), parse("3")));
    CHECK_FALSE(equals_modulo_cofactor(parse("R"), parse("S"), parse("1")));
  }

  TEST_CASE("cofactor validation") {
    CHECK_THROWS_AS(equals_modulo_cofactor(parse("R"), parse("R"), parse("0")), ZeroCofactorError);
    CHECK_THROWS_AS(equals_modulo_cofactor(parse("R"), parse("R"), parse("R + 1")), DomainError);
    CHECK_THROWS_AS(equals_modulo_cofactor(parse("R"), parse("R"), parse("i")), DomainError);
  }
}

TEST_SUITE("relabel") {
  TEST_CASE("moves every atom into the target frame") {
    CHECK(normalize(relabel(parse("dt(S)*x + R"), Frame::primed)) == nf("dt'(S')*x' + R'"));
    CHECK(relabel(nf("dt'(S')*x' + R'"), Frame::unprimed) == nf("dt(S)*x + R"));
  }
}
