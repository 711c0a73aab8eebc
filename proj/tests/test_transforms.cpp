#include <doctest.h>

#include <cmath>

#include "phaselab/sym/calculus.hpp"
#include "phaselab/sym/errors.hpp"
#include "phaselab/sym/parse.hpp"
#include "phaselab/transforms.hpp"
#include "support/numeric_eval.hpp"
#include "support/random_expr.hpp"

using namespace phaselab;
using namespace phaselab::sym;
using phaselab::testing::NumericModel;
using phaselab::testing::Point;

namespace {

CanonicalForm nf(std::string_view text) { return normalize(parse(text)); }
CanonicalForm boost_nf(std::string_view text, const BoostSpec& b = BoostSpec::symbolic()) {
  return normalize(apply_boost(parse(text), b));
}

}  // namespace

TEST_SUITE("apply_boost") {
  // Expected values below come from applying S = S' + m v.x' + (m/2) v^2 t' and
  // d/dt = d/dt' - v.grad' by hand.
  TEST_CASE("time derivative of the phase") {
    CHECK(boost_nf("dt(S)") ==
          nf("dt'(S') - vx*dx'(S') - vy*dy'(S') - vz*dz'(S') - 1/2*m*(vx^2 + vy^2 + vz^2)"));
  }

  TEST_CASE("gradient of the phase") {
    CHECK(boost_nf("dx(S)") == nf("dx'(S') + m*vx"));
    CHECK(boost_nf("dy(S)") == nf("dy'(S') + m*vy"));
    CHECK(boost_nf("dz(S)") == nf("dz'(S') + m*vz"));
  }

  TEST_CASE("scalar fields are relabelled") {
    CHECK(boost_nf("R^2") == nf("R'^2"));
    CHECK(boost_nf("V*chi") == nf("V'*chi'"));
    CHECK(boost_nf("dt(R)") == nf("dt'(R') - vx*dx'(R') - vy*dy'(R') - vz*dz'(R')"));
  }

  TEST_CASE("coordinates") {
    CHECK(boost_nf("x") == nf("x' + vx*t'"));
    CHECK(boost_nf("t") == nf("t'"));
  }

  TEST_CASE("galilean potential law") {
    CHECK(normalize(apply_boost(parse("Phi"), BoostSpec::symbolic(), PotentialLaw::galilean)) ==
          nf("Phi' + vx*Ax' + vy*Ay' + vz*Az'"));
    CHECK(normalize(apply_boost(parse("Ax"), BoostSpec::symbolic(), PotentialLaw::galilean)) == nf("Ax'"));
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS(apply_boost(parse("S'"), BoostSpec::symbolic()), FrameError);
    CHECK_THROWS_AS(apply_boost(parse("Psi"), BoostSpec::symbolic()), ComplexAtomError);
    CHECK_THROWS_AS(apply_boost(parse("PsiC*Psi"), BoostSpec::symbolic()), ComplexAtomError);
  }

  TEST_CASE("zero boost is a relabelling") {
    phaselab::testing::RandomExpr gen(51);
    for (int k = 0; k < 50; ++k) {
      const Expr e = gen.real(4);
      CHECK(normalize(apply_boost(e, BoostSpec::zero())) == relabel(normalize(e), Frame::primed));
    }
  }

  TEST_CASE("boost by v then by -v is the identity") {
    phaselab::testing::RandomExpr gen(52);
    for (int k = 0; k < 50; ++k) {
      const Expr e = gen.real(3);
      const Expr once = relabel(apply_boost(e, BoostSpec::symbolic()), Frame::unprimed);
      const Expr back = apply_boost(once, BoostSpec::symbolic().negated());
      CHECK(normalize(back) == relabel(normalize(e), Frame::primed));
    }
    const Expr s = relabel(apply_boost(parse("S + dtdt(S)*dx(S)"), BoostSpec::symbolic()), Frame::unprimed);
    CHECK(normalize(apply_boost(s, BoostSpec::symbolic().negated())) == nf("S' + dt'dt'(S')*dx'(S')"));
  }

  TEST_CASE("rational velocities") {
    const BoostSpec b{{Expr(make_rational(1, 2)), Expr(), Expr()}};
    CHECK(boost_nf("dt(S)", b) == nf("dt'(S') - 1/2*dx'(S') - 1/8*m"));
  }
}

TEST_SUITE("transform_potentials") {
  TEST_CASE("bare potentials") {
    const Potentials out = transform_potentials(Potentials::atoms(), BoostSpec::symbolic());
    CHECK(normalize(out.phi) == nf("Phi' - vx*Ax' - vy*Ay' - vz*Az'"));
    CHECK(normalize(out.a[0]) == nf("Ax'"));
    CHECK(normalize(out.a[1]) == nf("Ay'"));
    CHECK(normalize(out.a[2]) == nf("Az'"));
  }

  TEST_CASE("vanishing vector potential") {
    const Potentials out = transform_potentials({parse("V*dt(S)"), {Expr(), Expr(), Expr()}}, BoostSpec::symbolic());
    CHECK(normalize(out.phi) == boost_nf("V*dt(S)"));
    for (const auto& a : out.a) CHECK(normalize(a).is_zero());
  }

  TEST_CASE("pure-gauge potentials reproduce the frame obstruction") {
    Potentials pg;
    pg.phi = pure_gauge_substitute(field(Field::Phi));
    for (std::size_t i = 0; i < 3; ++i) pg.a[i] = pure_gauge_substitute(Potentials::atoms().a[i]);
    const Potentials out = transform_potentials(pg, BoostSpec::symbolic());
    CHECK(normalize(out.phi) ==
          nf("1/e*(dt'(S') - 2*(vx*dx'(S') + vy*dy'(S') + vz*dz'(S')) - 3/2*m*(vx^2 + vy^2 + vz^2))"));
    CHECK(normalize(out.a[0]) == nf("1/e*(dx'(S') + m*vx)"));
  }

  TEST_CASE("finite-difference oracle for the pure-gauge scalar potential") {
    // Concrete primed phase; the lab phase follows from S = S' + m v.x' + (m/2) v^2 t'.
    const double m = 1.3, e = 0.7, vx = 0.4, vy = -0.25, vz = 0.6;
    auto s_primed = [](const Point& p) {
      return std::sin(0.3 * p[0] + 0.7 * p[1]) + 0.2 * p[2] * p[3] + 0.5 * p[1] * p[1] - 0.1 * p[0] * p[3];
    };
    auto s_lab = [&](const Point& p) {
      const Point q{p[0], p[1] - vx * p[0], p[2] - vy * p[0], p[3] - vz * p[0]};
      const double v2 = vx * vx + vy * vy + vz * vz;
      return s_primed(q) + m * (vx * q[1] + vy * q[2] + vz * q[3]) + 0.5 * m * v2 * p[0];
    };
    const double h = 1e-4;
    auto d = [&](int axis, const Point& p) {
      Point a = p, b = p;
      a[axis] += h;
      b[axis] -= h;
      return (s_lab(a) - s_lab(b)) / (2 * h);
    };

    Potentials pg;
    pg.phi = pure_gauge_substitute(field(Field::Phi));
    for (std::size_t i = 0; i < 3; ++i) pg.a[i] = pure_gauge_substitute(Potentials::atoms().a[i]);
    const Potentials out = transform_potentials(pg, BoostSpec::symbolic());

    NumericModel model;
    model.set(Field::S, Frame::primed, s_primed);
    model.params = {{Param::m, m}, {Param::e, e}, {Param::vx, vx}, {Param::vy, vy}, {Param::vz, vz}};

    for (const Point primed : {Point{0.2, 0.1, -0.3, 0.5}, Point{1.1, -0.8, 0.4, 0.0}}) {
      const Point lab{primed[0], primed[1] + vx * primed[0], primed[2] + vy * primed[0], primed[3] + vz * primed[0]};
      const double phi_lab = d(0, lab) / e;
      const double phi_primed = phi_lab - (vx * d(1, lab) + vy * d(2, lab) + vz * d(3, lab)) / e;
      const auto symbolic = phaselab::testing::evaluate(normalize(out.phi), model, lab, primed);
      CHECK(symbolic.real() == doctest::Approx(phi_primed).epsilon(1e-6));
      CHECK(std::abs(symbolic.imag()) < 1e-12);
      const auto ax = phaselab::testing::evaluate(normalize(out.a[0]), model, lab, primed);
      CHECK(ax.real() == doctest::Approx(d(1, lab) / e).epsilon(1e-6));
    }
  }
}

TEST_SUITE("apply_gauge") {
  TEST_CASE("examples") {
    const GaugeSpec g = GaugeSpec::local();
    CHECK(normalize(apply_gauge(parse("lap(S)"), g)) == nf("lap(S) + e*lap(chi)"));
    CHECK(normalize(apply_gauge(parse("dx(S) - e*Ax"), g)) == nf("dx(S) - e*Ax"));
    CHECK(normalize(apply_gauge(parse("R"), g)) == nf("R"));
    CHECK(normalize(apply_gauge(parse("dt(S) + e*Phi"), g)) == nf("dt(S) + e*Phi"));
    CHECK_THROWS_AS(apply_gauge(parse("Psi"), g), ComplexAtomError);
  }

  TEST_CASE("global phase") {
    CHECK(normalize(apply_gauge(parse("S + dx(S)"), GaugeSpec::global())) == nf("S + e*chi + dx(S)"));
  }

  TEST_CASE("field strengths are gauge invariant") {
    const GaugeSpec g = GaugeSpec::local();
    for (const char* text : {"dx(Phi) + dt(Ax)", "dy(Phi) + dt(Ay)", "dx(Ay) - dy(Ax)", "dz(Ay) - dy(Az)"}) {
      CHECK(normalize(apply_gauge(parse(text), g) - parse(text)).is_zero());
    }
  }

  TEST_CASE("composition adds gauge functions") {
    // Two successive maps with chi1 then chi2 equal one map with chi1 + chi2. The first
    // map's chi is renamed to V to keep the two gauge functions apart.
    const FieldAtom chi{Field::chi, Frame::unprimed, {}};
    phaselab::testing::RandomExpr gen(61);
    for (int k = 0; k < 30; ++k) {
      const Expr e = substitute(gen.real(3), FieldAtom{Field::chi, Frame::unprimed, {}}, Expr());
      const Expr first = substitute(apply_gauge(e, GaugeSpec::local()), chi, field(Field::V));
      const Expr twice = apply_gauge(first, GaugeSpec::local());
      const Expr combined = substitute(apply_gauge(e, GaugeSpec::local()), chi, field(Field::V) + field(Field::chi));
      // V occurs in e as well; compare only when it does not, otherwise the rename aliases.
      if (fields_of(normalize(e)).contains(Field::V)) continue;
      CHECK(normalize(twice) == normalize(combined));
    }
  }
}

TEST_SUITE("pure_gauge_substitute") {
  TEST_CASE("examples") {
    CHECK(normalize(pure_gauge_substitute(parse("Phi"))) == nf("dt(S)/e"));
    CHECK(normalize(pure_gauge_substitute(parse("dx(Ax)"))) == nf("dxdx(S)/e"));
    CHECK(normalize(pure_gauge_substitute(parse("e*Phi - e*Phi"))).is_zero());
    CHECK(normalize(pure_gauge_substitute(parse("Phi'"))) == nf("dt'(S')/e"));
  }

  TEST_CASE("commutes with differentiation") {
    phaselab::testing::RandomExpr gen(71);
    for (int k = 0; k < 50; ++k) {
      const Expr e = gen.real(3);
      const Coordinate c = gen.coordinate();
      CHECK(normalize(diff(pure_gauge_substitute(e), c) - pure_gauge_substitute(diff(e, c))).is_zero());
    }
  }
}
