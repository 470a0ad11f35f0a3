#include <doctest.h>

#include <cmath>

#include "qsphere/poisson.hpp"

using namespace qsphere;

namespace {

FuncElement zf() { return FuncElement::generator(ZGen::Z); }
FuncElement zbf() { return FuncElement::generator(ZGen::Zbar); }

PoissonElement P(int m, int a, int b, int e, int eb, Rational c = 1) {
    return PoissonElement::monomial(PKey{m, a, b, e, eb}, c);
}

}  // namespace

TEST_CASE("classical limit of elements") {
    CHECK(classical_limit_elem(mul(zbf(), zf()).scaled(Scalar::q_pow(2))) == P(0, 1, 1, 0, 0));
    // a coefficient with a pole at s = 1 is rejected
    FuncElement bad = zf().scaled(Scalar::lambda().inverse());
    CHECK_THROWS_AS(classical_limit_elem(bad), PoleAtLimit);
}

TEST_CASE("brackets from commutator limits") {
    CHECK(poisson_bracket(zbf(), zf()) == P(0, 0, 0, 0, 0) + P(0, 1, 1, 0, 0));
    CHECK(poisson_bracket(FormElement::dz(), FormElement(zf())) == P(0, 0, 1, 1, 0));
    CHECK(poisson_bracket(FormElement::dzb(), FormElement(zbf())) == P(0, 1, 0, 0, 1, -1));
    CHECK(poisson_bracket(FormElement::dzb(), FormElement::dz()) == P(0, 0, 0, 1, 1, -1));
    // self-bracket of an even quantity vanishes
    CHECK(poisson_bracket(zf(), zf()).is_zero());
}

TEST_CASE("Xi in the classical limit") {
    XiForms x = xi_forms();
    CHECK(poisson_bracket(x.Xi, FormElement(zf())) == P(0, 0, 0, 1, 0));
    CHECK(classical_limit_elem(x.Xi_sq).is_zero());
    // lim Xi = dz zb rhoi - dzb z rhoi, coefficient-left
    CHECK(classical_limit_elem(x.Xi) == P(1, 1, 0, 1, 0) - P(1, 0, 1, 0, 1));
}

TEST_CASE("classical exterior derivative") {
    // d(zb z) = zb dz + z dzb
    PoissonElement f = P(0, 1, 1, 0, 0);
    CHECK(classical_d(f) == P(0, 1, 0, 1, 0) + P(0, 0, 1, 0, 1));
    // d rhoi = -rhoi^2 (zb dz + z dzb)
    CHECK(classical_d(P(1, 0, 0, 0, 0)) ==
          P(2, 1, 0, 1, 0, -1) + P(2, 0, 1, 0, 1, -1));
    // d^2 = 0
    CHECK(classical_d(classical_d(P(2, 0, 3, 0, 0))).is_zero());
}

TEST_CASE("w-patch bracket") {
    WGenerators g = w_generators();
    auto bw = poisson_bracket_w(g.wb, g.w);
    std::vector<ClassicalWTerm> expected = {
        {RatFun(Poly(std::vector<Rational>{Rational(0), Rational(1), Rational(1)}),
                Poly(Rational(1))),
         0, 0, 0}};
    CHECK(classical_w_equal(bw, expected));
    CHECK(classical_w_equal(poisson_bracket_w(g.w, g.w), {}));
}

TEST_CASE("numeric north pole checks") {
    auto checks = numeric_north_pole_checks({0.5, 0.1}, 1e-10);
    for (const auto& c : checks) {
        double scale = std::max(1.0, std::abs(c.expected));
        CHECK(c.abs_err < 1e-7 * scale);
    }
}
