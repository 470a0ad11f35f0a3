#include <doctest.h>

#include "qsphere/integration.hpp"

using namespace qsphere;

namespace {

FuncElement zf() { return FuncElement::generator(ZGen::Z); }
FuncElement zbf() { return FuncElement::generator(ZGen::Zbar); }

}  // namespace

TEST_CASE("sphere moments") {
    CHECK(integrate_sphere(FuncElement::one()) == Scalar::one());
    CHECK(integrate_sphere(FuncElement::monomial(1, 0, 0)) ==
          Scalar::one() / (Scalar::one() + Scalar::q_pow(2)));
    // <zb z rhoi^2> = 1/[2] - 1/[3]
    FuncElement f = mul(mul(zbf(), zf()), FuncElement::monomial(2, 0, 0));
    CHECK(integrate_sphere(f) == Scalar::one() / qint(2) - Scalar::one() / qint(3));
    // charge monomial integrates to zero
    CHECK(integrate_sphere(mul(zbf(), FuncElement::monomial(2, 0, 0))) == Scalar::zero());
}

TEST_CASE("domain rule") {
    // zb z (m = 0, a = b = 1) lies outside the domain
    CHECK_THROWS_AS(integrate_sphere(mul(zbf(), zf())), NotIntegrable);
    CHECK_THROWS_AS(integrate_sphere(zf()), NotIntegrable);
    CHECK(is_integrable_monomial(FuncMonomial{2, 1, 0}));
    CHECK(!is_integrable_monomial(FuncMonomial{1, 1, 0}));
}

TEST_CASE("plane integral") {
    // rho^2 rhoi^4 = rhoi^2
    CHECK(integrate_plane(FuncElement::monomial(4, 0, 0)) == Scalar::one() / qint(3));
    CHECK_THROWS_AS(integrate_plane(FuncElement::one()), NotIntegrable);
    // translation invariance on a single sample
    FuncElement f = FuncElement::monomial(3, 0, 0);
    CHECK(integrate_plane(apply_diffop(DiffOp::del(), f)) == Scalar::zero());
    CHECK(integrate_plane(apply_diffop(DiffOp::delbar(), f)) == Scalar::zero());
}

TEST_CASE("invariance recursion to l = 12") {
    verify_invariance_recursion(12);
    // classical limit of the moments
    for (int l = 0; l <= 12; ++l)
        CHECK(integrate_sphere(FuncElement::monomial(l, 0, 0)).classical_limit(0) ==
              Rational(1, l + 1));
}

TEST_CASE("translation invariance family") {
    std::vector<FuncElement> family;
    for (int l = 3; l <= 8; ++l) {
        family.push_back(FuncElement::monomial(l, 0, 0));
        family.push_back(mul(zbf(), FuncElement::monomial(l + 1, 0, 0)));
        family.push_back(mul(zf(), FuncElement::monomial(l + 1, 0, 0)));
    }
    verify_plane_translation_invariance(family);
}

TEST_CASE("invariance of the functional under the vector fields") {
    // <O f> = 0 whenever f and O f stay in the domain
    FuncElement f = mul(zbf(), FuncElement::monomial(3, 0, 0));
    for (VGen g : {VGen::Zp, VGen::Zm, VGen::H})
        CHECK(integrate_sphere(vf_act(g, f)) == Scalar::zero());
}
