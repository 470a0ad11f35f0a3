#include <doctest.h>

#include <random>

#include "qsphere/calculus.hpp"

using namespace qsphere;

namespace {

const Scalar q2 = Scalar::q_pow(2);
const Scalar qi2 = Scalar::q_pow(-2);
using CG = CalcGen;

FuncElement zf() { return FuncElement::generator(ZGen::Z); }
FuncElement zbf() { return FuncElement::generator(ZGen::Zbar); }

}  // namespace

TEST_CASE("form normalization relations") {
    // net assertion: normalize(z dz) - q^-2 normalize(dz z) = 0
    CHECK(normalize_form({CG::Z, CG::Dz}) == normalize_form({CG::Dz, CG::Z}).scaled(qi2));
    CHECK(normalize_form({CG::Dz, CG::Dz}) == FormElement::zero());
    CHECK(normalize_form({CG::Dz, CG::RhoInv}) == normalize_form({CG::RhoInv, CG::Dz}));
    CHECK(normalize_form({CG::Dz, CG::Dzbar}) ==
          normalize_form({CG::Dzbar, CG::Dz}).scaled(-qi2));
}

TEST_CASE("derivative actions") {
    CHECK(apply_diffop(DiffOp::del(), zf()) == FuncElement::one());
    CHECK(apply_diffop(DiffOp::delbar(), zf()) == FuncElement::zero());
    CHECK(apply_diffop(DiffOp::del(), mul(zf(), zf())) ==
          zf().scaled(Scalar::one() + qi2));
    CHECK(apply_diffop(DiffOp::delbar(), zbf()) == FuncElement::one());
    // action on 1 vanishes
    CHECK(apply_diffop(DiffOp::del(), FuncElement::one()) == FuncElement::zero());
}

TEST_CASE("derivative commutation as operator identities") {
    DiffOp del = DiffOp::del(), delb = DiffOp::delbar();
    DiffOp zo(zf()), zbo(zbf());
    CHECK(mul(del, zo) == DiffOp::identity() + mul(zo, del).scaled(qi2));
    CHECK(mul(delb, zbo) == DiffOp::identity() + mul(zbo, delb).scaled(q2));
    CHECK(mul(del, delb) == mul(delb, del).scaled(qi2));
}

TEST_CASE("exterior derivative") {
    CHECK(exterior_d(FormElement(zf())) == FormElement::dz());
    // d(zb z) = zb dz + q^2 z dzb
    FormElement lhs = exterior_d(FormElement(mul(zbf(), zf())));
    FormElement rhs = FormElement::basis(F_DZ, zbf()) +
                      FormElement::basis(F_DZB, zf().scaled(q2));
    CHECK(lhs == rhs);
    // d^2 = 0 on all monomials with m + a + b <= 6
    for (const FuncMonomial& mono : canonical_basis(6)) {
        FuncElement f;
        f.add_term(mono, Scalar::one());
        CHECK(exterior_d(exterior_d(FormElement(f))).is_zero());
    }
}

TEST_CASE("delta split") {
    CHECK(delta(FormElement(zf())) == FormElement::dz());
    CHECK(delta(FormElement(zbf())).is_zero());
    CHECK(deltabar(FormElement(zbf())) == FormElement::dzb());
    for (const FuncMonomial& mono : canonical_basis(4)) {
        FuncElement f;
        f.add_term(mono, Scalar::one());
        FormElement w(f);
        auto [hol, antih] = delta_split(w);
        CHECK(hol + antih == exterior_d(w));
        CHECK(delta(delta(w)).is_zero());
        CHECK(deltabar(deltabar(w)).is_zero());
        CHECK((delta(deltabar(w)) + deltabar(delta(w))).is_zero());
    }
}

TEST_CASE("star structures") {
    DiffOp del = DiffOp::del();
    DiffOp expected_sphere =
        DiffOp::delbar().scaled(-qi2) +
        DiffOp(mul(zf(), FuncElement::generator(ZGen::RhoInv))
                   .scaled(Scalar::one() + qi2));
    CHECK(star_diffop(del, StarVariant::Sphere) == expected_sphere);
    CHECK(star_diffop(del, StarVariant::Plane) == DiffOp::delbar().scaled(-q2));
    CHECK(star_diffop(star_diffop(del, StarVariant::Sphere), StarVariant::Sphere) == del);
    CHECK(star_form(FormElement::dz()) == FormElement::dzb());
    FormElement fdz = FormElement::basis(F_DZ, mul(zbf(), zf()));
    CHECK(star_form(star_form(fdz)) == fdz);
}

TEST_CASE("gauge derivatives") {
    auto [d0, db0] = gauge_derivative(0);
    CHECK(d0 == DiffOp::del());
    CHECK(db0 == DiffOp::delbar());
    auto [d1, db1] = gauge_derivative(1);
    DiffOp expected = DiffOp::del().scaled(Scalar::q_pow(4)) +
                      DiffOp(mul(FuncElement::generator(ZGen::RhoInv), zbf())
                                 .scaled(-q2 * (Scalar::one() + q2)));
    CHECK(d1 == expected);
    (void)db1;
    // del^(n) z = 1 + q^-2 z del^(n)
    DiffOp zo(zf());
    for (int n = 0; n <= 3; ++n) {
        auto [dn, dbn] = gauge_derivative(n);
        CHECK(mul(dn, zo) == DiffOp::identity() + mul(zo, dn).scaled(qi2));
        (void)dbn;
    }
}

TEST_CASE("the one-form Xi") {
    XiForms x = xi_forms();  // verifies dXi, Xi^2, Xi* internally
    const Scalar lam = Scalar::lambda();
    FormElement zform(zf());
    CHECK(mul(x.Xi, zform) - mul(zform, x.Xi) == FormElement::dz().scaled(lam));
    FormElement area = normalize_form({CG::Dzbar, CG::RhoInv, CG::RhoInv, CG::Dz});
    CHECK(x.dXi == area.scaled(Scalar::of_int(2) * Scalar::q_pow(1)));
    CHECK(x.Xi_sq == area.scaled(Scalar::q_pow(1) * lam));
    CHECK(star_form(x.Xi) == -x.Xi);
}
