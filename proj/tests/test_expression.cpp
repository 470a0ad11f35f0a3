#include <doctest.h>

#include <random>

#include "qsphere/expression.hpp"

using namespace qsphere;

TEST_CASE("parsing well-formed expressions") {
    CHECK_NOTHROW(parse("z*zb - q^-2*zb*z"));
    CHECK_NOTHROW(parse("qint(3)*rhoi^2"));
    CHECK_NOTHROW(parse("-(z + zb)^2 / q"));
    CHECK_NOTHROW(parse("1/qint(3)"));
}

TEST_CASE("parse errors carry the offset") {
    try {
        parse("z*)");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.offset == 2);
    }
    CHECK_THROWS_AS(parse("unknown_atom"), ParseError);
    CHECK_THROWS_AS(parse("z +"), ParseError);
}

TEST_CASE("print-parse round trip on the AST") {
    for (const char* text : {"z*zb - q^-2*zb*z", "qint(3)*rhoi^2 + lambda", "-(z - zb)^3",
                             "Zp*H*Zm", "del*z - 1 - q^-2*z*del", "(q^2 + 1)/q*zb"}) {
        ExprPtr e = parse(text);
        std::string printed = print_expr(e);
        CHECK(print_expr(parse(printed)) == printed);
    }
}

TEST_CASE("evaluation in the z patch") {
    CHECK(as_scalar(evaluate("q*q^-1", Patch::Z)) == Scalar::one());
    CHECK(as_scalar(evaluate("lambda + q^-1", Patch::Z)) == Scalar::q_pow(1));
    CHECK(as_scalar(evaluate("qint(2)", Patch::Z)) == Scalar::one() + Scalar::q_pow(2));
    // z*zb normalizes through the engine
    FuncElement expected = mul(FuncElement::generator(ZGen::Z),
                               FuncElement::generator(ZGen::Zbar));
    CHECK(as_function(evaluate("z*zb", Patch::Z)) == expected);
    // rhoi^-1 expands to rho
    CHECK(as_function(evaluate("rhoi^-1", Patch::Z)) == FuncElement::rho());
    // commutator written out
    FuncElement comm = as_function(evaluate("z*zb - zb*z", Patch::Z));
    CHECK(comm == mul(FuncElement::generator(ZGen::Z), FuncElement::generator(ZGen::Zbar)) -
                      mul(FuncElement::generator(ZGen::Zbar), FuncElement::generator(ZGen::Z)));
}

TEST_CASE("patch rules") {
    CHECK_THROWS_AS(evaluate("w", Patch::Z), EngineError);
    CHECK_THROWS_AS(evaluate("z^-1", Patch::Z), EngineError);
    CHECK(as_local(evaluate("w", Patch::W)) == LocalElement::z_pow(-1));
    CHECK(as_local(evaluate("z^-2", Patch::W)) == LocalElement::z_pow(-2));
    // w*wb*rhoi legal in the localization
    CHECK_NOTHROW(evaluate("w*wb + rhoi^2", Patch::W));
    // Zp has no w-patch meaning
    CHECK_THROWS_AS(evaluate("Zp", Patch::W), EngineError);
}

TEST_CASE("kind mixing rules") {
    CHECK_THROWS_AS(evaluate("del*Zp", Patch::Z), EngineError);
    CHECK_THROWS_AS(evaluate("z/zb", Patch::Z), EngineError);
    CHECK_NOTHROW(evaluate("Zp*z*dz", Patch::Z));
    CHECK_NOTHROW(evaluate("del*z*del", Patch::Z));
}

TEST_CASE("element round trip through print and parse") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<int> d(0, 4), c(-3, 3), sp(-4, 4);
    for (int i = 0; i < 500; ++i) {
        FuncElement x;
        for (int t = 0; t < 2; ++t) {
            FuncMonomial m{d(rng), d(rng), d(rng)};
            if (m.m >= 1) m.a = 0;
            int cc = c(rng);
            if (cc == 0) cc = 1;
            x.add_term(m, Scalar::of_int(cc) * Scalar::s_pow(sp(rng)));
        }
        CHECK(as_function(evaluate(x.to_string(), Patch::Z)) == x);
    }
}
