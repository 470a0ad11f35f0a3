#include <doctest.h>

#include <random>

#include "qsphere/scalar.hpp"

using namespace qsphere;

namespace {

Scalar rand_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 4), pw(-3, 3);
    int n = num(rng);
    if (n == 0) n = 2;
    return Scalar::of_rational(Rational(n, den(rng))) * Scalar::s_pow(pw(rng)) +
           Scalar::of_int(num(rng));
}

}  // namespace

TEST_CASE("field arithmetic basics") {
    const Scalar q = Scalar::q_pow(1);
    CHECK(q * Scalar::q_pow(-1) == Scalar::one());
    CHECK(Scalar::lambda() + Scalar::q_pow(-1) == q);
    // (q^2 - 1)/(q - 1) = q + 1
    Scalar lhs = (Scalar::q_pow(2) - Scalar::one()) / (q - Scalar::one());
    CHECK(lhs == q + Scalar::one());
}

TEST_CASE("division by zero raises") {
    CHECK_THROWS_AS(Scalar::one() / Scalar::zero(), DivisionByZero);
}

TEST_CASE("q-integers") {
    CHECK(qint(0) == Scalar::zero());
    CHECK(qint(1) == Scalar::one());
    CHECK(qint(2) == Scalar::one() + Scalar::q_pow(2));
    // recursion [n+1] = q^2 [n] + 1
    for (int n = 0; n <= 20; ++n)
        CHECK(qint(n + 1) == Scalar::q_pow(2) * qint(n) + Scalar::one());
    // [n]_{1/q} = q^(-2(n-1)) [n]_q
    for (int n = 1; n <= 8; ++n)
        CHECK(qint_bar(n) == Scalar::q_pow(-2 * (n - 1)) * qint(n));
}

TEST_CASE("classical limits") {
    CHECK(Scalar(qint(3)).classical_limit(0) == Rational(3));
    CHECK((Scalar::q_pow(2) - Scalar::one()).classical_limit(1) == Rational(1));
    CHECK(Scalar::lambda().classical_limit(1) == Rational(1));
    CHECK_THROWS_AS(Scalar::lambda().inverse().classical_limit(0), PoleAtLimit);
    // multiplicativity of the limit over pole orders
    std::mt19937_64 rng(7);
    for (int i = 0; i < 30; ++i) {
        Scalar c = rand_scalar(rng) * Scalar::lambda();
        Scalar d = rand_scalar(rng) * (Scalar::q_pow(2) - Scalar::one());
        Rational lhs = (c * d).classical_limit(2);
        Rational rhs = c.classical_limit(1) * d.classical_limit(1);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        Scalar a = rand_scalar(rng), b = rand_scalar(rng), c = rand_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("bar substitution s -> 1/s") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        Scalar a = rand_scalar(rng), b = rand_scalar(rng);
        CHECK(a.bar().bar() == a);
        CHECK((a * b).bar() == a.bar() * b.bar());
    }
    CHECK(Scalar::q_pow(2).bar() == Scalar::q_pow(-2));
    CHECK(Scalar::lambda().bar() == -Scalar::lambda());
}

TEST_CASE("rendering is reduced") {
    CHECK((Scalar::q_pow(2) + Scalar::one()).to_string() == "q^2 + 1");
    CHECK((Scalar::q_pow(-1) * (Scalar::q_pow(2) + Scalar::one())).to_string() == "(q^2 + 1)/q");
    CHECK(Scalar::s_pow(3).to_string() == "s^3");
    CHECK(Scalar::zero().to_string() == "0");
}
