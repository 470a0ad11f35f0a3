/**
 * @file ratfun.hpp
 * @brief Dense univariate polynomials and reduced rational functions over Q.
 *
 * Coefficients are GMP rationals. RatFun keeps the invariant
 * gcd(num, den) = 1 with a monic denominator, so equality is plain
 * structural comparison.
 */
#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <vector>

#include "qsphere/error.hpp"

namespace qsphere {

using Rational = mpq_class;

class Poly {
public:
    Poly() = default;
    explicit Poly(Rational constant);
    // coefficients by ascending degree
    explicit Poly(std::vector<Rational> coeffs);
    static Poly monomial(int degree, Rational coeff = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    // order of vanishing at x = 0; degree()+1 trick not valid for zero poly
    int valuation() const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    Rational leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly scaled(const Rational& r) const;
    Poly pow(unsigned e) const;

    // exact division over Q; rem has degree < divisor
    static void divrem(const Poly& a, const Poly& b, Poly& quo, Poly& rem);
    static Poly gcd(Poly a, Poly b);  // monic

    Poly monic() const;
    Poly reversed() const;  // x^deg * p(1/x)

    Rational eval(const Rational& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    // rendering with power semantics: exponents divided by `step`
    // (step 2 renders s-polynomials in q), variable named `var`
    std::string to_string(const std::string& var, int step = 1) const;

private:
    void trim();
    std::vector<Rational> c_;
};

// Reduced fraction of polynomials. Denominator monic and coprime to the
// numerator, so representation is canonical.
class RatFun {
public:
    RatFun() : num_(), den_(Poly(Rational(1))) {}
    explicit RatFun(Rational r) : num_(Poly(std::move(r))), den_(Poly(Rational(1))) {}
    RatFun(Poly num, Poly den);

    static RatFun from_int(long v) { return RatFun(Rational(v)); }
    static RatFun monomial(int degree);  // x^degree, negative allowed

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;

    RatFun operator+(const RatFun& o) const;
    RatFun operator-(const RatFun& o) const;
    RatFun operator-() const;
    RatFun operator*(const RatFun& o) const;
    RatFun operator/(const RatFun& o) const;
    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }
    RatFun pow(int e) const;
    RatFun inverse() const;

    bool operator==(const RatFun& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RatFun& o) const { return !(*this == o); }
    // total order for use as map key
    bool operator<(const RatFun& o) const;

    // substitution x -> 1/x
    RatFun subst_inverse() const;

    // order of vanishing at x = 0 (negative for a pole there)
    int valuation_at_zero() const;
    // finite evaluation; throws PoleAtLimit if the denominator vanishes
    Rational eval(const Rational& x) const;
    std::complex<double> eval(const std::complex<double>& x) const;

    std::string to_string(const std::string& var, int step = 1) const;

private:
    void reduce();
    Poly num_, den_;
};

}  // namespace qsphere
