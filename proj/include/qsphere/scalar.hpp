/**
 * @file scalar.hpp
 * @brief The coefficient field: rational functions in s = q^(1/2) over Q.
 *
 * All half-integer powers of q occurring in the algebra become integer
 * powers of s, so the field Q(s) is closed under every substitution the
 * engine performs (q = s^2, lambda = s^2 - s^-2, q^(±1/2) = s^(±1)).
 */
#pragma once

#include <string>

#include "qsphere/ratfun.hpp"

namespace qsphere {

class Scalar {
public:
    Scalar() = default;  // zero
    explicit Scalar(RatFun f) : f_(std::move(f)) {}
    explicit Scalar(Rational r) : f_(RatFun(std::move(r))) {}

    static Scalar zero() { return Scalar(); }
    static Scalar one() { return Scalar(Rational(1)); }
    static Scalar of_int(long v) { return Scalar(Rational(v)); }
    static Scalar of_rational(const Rational& r) { return Scalar(r); }
    static Scalar s_pow(int k) { return Scalar(RatFun::monomial(k)); }
    static Scalar q_pow(int k) { return s_pow(2 * k); }
    // q^(n/2) for odd prefactors like q^(1/2), q^(-3/2)
    static Scalar q_half_pow(int n) { return s_pow(n); }
    static Scalar lambda() { return q_pow(1) - q_pow(-1); }

    const RatFun& ratfun() const { return f_; }
    bool is_zero() const { return f_.is_zero(); }
    bool is_one() const { return f_.is_one(); }

    Scalar operator+(const Scalar& o) const { return Scalar(f_ + o.f_); }
    Scalar operator-(const Scalar& o) const { return Scalar(f_ - o.f_); }
    Scalar operator-() const { return Scalar(-f_); }
    Scalar operator*(const Scalar& o) const { return Scalar(f_ * o.f_); }
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { f_ += o.f_; return *this; }
    Scalar& operator-=(const Scalar& o) { f_ -= o.f_; return *this; }
    Scalar& operator*=(const Scalar& o) { f_ *= o.f_; return *this; }
    Scalar& operator/=(const Scalar& o) { return *this = *this / o; }
    Scalar pow(int e) const { return Scalar(f_.pow(e)); }
    Scalar inverse() const;

    bool operator==(const Scalar& o) const { return f_ == o.f_; }
    bool operator!=(const Scalar& o) const { return f_ != o.f_; }
    bool operator<(const Scalar& o) const { return f_ < o.f_; }

    // the bar symmetry on coefficients: s -> 1/s
    Scalar bar() const { return Scalar(f_.subst_inverse()); }

    // lim_{s->1} value / (q^2 - 1)^pole_order, exact.
    // Throws PoleAtLimit when the limit does not exist.
    Rational classical_limit(int pole_order = 0) const;

    double to_double_at(double s) const;

    // reduced fraction, rendered in q when every s-exponent is even
    std::string to_string() const;

private:
    RatFun f_;
};

// q-integer [n]_q = (q^(2n) - 1)/(q^2 - 1), a polynomial in q^2
Scalar qint(int n);
// [n]_{1/q}
Scalar qint_bar(int n);

}  // namespace qsphere
