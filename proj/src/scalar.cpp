#include "qsphere/scalar.hpp"

namespace qsphere {

Scalar Scalar::operator/(const Scalar& o) const {
    if (o.is_zero()) throw DivisionByZero("scalar division by zero");
    return Scalar(f_ / o.f_);
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero scalar");
    return Scalar(f_.inverse());
}

Rational Scalar::classical_limit(int pole_order) const {
    if (is_zero()) return Rational(0);
    // q^2 - 1 = s^4 - 1
    RatFun shifted = f_;
    if (pole_order > 0) {
        RatFun h(Poly(std::vector<Rational>{Rational(-1), Rational(0), Rational(0), Rational(0),
                                            Rational(1)}),
                 Poly(Rational(1)));
        shifted = shifted / h.pow(pole_order);
    }
    // shifted is reduced; a surviving (s - 1) factor downstairs means no limit
    if (shifted.den().eval(Rational(1)) == 0)
        throw PoleAtLimit("no finite limit at s = 1 (pole order " + std::to_string(pole_order) +
                          "): " + to_string());
    return shifted.num().eval(Rational(1)) / shifted.den().eval(Rational(1));
}

double Scalar::to_double_at(double s) const {
    std::complex<double> v = f_.eval(std::complex<double>(s, 0.0));
    return v.real();
}

std::string Scalar::to_string() const {
    if (is_zero()) return "0";
    auto even_exponents = [](const Poly& p) {
        for (int k = 0; k <= p.degree(); ++k)
            if (k % 2 == 1 && p.coeff(k) != 0) return false;
        return true;
    };
    if (even_exponents(f_.num()) && even_exponents(f_.den()))
        return f_.to_string("q", 2);
    return f_.to_string("s", 1);
}

Scalar qint(int n) {
    // [n]_q = 1 + q^2 + ... + q^(2(n-1))
    Scalar acc = Scalar::zero();
    for (int i = 0; i < n; ++i) acc += Scalar::q_pow(2 * i);
    return acc;
}

Scalar qint_bar(int n) {
    Scalar acc = Scalar::zero();
    for (int i = 0; i < n; ++i) acc += Scalar::q_pow(-2 * i);
    return acc;
}

}  // namespace qsphere
