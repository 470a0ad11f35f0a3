/**
 * @file poisson.hpp
 * @brief Exact classical (q -> 1) limit: commutative graded elements and
 * Poisson brackets obtained as commutator limits.
 *
 * Brackets are never tabulated: (x, y) is always computed as the graded
 * commutator of the quantum inputs divided by (q^2 - 1), evaluated at
 * s = 1. A nonvanishing commutator at q = 1 surfaces as PoleAtLimit.
 */
#pragma once

#include "qsphere/wpatch.hpp"

namespace qsphere {

struct PKey {
    int m = 0, a = 0, b = 0;
    int eps = 0, epsbar = 0;
    auto operator<=>(const PKey&) const = default;
    int parity() const { return (eps + epsbar) % 2; }
};

class PoissonElement {
public:
    using Terms = std::map<PKey, Rational>;

    PoissonElement() = default;
    explicit PoissonElement(Rational c);

    static PoissonElement monomial(const PKey& k, Rational c = 1);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(const PKey& k, const Rational& c);

    PoissonElement operator+(const PoissonElement& o) const;
    PoissonElement operator-(const PoissonElement& o) const;
    PoissonElement operator-() const;
    PoissonElement& operator+=(const PoissonElement& o);
    PoissonElement scaled(const Rational& c) const;

    bool operator==(const PoissonElement& o) const { return t_ == o.t_; }
    bool operator!=(const PoissonElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Terms t_;
};

// commutative product with anticommuting dz, dzb and the classical
// canonical reduction zb z = rho - 1 next to rhoi powers
PoissonElement mul(const PoissonElement& x, const PoissonElement& y);

PoissonElement classical_limit_elem(const FuncElement& f);
PoissonElement classical_limit_elem(const FormElement& w);

// graded commutator limit; bilinear over parity components
PoissonElement poisson_bracket(const FormElement& x, const FormElement& y);
PoissonElement poisson_bracket(const FuncElement& x, const FuncElement& y);

// classical exterior derivative on PoissonElements
PoissonElement classical_d(const PoissonElement& x);

// classical w-patch bracket, re-expressed in (u = wb w, w) coordinates
std::vector<ClassicalWTerm> poisson_bracket_w(const LocalElement& x, const LocalElement& y);

// canonical comparison for classical w-expressions
bool classical_w_equal(const std::vector<ClassicalWTerm>& lhs,
                       const std::vector<ClassicalWTerm>& rhs);
std::string classical_w_to_string(const std::vector<ClassicalWTerm>& terms);

struct NumericCheck {
    std::string name;
    std::complex<double> value;
    std::complex<double> expected;
    double abs_err = 0.0;
};

// circle integrals of the classical Xi, the full-plane area integral and
// the Stokes balance on the punctured sphere
std::vector<NumericCheck> numeric_north_pole_checks(const std::vector<double>& radii,
                                                    double quad_tol);

}  // namespace qsphere
