/**
 * @file wpatch.hpp
 * @brief The localization covering the north pole: w = z^-1, wb = zb^-1.
 *
 * zb is eliminated through zb = (rho - 1) z^-1, which turns the two-sided
 * localization into a q-commutative algebra: elements are sums
 * f(rho) * z^b * dz^eps dzb^epsbar with f a partial fraction whose poles lie
 * in {0} union {q^(2j)}. The shift rule z^b f(rho) = f(q^(-2b) rho) z^b
 * closes the pole set.
 */
#pragma once

#include <utility>

#include "qsphere/calculus.hpp"

namespace qsphere {

// partial-fraction rational function of rho over the scalar field:
// laurent part sum c_k rho^k plus pole terms c_{j,r} (rho - q^(2j))^-r
class RationalRho {
public:
    RationalRho() = default;
    explicit RationalRho(Scalar c);

    static RationalRho one() { return RationalRho(Scalar::one()); }
    static RationalRho rho_pow(int k, Scalar c = Scalar::one());
    // (rho - q^(2j))^-r, r >= 1
    static RationalRho pole(int j, int r, Scalar c = Scalar::one());

    const std::map<int, Scalar>& laurent() const { return laurent_; }
    const std::map<std::pair<int, int>, Scalar>& poles() const { return poles_; }
    bool is_zero() const { return laurent_.empty() && poles_.empty(); }

    RationalRho operator+(const RationalRho& o) const;
    RationalRho operator-(const RationalRho& o) const;
    RationalRho operator-() const;
    RationalRho& operator+=(const RationalRho& o);
    RationalRho scaled(const Scalar& c) const;

    bool operator==(const RationalRho& o) const {
        return laurent_ == o.laurent_ && poles_ == o.poles_;
    }
    bool operator!=(const RationalRho& o) const { return !(*this == o); }

    // f(rho) -> f(q^(2t) rho)
    RationalRho shifted(int t) const;

    // common-denominator form: numerator coefficients by rho-degree and
    // denominator as rho^k * prod (rho - q^(2j))^r
    struct NumDen {
        std::vector<Scalar> num;                  // ascending rho powers
        int zero_pole_order = 0;                  // k
        std::map<int, int> pole_orders;           // j -> r
    };
    NumDen reconstruct() const;

    // classical limit as a rational function of u = wb*w (rho = (1+u)/u);
    // divides by (q^2 - 1)^pole_order first
    RatFun classical_u(int pole_order = 0) const;

    std::string to_string() const;

    void add_laurent(int k, const Scalar& c);
    void add_pole(int j, int r, const Scalar& c);

private:
    std::map<int, Scalar> laurent_;
    std::map<std::pair<int, int>, Scalar> poles_;
};

RationalRho mul(const RationalRho& x, const RationalRho& y);

struct LKey {
    int b = 0;  // z power
    int eps = 0, epsbar = 0;
    auto operator<=>(const LKey&) const = default;
};

class LocalElement {
public:
    using Terms = std::map<LKey, RationalRho>;

    LocalElement() = default;
    explicit LocalElement(const RationalRho& f) { add_term(LKey{}, f); }
    explicit LocalElement(const Scalar& c) : LocalElement(RationalRho(c)) {}

    static LocalElement one() { return LocalElement(RationalRho::one()); }
    static LocalElement z_pow(int b, RationalRho f = RationalRho::one());
    static LocalElement form(int eps, int epsbar, RationalRho f = RationalRho::one());

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(const LKey& k, const RationalRho& f);

    LocalElement operator+(const LocalElement& o) const;
    LocalElement operator-(const LocalElement& o) const;
    LocalElement operator-() const;
    LocalElement& operator+=(const LocalElement& o);
    LocalElement scaled(const Scalar& c) const;

    bool operator==(const LocalElement& o) const { return t_ == o.t_; }
    bool operator!=(const LocalElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Terms t_;
};

LocalElement mul(const LocalElement& x, const LocalElement& y);

// injective algebra map from the z-patch: z -> z, rhoi -> rho^-1,
// zb -> (rho - 1) z^-1; forms map to forms
LocalElement embed(const FuncElement& f);
LocalElement embed(const FormElement& w);

struct WGenerators {
    LocalElement w, wb, dw, dwb;
};

WGenerators w_generators();

// classical (s -> 1) w-patch expression: coefficients are rational
// functions of u = wb*w, tracked per net w-power and form bits
struct ClassicalWTerm {
    RatFun coeff_u;
    int t = 0;  // power of w after absorbing u = wb*w
    int dw = 0, dwb = 0;
};

// classical limit of a LocalElement converted to w-coordinates
// (z = w^-1, dz = -w^-2 dw, dzb = -wb^-2 dwb), dividing the coefficients
// by (q^2-1)^pole_order first
std::vector<ClassicalWTerm> classical_w_form(const LocalElement& x, int pole_order = 0);

struct WPatchReport {
    bool xi_pole_at_origin = false;
    bool dxi_regular_at_origin = false;
    Rational dxi_value_at_origin;  // coefficient of dwb dw at w = 0
};

// verifies the closed forms of xi and xi* in the localization,
//   embed(xi)  = -q w^-1 dw (1 + wb w)^-1,
//   embed(xi*) = -q (1 + wb w)^-1 dwb wb^-1,
// and reports the pole structure of Xi and dXi at the north pole.
// The overall factor q is required: the right-hand sides without it fail
// by exactly that factor against the one-form of the z-patch calculus.
WPatchReport xi_in_w();

// checks Eq (wwb), w dw = q^2 dw w, dz w = q^-2 w dz and the induced
// derivative relation on w powers; throws VerificationFailure
void verify_w_relations(int max_power = 6);

}  // namespace qsphere
