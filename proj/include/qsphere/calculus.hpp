/**
 * @file calculus.hpp
 * @brief Left-covariant differential calculus on the z-patch.
 *
 * FormElement keeps one FuncElement coefficient per basis form
 * {1, dz, dzb, dz*dzb}; coefficients always sit to the left of the form
 * generators. DiffOp is the polynomial differential-operator algebra
 * with words normalized to f * del^c * delb^d.
 *
 * Form generators commute past a canonical monomial with one uniform
 * factor, dz M = q^(2(b-a)) M dz and likewise for dzb; that twist is the
 * whole content of the coefficient-left normal form.
 */
#pragma once

#include <array>
#include <utility>

#include "qsphere/zalgebra.hpp"

namespace qsphere {

// basis form index
enum FormIndex : int { F_ONE = 0, F_DZ = 1, F_DZB = 2, F_DZDZB = 3 };

inline int form_grade(int idx) { return idx == F_ONE ? 0 : idx == F_DZDZB ? 2 : 1; }

class FormElement {
public:
    FormElement() = default;
    explicit FormElement(const FuncElement& f) { comp_[F_ONE] = f; }
    explicit FormElement(const Scalar& c) { comp_[F_ONE] = FuncElement(c); }

    static FormElement zero() { return {}; }
    static FormElement one() { return FormElement(FuncElement::one()); }
    static FormElement basis(int idx, FuncElement coeff = FuncElement::one());
    static FormElement dz() { return basis(F_DZ); }
    static FormElement dzb() { return basis(F_DZB); }

    const FuncElement& coeff(int idx) const { return comp_[idx]; }
    FuncElement& coeff(int idx) { return comp_[idx]; }
    bool is_zero() const;
    // -1 when zero, -2 when mixed
    int grade() const;

    FormElement operator+(const FormElement& o) const;
    FormElement operator-(const FormElement& o) const;
    FormElement operator-() const;
    FormElement& operator+=(const FormElement& o);
    FormElement& operator-=(const FormElement& o);
    FormElement scaled(const Scalar& c) const;
    FormElement scaled_func(const FuncElement& f) const;  // left multiplication by a function

    bool operator==(const FormElement& o) const { return comp_ == o.comp_; }
    bool operator!=(const FormElement& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    std::array<FuncElement, 4> comp_;
};

FormElement mul(const FormElement& x, const FormElement& y);

// the automorphism picked up when a form generator moves left past a
// function: dz f = twist(f) dz
FuncElement form_twist(const FuncElement& f, int times = 1);

enum class CalcGen { Z, Zbar, RhoInv, Dz, Dzbar };

FormElement normalize_form(const std::vector<CalcGen>& word,
                           FoldStrategy strategy = FoldStrategy::LeftToRight);

// --- differential operators -------------------------------------------

enum class DGen { Del, Delbar };

struct DiffKey {
    FuncMonomial mono;
    int dc = 0;  // power of del
    int dd = 0;  // power of delb
    auto operator<=>(const DiffKey&) const = default;
};

class DiffOp {
public:
    using Terms = std::map<DiffKey, Scalar>;

    DiffOp() = default;
    explicit DiffOp(const FuncElement& f);

    static DiffOp zero() { return {}; }
    static DiffOp identity() { return DiffOp(FuncElement::one()); }
    static DiffOp del() { return generator(DGen::Del); }
    static DiffOp delbar() { return generator(DGen::Delbar); }
    static DiffOp generator(DGen g);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(const DiffKey& k, const Scalar& c);

    DiffOp operator+(const DiffOp& o) const;
    DiffOp operator-(const DiffOp& o) const;
    DiffOp operator-() const;
    DiffOp& operator+=(const DiffOp& o);
    DiffOp scaled(const Scalar& c) const;
    DiffOp pow(unsigned e) const;

    bool operator==(const DiffOp& o) const { return t_ == o.t_; }
    bool operator!=(const DiffOp& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Terms t_;
};

DiffOp mul(const DiffOp& x, const DiffOp& y);

// counit action: normalize D * f and drop every term still carrying a
// derivative generator
FuncElement apply_diffop(const DiffOp& d, const FuncElement& f);

// d f = dz (del f) + dzb (delb f); on forms by the graded Leibniz rule
// with d(dz) = d(dzb) = 0
FormElement exterior_d(const FormElement& w);

// holomorphic / antiholomorphic split, delta + deltabar = d
std::pair<FormElement, FormElement> delta_split(const FormElement& w);
FormElement delta(const FormElement& w);
FormElement deltabar(const FormElement& w);

enum class StarVariant { Sphere, Plane };

// (dz)* = dzb in both variants; the variants differ on derivatives only
FormElement star_form(const FormElement& w);
DiffOp star_diffop(const DiffOp& d, StarVariant variant);

// gauge-transformed derivatives del^(n), delb^(n); verified against the
// conjugated forms q^(4n) rho^(2n) del rho^(-2n) on low-degree monomials
std::pair<DiffOp, DiffOp> gauge_derivative(int n, int verify_degree = 3);

struct XiForms {
    FormElement xi, xi_star, Xi, dXi, Xi_sq;
};

// xi = q dz rhoi zb; Xi = xi - xi*; checks the closed forms of dXi and
// Xi^2 and Xi* = -Xi before returning
XiForms xi_forms();

}  // namespace qsphere
