/**
 * @file suq2.hpp
 * @brief The quantum SU(2) coordinate algebra localized at beta, gamma,
 * the stereographic origin of z, zb, and the coaction check.
 *
 * PBW normal form: alpha^i (or delta^i) * beta^j * gamma^k with i >= 0
 * and j, k in Z. alpha and delta never co-occur; the quantum determinant
 * eliminates mixed products.
 *
 * The relation preset is a two-way configuration (q versus 1/q mirror);
 * the preset that reproduces the sphere relations is selected by
 * consequence, see select_convention().
 */
#pragma once

#include <map>
#include <string>
#include <vector>

#include "qsphere/zalgebra.hpp"

namespace qsphere {

enum class SUConvention { QPlus, QMinus };

enum class SUGen { Alpha, Beta, Gamma, Delta, BetaInv, GammaInv };

struct SUMonomial {
    int ad = 0;  // > 0: alpha^ad, < 0: delta^(-ad)
    int j = 0;   // beta power (may be negative)
    int k = 0;   // gamma power (may be negative)
    auto operator<=>(const SUMonomial&) const = default;
    std::string to_string() const;
};

class SUq2Element {
public:
    using Terms = std::map<SUMonomial, Scalar>;

    SUq2Element() = default;
    explicit SUq2Element(Scalar c);

    static SUq2Element one() { return SUq2Element(Scalar::one()); }
    static SUq2Element generator(SUGen g);
    static SUq2Element monomial(const SUMonomial& m, Scalar c = Scalar::one());

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(const SUMonomial& m, const Scalar& c);

    SUq2Element operator+(const SUq2Element& o) const;
    SUq2Element operator-(const SUq2Element& o) const;
    SUq2Element operator-() const;
    SUq2Element& operator+=(const SUq2Element& o);
    SUq2Element scaled(const Scalar& c) const;

    bool operator==(const SUq2Element& o) const { return t_ == o.t_; }
    bool operator!=(const SUq2Element& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Terms t_;
};

SUq2Element mul(const SUq2Element& x, const SUq2Element& y,
                SUConvention conv = SUConvention::QPlus);

SUq2Element normalize_suq2(const std::vector<SUGen>& word,
                           SUConvention conv = SUConvention::QPlus,
                           FoldStrategy strategy = FoldStrategy::LeftToRight);

// alpha* = delta, delta* = alpha, beta* = -q gamma, gamma* = -q^-1 beta
SUq2Element star_suq2(const SUq2Element& x, SUConvention conv = SUConvention::QPlus);

struct StereographicElements {
    SUq2Element z_img, zb_img, b_minus, b_plus, b_3;
};

// z = alpha gamma^-1, zb = -delta beta^-1, b- = alpha beta, b+ = gamma delta,
// b3 = alpha delta; verifies the sphere relations, the denominator-cleared
// projection identities and the star structure before returning.
StereographicElements stereographic_elements(SUConvention conv = SUConvention::QPlus);

// returns the convention under which stereographic_elements verifies
SUConvention select_convention();

// the algebra map z -> alpha gamma^-1, zb -> -delta beta^-1,
// rhoi -> -q^-1 beta gamma
SUq2Element embed_sphere_element(const FuncElement& f,
                                 SUConvention conv = SUConvention::QPlus);

// comodule-algebra check: doubled generators alpha'' = a (x) alpha + b (x) gamma
// etc. satisfy the same relations inside the commuting two-copy tensor algebra.
// Throws VerificationFailure naming the first failing relation.
void coaction_homomorphism_check(SUConvention conv = SUConvention::QPlus);

// classical sanity of the fractional transformation: numeric Mobius action
// composition on sample points, |error| < tol
void classical_mobius_check(double tol = 1e-12);

}  // namespace qsphere
