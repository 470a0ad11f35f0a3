/**
 * @file zalgebra.hpp
 * @brief The function algebra of the quantum sphere in the z-patch.
 *
 * Elements are finite linear combinations of canonical monomials
 * rhoi^m * zb^a * z^b where rhoi = (1 + zb*z)^-1. The canonical basis
 * requires min(a, b) = 0 whenever m >= 1: mixed zb*z content next to a
 * rhoi power is absorbed via rho - 1 = zb*z.
 *
 * Rewrite rules (all others are derived from these and the inverse
 * property rho * rhoi = 1):
 *   (R1) z*zb  -> q^-2 zb*z + (q^-2 - 1)
 *   (R2) z*rhoi -> q^2 rhoi*z,  zb*rhoi -> q^-2 rhoi*zb
 *   (R3) rhoi^m zb^a z^b (m,a,b >= 1)
 *          -> q^(2(a-1)) rhoi^(m-1) zb^(a-1) z^(b-1) - rhoi^m zb^(a-1) z^(b-1)
 */
#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qsphere/scalar.hpp"

namespace qsphere {

enum class ZGen { RhoInv, Zbar, Z };

struct FuncMonomial {
    int m = 0;  // power of rhoi
    int a = 0;  // power of zb
    int b = 0;  // power of z
    auto operator<=>(const FuncMonomial&) const = default;
    bool is_canonical() const { return m >= 0 && a >= 0 && b >= 0 && (m == 0 || a == 0 || b == 0); }
    int total_degree() const { return m + a + b; }
    std::string to_string() const;
};

class FuncElement {
public:
    using Terms = std::map<FuncMonomial, Scalar>;

    FuncElement() = default;
    explicit FuncElement(Scalar c);

    static FuncElement zero() { return FuncElement(); }
    static FuncElement one() { return FuncElement(Scalar::one()); }
    // canonicalizes via R3 if needed
    static FuncElement monomial(int m, int a, int b, Scalar coeff = Scalar::one());
    static FuncElement generator(ZGen g);
    // rho = 1 + zb*z (positive powers of rho are always expanded)
    static FuncElement rho();

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(const FuncMonomial& mono, const Scalar& c);

    FuncElement operator+(const FuncElement& o) const;
    FuncElement operator-(const FuncElement& o) const;
    FuncElement operator-() const;
    FuncElement& operator+=(const FuncElement& o);
    FuncElement& operator-=(const FuncElement& o);
    FuncElement scaled(const Scalar& c) const;
    FuncElement pow(unsigned e) const;

    bool operator==(const FuncElement& o) const { return t_ == o.t_; }
    bool operator!=(const FuncElement& o) const { return !(*this == o); }

    int max_total_degree() const;

    std::string to_string() const;

private:
    Terms t_;
};

FuncElement mul(const FuncElement& x, const FuncElement& y);
// left multiplication by a single generator
FuncElement mul_gen(ZGen g, const FuncElement& x);

enum class FoldStrategy { LeftToRight, RightToLeft };

// normalize a plain word of generators (used by the CLI and by the
// confluence tests, which compare the two fold orders)
FuncElement normalize_word(const std::vector<ZGen>& word,
                           FoldStrategy strategy = FoldStrategy::LeftToRight);

// the *-involution: antimultiplicative, z* = zb, zb* = z, rhoi* = rhoi
FuncElement star_func(const FuncElement& x);

// the bar-swap homomorphism: z <-> zb, rhoi -> q^2 rhoi, s -> 1/s
FuncElement bar_swap(const FuncElement& x);

struct PodlesGenerators {
    FuncElement b_minus, b_plus, b_3;
};

// Verified realization of the three sphere coordinates inside the
// z-patch algebra. Throws VerificationFailure if the stored candidates
// stop satisfying the defining relations (guards convention drift).
PodlesGenerators podles_generators();

// enumerate canonical monomials with m+a+b <= max_degree
std::vector<FuncMonomial> canonical_basis(int max_degree);

}  // namespace qsphere
