/**
 * @file vfields.hpp
 * @brief Right-invariant vector fields Zp, Zm, H acting on functions and
 * forms through a smash product.
 *
 * A VectorOp is a sum of FormElement coefficients times PBW-ordered
 * words Zp^i H^j Zm^k. Actions are counit evaluation: normalize the
 * product and drop every term that still ends in a vector-field
 * generator.
 */
#pragma once

#include <optional>
#include <variant>

#include "qsphere/calculus.hpp"

namespace qsphere {

enum class VGen { Zp, H, Zm };

struct VKey {
    int i = 0;  // Zp power
    int j = 0;  // H power
    int k = 0;  // Zm power
    auto operator<=>(const VKey&) const = default;
    bool trivial() const { return i == 0 && j == 0 && k == 0; }
};

class VectorOp {
public:
    using Terms = std::map<VKey, FormElement>;

    VectorOp() = default;
    explicit VectorOp(const FormElement& w) { add_term(VKey{}, w); }
    explicit VectorOp(const FuncElement& f) : VectorOp(FormElement(f)) {}

    static VectorOp generator(VGen g);

    const Terms& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    void add_term(const VKey& k, const FormElement& w);

    VectorOp operator+(const VectorOp& o) const;
    VectorOp operator-(const VectorOp& o) const;
    VectorOp operator-() const;
    VectorOp& operator+=(const VectorOp& o);
    VectorOp scaled(const Scalar& c) const;

    bool operator==(const VectorOp& o) const { return t_ == o.t_; }
    bool operator!=(const VectorOp& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    Terms t_;
};

VectorOp mul(const VectorOp& x, const VectorOp& y);

// atoms of a smash-product word
using VAtom = std::variant<VGen, CalcGen>;

VectorOp normalize_vf(const std::vector<VAtom>& word,
                      FoldStrategy strategy = FoldStrategy::LeftToRight);

// counit action on a form
FormElement vf_act(const VectorOp& v, const FormElement& w);
FormElement vf_act(VGen g, const FormElement& w);
FuncElement vf_act(VGen g, const FuncElement& f);

// the *-involution with Zp* = Zm, H* = H on words, sphere star on coefficients
VectorOp star_vf(const VectorOp& v);

// linear combination of smash-product words
using CoeffWord = std::vector<std::pair<Scalar, std::vector<VAtom>>>;

// For a relation LHS = RHS given as word combinations, checks that
// prepending each generator O in {Zp, Zm, H} keeps the identity after
// full smash normalization (the cross-commutation rules are consistent
// with the relation). Returns the offending generator name on failure.
std::optional<std::string> check_infinitesimal_covariance(const CoeffWord& lhs,
                                                          const CoeffWord& rhs);

struct BCDOps {
    DiffOp B, C, D;
};

// C = 1 - lambda q^-1 z del, D = 1 + lambda q zb delb,
// B = C + (D - 1) - lambda^2 q^-2 rho delb del with rho expanded
BCDOps build_bcd();

// triangular inverse of a bidegree-filtered operator on the polynomial
// subalgebra span{zb^a z^b : a + b <= max_total_degree}
class FilteredInverse {
public:
    FilteredInverse(const DiffOp& op, int max_total_degree);
    // applies the inverse; every monomial of f must lie in the table range
    FuncElement apply(const FuncElement& f) const;

private:
    std::map<std::pair<int, int>, FuncElement> table_;
    int max_degree_;
};

// verifies the pseudo-differential realizations of Zp, Zm, H and the
// rho^2 del / rho^2 delb identities on all monomials zb^a z^b with
// a + b <= max_degree; throws VerificationFailure naming the identity
void check_pseudodiff_realizations(int max_degree);

}  // namespace qsphere
