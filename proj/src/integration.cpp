#include "qsphere/integration.hpp"

namespace qsphere {

bool is_integrable_monomial(const FuncMonomial& mono) {
    if (mono.a == 0 && mono.b == 0) return true;
    return 2 * mono.m - mono.a - mono.b >= 3;
}

Scalar integrate_sphere(const FuncElement& f) {
    Scalar total = Scalar::zero();
    for (const auto& [mono, c] : f.terms()) {
        if (!is_integrable_monomial(mono)) throw NotIntegrable(mono.to_string());
        if (mono.a == 0 && mono.b == 0) total += c / qint(mono.m + 1);
        // every other integrable canonical monomial carries charge (the
        // canonical constraint rules out a = b != 0 in the domain) and
        // integrates to zero
    }
    return total;
}

Scalar integrate_plane(const FuncElement& f) {
    return integrate_sphere(mul(FuncElement::rho().pow(2), f));
}

void verify_invariance_recursion(int l_max) {
    for (int l = 1; l <= l_max; ++l) {
        FuncElement zb_rhol = mul(FuncElement::generator(ZGen::Zbar), FuncElement::monomial(l, 0, 0));
        Scalar value = integrate_sphere(vf_act(VGen::Zp, zb_rhol));
        if (!value.is_zero())
            throw VerificationFailure("<Zp(zb rhoi^" + std::to_string(l) +
                                      ")> != 0: " + value.to_string());
        // [l+1] <rhoi^l> = [l] <rhoi^(l-1)>
        Scalar lhs = qint(l + 1) * integrate_sphere(FuncElement::monomial(l, 0, 0));
        Scalar rhs = qint(l) * integrate_sphere(FuncElement::monomial(l - 1, 0, 0));
        if (lhs != rhs)
            throw VerificationFailure("integral recursion fails at l = " + std::to_string(l));
    }
    // the recursion with <1> = 1 determines the functional; solve it forward
    Scalar moment = Scalar::one();
    for (int l = 1; l <= l_max; ++l) {
        moment = moment * qint(l) / qint(l + 1);
        if (moment != Scalar::one() / qint(l + 1))
            throw VerificationFailure("recursion solution differs from 1/[l+1] at l = " +
                                      std::to_string(l));
    }
}

void verify_plane_translation_invariance(const std::vector<FuncElement>& family) {
    const Scalar q2 = Scalar::q_pow(2);
    const FuncElement zb = FuncElement::generator(ZGen::Zbar);
    const FuncElement rho2 = FuncElement::rho().pow(2);
    BCDOps ops = build_bcd();
    for (const FuncElement& f : family) {
        Scalar ip = integrate_plane(apply_diffop(DiffOp::del(), f));
        if (!ip.is_zero())
            throw VerificationFailure("plane integral of del f != 0 for f = " + f.to_string());
        Scalar ipb = integrate_plane(apply_diffop(DiffOp::delbar(), f));
        if (!ipb.is_zero())
            throw VerificationFailure("plane integral of delb f != 0 for f = " + f.to_string());

        // cross-check through the vector-field realization:
        // q^-1 rho^2 del = (q^4 Zp zb Zm - Zm zb Zp - q^(1/2)(1+q^2) Zm) B
        FuncElement bf = apply_diffop(ops.B, f);
        FuncElement realized =
            vf_act(VGen::Zp, mul(zb, vf_act(VGen::Zm, bf))).scaled(Scalar::q_pow(4)) -
            vf_act(VGen::Zm, mul(zb, vf_act(VGen::Zp, bf))) -
            vf_act(VGen::Zm, bf).scaled(Scalar::q_half_pow(1) * (Scalar::one() + q2));
        FuncElement direct =
            mul(rho2, apply_diffop(DiffOp::del(), f)).scaled(Scalar::q_pow(-1));
        if (realized != direct)
            throw VerificationFailure("rho^2 del realization mismatch for f = " + f.to_string());
        if (!integrate_sphere(realized).is_zero())
            throw VerificationFailure("vector-field route gives nonzero plane integral for f = " +
                                      f.to_string());
    }
}

}  // namespace qsphere
