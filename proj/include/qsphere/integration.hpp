/**
 * @file integration.hpp
 * @brief The invariant integral on the sphere and the induced
 * translationally invariant integral on the quantum plane.
 *
 * On canonical monomials the functional is diagonal:
 *   <rhoi^m>             = 1/[m+1]_q
 *   <rhoi^m zb^a z^b>    = 0    for a != b within the domain
 * Domain rule: a monomial is integrable iff a = b = 0 (any m >= 0) or
 * 2m - a - b >= 3. Inputs outside the domain raise NotIntegrable.
 */
#pragma once

#include "qsphere/vfields.hpp"

namespace qsphere {

bool is_integrable_monomial(const FuncMonomial& mono);

Scalar integrate_sphere(const FuncElement& f);

// plane integral: integral_C f = < rho^2 f >
Scalar integrate_plane(const FuncElement& f);

// checks <Zp (zb rhoi^l)> = 0 for 1 <= l <= l_max term by term against
// the closed-form functional, and that the recursion
// [l+1]_q <rhoi^l> = [l]_q <rhoi^(l-1)> pins the closed form uniquely.
// Throws VerificationFailure at the first failing l.
void verify_invariance_recursion(int l_max);

// checks integral_C del f = integral_C delb f = 0 for each family member
// and cross-checks against the vector-field realization of rho^2 del.
void verify_plane_translation_invariance(const std::vector<FuncElement>& family);

}  // namespace qsphere
