#pragma once

// Exponential sums and principal-value multiplicative integrals.
//
// Normalizations: d*x gives the units measure 1 - 1/q; dx gives Z_p measure 1.
// Principal values are computed shell by shell with exact phase accumulation;
// every shell outside the finite support window is provably zero and the two
// outermost computed shells are asserted to vanish, converting the window
// derivation into a runtime check.  Unramified tails are geometric series
// summed in closed form (equivalently, meromorphic continuation in alpha).

#include "sl2ft/characters.hpp"
#include "sl2ft/padic.hpp"
#include "sl2ft/phases.hpp"

namespace sl2ft {

// Normalized quadratic Gauss sum attached to an additive character and a
// uniformiser w (any valuation-1 element):
//   q^(-1/2) * sum over X in Z_p/p of phi((-w)^depth(phi) * X^2).
// Unit modulus; fourth root of unity.
Complex gauss_sum(const PAdic& varpi, const AdditiveCharacter& phi);

// Finite-field sum over x in F_q^x of phibar(x) * legendre(x).
Complex residue_quadratic_gauss(const ResidueAdditiveCharacter& phibar);

// Twisted Kloosterman sum over x in F_q^x of phibar(x + xi/x) * chibar(x).
Complex kloosterman(ResidueCharKind chibar, const ResidueAdditiveCharacter& phibar,
                    long long xi);

// Gamma factor: the principal value of  integral over Q_p^x of phi(x) chi(x) d*x.
// One exact shell at ord = depth(phi) plus, for unramified chi, the closed-form
// geometric tail.  chi must be nontrivial.
Complex gamma_factor(const MultiplicativeCharacter& chi, const AdditiveCharacter& phi);

// Gaussian principal value  integral over Q_p of phi(a t^2) dt, a nonzero:
// closed tail q^(-n0) over the shells where the integrand is 1, plus at most
// one exact Gauss shell.
Complex gaussian_pv_dt(const AdditiveCharacter& phi, const PAdic& a);

// Closed form of the Gaussian integral in self-dual normalization:
//   H(phi, b) = |b|^(-1/2) * (sgn_pi(b) * G(phi)  if depth(phi) - ord(b) even,
//               |b|^(-1/2)                        if odd).
// Satisfies gaussian_pv_dt(phi, b) = q^(-(depth+1)/2) * H(phi, b).
Complex shalika_h(const AdditiveCharacter& phi, const PAdic& b);

}  // namespace sl2ft
