#pragma once

// Fourier transform of a regular semisimple orbital integral, evaluated at a
// regular semisimple point: mu-hat is a function of the pair
//   X* = beta sqrt(theta)   (co-adjoint orbit, against a character phi)
//   Y  = s sqrt(theta')     (evaluation point),
// given by the double principal value
//   M(X*, Y) = PV int_{k_theta^x / C_theta} PV int_k phi(<X*, Y>_{alpha, t}) dt d*a.
// mock_mu_oracle computes that integral shell by shell; mu_hat_closed
// evaluates the closed forms, dispatching on the depth sum and on how the two
// tori sit relative to each other; second_orbital_form is the intermediate
// Bessel-series expression both sides factor through.

#include <optional>
#include <utility>

#include "sl2ft/bessel.hpp"
#include "sl2ft/orbits.hpp"

namespace sl2ft {

// How Y sits relative to X*: Close (depth sum > 0, a constant term plus one
// transfer-factor term), Far (depth sum on the convergent side, a Weyl-orbit
// sum when the tori are conjugate and zero when they are not), or the
// boundary shell of a ramified orbit (depth sum exactly zero), split by
// whether Y itself lands on the ramified torus or only on its neighbours.
enum class Regime { Close, FarSameTorus, FarVanishing, BadShellSame, BadShellOther };

const char* to_string(Regime r);

Regime classify(const DualOrbit& x, const OrbitPoint& y);

// <X*, Y>_{alpha, t} = beta s (n theta' + n^(-1) theta - n^(-1) t^2) where
// n = Norm(alpha); the pairing depends on alpha only through its norm.
PAdic pairing_at(const DualOrbit& x, const OrbitPoint& y, const PAdic& norm,
                 const PAdic& t);

// The defining double principal value, computed shell-by-shell in the norm
// coordinate with the inner Gaussian t-integral evaluated per 1+p coset.
// Requires theta to be one of the standard representatives 1, eps, p
// (apply gl2_reduce first); boundary shells are asserted to vanish.
Complex mock_mu_oracle(const Qp& k, const DualOrbit& x, const OrbitPoint& y);

// (-1)^(d+1) sgn_eps(s)  and  sgn_p(-s) G_p(phi_beta): the two unit constants
// the closed forms are written in.
double gamma_un(const DualOrbit& x, const OrbitPoint& y);
Complex gamma_ram(const Qp& k, const DualOrbit& x, const OrbitPoint& y,
                  bool negate_gauss = false);

// (1/2) |s|^(-1/2) q^(-(d+1)/2) [ (J^th + gamma_un J^th_eps)
//                               + gamma_ram (J^th_p - gamma_un J^th_eps_p) ],
// the four torus-restricted Bessel functions at nu^(1/2) sgn_tau taken with
// respect to the depth -1 normalization of phi_beta, at arguments (u, v).
Complex second_orbital_form(const Qp& k, const DualOrbit& x,
                            const OrbitPoint& y);

// Sum of phi(2 beta s' theta) over the coordinates s' presenting Y on X*'s
// torus; empty orbit sums to zero.
Complex weyl_sum(const DualOrbit& x, const OrbitPoint& y);

// Lattice sum over the boundary shell of a ramified torus: Z = c sqrt(theta)
// with c running over p^(h-1)/p^h, h = d.  Each term is
// phi(<X*, Z>) sgn_p(Y^2 - Z^2); when exclude is set the two classes c = +-
// exclude (mod p^h) are omitted.  Returns the sum and the number of terms.
struct BadShellSum {
  Complex value;
  int terms;
};
BadShellSum bad_shell_sum(const Qp& k, const DualOrbit& x, const OrbitPoint& y,
                          const std::optional<PAdic>& exclude);

struct EvalOptions {
  bool negate_gauss = false;  // canary: corrupt the Gauss sum sign on purpose
};

// Closed form of the transform.  Reduces theta to a standard representative,
// classifies the regime, and evaluates the matching formula.
Complex mu_hat_closed(const Qp& k, const DualOrbit& x, const OrbitPoint& y,
                      const EvalOptions& opts = {});

// Single-formula restatement: one expression for the Close regime and one for
// the Far regimes, driven entirely by the transfer factor and the Weyl-orbit
// sum.  Returns nullopt on the boundary shell of a ramified orbit, which the
// restatement does not cover.
std::optional<Complex> uniform_form(const Qp& k, const DualOrbit& x,
                                    const OrbitPoint& y,
                                    const EvalOptions& opts = {});

// Close-regime bracket rows: for row tau, the value
//   coef_tau * ( |theta|^(1/2) A_tau + q^(-(d+1)) |D(Y)|^(-1/2) B_tau(theta') )
// which equals |s|^(-1/2) q^(-(d+1)/2) J_{nu^(1/2) sgn_tau}(u, v).  Requires
// the depth sum to be positive (m < 2).
Complex bessel_bracket_row(const Qp& k, SquareClass row, const DualOrbit& x,
                           const OrbitPoint& y);

// Measure of the compact piece in the group-level normalization, recomputed
// by counting points of SL2, its tori, and the Borel over the residue field
// (with the norm-cokernel factor 1/2 in the ramified case), as an exact
// rational: split (q+1)/q, unramified (q-1)/q, ramified (q^2-1)/(2q^2).
Rational verify_measure_normalization(const Qp& k, SquareClass torus);

}  // namespace sl2ft
