#pragma once

// p-adic Bessel functions
//   J_chi(u, v) = PV integral over Q_p^x of phi(u x + v x^(-1)) chi(x) d*x
// for an additive character phi of depth -1 and mildly ramified chi, with
// their closed forms.  The oracle sums exact shells over a finite window; the
// closed form dispatches on m = -ord(u v):
//   m <= 1      two gamma factors,
//   m = 2       a twisted Kloosterman sum over the residue field,
//   m > 2 odd   zero,
//   m >= 4 even a stationary-phase pair at the square roots of u v.

#include "sl2ft/characters.hpp"
#include "sl2ft/exp_sums.hpp"
#include "sl2ft/padic.hpp"

namespace sl2ft {

// Shell indices outside [lo, hi] contribute nothing to a principal value of
// the form  sum_n int_{ord(x)=n} phi(u x + v x^(-1)) g(x) d*x  with g constant
// on 1+p cosets: past the band and the stationary shells one phase term
// oscillates at a strictly higher level than everything else.  The bounds
// include two guard shells on each side, kept so callers can assert they
// vanish.
struct ShellWindow {
  int lo, hi;
};
ShellWindow shell_window(const PAdic& u, const PAdic& v);

// Defining principal value, shell-summed with guard shells asserted to vanish.
// Requires depth(phi) = -1, u, v nonzero, and chi nontrivial when m <= 1.
Complex bessel_oracle(const MultiplicativeCharacter& chi, const PAdic& u,
                      const PAdic& v, const AdditiveCharacter& phi);

// Closed form; same domain as the oracle.
Complex bessel_closed(const MultiplicativeCharacter& chi, const PAdic& u,
                      const PAdic& v, const AdditiveCharacter& phi);

// Single-shell integral  int_{ord(x) = -half_m} phi(x + c x^(-1)) chi(x) d*x.
Complex f_chi(const MultiplicativeCharacter& chi, int half_m, const PAdic& c,
              const AdditiveCharacter& phi);

// J^theta_chi = (J_chi + J_{chi * sgn_theta}) / 2, via closed forms.
Complex bessel_theta_closed(SquareClass theta, const MultiplicativeCharacter& chi,
                            const PAdic& u, const PAdic& v,
                            const AdditiveCharacter& phi);

}  // namespace sl2ft
