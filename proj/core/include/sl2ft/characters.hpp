#pragma once

// Additive characters of Q_p and the mildly ramified multiplicative family.
//
// The standard additive character sends x to e^(2*pi*i*frac(x)) where frac is
// the p-adic fractional part; it is trivial on Z_p and nontrivial on p^(-1)Z_p
// (depth -1).  Twisting by b gives x -> standard(b*x) of depth -1 - ord(b).
// The multiplicative characters used everywhere are nu^alpha * sgn_tau with
// nu(x) = |x| and sgn_tau the quadratic character of a square class.

#include "sl2ft/padic.hpp"
#include "sl2ft/phases.hpp"

namespace sl2ft {

// Character of the residue field: x -> e^(2*pi*i * c*x / p), c a unit.
struct ResidueAdditiveCharacter {
  long long p = 0;
  long long c = 1;

  RationalPhase phase(long long x) const {
    long long n = mul_mod(c, ((x % p) + p) % p, p);
    return {n, p};
  }
  Complex operator()(long long x) const { return phase(x).value(); }
};

class AdditiveCharacter {
 public:
  // The standard character, depth -1.
  static AdditiveCharacter standard(const Qp& k);

  // x -> (*this)(b * x); depth drops by ord(b).
  AdditiveCharacter twist(const PAdic& b) const;

  long long prime() const { return scale_.prime(); }
  int depth() const { return -1 - scale_.val(); }
  const PAdic& scale() const { return scale_; }

  // Exact phase of the value; requires scale*x to be known modulo Z_p.
  RationalPhase phase(const PAdic& x) const;
  Complex operator()(const PAdic& x) const { return phase(x).value(); }

  // Restriction of the depth-0 normalization twist(p^depth) to the residue
  // field.  Nontrivial by construction.
  ResidueAdditiveCharacter residue_character() const;

 private:
  explicit AdditiveCharacter(PAdic scale) : scale_(std::move(scale)) {}
  PAdic scale_;
};

enum class ResidueCharKind { Trivial, Quadratic };

class MultiplicativeCharacter {
 public:
  // nu^alpha * sgn_tau.
  MultiplicativeCharacter(Complex alpha, SquareClass tau)
      : alpha_(alpha), tau_(tau) {}
  static MultiplicativeCharacter nu(Complex alpha) {
    return {alpha, SquareClass::One};
  }
  static MultiplicativeCharacter sgn(SquareClass tau) { return {Complex(0), tau}; }

  Complex alpha() const { return alpha_; }
  SquareClass tau() const { return tau_; }

  MultiplicativeCharacter inverse() const { return {-alpha_, tau_}; }
  MultiplicativeCharacter times_sgn(SquareClass tau) const {
    return {alpha_, tau_ * tau};
  }
  MultiplicativeCharacter times_nu(Complex alpha) const {
    return {alpha_ + alpha, tau_};
  }

  // Trivial on the unit group; such characters are determined by the value at p.
  bool unramified() const { return !is_ramified(tau_); }
  bool trivial() const { return tau_ == SquareClass::One && alpha_ == Complex(0); }
  // Restriction to the residue field through units.
  ResidueCharKind residue_kind() const {
    return unramified() ? ResidueCharKind::Trivial : ResidueCharKind::Quadratic;
  }

  // chi(p^n) = q^(-alpha*n) * sgn_tau(p)^n (positive real branch of q^-alpha).
  Complex at_p_pow(long long p, int n) const;
  // sgn_tau factor at a unit u: 1 when unramified, legendre(u) when ramified.
  int unit_sign(long long p, long long u) const;
  // chi(-1).
  int sign_at_minus_one(long long p) const { return unit_sign(p, -1); }
  // Full value q^(-alpha*ord(x)) * sgn_tau(x).
  Complex operator()(const PAdic& x) const;

  std::string name() const;

 private:
  Complex alpha_;
  SquareClass tau_;
};

}  // namespace sl2ft
