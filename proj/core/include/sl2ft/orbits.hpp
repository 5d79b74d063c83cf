#pragma once

// Regular semisimple orbits in sl2(Q_p) and their dual-side data.
//
// Elements are coordinatized as s * sqrt(theta) with sqrt(theta) the standard
// anti-diagonal matrix [[0,1],[theta,0]]; the square class of theta labels the
// torus (split for squares, unramified for eps, ramified otherwise).  The
// dual-side datum X* = beta * sqrt(theta) carries the ambient additive
// character.  Depths are half-integers on ramified tori, so all depth
// bookkeeping here is doubled.

#include <boost/rational.hpp>

#include <utility>
#include <vector>

#include "sl2ft/characters.hpp"
#include "sl2ft/padic.hpp"

namespace sl2ft {

using Rational = boost::rational<long long>;

// Order of the rational Weyl group: 2 iff -1 is a norm of the theta
// extension, i.e. sgn_theta(-1) = +1.
int weyl_order(const PAdic& theta);

// Stable conjugacy of the tori sees only the square class.
bool same_stable_torus(const PAdic& theta, const PAdic& theta_p);

// Rational conjugacy additionally needs theta'/theta to be a norm up to sign:
// some eta = +-1 has sgn_theta(eta * sqrt(theta'/theta)) = +1.
bool same_rational_torus(const PAdic& theta, const PAdic& theta_p);

// Orbit representative Y = s * sqrt(theta).
struct OrbitPoint {
  PAdic s;
  PAdic theta;

  int depth2() const;          // 2 * depth(Y) = ord(s^2 theta)
  PAdic discriminant() const;  // D(Y) = 4 s^2 theta
  SquareClass torus() const { return square_class(theta); }
  bool split() const { return torus() == SquareClass::One; }
};

// Dual-side datum X* = beta * sqrt(theta) paired against phi.
class DualOrbit {
 public:
  DualOrbit(AdditiveCharacter phi, PAdic beta, PAdic theta);

  const AdditiveCharacter& phi() const { return phi_; }
  const PAdic& beta() const { return beta_; }
  const PAdic& theta() const { return theta_; }
  SquareClass torus() const { return square_class(theta_); }
  bool elliptic() const { return torus() != SquareClass::One; }

  // The working character x -> phi(beta x) and its depth d.
  AdditiveCharacter phi_beta() const { return phi_.twist(beta_); }
  int d() const { return phi_beta().depth(); }
  // 2 * depth(X*) = ord(theta) - 2 d.
  int depth2() const { return theta_.val() - 2 * d(); }
  // phi_beta twisted back to depth -1, the reference point of the gamma
  // factors and Bessel functions.
  AdditiveCharacter phi_normalized() const;

  // Leading coefficient of the singular germ at this torus.
  Rational c0() const;

 private:
  AdditiveCharacter phi_;
  PAdic beta_;
  PAdic theta_;
};

// Frequencies of the double-Bessel expansion of the pairing with Y:
// u = s theta' / pi^(d+1), v = s theta / pi^(d+1).
std::pair<PAdic, PAdic> bessel_arguments(const DualOrbit& x, const OrbitPoint& y);

// Transfer factor gamma_phi(X*, Y).  negate_gauss flips the sign of the Gauss
// sum inside; it exists so the verification harness can prove its own checks
// can fail.
Complex transfer_factor(const DualOrbit& x, const OrbitPoint& y,
                        bool negate_gauss = false);

// s-coordinates of the rational conjugates of y inside the theta-line, one
// per Weyl element; empty when y does not meet that torus rationally.
std::vector<PAdic> torus_coordinates(const PAdic& theta, const OrbitPoint& y);

// Rescale theta to the reference representative of its square class (1, eps,
// or p) by conjugating with diag(b, 1/b), b = sqrt(tau/theta); beta and s
// divide by b, theta and theta' multiply by b^2.  Throws for eps*p-class
// theta, where no reference uniformiser is adopted.
struct ReducedPair {
  DualOrbit x;
  OrbitPoint y;
  PAdic b;
};
ReducedPair gl2_reduce(const Qp& k, const DualOrbit& x, const OrbitPoint& y);

// Mass of the integral orbit of sqrt(theta)-type elements: the point count of
// { a^2 + bc = theta } on the orbit over Z/p^2, weighted by q^-4, next to the
// closed rational value (q+1)/q, (q-1)/q, or (q^2-1)/(2q^2).
struct TorusMass {
  Rational counted;
  Rational closed;
};
TorusMass torus_mass(const Qp& k, SquareClass torus);

}  // namespace sl2ft
