#include "sl2ft/orbits.hpp"

#include <stdexcept>

#include "sl2ft/exp_sums.hpp"

namespace sl2ft {

namespace {

PAdic minus_one(long long p) { return PAdic::from_integer(p, -1, 4); }

}  // namespace

int weyl_order(const PAdic& theta) {
  return sgn_tau(square_class(theta), minus_one(theta.prime())) == 1 ? 2 : 1;
}

bool same_stable_torus(const PAdic& theta, const PAdic& theta_p) {
  return square_class(theta) == square_class(theta_p);
}

bool same_rational_torus(const PAdic& theta, const PAdic& theta_p) {
  if (!same_stable_torus(theta, theta_p)) return false;
  auto b = sqrt(theta_p / theta);
  if (!b) return false;
  SquareClass cls = square_class(theta);
  return sgn_tau(cls, *b) == 1 || sgn_tau(cls, -*b) == 1;
}

int OrbitPoint::depth2() const { return (s * s * theta).val(); }

PAdic OrbitPoint::discriminant() const {
  return PAdic::from_integer(s.prime(), 4, s.known_digits()) * s * s * theta;
}

DualOrbit::DualOrbit(AdditiveCharacter phi, PAdic beta, PAdic theta)
    : phi_(std::move(phi)), beta_(std::move(beta)), theta_(std::move(theta)) {
  if (beta_.is_zero() || theta_.is_zero())
    throw std::invalid_argument("DualOrbit: beta, theta must be nonzero");
  if (beta_.prime() != phi_.prime() || theta_.prime() != phi_.prime())
    throw std::invalid_argument("DualOrbit: mismatched primes");
}

AdditiveCharacter DualOrbit::phi_normalized() const {
  return phi_beta().twist(
      PAdic::unit_pow(phi_.prime(), 1, d() + 1, beta_.known_digits()));
}

Rational DualOrbit::c0() const {
  long long q = phi_.prime();
  switch (torus()) {
    case SquareClass::One: return {-2, q};
    case SquareClass::Eps: return {-1, q};
    default: return {-(q + 1), 2 * q * q};
  }
}

std::pair<PAdic, PAdic> bessel_arguments(const DualOrbit& x, const OrbitPoint& y) {
  PAdic scaled = y.s.shift(-(x.d() + 1));
  return {scaled * y.theta, scaled * x.theta()};
}

Complex transfer_factor(const DualOrbit& x, const OrbitPoint& y, bool negate_gauss) {
  if (!same_stable_torus(x.theta(), y.theta))
    return x.elliptic() && y.split() ? 1 : 0;
  long long p = x.phi().prime();
  switch (x.torus()) {
    case SquareClass::One:
      return 1;
    case SquareClass::Eps:
      // (-1)^(d+1) * sgn_eps(s)
      return (x.d() + 1 + y.s.val()) % 2 == 0 ? 1 : -1;
    default: {
      // sgn_theta(-s) * G(phi_beta) taken at a uniformiser of theta's class;
      // the value does not depend on which nonresidue scales it.
      long long unit = x.torus() == SquareClass::Pi ? 1 : smallest_nonresidue(p);
      PAdic varpi = PAdic::unit_pow(p, unit, 1, y.s.known_digits());
      Complex g = gauss_sum(varpi, x.phi_beta());
      if (negate_gauss) g = -g;
      return static_cast<double>(sgn_tau(x.torus(), -y.s)) * g;
    }
  }
}

std::vector<PAdic> torus_coordinates(const PAdic& theta, const OrbitPoint& y) {
  if (!same_rational_torus(theta, y.theta)) return {};
  PAdic b = *sqrt(y.theta / theta);
  PAdic sp = y.s * b;
  if (weyl_order(theta) == 2) return {sp, -sp};
  // One Weyl element: only the sign that makes b a norm is rationally there.
  return {sgn_tau(square_class(theta), b) == 1 ? sp : -sp};
}

ReducedPair gl2_reduce(const Qp& k, const DualOrbit& x, const OrbitPoint& y) {
  SquareClass cls = x.torus();
  if (cls == SquareClass::EpsPi)
    throw std::domain_error(
        "gl2_reduce: no reference representative for the eps*p class");
  PAdic tau = cls == SquareClass::One ? k.one()
              : cls == SquareClass::Eps ? k.epsilon()
                                        : k.uniformiser();
  PAdic b = *sqrt(tau / x.theta());
  return {DualOrbit(x.phi(), x.beta() / b, tau),
          OrbitPoint{y.s / b, b * b * y.theta}, b};
}

TorusMass torus_mass(const Qp& k, SquareClass torus) {
  long long p = k.p;
  long long p2 = p * p;
  bool ram = is_ramified(torus);
  long long theta;
  Rational closed;
  switch (torus) {
    case SquareClass::One:
      theta = 1;
      closed = Rational(p + 1, p);
      break;
    case SquareClass::Eps:
      theta = k.eps;
      closed = Rational(p - 1, p);
      break;
    case SquareClass::Pi:
      theta = p;
      closed = Rational(p * p - 1, 2 * p * p);
      break;
    default:
      theta = k.eps * p % p2;
      closed = Rational(p * p - 1, 2 * p * p);
      break;
  }

  // Count (a, b, c) mod p^2 with a^2 + bc = theta; on ramified tori keep only
  // the orbit of sqrt(theta) itself, cut out by the norm class of the
  // b-entry.  The c-count per (a, b) depends only on ord(b) and the
  // divisibility of theta - a^2.
  long long count = 0;
  for (long long b = 0; b < p2; ++b) {
    int ordb = b == 0 ? 2 : b % p == 0 ? 1 : 0;
    if (ram) {
      if (ordb == 2) continue;
      int sgn = legendre(ordb == 0 ? b % p : b / p, p);
      if (ordb == 1) sgn *= legendre(-1, p) * (torus == SquareClass::EpsPi ? -1 : 1);
      if (sgn != 1) continue;
    }
    for (long long a = 0; a < p2; ++a) {
      long long r = ((theta - a * a) % p2 + p2) % p2;
      if (ordb == 0) ++count;
      else if (ordb == 1 && r % p == 0) count += p;
      else if (ordb == 2 && r == 0) count += p2;
    }
  }
  return {Rational(count, p2 * p2), closed};
}

}  // namespace sl2ft
