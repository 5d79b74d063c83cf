#pragma once

// Truncated p-adic arithmetic over Q_p for odd p.
//
// A nonzero value is stored as p^val * mant where mant is a unit mantissa in
// [1, p^prec) coprime to p; the value is known modulo p^(val+prec).  prec is
// the number of known base-p digits.  Multiplication and inversion preserve
// prec; addition can lose digits to cancellation and tracks the loss.  A
// computation that needs more digits than are known throws
// insufficient_precision rather than truncating silently.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace sl2ft {

using bigint = boost::multiprecision::cpp_int;

class insufficient_precision : public std::runtime_error {
 public:
  explicit insufficient_precision(const std::string& what)
      : std::runtime_error(what) {}
};

// Square classes of Q_p^x modulo squares, odd p: the Klein four-group
// generated by the distinguished non-residue eps and the uniformiser p.
enum class SquareClass { One, Eps, Pi, EpsPi };

SquareClass operator*(SquareClass a, SquareClass b);
const char* to_string(SquareClass c);
bool is_ramified(SquareClass c);   // odd valuation classes Pi, EpsPi
bool is_split(SquareClass c);      // the trivial class

// Legendre symbol of u modulo the odd prime p: +1, -1, or 0.
int legendre(long long u, long long p);

// Smallest positive quadratic non-residue modulo p.
long long smallest_nonresidue(long long p);

long long pow_ll(long long base, int exp);            // throws on overflow past 2^62
long long mul_mod(long long a, long long b, long long m);
long long inv_mod(long long a, long long m);          // gcd(a, m) = 1 required

class PAdic {
 public:
  // Exact zero.
  static PAdic zero(long long p);
  // Integer n expanded to `digits` base-p digits.
  static PAdic from_integer(long long p, long long n, int digits);
  static PAdic from_integer(long long p, const bigint& n, int digits);
  // Exact rational num/den, den nonzero.
  static PAdic from_rational(long long p, long long num, long long den, int digits);
  // u * p^k with u coprime to p.
  static PAdic unit_pow(long long p, long long u, int k, int digits);

  long long prime() const { return p_; }
  bool is_zero() const { return zero_; }
  // Valuation of a nonzero value; throws std::domain_error on zero.
  int val() const;
  int known_digits() const;
  // Unit mantissa in [1, p^prec), coprime to p.
  const bigint& mantissa() const;
  // Leading base-p digit, in [1, p).
  int leading_digit() const;
  // Mantissa reduced mod p^k as a machine integer; requires k <= known_digits().
  long long mantissa_mod(int k) const;

  PAdic operator-() const;
  PAdic operator+(const PAdic& o) const;
  PAdic operator-(const PAdic& o) const;
  PAdic operator*(const PAdic& o) const;
  PAdic operator/(const PAdic& o) const;
  PAdic inverse() const;
  // p^k * (*this).
  PAdic shift(int k) const;
  PAdic pow(int n) const;

  // Equality at the shared known precision.
  bool equals(const PAdic& o) const;

  // Fractional part as (num, k) with frac = num / p^k in [0, 1); requires the
  // digits at negative positions to be known.
  std::pair<long long, int> frac_part() const;

  std::string to_string() const;

 private:
  PAdic(long long p, int val, int prec, bigint mant, bool zero)
      : p_(p), val_(val), prec_(prec), mant_(std::move(mant)), zero_(zero) {}
  static PAdic make(long long p, int val, int prec, bigint raw);

  long long p_;
  int val_;
  int prec_;
  bigint mant_;
  bool zero_;
};

// Legendre symbol of the leading digit of a nonzero value.
int legendre(const PAdic& x);
SquareClass square_class(const PAdic& x);

// sgn_tau(x): the quadratic character of Q_p^x attached to the square class
// tau.  Trivial for One; (-1)^val for Eps; for the ramified classes it is
// legendre on units extended by sgn(p) = legendre(-1) (class Pi) and
// sgn(p) = -legendre(-1) (class EpsPi).
int sgn_tau(SquareClass tau, const PAdic& x);
int sgn_theta(const PAdic& theta, const PAdic& x);

// Square root with the same known precision, if x is a square: even valuation
// and residue leading digit.  Of the two roots, returns the one with the
// smaller leading digit.
std::optional<PAdic> sqrt(const PAdic& x);

// Cayley map X -> (1+X)(1-X)^(-1) and its inverse x -> (x-1)(x+1)^(-1).
// Throws std::domain_error at the pole.
PAdic cayley(const PAdic& x);
PAdic cayley_inv(const PAdic& x);

// Working context: an odd prime, default mantissa precision, and the chosen
// non-residue eps (smallest positive one unless overridden).
struct Qp {
  long long p;
  int precision = 24;
  long long eps = 0;  // 0 = pick smallest non-residue

  explicit Qp(long long prime, int digits = 24, long long eps_override = 0);

  PAdic zero() const { return PAdic::zero(p); }
  PAdic integer(long long n) const { return PAdic::from_integer(p, n, precision); }
  PAdic rational(long long n, long long d) const {
    return PAdic::from_rational(p, n, d, precision);
  }
  PAdic unit_pow(long long u, int k) const {
    return PAdic::unit_pow(p, u, k, precision);
  }
  PAdic one() const { return integer(1); }
  PAdic uniformiser() const { return unit_pow(1, 1); }
  PAdic epsilon() const { return integer(eps); }

  // Named square-class representatives used throughout: 1, eps, p, eps^2*p,
  // p^2*eps, eps*p.  The first five cover the classes One, Eps, Pi with two
  // non-normalized variants; eps*p is the fourth class.
  PAdic class_rep(const std::string& name) const;
};

}  // namespace sl2ft
