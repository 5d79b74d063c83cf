#include "sl2ft/padic.hpp"

#include <algorithm>
#include <sstream>

namespace sl2ft {

namespace {

bigint big_pow(long long p, int k) {
  bigint r = 1;
  for (int i = 0; i < k; ++i) r *= p;
  return r;
}

bigint big_inv_mod(const bigint& a, const bigint& m) {
  // Extended Euclid; gcd(a, m) = 1 assumed.
  bigint r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 != 0) {
    bigint q = r0 / r1;
    bigint r2 = r0 - q * r1;
    bigint s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("big_inv_mod: not invertible");
  s0 %= m;
  if (s0 < 0) s0 += m;
  return s0;
}

void check_same_prime(const PAdic& a, const PAdic& b) {
  if (a.prime() != b.prime())
    throw std::invalid_argument("PAdic: mixed primes");
}

}  // namespace

SquareClass operator*(SquareClass a, SquareClass b) {
  return static_cast<SquareClass>(static_cast<int>(a) ^ static_cast<int>(b));
}

const char* to_string(SquareClass c) {
  switch (c) {
    case SquareClass::One: return "1";
    case SquareClass::Eps: return "eps";
    case SquareClass::Pi: return "pi";
    case SquareClass::EpsPi: return "epspi";
  }
  return "?";
}

bool is_ramified(SquareClass c) {
  return c == SquareClass::Pi || c == SquareClass::EpsPi;
}

bool is_split(SquareClass c) { return c == SquareClass::One; }

int legendre(long long u, long long p) {
  u %= p;
  if (u < 0) u += p;
  if (u == 0) return 0;
  long long r = 1, b = u, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, b, p);
    b = mul_mod(b, b, p);
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

long long smallest_nonresidue(long long p) {
  for (long long u = 2; u < p; ++u)
    if (legendre(u, p) == -1) return u;
  throw std::invalid_argument("smallest_nonresidue: p must be an odd prime");
}

long long pow_ll(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (1LL << 62) / base)
      throw std::overflow_error("pow_ll: exponent too large for exact arithmetic");
    r *= base;
  }
  return r;
}

long long mul_mod(long long a, long long b, long long m) {
  return static_cast<long long>(static_cast<__int128>(a) * b % m);
}

long long inv_mod(long long a, long long m) {
  long long r0 = m, r1 = a % m, s0 = 0, s1 = 1;
  if (r1 < 0) r1 += m;
  while (r1 != 0) {
    long long q = r0 / r1;
    long long r2 = r0 - q * r1, s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw std::domain_error("inv_mod: not invertible");
  s0 %= m;
  return s0 < 0 ? s0 + m : s0;
}

PAdic PAdic::zero(long long p) { return PAdic(p, 0, 0, 0, true); }

PAdic PAdic::make(long long p, int val, int prec, bigint raw) {
  // Normalize: reduce mod p^prec, strip trailing zero digits into val.
  if (prec < 1) throw insufficient_precision("PAdic: no known digits");
  bigint mod = big_pow(p, prec);
  raw %= mod;
  if (raw < 0) raw += mod;
  if (raw == 0) return zero(p);
  int shift = 0;
  while (raw % p == 0) {
    raw /= p;
    ++shift;
  }
  prec -= shift;
  if (prec < 1) throw insufficient_precision("PAdic: cancellation consumed all digits");
  return PAdic(p, val + shift, prec, std::move(raw), false);
}

PAdic PAdic::from_integer(long long p, long long n, int digits) {
  return from_integer(p, bigint(n), digits);
}

PAdic PAdic::from_integer(long long p, const bigint& n, int digits) {
  if (p < 3 || p % 2 == 0) throw std::invalid_argument("PAdic: p must be an odd prime");
  if (n == 0) return zero(p);
  // Exact input: strip the p-part first so the digit budget buys mantissa
  // digits, not absolute precision.
  bigint m = n;
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return make(p, v, digits, std::move(m));
}

PAdic PAdic::from_rational(long long p, long long num, long long den, int digits) {
  if (den == 0) throw std::invalid_argument("PAdic: zero denominator");
  if (num == 0) return zero(p);
  int v = 0;
  while (num % p == 0) { num /= p; ++v; }
  while (den % p == 0) { den /= p; --v; }
  bigint mod = big_pow(p, digits);
  bigint m = bigint(num) % mod;
  if (m < 0) m += mod;
  bigint d = bigint(den) % mod;
  if (d < 0) d += mod;
  return make(p, v, digits, m * big_inv_mod(d, mod));
}

PAdic PAdic::unit_pow(long long p, long long u, int k, int digits) {
  if (u % p == 0) throw std::invalid_argument("PAdic::unit_pow: u divisible by p");
  return from_integer(p, u, digits).shift(k);
}

int PAdic::val() const {
  if (zero_) throw std::domain_error("PAdic::val: zero has no valuation");
  return val_;
}

int PAdic::known_digits() const {
  if (zero_) throw std::domain_error("PAdic::known_digits: exact zero");
  return prec_;
}

const bigint& PAdic::mantissa() const {
  if (zero_) throw std::domain_error("PAdic::mantissa: exact zero");
  return mant_;
}

int PAdic::leading_digit() const {
  return static_cast<int>(mantissa() % p_);
}

long long PAdic::mantissa_mod(int k) const {
  if (zero_) throw std::domain_error("PAdic::mantissa_mod: exact zero");
  if (k > prec_)
    throw insufficient_precision("PAdic::mantissa_mod: only " +
                                 std::to_string(prec_) + " digits known, need " +
                                 std::to_string(k));
  return static_cast<long long>(mant_ % big_pow(p_, k));
}

PAdic PAdic::operator-() const {
  if (zero_) return *this;
  return PAdic(p_, val_, prec_, big_pow(p_, prec_) - mant_, false);
}

PAdic PAdic::operator+(const PAdic& o) const {
  check_same_prime(*this, o);
  if (zero_) return o;
  if (o.zero_) return *this;
  int v = std::min(val_, o.val_);
  // The sum is known modulo p^K; cancellation below K collapses to exact zero.
  int K = std::min(val_ + prec_, o.val_ + o.prec_) - v;
  bigint s = mant_ * big_pow(p_, val_ - v) + o.mant_ * big_pow(p_, o.val_ - v);
  bigint mod = big_pow(p_, K);
  s %= mod;
  if (s == 0) return zero(p_);
  return make(p_, v, K, std::move(s));
}

PAdic PAdic::operator-(const PAdic& o) const { return *this + (-o); }

PAdic PAdic::operator*(const PAdic& o) const {
  check_same_prime(*this, o);
  if (zero_ || o.zero_) return zero(p_);
  int prec = std::min(prec_, o.prec_);
  bigint m = (mant_ * o.mant_) % big_pow(p_, prec);
  return PAdic(p_, val_ + o.val_, prec, std::move(m), false);
}

PAdic PAdic::inverse() const {
  if (zero_) throw std::domain_error("PAdic::inverse: division by zero");
  bigint mod = big_pow(p_, prec_);
  return PAdic(p_, -val_, prec_, big_inv_mod(mant_, mod), false);
}

PAdic PAdic::operator/(const PAdic& o) const { return *this * o.inverse(); }

PAdic PAdic::shift(int k) const {
  if (zero_) return *this;
  return PAdic(p_, val_ + k, prec_, mant_, false);
}

PAdic PAdic::pow(int n) const {
  if (n == 0) return from_integer(p_, 1, zero_ ? 1 : prec_);
  PAdic base = n > 0 ? *this : inverse();
  int e = n > 0 ? n : -n;
  PAdic r = base;
  for (int i = 1; i < e; ++i) r = r * base;
  return r;
}

bool PAdic::equals(const PAdic& o) const {
  check_same_prime(*this, o);
  if (zero_ || o.zero_) return zero_ == o.zero_;
  if (val_ != o.val_) return false;
  int prec = std::min(prec_, o.prec_);
  bigint mod = big_pow(p_, prec);
  return mant_ % mod == o.mant_ % mod;
}

std::pair<long long, int> PAdic::frac_part() const {
  if (zero_) return {0, 0};
  if (val_ >= 0) return {0, 0};
  int k = -val_;
  if (prec_ < k)
    throw insufficient_precision("PAdic::frac_part: digits below the point not all known");
  long long den = pow_ll(p_, k);  // overflow guard inside
  return {static_cast<long long>(mant_ % den), k};
}

std::string PAdic::to_string() const {
  if (zero_) return "0";
  std::ostringstream os;
  os << mant_ << "*" << p_ << "^" << val_ << " (mod " << p_ << "^"
     << (val_ + prec_) << ")";
  return os.str();
}

int legendre(const PAdic& x) { return legendre(x.leading_digit(), x.prime()); }

SquareClass square_class(const PAdic& x) {
  bool odd = x.val() % 2 != 0;
  bool residue = legendre(x) == 1;
  if (!odd) return residue ? SquareClass::One : SquareClass::Eps;
  return residue ? SquareClass::Pi : SquareClass::EpsPi;
}

int sgn_tau(SquareClass tau, const PAdic& x) {
  long long p = x.prime();
  int n = x.val();
  switch (tau) {
    case SquareClass::One:
      return 1;
    case SquareClass::Eps:
      return n % 2 == 0 ? 1 : -1;
    case SquareClass::Pi: {
      // sgn(p) = legendre(-1), so that -p (a norm) has sgn +1.
      int at_p = legendre(-1, p);
      return legendre(x) * (n % 2 == 0 ? 1 : at_p);
    }
    case SquareClass::EpsPi: {
      int at_p = -legendre(-1, p);
      return legendre(x) * (n % 2 == 0 ? 1 : at_p);
    }
  }
  return 1;
}

int sgn_theta(const PAdic& theta, const PAdic& x) {
  return sgn_tau(square_class(theta), x);
}

std::optional<PAdic> sqrt(const PAdic& x) {
  if (x.is_zero()) return x;
  long long p = x.prime();
  if (x.val() % 2 != 0) return std::nullopt;
  if (legendre(x) != 1) return std::nullopt;
  int prec = x.known_digits();
  const bigint& m = x.mantissa();
  long long r0 = 0;
  long long m0 = static_cast<long long>(m % p);
  for (long long c = 1; c < p; ++c)
    if (mul_mod(c, c, p) == m0 % p) { r0 = c; break; }
  if (p - r0 < r0) r0 = p - r0;  // deterministic root: smaller leading digit
  // Hensel lifting doubling the modulus, Newton step r -= (r^2 - m) / (2r).
  bigint r = r0;
  int k = 1;
  while (k < prec) {
    k = std::min(2 * k, prec);
    bigint mod = 1;
    for (int i = 0; i < k; ++i) mod *= p;
    bigint num = (r * r - m) % mod;
    if (num < 0) num += mod;
    bigint den = big_inv_mod(2 * r % mod, mod);
    r = (r - num * den) % mod;
    if (r < 0) r += mod;
  }
  return PAdic::from_integer(p, r, prec).shift(x.val() / 2);
}

PAdic cayley(const PAdic& x) {
  PAdic one = PAdic::from_integer(x.prime(), 1, x.is_zero() ? 24 : x.known_digits());
  PAdic denom = one - x;
  if (denom.is_zero()) throw std::domain_error("cayley: pole at x = 1");
  return (one + x) / denom;
}

PAdic cayley_inv(const PAdic& x) {
  PAdic one = PAdic::from_integer(x.prime(), 1, x.is_zero() ? 24 : x.known_digits());
  PAdic denom = one + x;
  if (denom.is_zero()) throw std::domain_error("cayley_inv: pole at x = -1");
  return (x - one) / denom;
}

namespace {
bool is_prime_ll(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}
}  // namespace

Qp::Qp(long long prime, int digits, long long eps_override)
    : p(prime), precision(digits) {
  if (p < 3 || p % 2 == 0 || !is_prime_ll(p))
    throw std::invalid_argument("Qp: p must be an odd prime");
  if (precision < 4 || precision > 64)
    throw std::invalid_argument("Qp: precision out of range [4, 64]");
  if (eps_override != 0) {
    if (legendre(eps_override, p) != -1)
      throw std::invalid_argument("Qp: eps override must be a non-residue unit");
    eps = eps_override;
  } else {
    eps = smallest_nonresidue(p);
  }
}

PAdic Qp::class_rep(const std::string& name) const {
  if (name == "1") return one();
  if (name == "eps") return epsilon();
  if (name == "pi") return uniformiser();
  if (name == "eps2pi") return unit_pow(eps * eps, 1);
  if (name == "pi2eps") return unit_pow(eps, 2);
  if (name == "epspi") return unit_pow(eps, 1);
  throw std::invalid_argument("Qp::class_rep: unknown representative '" + name + "'");
}

}  // namespace sl2ft
