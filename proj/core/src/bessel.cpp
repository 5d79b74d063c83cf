#include "sl2ft/bessel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sl2ft {

namespace {

constexpr double kShellZeroTol = 1e-12;
constexpr int kMaxShellLevel = 14;

void require_depth_minus_one(const AdditiveCharacter& phi, const char* who) {
  if (phi.depth() != -1)
    throw std::invalid_argument(std::string(who) + ": phi must have depth -1");
}

// Exact shell integral  int_{ord(x)=n} phi(c1 x + c2 x^(-1)) chi-bar(x) d*x
// (without the chi(p^n) factor).  Levels are the oscillation orders of the two
// phase terms in the unit coordinate; cosets of 1+p carry constant chi-bar and
// the inner sums are pure phase sums, exact by construction.
Complex bessel_shell(const MultiplicativeCharacter& chi, const PAdic& c1,
                     const PAdic& c2, int n, long long p) {
  int l1 = -(c1.val() + n);
  int l2 = -(c2.val() - n);
  int K = std::max({l1, l2, 1});
  // For K >= 2, splitting each 1+p coset by its top unit digit leaves a
  // linear phase with coefficient w^(-1)(U1 w^2 - U2) at level 1; unless both
  // terms oscillate at the full level (l1 = l2 = K) that coefficient is a
  // unit, so every coset sum vanishes exactly.  In the balanced case only
  // cosets with U1 w0^2 = U2 (mod p) can survive.
  if (K >= 2 && l1 != l2) return 0;
  if (K > kMaxShellLevel)
    throw std::overflow_error("bessel_shell: oscillation level beyond budget");
  int F = std::max({l1, l2, 0});
  long long pK = pow_ll(p, K);
  long long pF = pow_ll(p, F);
  long long U1 = l1 >= 1 ? c1.shift(n).mantissa_mod(l1) * (pF / pow_ll(p, l1)) : 0;
  long long U2 = l2 >= 1 ? c2.shift(-n).mantissa_mod(l2) * (pF / pow_ll(p, l2)) : 0;
  Complex acc = 0;
  for (long long w0 = 1; w0 < p; ++w0) {
    if (K >= 2 && (w0 * w0 % p * (U1 % p) + p - U2 % p) % p != 0) continue;
    PhaseSum inner(p, F);
    for (long long t = 0; t < pK / p; ++t) {
      long long w = mul_mod(w0, (1 + p * t) % pK, pK);
      long long num = 0;
      if (U1 != 0) num = mul_mod(U1, w % pF, pF);
      if (U2 != 0) num = (num + mul_mod(U2, inv_mod(w, pK) % pF, pF)) % pF;
      inner.add(num);
    }
    acc += static_cast<double>(chi.unit_sign(p, w0)) * inner.value();
  }
  return acc / static_cast<double>(pK);
}

}  // namespace

ShellWindow shell_window(const PAdic& u, const PAdic& v) {
  int band_lo = -u.val() - 1;
  int band_hi = v.val() + 1;
  int diff = v.val() - u.val();
  int stat_lo = diff >= 0 ? diff / 2 : -((-diff + 1) / 2);  // floor(diff/2)
  int stat_hi = diff >= 0 ? (diff + 1) / 2 : -(-diff / 2);  // ceil(diff/2)
  return {std::min(band_lo, stat_lo) - 2, std::max(band_hi, stat_hi) + 2};
}

Complex bessel_oracle(const MultiplicativeCharacter& chi, const PAdic& u,
                      const PAdic& v, const AdditiveCharacter& phi) {
  require_depth_minus_one(phi, "bessel_oracle");
  if (u.is_zero() || v.is_zero())
    throw std::invalid_argument("bessel_oracle: u, v must be nonzero");
  long long p = phi.prime();
  int m = -(u.val() + v.val());
  if (m <= 1 && chi.trivial())
    throw std::domain_error("bessel_oracle: divergent for trivial chi and m <= 1");
  PAdic c1 = phi.scale() * u;
  PAdic c2 = phi.scale() * v;
  ShellWindow win = shell_window(u, v);
  Complex total = 0;
  for (int n = win.lo; n <= win.hi; ++n) {
    Complex shell = chi.at_p_pow(p, n) * bessel_shell(chi, c1, c2, n, p);
    bool guard = n <= win.lo + 1 || n >= win.hi - 1;
    if (guard && std::abs(shell) > kShellZeroTol)
      throw std::logic_error("bessel_oracle: boundary shell failed to vanish");
    total += shell;
  }
  return total;
}

Complex f_chi(const MultiplicativeCharacter& chi, int half_m, const PAdic& c,
              const AdditiveCharacter& phi) {
  require_depth_minus_one(phi, "f_chi");
  long long p = phi.prime();
  PAdic one = PAdic::from_integer(p, 1, c.known_digits());
  return chi.at_p_pow(p, -half_m) *
         bessel_shell(chi, phi.scale() * one, phi.scale() * c, -half_m, p);
}

Complex bessel_closed(const MultiplicativeCharacter& chi, const PAdic& u,
                      const PAdic& v, const AdditiveCharacter& phi) {
  require_depth_minus_one(phi, "bessel_closed");
  if (u.is_zero() || v.is_zero())
    throw std::invalid_argument("bessel_closed: u, v must be nonzero");
  long long p = phi.prime();
  double q = static_cast<double>(p);
  int m = -(u.val() + v.val());

  if (m <= 1) {
    if (chi.trivial())
      throw std::domain_error("bessel_closed: trivial chi with m <= 1");
    return chi(v) * gamma_factor(chi.inverse(), phi) +
           gamma_factor(chi, phi) / chi(u);
  }

  if (m == 2) {
    PAdic xi_elt = (u * v).shift(2);  // unit
    long long xi = xi_elt.mantissa_mod(1);
    Complex kl = kloosterman(chi.residue_kind(), phi.residue_character(), xi);
    return kl / (q * chi(u.shift(1)));
  }

  if (m % 2 != 0) return 0;

  // m >= 4 even: stationary phase at the square roots of u v.
  auto w = sqrt(u * v);
  if (!w) return 0;
  int digits = w->known_digits();
  PAdic two = PAdic::from_integer(p, 2, digits);
  Complex at_plus = phi(*w * two);
  Complex at_minus = phi(-(*w * two));
  int chi_m1 = chi.sign_at_minus_one(p);
  Complex pair;
  if (m % 4 == 0) {
    pair = at_plus + static_cast<double>(chi_m1) * at_minus;
  } else {
    int sgn_m1 = sgn_tau(SquareClass::Pi, PAdic::from_integer(p, -1, digits));
    pair = at_plus + static_cast<double>(chi_m1 * sgn_m1) * at_minus;
    PAdic varpi = PAdic::unit_pow(p, 1, 1, digits);
    pair *= static_cast<double>(sgn_tau(SquareClass::Pi, *w)) * gauss_sum(varpi, phi);
  }
  return std::pow(q, -m / 4.0) * chi(u.inverse() * *w) * pair;
}

Complex bessel_theta_closed(SquareClass theta, const MultiplicativeCharacter& chi,
                            const PAdic& u, const PAdic& v,
                            const AdditiveCharacter& phi) {
  return 0.5 * (bessel_closed(chi, u, v, phi) +
                bessel_closed(chi.times_sgn(theta), u, v, phi));
}

}  // namespace sl2ft
