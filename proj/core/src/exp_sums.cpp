#include "sl2ft/exp_sums.hpp"

#include <cmath>
#include <stdexcept>

namespace sl2ft {

namespace {

constexpr double kShellZeroTol = 1e-12;

void assert_vanishing_shell(Complex value, const char* where) {
  if (std::abs(value) > kShellZeroTol)
    throw std::logic_error(std::string(where) +
                           ": boundary shell failed to vanish; window miscomputed");
}

// Exact shell integral  int_{ord(x)=n} phi(x) chi(x) d*x  for mildly ramified
// chi.  Grouped as outer unit cosets mod p (chi is constant there) and inner
// pure phase sums, so shells that vanish do so exactly.
Complex gamma_shell(const MultiplicativeCharacter& chi, const AdditiveCharacter& phi,
                    int n) {
  long long p = phi.prime();
  int level = phi.depth() + 1 - n;  // oscillation level of phi on the shell
  int K = std::max(level, 1);
  long long pK = pow_ll(p, K);
  long long den = level >= 1 ? pow_ll(p, level) : 1;
  long long U = level >= 1 ? phi.scale().shift(n).mantissa_mod(level) : 0;
  Complex acc = 0;
  for (long long w0 = 1; w0 < p; ++w0) {
    PhaseSum inner(p, std::max(level, 0));
    for (long long t = 0; t < pK / p; ++t) {
      long long w = mul_mod(w0, (1 + p * t) % pK, pK);
      inner.add(level >= 1 ? mul_mod(U, w % den, den) : 0);
    }
    acc += static_cast<double>(chi.unit_sign(p, w0)) * inner.value();
  }
  return chi.at_p_pow(p, n) * acc / static_cast<double>(pK);
}

}  // namespace

Complex gauss_sum(const PAdic& varpi, const AdditiveCharacter& phi) {
  long long p = phi.prime();
  if (varpi.is_zero() || varpi.val() != 1)
    throw std::invalid_argument("gauss_sum: varpi must have valuation 1");
  AdditiveCharacter normalized = phi.twist((-varpi).pow(phi.depth()));  // depth 0
  PhaseSum sum(p, 1);
  for (long long x = 0; x < p; ++x) {
    PAdic xx = PAdic::from_integer(p, x * x, 4);
    sum.add_phase(normalized.phase(xx));
  }
  return sum.value() / std::sqrt(static_cast<double>(p));
}

Complex residue_quadratic_gauss(const ResidueAdditiveCharacter& phibar) {
  PhaseSum plus(phibar.p, 1), minus(phibar.p, 1);
  for (long long x = 1; x < phibar.p; ++x)
    (legendre(x, phibar.p) == 1 ? plus : minus).add_phase(phibar.phase(x));
  return plus.value() - minus.value();
}

Complex kloosterman(ResidueCharKind chibar, const ResidueAdditiveCharacter& phibar,
                    long long xi) {
  long long p = phibar.p;
  xi = ((xi % p) + p) % p;
  if (xi == 0) throw std::invalid_argument("kloosterman: xi must be a unit");
  PhaseSum plus(p, 1), minus(p, 1);
  for (long long x = 1; x < p; ++x) {
    long long arg = (x + mul_mod(xi, inv_mod(x, p), p)) % p;
    bool neg = chibar == ResidueCharKind::Quadratic && legendre(x, p) == -1;
    (neg ? minus : plus).add_phase(phibar.phase(arg));
  }
  return plus.value() - minus.value();
}

Complex gamma_factor(const MultiplicativeCharacter& chi, const AdditiveCharacter& phi) {
  if (chi.trivial())
    throw std::invalid_argument("gamma_factor: chi must be nontrivial");
  long long p = phi.prime();
  int d = phi.depth();
  assert_vanishing_shell(gamma_shell(chi, phi, d - 1), "gamma_factor");
  assert_vanishing_shell(gamma_shell(chi, phi, d - 2), "gamma_factor");
  Complex total = gamma_shell(chi, phi, d);
  if (chi.unramified()) {
    // sum_{n >= d+1} chi(p)^n * (1 - 1/q), continued past |chi(p)| >= 1.
    Complex cp = chi.at_p_pow(p, 1);
    if (std::abs(Complex(1) - cp) < 1e-9)
      throw std::domain_error("gamma_factor: pole of the unramified tail");
    double unit_measure = 1.0 - 1.0 / static_cast<double>(p);
    total += unit_measure * chi.at_p_pow(p, d + 1) / (Complex(1) - cp);
  } else {
    assert_vanishing_shell(gamma_shell(chi, phi, d + 1), "gamma_factor");
    assert_vanishing_shell(gamma_shell(chi, phi, d + 2), "gamma_factor");
  }
  return total;
}

Complex gaussian_pv_dt(const AdditiveCharacter& phi, const PAdic& a) {
  if (a.is_zero()) throw std::invalid_argument("gaussian_pv_dt: a = 0");
  long long p = phi.prime();
  PAdic folded = phi.scale() * a;  // integrand is standard(folded * t^2)
  int A = folded.val();
  // Smallest n with the integrand trivial on ord(t) >= n; that region has
  // additive measure q^(-n0).
  int n0 = A % 2 == 0 ? -A / 2 : (-A + 1) / 2;
  Complex total = std::pow(static_cast<double>(p), -n0);
  for (int n = n0 - 1; n >= n0 - 3; --n) {
    int K = -A - 2 * n;  // oscillation level in the unit coordinate, >= 1 here
    // Splitting each unit coset by its top digit leaves the linear phase
    // 2 U tau^2 u / p, a unit multiple of u since p is odd, so every shell of
    // level >= 2 vanishes exactly.  Level 2 is still enumerated to keep the
    // vanishing assertion honest; higher levels are skipped.
    if (K >= 3) continue;
    long long pK = pow_ll(p, K);
    long long U = folded.shift(2 * n).mantissa_mod(K);
    PhaseSum sum(p, K);
    for (long long tau = 1; tau < pK; ++tau) {
      if (tau % p == 0) continue;
      sum.add(mul_mod(U, mul_mod(tau, tau, pK), pK));
    }
    Complex shell = sum.value() * std::pow(static_cast<double>(p), -(n + K));
    if (n <= n0 - 2) assert_vanishing_shell(shell, "gaussian_pv_dt");
    total += shell;
  }
  return total;
}

Complex shalika_h(const AdditiveCharacter& phi, const PAdic& b) {
  if (b.is_zero()) throw std::invalid_argument("shalika_h: b = 0");
  long long p = phi.prime();
  double amp = std::pow(static_cast<double>(p), b.val() / 2.0);  // |b|^(-1/2)
  if ((phi.depth() - b.val()) % 2 == 0) {
    PAdic varpi = PAdic::unit_pow(p, 1, 1, b.known_digits());
    return amp * static_cast<double>(sgn_tau(SquareClass::Pi, b)) *
           gauss_sum(varpi, phi);
  }
  return Complex(amp);
}

}  // namespace sl2ft
