#include "sl2ft/transform.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "sl2ft/exp_sums.hpp"
#include "sl2ft/phases.hpp"

namespace sl2ft {

namespace {

constexpr double kShellZeroTol = 1e-12;
constexpr int kMaxShellLevel = 14;

double q_pow(long long p, double e) { return std::pow(static_cast<double>(p), e); }

// |D(Y)|^(-1/2) = q^(ord(D)/2).
double disc_weight(long long p, const OrbitPoint& y) {
  return q_pow(p, 0.5 * y.discriminant().val());
}

// One shell of the norm integral, ord(x) = n.  The two oscillating terms
// s theta' x and s theta x^(-1) fix the unit-coordinate level K; the norm
// indicator and the Gaussian t-integral are constant on 1+p cosets (units
// congruent to 1 mod p are squares), so each coset contributes its t-integral
// times an exact phase sum.  A coset off the norm image contributes nothing.
Complex mock_shell(const DualOrbit& x, const OrbitPoint& y,
                   const AdditiveCharacter& phid, const PAdic& c1,
                   const PAdic& c2, int n) {
  long long p = phid.prime();
  int l1 = -(c1.val() + n);
  int l2 = -(c2.val() - n);
  int K = std::max({l1, l2, 1});
  // Same exact-vanishing argument as the Bessel shells: for K >= 2 the top
  // unit digit carries a linear phase whose coefficient is a unit unless
  // l1 = l2 = K, and in the balanced case only critical cosets survive.  The
  // per-coset factors (indicator, t-integral) are constant on 1+p cosets, so
  // they cannot disturb a vanishing coset sum.
  if (K >= 2 && l1 != l2) return 0;
  if (K > kMaxShellLevel)
    throw std::overflow_error("mock_mu_oracle: oscillation level beyond budget");
  int F = std::max({l1, l2, 0});
  long long pK = pow_ll(p, K);
  long long pF = pow_ll(p, F);
  long long U1 = l1 >= 1 ? c1.shift(n).mantissa_mod(l1) * (pF / pow_ll(p, l1)) : 0;
  long long U2 = l2 >= 1 ? c2.shift(-n).mantissa_mod(l2) * (pF / pow_ll(p, l2)) : 0;
  SquareClass norm_class = x.torus();
  PAdic minus_s = -y.s;
  Complex acc = 0;
  for (long long w0 = 1; w0 < p; ++w0) {
    if (K >= 2 && (w0 * w0 % p * (U1 % p) + p - U2 % p) % p != 0) continue;
    PAdic x0 = PAdic::unit_pow(p, w0, n, y.s.known_digits());
    if (sgn_tau(norm_class, x0) < 0) continue;  // 1/2 (1 + sgn_theta) indicator
    Complex tint = gaussian_pv_dt(phid, minus_s * x0.inverse());
    PhaseSum inner(p, F);
    for (long long t = 0; t < pK / p; ++t) {
      long long w = mul_mod(w0, (1 + p * t) % pK, pK);
      long long num = 0;
      if (U1 != 0) num = mul_mod(U1, w % pF, pF);
      if (U2 != 0) num = (num + mul_mod(U2, inv_mod(w, pK) % pF, pF)) % pF;
      inner.add(num);
    }
    acc += tint * inner.value();
  }
  return acc / static_cast<double>(pK);
}

}  // namespace

const char* to_string(Regime r) {
  switch (r) {
    case Regime::Close: return "close";
    case Regime::FarSameTorus: return "far-same-torus";
    case Regime::FarVanishing: return "far-vanishing";
    case Regime::BadShellSame: return "bad-shell-same";
    case Regime::BadShellOther: return "bad-shell-other";
  }
  return "?";
}

Regime classify(const DualOrbit& x, const OrbitPoint& y) {
  int sum2 = x.depth2() + y.depth2();
  if (sum2 > 0) return Regime::Close;
  if (is_ramified(x.torus()) && sum2 == 0)
    return same_stable_torus(x.theta(), y.theta) ? Regime::BadShellSame
                                                 : Regime::BadShellOther;
  return torus_coordinates(x.theta(), y).empty() ? Regime::FarVanishing
                                                 : Regime::FarSameTorus;
}

PAdic pairing_at(const DualOrbit& x, const OrbitPoint& y, const PAdic& norm,
                 const PAdic& t) {
  PAdic ninv = norm.inverse();
  return x.beta() * y.s * (norm * y.theta + ninv * (x.theta() - t * t));
}

Complex mock_mu_oracle(const Qp& k, const DualOrbit& x, const OrbitPoint& y) {
  const PAdic& th = x.theta();
  if (!(th.equals(k.one()) || th.equals(k.epsilon()) ||
        th.equals(k.uniformiser())))
    throw std::invalid_argument(
        "mock_mu_oracle: theta must be the representative 1, eps, or p; "
        "apply gl2_reduce first");
  if (y.s.is_zero() || y.theta.is_zero())
    throw std::invalid_argument("mock_mu_oracle: Y must be regular semisimple");
  AdditiveCharacter phid = x.phi_beta();
  auto [u, v] = bessel_arguments(x, y);
  PAdic c1 = phid.scale() * (y.s * y.theta);
  PAdic c2 = phid.scale() * (y.s * x.theta());
  ShellWindow win = shell_window(u, v);
  Complex total = 0;
  for (int n = win.lo; n <= win.hi; ++n) {
    Complex shell = mock_shell(x, y, phid, c1, c2, n);
    bool guard = n <= win.lo + 1 || n >= win.hi - 1;
    if (guard && std::abs(shell) > kShellZeroTol)
      throw std::logic_error("mock_mu_oracle: boundary shell failed to vanish");
    total += shell;
  }
  return total;
}

double gamma_un(const DualOrbit& x, const OrbitPoint& y) {
  int sign = ((x.d() + 1) & 1) ? -1 : 1;
  return static_cast<double>(sign * sgn_tau(SquareClass::Eps, y.s));
}

Complex gamma_ram(const Qp& k, const DualOrbit& x, const OrbitPoint& y,
                  bool negate_gauss) {
  Complex g = gauss_sum(k.uniformiser(), x.phi_beta());
  if (negate_gauss) g = -g;
  return static_cast<double>(sgn_tau(SquareClass::Pi, -y.s)) * g;
}

Complex second_orbital_form(const Qp& k, const DualOrbit& x,
                            const OrbitPoint& y) {
  auto [u, v] = bessel_arguments(x, y);
  AdditiveCharacter ref = x.phi_normalized();
  SquareClass th = x.torus();
  auto J = [&](SquareClass tau) {
    return bessel_theta_closed(th, MultiplicativeCharacter(0.5, tau), u, v, ref);
  };
  double gu = gamma_un(x, y);
  Complex gr = gamma_ram(k, x, y);
  double pref =
      0.5 * q_pow(k.p, 0.5 * y.s.val()) * q_pow(k.p, -0.5 * (x.d() + 1));
  return pref * ((J(SquareClass::One) + gu * J(SquareClass::Eps)) +
                 gr * (J(SquareClass::Pi) - gu * J(SquareClass::EpsPi)));
}

Complex weyl_sum(const DualOrbit& x, const OrbitPoint& y) {
  PAdic two =
      PAdic::from_integer(x.beta().prime(), 2, x.beta().known_digits());
  Complex acc = 0;
  for (const PAdic& sp : torus_coordinates(x.theta(), y))
    acc += x.phi()(two * x.beta() * sp * x.theta());
  return acc;
}

BadShellSum bad_shell_sum(const Qp& k, const DualOrbit& x, const OrbitPoint& y,
                          const std::optional<PAdic>& exclude) {
  long long p = k.p;
  int h = x.d();
  long long e0 = exclude ? exclude->mantissa_mod(1) : -1;
  PAdic two = k.integer(2);
  PAdic ysq = y.s * y.s * y.theta;
  Complex acc = 0;
  int terms = 0;
  for (long long c0 = 0; c0 < p; ++c0) {
    if (exclude && (c0 == e0 || c0 == p - e0)) continue;
    ++terms;
    PAdic c = c0 == 0 ? k.zero() : PAdic::unit_pow(p, c0, h - 1, k.precision);
    PAdic zpair = two * x.beta() * x.theta() * c;
    PAdic diff = ysq - c * c * x.theta();
    acc += x.phi()(zpair) * static_cast<double>(sgn_tau(SquareClass::Pi, diff));
  }
  return {acc, terms};
}

// Constant term of the close regime.  For an elliptic torus it is the germ
// constant c0; for the split torus the two ramified-character Bessel rows
// enter the four-row combination with coefficient +1/q each and cancel the
// Q3 pair exactly (Q3(T) + Q3(-T) = -2/q), so no constant survives.
static double close_constant(const DualOrbit& x) {
  return x.elliptic() ? boost::rational_cast<double>(x.c0()) : 0.0;
}

Complex mu_hat_closed(const Qp& k, const DualOrbit& x0, const OrbitPoint& y0,
                      const EvalOptions& opts) {
  ReducedPair red = gl2_reduce(k, x0, y0);
  const DualOrbit& x = red.x;
  const OrbitPoint& y = red.y;
  long long p = k.p;
  double coef = q_pow(p, -(x.d() + 1)) * disc_weight(p, y);
  switch (classify(x, y)) {
    case Regime::FarVanishing:
      return 0;
    case Regime::FarSameTorus:
      return coef * transfer_factor(x, y, opts.negate_gauss) * weyl_sum(x, y);
    case Regime::Close: {
      double two_over_n = x.elliptic() ? 1.0 : 2.0;
      return close_constant(x) +
             two_over_n * coef * transfer_factor(x, y, opts.negate_gauss);
    }
    case Regime::BadShellOther: {
      BadShellSum bs = bad_shell_sum(k, x, y, std::nullopt);
      return 0.5 * coef * q_pow(p, -0.5) * bs.value;
    }
    case Regime::BadShellSame: {
      auto root = sqrt(y.theta * x.theta().inverse());
      if (!root)
        throw std::logic_error(
            "mu_hat_closed: same-torus boundary shell without a square root");
      PAdic e = *root * y.s;  // Y's coordinate on the ramified torus
      PAdic zpair = k.integer(2) * x.beta() * x.theta() * e;
      Complex pair_sum = x.phi()(zpair) + x.phi()(-zpair);
      BadShellSum bs = bad_shell_sum(k, x, y, e);
      return 0.5 * coef *
             (transfer_factor(x, y, opts.negate_gauss) * pair_sum +
              q_pow(p, -0.5) * bs.value);
    }
  }
  throw std::logic_error("mu_hat_closed: unhandled regime");
}

std::optional<Complex> uniform_form(const Qp& k, const DualOrbit& x0,
                                    const OrbitPoint& y0,
                                    const EvalOptions& opts) {
  ReducedPair red = gl2_reduce(k, x0, y0);
  const DualOrbit& x = red.x;
  const OrbitPoint& y = red.y;
  int sum2 = x.depth2() + y.depth2();
  if (is_ramified(x.torus()) && sum2 == 0) return std::nullopt;
  double coef = q_pow(k.p, -(x.d() + 1)) * disc_weight(k.p, y);
  Complex g = transfer_factor(x, y, opts.negate_gauss);
  if (sum2 > 0) {
    double two_over_n = x.elliptic() ? 1.0 : 2.0;
    return close_constant(x) + two_over_n * coef * g;
  }
  return coef * g * weyl_sum(x, y);
}

Complex bessel_bracket_row(const Qp& k, SquareClass row, const DualOrbit& x,
                           const OrbitPoint& y) {
  if (x.depth2() + y.depth2() <= 0)
    throw std::domain_error("bessel_bracket_row: requires the close regime");
  double q = static_cast<double>(k.p);
  double T = 1.0 / std::sqrt(q);
  auto Q3 = [](double t) { return -t * (t * t + t + 1.0); };
  double theta_weight = q_pow(k.p, -0.5 * x.theta().val());  // |theta|^(1/2)
  double b_coef = q_pow(k.p, -(x.d() + 1)) * disc_weight(k.p, y);
  double sg_th = static_cast<double>(sgn_tau(row, x.theta()));
  double sg_thp = static_cast<double>(sgn_tau(row, y.theta));
  Complex coef;
  double A;
  switch (row) {
    case SquareClass::One:
      coef = 1.0;
      A = Q3(T);
      break;
    case SquareClass::Eps:
      coef = gamma_un(x, y);
      A = sg_th * Q3(-T);
      break;
    case SquareClass::Pi:
      coef = 1.0 / gamma_ram(k, x, y);
      A = sg_th / q;
      break;
    case SquareClass::EpsPi:
      coef = -gamma_un(x, y) / gamma_ram(k, x, y);
      A = sg_th / q;
      break;
    default:
      throw std::invalid_argument("bessel_bracket_row: bad row");
  }
  return coef * (theta_weight * A + b_coef * sg_thp);
}

Rational verify_measure_normalization(const Qp& k, SquareClass torus) {
  long long q = k.p;
  auto modq = [q](long long v) { return ((v % q) + q) % q; };
  long long sl2 = 0;
  for (long long a = 0; a < q; ++a)
    for (long long b = 0; b < q; ++b)
      for (long long c = 0; c < q; ++c)
        for (long long d = 0; d < q; ++d)
          if (modq(a * d - b * c) == 1) ++sl2;
  switch (torus) {
    case SquareClass::One: {
      // meas = q^-2 [SL2 : T-bar], the norm-one torus counted directly.
      long long t1 = 0;
      for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b)
          if (modq(a * a - b * b) == 1) ++t1;
      return Rational(sl2, t1) * Rational(1, q * q);
    }
    case SquareClass::Eps: {
      // meas = (d* measure of the unit norms) * (dt measure of O): the norm
      // image a^2 - eps b^2 fills the units of the residue field.
      long long ebar = modq(k.epsilon().mantissa_mod(1));
      std::vector<char> hit(static_cast<std::size_t>(q), 0);
      for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b)
          hit[static_cast<std::size_t>(modq(a * a - ebar * b * b))] = 1;
      long long image = 0;
      for (long long r = 1; r < q; ++r) image += hit[static_cast<std::size_t>(r)];
      return Rational(image, q);
    }
    default: {
      // meas = (norm cokernel)^-1 * (unit measure) * (dt measure of p)
      //      * [SL2 : B-bar]; ramified unit norms reduce to the squares.
      long long borel = q * (q - 1);
      std::vector<char> hit(static_cast<std::size_t>(q), 0);
      for (long long a = 1; a < q; ++a) hit[static_cast<std::size_t>(modq(a * a))] = 1;
      long long squares = 0;
      for (long long r = 1; r < q; ++r) squares += hit[static_cast<std::size_t>(r)];
      return Rational(squares, q - 1) * Rational(q - 1, q) * Rational(1, q) *
             Rational(sl2, borel);
    }
  }
}

}  // namespace sl2ft
