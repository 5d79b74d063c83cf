// Acceptance gate: eight certification criteria, one pass/fail line each.
//
// Every numeric claim of the library is checked here against an independent
// computation: the transform against its defining principal-value integral,
// the exponential-sum closed forms against direct summation, and the measure
// table against residue-field point counts.  Exit status 0 iff every
// criterion passes.

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "sl2ft/bessel.hpp"
#include "sl2ft/exp_sums.hpp"
#include "sl2ft/report.hpp"
#include "sl2ft/transform.hpp"

using namespace sl2ft;

namespace {

constexpr double kTolOracle = 1e-8;     // integral oracle vs closed form
constexpr double kTolIdentity = 1e-10;  // closed-form identities
constexpr double kTolVanishing = 1e-9;  // provably-zero values
constexpr double kTolReal = 1e-12;      // imaginary part of real sums
constexpr double kTimeBudget = 300.0;   // seconds allowed for criterion 1

struct Check {
  bool pass = true;
  long points = 0;
  double max_err = 0.0;
  std::string note;

  void add(double err, double tol) {
    ++points;
    if (err > max_err) max_err = err;
    if (!(err <= tol)) pass = false;
  }
  void expect(bool ok, const std::string& why) {
    ++points;
    if (!ok) {
      pass = false;
      if (note.empty()) note = why;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

AdditiveCharacter depth_shifted(const Qp& k, int depth) {
  return AdditiveCharacter::standard(k).twist(k.uniformiser().pow(-1 - depth));
}

// 1. The defining double principal value agrees with the dispatched closed
// forms across primes, torus classes, character depths, and the full sweep
// of ord(s) through every regime boundary.
Check criterion_oracle_grid(double* elapsed) {
  Check c;
  auto t0 = std::chrono::steady_clock::now();
  for (long long p : {3, 5, 7}) {
    Qp k(p);
    GridSpec spec;
    spec.tolerance = kTolOracle;
    for (const EvalReport& r : run_grid(k, spec)) c.add(r.abs_error, kTolOracle);
  }
  *elapsed = seconds_since(t0);
  c.expect(c.points >= 1500, "grid smaller than 1500 points");
  c.expect(*elapsed < kTimeBudget, "grid exceeded the runtime budget");
  return c;
}

// 2. Gauss-sum transformation laws: unit modulus, uniformiser change, unit
// twist of the character, the square collapsing to sgn(-1), and the
// residue-field expression.
Check criterion_gauss_laws() {
  Check c;
  for (long long p : {3, 5, 7, 11}) {
    Qp k(p);
    PAdic varpi = k.uniformiser();
    double rq = std::sqrt(static_cast<double>(p));
    for (int depth : {-2, -1, 0, 1}) {
      AdditiveCharacter phi = depth_shifted(k, depth);
      Complex g = gauss_sum(varpi, phi);
      c.add(std::abs(std::abs(g) - 1.0), kTolIdentity);
      c.add(std::abs(g * g - Complex(legendre(-1, p))), kTolIdentity);
      Complex residue = residue_quadratic_gauss(phi.residue_character()) *
                        std::pow(static_cast<double>(legendre(-1, p)),
                                 std::abs(depth) % 2) /
                        rq;
      c.add(std::abs(g - residue), kTolIdentity);
      for (long long b = 1; b < p; ++b) {
        double sb = legendre(b, p);
        c.add(std::abs(gauss_sum(k.integer(b) * varpi, phi) -
                       std::pow(sb, std::abs(depth) % 2) * g),
              kTolIdentity);
        c.add(std::abs(gauss_sum(varpi, phi.twist(k.integer(b))) - sb * g),
              kTolIdentity);
      }
    }
  }
  return c;
}

// 3. Gamma factors: the ramified factor reduces to the Gauss sum with the
// depth-parity sign (and its eps twist to the negative); the unramified
// nu^(+-1/2) family, fed through the two-gamma small-argument Bessel branch,
// matches the Bessel principal value.
Check criterion_gamma_factors() {
  Check c;
  for (long long p : {3, 5, 7, 11}) {
    Qp k(p);
    PAdic varpi = k.uniformiser();
    MultiplicativeCharacter chi(0.5, SquareClass::Pi);
    for (int depth : {-2, -1, 0, 1}) {
      AdditiveCharacter phi = depth_shifted(k, depth);
      AdditiveCharacter normalized = phi.twist(varpi.pow(depth + 1));
      Complex gamma = gamma_factor(chi, normalized);
      double sign = (depth + 1) % 2 == 0 ? 1 : legendre(-1, p);
      c.add(std::abs(gamma - sign * gauss_sum(varpi, phi)), kTolIdentity);
      c.add(std::abs(gamma_factor(chi.times_sgn(SquareClass::Eps), normalized) +
                     gamma),
            kTolIdentity);
    }
  }
  const std::vector<std::pair<int, int>> small_orders = {
      {0, 0}, {1, 0}, {0, 1}, {-1, 1}, {1, -1}, {0, -1}, {-1, 0}, {2, -1}};
  for (long long p : {3, 5, 7}) {
    Qp k(p);
    AdditiveCharacter phi = AdditiveCharacter::standard(k);
    for (double alpha : {0.5, -0.5}) {
      for (SquareClass tau : {SquareClass::One, SquareClass::Eps}) {
        MultiplicativeCharacter chi(alpha, tau);
        for (auto [ou, ov] : small_orders) {
          for (long long u0 : {1LL, k.eps}) {
            PAdic u = k.unit_pow(u0, ou), v = k.unit_pow(1, ov);
            c.add(std::abs(bessel_closed(chi, u, v, phi) -
                           bessel_oracle(chi, u, v, phi)),
                  kTolOracle);
          }
        }
      }
    }
  }
  return c;
}

// 4. Bessel dispatch: closed forms vs the shell-summed principal value over
// every branch, the two provably-vanishing branches, and the twist
// identities in nu^alpha and sgn_eps at equal orders and at order gap two.
Check criterion_bessel_dispatch() {
  Check c;
  const std::vector<MultiplicativeCharacter> panel = {
      MultiplicativeCharacter::nu(0.5),
      MultiplicativeCharacter(0.5, SquareClass::Eps),
      MultiplicativeCharacter(0.5, SquareClass::Pi),
      MultiplicativeCharacter(0.5, SquareClass::EpsPi),
      MultiplicativeCharacter::sgn(SquareClass::Eps),
      MultiplicativeCharacter::sgn(SquareClass::Pi)};
  const std::vector<std::pair<int, int>> orders = {
      {0, 0},   {-1, 0},  {0, -1},  {-2, 1},  {-1, -1},
      {-2, -1}, {-2, -2}, {-3, -2}, {-3, -3}, {-4, -2}};
  for (long long p : {3, 5, 7}) {
    Qp k(p);
    AdditiveCharacter phi = AdditiveCharacter::standard(k);
    for (auto [ou, ov] : orders)
      for (long long u0 : {1LL, k.eps})
        for (const auto& chi : panel) {
          PAdic u = k.unit_pow(u0, ou), v = k.unit_pow(1, ov);
          c.add(std::abs(bessel_closed(chi, u, v, phi) -
                         bessel_oracle(chi, u, v, phi)),
                kTolOracle);
        }

    // Vanishing branches: odd m > 2, and even m >= 4 with uv not a square.
    MultiplicativeCharacter triv = MultiplicativeCharacter::nu(0);
    PAdic u = k.unit_pow(1, -2), v = k.unit_pow(k.eps, -1);
    c.add(std::abs(bessel_closed(triv, u, v, phi)), kTolVanishing);
    c.add(std::abs(bessel_oracle(triv, u, v, phi)), kTolVanishing);
    u = k.unit_pow(1, -2), v = k.unit_pow(k.eps, -2);
    c.add(std::abs(bessel_closed(triv, u, v, phi)), kTolVanishing);
    c.add(std::abs(bessel_oracle(triv, u, v, phi)), kTolVanishing);

    // Twist identities at equal orders: nu^alpha and sgn_eps are invisible.
    u = k.unit_pow(1, -2), v = k.unit_pow(k.eps, -2);
    for (SquareClass tau : {SquareClass::One, SquareClass::Eps, SquareClass::Pi,
                            SquareClass::EpsPi}) {
      MultiplicativeCharacter chi = MultiplicativeCharacter::sgn(tau);
      Complex base = bessel_closed(chi, u, v, phi);
      for (double alpha : {0.0, 0.5, 1.0})
        c.add(std::abs(bessel_closed(chi.times_nu(alpha), u, v, phi) - base),
              kTolIdentity);
      c.add(std::abs(bessel_closed(chi.times_sgn(SquareClass::Eps), u, v, phi) -
                     base),
            kTolIdentity);
    }

    // Order gap two: nu^alpha scales by q^alpha and sgn_eps flips the sign.
    double q = static_cast<double>(p);
    u = k.unit_pow(1, -1), v = k.unit_pow(1, -3);
    for (SquareClass tau : {SquareClass::One, SquareClass::Pi}) {
      MultiplicativeCharacter chi = MultiplicativeCharacter::sgn(tau);
      Complex base = bessel_closed(chi, u, v, phi);
      for (double alpha : {0.0, 0.5, 1.0})
        c.add(std::abs(bessel_closed(chi.times_nu(alpha), u, v, phi) -
                       std::pow(q, alpha) * base),
              kTolIdentity);
      c.add(std::abs(bessel_closed(chi.times_sgn(SquareClass::Eps), u, v, phi) +
                     base),
            kTolIdentity);
      c.add(std::abs(bessel_theta_closed(SquareClass::Eps, chi, u, v, phi)),
            kTolIdentity);
    }
  }
  return c;
}

// 5. Residue-field sums: the quadratic-twisted (Salie) sum equals its
// stationary-point closed form for every parameter, and untwisted sums are
// real.
Check criterion_salie_kloosterman() {
  Check c;
  for (long long p : {3, 5, 7, 11, 13}) {
    ResidueAdditiveCharacter bar{p, 1};
    for (long long xi = 1; xi < p; ++xi) {
      c.add(std::abs(kloosterman(ResidueCharKind::Trivial, bar, xi).imag()),
            kTolReal);
      Complex closed = 0;
      for (long long root = 1; root < p; ++root)
        if (mul_mod(root, root, p) == xi) closed += bar(2 * root);
      closed *= static_cast<double>(legendre(xi, p)) *
                residue_quadratic_gauss(bar);
      c.add(std::abs(kloosterman(ResidueCharKind::Quadratic, bar, xi) - closed),
            kTolIdentity);
    }
  }
  return c;
}

// 6. Measure normalizations: residue-field point counting reproduces the
// rational table (q+1)/q, (q-1)/q, (q^2-1)/(2q^2) exactly.
Check criterion_measures() {
  Check c;
  for (long long p : {3, 5, 7, 11}) {
    Qp k(p);
    c.expect(verify_measure_normalization(k, SquareClass::One) ==
                 Rational(p + 1, p),
             "split measure mismatch");
    c.expect(verify_measure_normalization(k, SquareClass::Eps) ==
                 Rational(p - 1, p),
             "unramified measure mismatch");
    for (SquareClass torus : {SquareClass::Pi, SquareClass::EpsPi})
      c.expect(verify_measure_normalization(k, torus) ==
                   Rational(p * p - 1, 2 * p * p),
               "ramified measure mismatch");
    for (SquareClass torus : {SquareClass::One, SquareClass::Eps,
                              SquareClass::Pi, SquareClass::EpsPi}) {
      TorusMass m = torus_mass(k, torus);
      c.expect(m.counted == m.closed, "integral-orbit mass mismatch");
    }
  }
  return c;
}

// 7. Structural checks: the single-formula restatement agrees with the
// regime dispatch wherever it applies, and conjugating theta to its
// reference representative leaves the value unchanged.
Check criterion_uniform_and_transport() {
  Check c;
  for (long long p : {3, 5, 7}) {
    Qp k(p);
    GridSpec spec;
    spec.with_oracle = false;
    for (const EvalReport& r : run_grid(k, spec)) {
      DualOrbit x(AdditiveCharacter::standard(k), parse_padic_literal(k, r.beta),
                  k.class_rep(r.theta));
      OrbitPoint y{parse_padic_literal(k, r.s), k.class_rep(r.thetap)};
      auto uni = uniform_form(k, x, y);
      if (!uni) continue;  // ramified boundary shell: restatement silent
      c.add(std::abs(r.closed_value - *uni), kTolIdentity);
    }

    for (const char* tn : {"pi2eps", "eps2pi"}) {
      DualOrbit x0(AdditiveCharacter::standard(k), k.unit_pow(1, -1),
                   k.class_rep(tn));
      for (const char* tpn :
           {"1", "eps", "pi", "epspi", "eps2pi", "pi2eps"}) {
        PAdic tp = k.class_rep(tpn);
        int s0 = far_boundary_ord_s(x0, tp);
        for (int j = -2; j <= 2; ++j) {
          OrbitPoint y0{k.unit_pow(1, s0 + j), tp};
          ReducedPair red = gl2_reduce(k, x0, y0);
          c.expect(red.x.theta().equals(k.one()) ||
                       red.x.theta().equals(k.epsilon()) ||
                       red.x.theta().equals(k.uniformiser()),
                   "reduction missed the reference representative");
          c.add(std::abs(mu_hat_closed(k, x0, y0) -
                         mu_hat_closed(k, red.x, red.y)),
                kTolOracle);
        }
      }
    }
  }
  return c;
}

// 8. Ramified boundary shells: every depth-sum-zero point against a ramified
// dual torus passes the oracle tolerance, and the lattice sum runs over
// exactly q classes (punctured: q - 2) by construction.
Check criterion_bad_shells() {
  Check c;
  for (long long p : {3, 5}) {
    Qp k(p);
    for (const char* tn : {"pi", "eps2pi"}) {
      for (int d : {-2, -1, 0, 1}) {
        DualOrbit x(AdditiveCharacter::standard(k), k.unit_pow(1, -1 - d),
                    k.class_rep(tn));
        for (const char* tpn : {"pi", "epspi", "eps2pi"}) {
          for (long long u0 : {1LL, k.eps}) {
            // depth2(X*) + 2 ord(s) + ord(theta') = 0 at ord(s) = d - 1.
            OrbitPoint y{k.unit_pow(u0, d - 1), k.class_rep(tpn)};
            c.expect(x.depth2() + y.depth2() == 0, "point off the boundary");
            ReducedPair red = gl2_reduce(k, x, y);
            Regime regime = classify(red.x, red.y);
            c.add(std::abs(mu_hat_closed(k, x, y) -
                           mock_mu_oracle(k, red.x, red.y)),
                  kTolOracle);
            if (regime == Regime::BadShellSame) {
              auto root = sqrt(red.y.theta * red.x.theta().inverse());
              c.expect(root.has_value(), "same-torus shell without a root");
              BadShellSum bs =
                  bad_shell_sum(k, red.x, red.y, *root * red.y.s);
              c.expect(bs.terms == static_cast<int>(p) - 2,
                       "punctured shell term count");
            } else {
              c.expect(regime == Regime::BadShellOther,
                       "boundary point not classified as a boundary shell");
              BadShellSum bs = bad_shell_sum(k, red.x, red.y, std::nullopt);
              c.expect(bs.terms == static_cast<int>(p),
                       "full shell term count");
            }
          }
        }
      }
    }
  }
  return c;
}

int report(int index, const char* name, const Check& c, double elapsed = -1) {
  std::printf("[%s] %d. %s: %ld checks, max err %.3g", c.pass ? "PASS" : "FAIL",
              index, name, c.points, c.max_err);
  if (elapsed >= 0) std::printf(", %.1fs", elapsed);
  if (!c.note.empty()) std::printf(" (%s)", c.note.c_str());
  std::printf("\n");
  std::fflush(stdout);
  return c.pass ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;
  try {
    double grid_seconds = 0;
    failures += report(1, "defining integral matches the closed forms",
                       criterion_oracle_grid(&grid_seconds), grid_seconds);
    failures += report(2, "gauss-sum transformation laws", criterion_gauss_laws());
    failures += report(3, "gamma factors against gauss sums and bessel values",
                       criterion_gamma_factors());
    failures += report(4, "bessel dispatch, vanishing, and twist identities",
                       criterion_bessel_dispatch());
    failures += report(5, "salie closed form and kloosterman reality",
                       criterion_salie_kloosterman());
    failures += report(6, "measure normalization table",
                       criterion_measures());
    failures += report(7, "uniform restatement and transport invariance",
                       criterion_uniform_and_transport());
    failures += report(8, "ramified boundary-shell values and term counts",
                       criterion_bad_shells());
  } catch (const std::exception& e) {
    std::printf("[FAIL] suite aborted: %s\n", e.what());
    return 1;
  }
  return failures == 0 ? 0 : 1;
}
