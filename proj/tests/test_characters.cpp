#include "doctest.h"

#include <cmath>
#include <complex>
#include <vector>

#include "sl2ft/characters.hpp"
#include "sl2ft/padic.hpp"
#include "sl2ft/phases.hpp"

using namespace sl2ft;

namespace {
constexpr double kTol = 1e-12;
}

TEST_CASE("standard additive character") {
  Qp k(5);
  AdditiveCharacter phi = AdditiveCharacter::standard(k);
  CHECK(phi.depth() == -1);

  // Trivial on the integers.
  CHECK(phi.phase(k.integer(3)).num == 0);
  CHECK(phi.phase(k.zero()).num == 0);
  CHECK(phi(k.integer(-7)) == Complex(1));

  // phi(2/5) = e^(4 pi i / 5).
  RationalPhase ph = phi.phase(k.rational(2, 5));
  CHECK(ph.num == 2);
  CHECK(ph.den == 5);
  CHECK(std::abs(phi(k.rational(2, 5)) -
                 std::exp(Complex(0, 4 * M_PI / 5))) < kTol);

  // Denominators clear correctly: 7/75 = 19/25 mod Z_5.
  ph = phi.phase(k.rational(7, 75));
  CHECK(ph.num == 19);
  CHECK(ph.den == 25);
}

TEST_CASE("twisting shifts depth and composes") {
  Qp k(7);
  AdditiveCharacter phi = AdditiveCharacter::standard(k);

  AdditiveCharacter deep = phi.twist(k.uniformiser().pow(2));
  CHECK(deep.depth() == -3);
  AdditiveCharacter shallow = phi.twist(k.rational(3, 7));
  CHECK(shallow.depth() == 0);

  // twist(a) then twist(b) agrees with twist(a*b) pointwise.
  PAdic a = k.rational(2, 7), b = k.integer(21);
  std::vector<PAdic> pts = {k.rational(1, 49), k.rational(5, 7), k.integer(4),
                            k.rational(3, 343)};
  for (const PAdic& x : pts) {
    Complex lhs = phi.twist(a).twist(b)(x);
    Complex rhs = phi.twist(a * b)(x);
    CHECK(std::abs(lhs - rhs) < kTol);
    // and both equal phi evaluated at the product
    CHECK(std::abs(lhs - phi(a * b * x)) < kTol);
  }

  CHECK_THROWS_AS(phi.twist(k.zero()), std::invalid_argument);
}

TEST_CASE("residue character restriction") {
  Qp k(5);
  AdditiveCharacter phi = AdditiveCharacter::standard(k);
  ResidueAdditiveCharacter bar = phi.residue_character();
  CHECK(bar.p == 5);
  CHECK(bar.c == 1);

  // Twisting by a unit changes the residue coefficient by that unit.
  ResidueAdditiveCharacter bar3 = phi.twist(k.integer(3)).residue_character();
  CHECK(bar3.c == 3);
  // Twisting by p-powers leaves it alone (the depth normalization absorbs them).
  CHECK(phi.twist(k.uniformiser()).residue_character().c == 1);
  CHECK(phi.twist(k.rational(1, 25)).residue_character().c == 1);

  // The normalized restriction agrees with the p-adic character on lifts.
  AdditiveCharacter normalized = phi.twist(k.uniformiser().pow(phi.depth()));
  for (long long x = 0; x < 5; ++x) {
    CHECK(std::abs(bar(x) - normalized(k.integer(x))) < kTol);
  }
}

TEST_CASE("multiplicative characters split into nu and sgn parts") {
  long long p = 7;
  Qp k(p);
  double q = static_cast<double>(p);

  MultiplicativeCharacter half = MultiplicativeCharacter::nu(0.5);
  CHECK(half.unramified());
  CHECK(!half.trivial());
  CHECK(half.residue_kind() == ResidueCharKind::Trivial);
  CHECK(std::abs(half(k.unit_pow(3, 2)) - Complex(1.0 / q)) < kTol);
  CHECK(std::abs(half.at_p_pow(p, -1) - Complex(std::sqrt(q))) < kTol);

  MultiplicativeCharacter sgn_pi = MultiplicativeCharacter::sgn(SquareClass::Pi);
  CHECK(!sgn_pi.unramified());
  CHECK(sgn_pi.residue_kind() == ResidueCharKind::Quadratic);
  CHECK(sgn_pi.sign_at_minus_one(p) == legendre(-1, p));
  CHECK_THROWS_AS(sgn_pi.unit_sign(p, 14), std::domain_error);

  // Values of sgn-type characters agree with the square-class pairing.
  for (SquareClass tau : {SquareClass::One, SquareClass::Eps, SquareClass::Pi,
                          SquareClass::EpsPi}) {
    MultiplicativeCharacter chi = MultiplicativeCharacter::sgn(tau);
    for (long long u : {1, 2, 3, 4, 5, 6}) {
      for (int n : {-2, -1, 0, 1, 2}) {
        PAdic x = k.unit_pow(u, n);
        CHECK(std::abs(chi(x) - Complex(sgn_tau(tau, x))) < kTol);
      }
    }
  }

  // Inverse and product manipulations.
  MultiplicativeCharacter chi(0.5, SquareClass::Pi);
  CHECK(chi.inverse().alpha() == Complex(-0.5));
  CHECK(chi.inverse().tau() == SquareClass::Pi);
  CHECK(chi.times_sgn(SquareClass::Eps).tau() == SquareClass::EpsPi);
  CHECK(chi.times_nu(0.25).alpha() == Complex(0.75));
}

TEST_CASE("sgn_eps is the unitary unramified character of period two") {
  for (long long p : {3, 5, 7}) {
    Qp k(p);
    double lnq = std::log(static_cast<double>(p));
    MultiplicativeCharacter via_nu = MultiplicativeCharacter::nu(Complex(0, M_PI / lnq));
    MultiplicativeCharacter sgn_eps = MultiplicativeCharacter::sgn(SquareClass::Eps);
    for (long long u : {1LL, 2LL, p - 1}) {
      for (int n : {-1, 0, 1, 2}) {
        PAdic x = k.unit_pow(u, n);
        CHECK(std::abs(via_nu(x) - sgn_eps(x)) < kTol);
      }
    }
  }
}

TEST_CASE("character names") {
  CHECK(MultiplicativeCharacter(0.5, SquareClass::Pi).name() == "nu-half-sgn-pi");
  CHECK(MultiplicativeCharacter(-0.5, SquareClass::One).name() == "nu-minus-half");
  CHECK(MultiplicativeCharacter::sgn(SquareClass::EpsPi).name() == "sgn-epspi");
  CHECK(MultiplicativeCharacter::sgn(SquareClass::One).name() == "1");
}
