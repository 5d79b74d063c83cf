#include "sl2ft/characters.hpp"

#include <cmath>
#include <sstream>

namespace sl2ft {

AdditiveCharacter AdditiveCharacter::standard(const Qp& k) {
  return AdditiveCharacter(k.one());
}

AdditiveCharacter AdditiveCharacter::twist(const PAdic& b) const {
  if (b.is_zero()) throw std::invalid_argument("AdditiveCharacter::twist: b = 0");
  return AdditiveCharacter(scale_ * b);
}

RationalPhase AdditiveCharacter::phase(const PAdic& x) const {
  if (x.is_zero()) return {0, 1};
  auto [num, k] = (scale_ * x).frac_part();
  return {num, pow_ll(prime(), k)};
}

ResidueAdditiveCharacter AdditiveCharacter::residue_character() const {
  // twist(p^depth) has depth 0: trivial on p, nontrivial on units.
  PAdic normalized = scale_.shift(depth());
  // normalized has ord -1; its unit part mod p is the residue coefficient.
  return {prime(), normalized.mantissa_mod(1)};
}

Complex MultiplicativeCharacter::at_p_pow(long long p, int n) const {
  double lnq = std::log(static_cast<double>(p));
  Complex value = std::exp(-alpha_ * (lnq * static_cast<double>(n)));
  int sgn_at_p;
  switch (tau_) {
    case SquareClass::One: sgn_at_p = 1; break;
    case SquareClass::Eps: sgn_at_p = -1; break;
    case SquareClass::Pi: sgn_at_p = legendre(-1, p); break;
    case SquareClass::EpsPi: sgn_at_p = -legendre(-1, p); break;
    default: sgn_at_p = 1;
  }
  if (n % 2 != 0 && sgn_at_p == -1) value = -value;
  return value;
}

int MultiplicativeCharacter::unit_sign(long long p, long long u) const {
  if (!is_ramified(tau_)) return 1;
  int l = legendre(u, p);
  if (l == 0) throw std::domain_error("MultiplicativeCharacter::unit_sign: not a unit");
  return l;
}

Complex MultiplicativeCharacter::operator()(const PAdic& x) const {
  long long p = x.prime();
  int n = x.val();
  Complex value = at_p_pow(p, n);
  if (is_ramified(tau_)) value *= legendre(x);
  return value;
}

std::string MultiplicativeCharacter::name() const {
  std::string nu_part;
  if (alpha_ == Complex(0.5)) {
    nu_part = "nu-half";
  } else if (alpha_ == Complex(-0.5)) {
    nu_part = "nu-minus-half";
  } else if (alpha_ != Complex(0)) {
    std::ostringstream os;
    os << "nu-" << alpha_.real();
    if (alpha_.imag() != 0) os << "+" << alpha_.imag() << "i";
    nu_part = os.str();
  }
  std::string sgn_part;
  if (tau_ != SquareClass::One) sgn_part = std::string("sgn-") + to_string(tau_);
  if (nu_part.empty() && sgn_part.empty()) return "1";
  if (nu_part.empty()) return sgn_part;
  if (sgn_part.empty()) return nu_part;
  return nu_part + "-" + sgn_part;
}

}  // namespace sl2ft
