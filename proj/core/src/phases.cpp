#include "sl2ft/phases.hpp"

#include "sl2ft/padic.hpp"

#include <cmath>
#include <numbers>

namespace sl2ft {

Complex RationalPhase::value() const {
  double angle = 2.0 * std::numbers::pi * (static_cast<double>(num) / static_cast<double>(den));
  return {std::cos(angle), std::sin(angle)};
}

PhaseSum::PhaseSum(long long p, int k) : p_(p), k_(k), den_(pow_ll(p, k)) {}

void PhaseSum::add(long long num, long long count) {
  num %= den_;
  if (num < 0) num += den_;
  counts_[num] += count;
}

void PhaseSum::add_phase(const RationalPhase& ph, long long count) {
  if (den_ % ph.den != 0)
    throw std::invalid_argument("PhaseSum::add_phase: denominator does not divide p^k");
  add(ph.num * (den_ / ph.den), count);
}

std::map<long long, long long> PhaseSum::reduced() const {
  // Z-basis of Z[zeta]: zeta^i for i < p^(k-1)*(p-1).  The top slice
  // i = n + (p-1)*p^(k-1) rewrites as -sum of the lower slices.
  if (k_ == 0) return counts_;
  long long block = den_ / p_;
  std::map<long long, long long> out;
  for (const auto& [n, c] : counts_) {
    if (c == 0) continue;
    if (n < block * (p_ - 1)) {
      out[n] += c;
    } else {
      long long n0 = n - block * (p_ - 1);
      for (long long j = 0; j + 1 < p_; ++j) out[n0 + j * block] -= c;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

bool PhaseSum::is_zero() const { return reduced().empty(); }

Complex PhaseSum::value() const {
  Complex total = 0;
  for (const auto& [n, c] : reduced())
    total += static_cast<double>(c) * RationalPhase{n, den_}.value();
  return total;
}

bool approx_equal(Complex a, Complex b, double tol) {
  return std::abs(a - b) <= tol;
}

}  // namespace sl2ft
