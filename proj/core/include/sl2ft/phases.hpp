#pragma once

// Exact accumulation of p-power root-of-unity sums.
//
// A character sum over one shell is a Z-linear combination of p^k-th roots of
// unity.  PhaseSum collects integer counts per phase and reduces against the
// relations sum_j zeta^(n + j*p^(k-1)) = 0 before converting to floating
// point, so a sum that vanishes identically comes out as exactly 0.0 and a
// nonzero sum suffers only one rounding per distinct surviving phase.

#include <complex>
#include <cstdint>
#include <map>

namespace sl2ft {

using Complex = std::complex<double>;

// e^(2*pi*i * num / p^k).
struct RationalPhase {
  long long num = 0;
  long long den = 1;  // p^k

  Complex value() const;
};

class PhaseSum {
 public:
  // Denominator p^k; k = 0 accumulates plain integers.
  PhaseSum(long long p, int k);

  long long den() const { return den_; }
  // Add count * e^(2*pi*i * num / p^k).
  void add(long long num, long long count = 1);
  // Add a phase expressed over a denominator dividing p^k.
  void add_phase(const RationalPhase& ph, long long count = 1);

  // Exact test: the accumulated sum is identically zero as an algebraic number.
  bool is_zero() const;
  Complex value() const;

 private:
  std::map<long long, long long> reduced() const;

  long long p_;
  int k_;
  long long den_;
  std::map<long long, long long> counts_;
};

// abs(a - b) <= tol, the shared comparison used by tests and reports.
bool approx_equal(Complex a, Complex b, double tol);

}  // namespace sl2ft
