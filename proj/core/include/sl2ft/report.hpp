// Evaluation reports and grid runs: the plumbing layer that turns transform
// evaluations into serializable records.  Complex values are serialized as
// {re, im} pairs with 17 significant digits so that emitted JSON parses back
// to the identical doubles and re-serializes byte-for-byte.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sl2ft/padic.hpp"
#include "sl2ft/transform.hpp"

namespace sl2ft {

// Parse a p-adic literal "u" or "u*p^k" (unit integer u coprime to p, integer
// exponent k) into an element of the working field.
// Throws std::invalid_argument on malformed input or p | u.
PAdic parse_padic_literal(const Qp& k, const std::string& text);

// One evaluated point.  beta and s are kept in literal form so that records
// round-trip through serialization without re-deriving representations.
struct EvalReport {
  long long p = 0;
  int phi_depth = -1;
  std::string beta;
  std::string theta;
  std::string s;
  std::string thetap;
  std::string regime;
  Complex closed_value{0, 0};
  std::optional<Complex> oracle_value;
  double abs_error = 0;
  bool pass = true;  // abs_error <= tolerance whenever an oracle value exists
  std::string structure;
};

// Evaluate one point: closed form always, the defining-integral oracle when
// requested, plus the regime's structural decomposition.
EvalReport evaluate_point(const Qp& k, const DualOrbit& x, const OrbitPoint& y,
                          const std::string& beta_lit, const std::string& theta,
                          const std::string& s_lit, const std::string& thetap,
                          bool with_oracle, double tolerance,
                          const EvalOptions& opts = {});

// A rectangular verification grid.  For each (theta, d, theta') cell the
// valuation of s sweeps the far/close regime boundary by +-s_halfwidth, so
// every regime of the transform is visited.
struct GridSpec {
  std::vector<std::string> theta_classes = {"1", "eps", "pi", "eps2pi", "pi2eps"};
  std::vector<std::string> thetap_classes = {"1",     "eps",    "pi",
                                             "epspi", "eps2pi", "pi2eps"};
  std::vector<int> depths = {-2, -1, 0, 1};  // d, realized via beta = p^-(d+1)
  int s_halfwidth = 2;
  double tolerance = 1e-8;
  std::string regime_filter;  // keep regimes whose name starts with this
  bool with_oracle = true;
  bool perturb = false;  // canary: flip one Gauss-sum sign inside the closed form
  std::size_t max_points = 10000;

  // Trimmed ~180-point subgrid for smoke runs.
  void restrict_to_quick();
};

// Largest ord(s) for which (X*, Y) stays in the far range; the grid sweeps
// around this valuation.
int far_boundary_ord_s(const DualOrbit& x, const PAdic& thetap);

// Run the grid in deterministic input order.
std::vector<EvalReport> run_grid(const Qp& k, const GridSpec& spec);

// Serialization.  to_json is the only JSON writer; parsing an emitted string
// and re-serializing reproduces it exactly.
std::string to_json(const std::vector<EvalReport>& reports);
std::vector<EvalReport> reports_from_json(const std::string& text);
std::string to_csv(const std::vector<EvalReport>& reports);
std::string to_text(const std::vector<EvalReport>& reports);

// Fixed CSV column set (golden header).
extern const char* const kCsvHeader;

}  // namespace sl2ft
