#include "sl2ft/report.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace sl2ft {

namespace {

// %.17g round-trips every double exactly; -0 is flushed to 0 so that parsing
// an emitted file and re-serializing reproduces it byte for byte.
std::string fmt_double(double d) {
  if (d == 0.0) d = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", d);
  return buf;
}

std::string fmt_complex(Complex z) {
  if (z.imag() == 0.0) return fmt_double(z.real());
  std::string out = fmt_double(z.real());
  out += z.imag() < 0 ? "-" : "+";
  out += fmt_double(std::abs(z.imag()));
  out += "i";
  return out;
}

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

std::string make_literal(long long u, int k) {
  if (k == 0) return std::to_string(u);
  return std::to_string(u) + "*p^" + std::to_string(k);
}

double q_pow(long long p, double e) { return std::pow(static_cast<double>(p), e); }

// q^(-(d+1)) |D(Y)|^(-1/2), the leading coefficient every non-constant term
// of the closed forms carries.  Takes the reduced pair.
double leading_coef(long long p, const DualOrbit& x, const OrbitPoint& y) {
  return q_pow(p, -(x.d() + 1)) * q_pow(p, 0.5 * y.discriminant().val());
}

// Human-readable decomposition of the closed form on the reduced pair,
// mirroring mu_hat_closed branch by branch.
std::string structure_of(const Qp& k, const DualOrbit& x, const OrbitPoint& y,
                         Regime regime, const EvalOptions& opts) {
  double coef = leading_coef(k.p, x, y);
  switch (regime) {
    case Regime::FarVanishing:
      return "0; no presentation of Y on the dual torus";
    case Regime::FarSameTorus: {
      Complex g = transfer_factor(x, y, opts.negate_gauss);
      Complex w = weyl_sum(x, y);
      return "coef * gamma * weyl; coef=" + fmt_double(coef) +
             ", gamma=" + fmt_complex(g) + ", weyl=" + fmt_complex(w);
    }
    case Regime::Close: {
      double constant =
          x.elliptic() ? boost::rational_cast<double>(x.c0()) : 0.0;
      int two_over_n = x.elliptic() ? 1 : 2;
      Complex g = transfer_factor(x, y, opts.negate_gauss);
      return "constant + (2/n) * coef * gamma; constant=" +
             fmt_double(constant) + ", 2/n=" + std::to_string(two_over_n) +
             ", coef=" + fmt_double(coef) + ", gamma=" + fmt_complex(g);
    }
    case Regime::BadShellOther: {
      BadShellSum bs = bad_shell_sum(k, x, y, std::nullopt);
      return "(1/2) * coef * q^(-1/2) * shell; coef=" + fmt_double(coef) +
             ", shell=" + fmt_complex(bs.value) +
             ", terms=" + std::to_string(bs.terms);
    }
    case Regime::BadShellSame: {
      auto root = sqrt(y.theta * x.theta().inverse());
      if (!root) return "boundary shell without a square root";
      PAdic e = *root * y.s;
      PAdic zpair = k.integer(2) * x.beta() * x.theta() * e;
      Complex pair = x.phi()(zpair) + x.phi()(-zpair);
      Complex g = transfer_factor(x, y, opts.negate_gauss);
      BadShellSum bs = bad_shell_sum(k, x, y, e);
      return "(1/2) * coef * (gamma * pair + q^(-1/2) * shell); coef=" +
             fmt_double(coef) + ", gamma=" + fmt_complex(g) +
             ", pair=" + fmt_complex(pair) + ", shell=" + fmt_complex(bs.value) +
             ", terms=" + std::to_string(bs.terms);
    }
  }
  return "?";
}

void append_complex(std::string& out, const char* key, Complex z) {
  out += "\"";
  out += key;
  out += "\":{\"re\":" + fmt_double(z.real()) + ",\"im\":" + fmt_double(z.imag()) +
         "}";
}

}  // namespace

PAdic parse_padic_literal(const Qp& k, const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw std::invalid_argument("p-adic literal: empty string");
  std::string unit_part = t, exp_part = "0";
  std::size_t star = t.find('*');
  if (star != std::string::npos) {
    unit_part = t.substr(0, star);
    std::string rest = t.substr(star + 1);
    if (rest == "p")
      exp_part = "1";
    else if (rest.rfind("p^", 0) == 0)
      exp_part = rest.substr(2);
    else
      throw std::invalid_argument("p-adic literal: expected u*p^k, got '" + text +
                                  "'");
  }
  long long u = 0, e = 0;
  try {
    std::size_t pos = 0;
    u = std::stoll(unit_part, &pos);
    if (pos != unit_part.size()) throw std::invalid_argument("trailing junk");
    pos = 0;
    e = std::stoll(exp_part, &pos);
    if (pos != exp_part.size()) throw std::invalid_argument("trailing junk");
  } catch (const std::exception&) {
    throw std::invalid_argument("p-adic literal: cannot parse '" + text + "'");
  }
  if (u == 0 || u % k.p == 0)
    throw std::invalid_argument("p-adic literal: unit part of '" + text +
                                "' must be a nonzero integer coprime to p");
  if (e < -64 || e > 64)
    throw std::invalid_argument("p-adic literal: exponent out of range");
  return k.unit_pow(u, static_cast<int>(e));
}

EvalReport evaluate_point(const Qp& k, const DualOrbit& x, const OrbitPoint& y,
                          const std::string& beta_lit, const std::string& theta,
                          const std::string& s_lit, const std::string& thetap,
                          bool with_oracle, double tolerance,
                          const EvalOptions& opts) {
  EvalReport r;
  r.p = k.p;
  r.phi_depth = x.d();
  r.beta = beta_lit;
  r.theta = theta;
  r.s = s_lit;
  r.thetap = thetap;
  ReducedPair red = gl2_reduce(k, x, y);
  Regime regime = classify(red.x, red.y);
  r.regime = to_string(regime);
  r.closed_value = mu_hat_closed(k, x, y, opts);
  if (with_oracle) {
    r.oracle_value = mock_mu_oracle(k, red.x, red.y);
    r.abs_error = std::abs(r.closed_value - *r.oracle_value);
    r.pass = r.abs_error <= tolerance;
  }
  r.structure = structure_of(k, red.x, red.y, regime, opts);
  return r;
}

void GridSpec::restrict_to_quick() {
  theta_classes = {"1", "eps", "pi"};
  thetap_classes = {"1", "eps", "pi", "epspi"};
  depths = {-1, 0, 1};
}

int far_boundary_ord_s(const DualOrbit& x, const PAdic& thetap) {
  // Largest ord(s) with depth2(X*) + 2 ord(s) + ord(theta') <= 0.
  int num = -(x.depth2() + thetap.val());
  return num >= 0 ? num / 2 : -((-num + 1) / 2);
}

std::vector<EvalReport> run_grid(const Qp& k, const GridSpec& spec) {
  std::vector<EvalReport> out;
  AdditiveCharacter phi = AdditiveCharacter::standard(k);
  EvalOptions opts;
  opts.negate_gauss = spec.perturb;
  for (const std::string& tn : spec.theta_classes) {
    PAdic theta = k.class_rep(tn);
    for (int d : spec.depths) {
      PAdic beta = k.unit_pow(1, -1 - d);
      DualOrbit x(phi, beta, theta);
      for (const std::string& tpn : spec.thetap_classes) {
        PAdic thetap = k.class_rep(tpn);
        int s0 = far_boundary_ord_s(x, thetap);
        for (int j = -spec.s_halfwidth; j <= spec.s_halfwidth; ++j) {
          if (out.size() >= spec.max_points) return out;
          OrbitPoint y{k.unit_pow(1, s0 + j), thetap};
          if (!spec.regime_filter.empty()) {
            std::string name = to_string(classify(x, y));
            if (name.rfind(spec.regime_filter, 0) != 0) continue;
          }
          out.push_back(evaluate_point(k, x, y, make_literal(1, -1 - d), tn,
                                       make_literal(1, s0 + j), tpn,
                                       spec.with_oracle, spec.tolerance, opts));
        }
      }
    }
  }
  return out;
}

std::string to_json(const std::vector<EvalReport>& reports) {
  if (reports.empty()) return "[]\n";
  std::string out = "[\n";
  bool first = true;
  for (const EvalReport& r : reports) {
    if (!first) out += ",\n";
    first = false;
    out += "  {\"p\":" + std::to_string(r.p);
    out += ",\"phi_depth\":" + std::to_string(r.phi_depth);
    out += ",\"beta\":\"" + json_escape(r.beta) + "\"";
    out += ",\"theta\":\"" + json_escape(r.theta) + "\"";
    out += ",\"s\":\"" + json_escape(r.s) + "\"";
    out += ",\"thetap\":\"" + json_escape(r.thetap) + "\"";
    out += ",\"regime\":\"" + json_escape(r.regime) + "\",";
    append_complex(out, "closed", r.closed_value);
    if (r.oracle_value) {
      out += ",";
      append_complex(out, "oracle", *r.oracle_value);
    }
    out += ",\"abs_error\":" + fmt_double(r.abs_error);
    out += ",\"pass\":";
    out += r.pass ? "true" : "false";
    out += ",\"structure\":\"" + json_escape(r.structure) + "\"}";
  }
  out += "\n]\n";
  return out;
}

std::vector<EvalReport> reports_from_json(const std::string& text) {
  nlohmann::json root = nlohmann::json::parse(text);
  if (!root.is_array())
    throw std::invalid_argument("reports_from_json: expected an array");
  std::vector<EvalReport> out;
  out.reserve(root.size());
  for (const auto& e : root) {
    EvalReport r;
    r.p = e.at("p").get<long long>();
    r.phi_depth = e.at("phi_depth").get<int>();
    r.beta = e.at("beta").get<std::string>();
    r.theta = e.at("theta").get<std::string>();
    r.s = e.at("s").get<std::string>();
    r.thetap = e.at("thetap").get<std::string>();
    r.regime = e.at("regime").get<std::string>();
    r.closed_value = Complex(e.at("closed").at("re").get<double>(),
                             e.at("closed").at("im").get<double>());
    if (e.contains("oracle"))
      r.oracle_value = Complex(e.at("oracle").at("re").get<double>(),
                               e.at("oracle").at("im").get<double>());
    r.abs_error = e.at("abs_error").get<double>();
    r.pass = e.at("pass").get<bool>();
    r.structure = e.at("structure").get<std::string>();
    out.push_back(std::move(r));
  }
  return out;
}

const char* const kCsvHeader =
    "p,phi_depth,beta,theta,s,thetap,regime,closed_re,closed_im,oracle_re,"
    "oracle_im,abs_error,pass";

std::string to_csv(const std::vector<EvalReport>& reports) {
  std::string out = kCsvHeader;
  out += "\n";
  for (const EvalReport& r : reports) {
    out += std::to_string(r.p) + "," + std::to_string(r.phi_depth) + "," +
           r.beta + "," + r.theta + "," + r.s + "," + r.thetap + "," + r.regime +
           "," + fmt_double(r.closed_value.real()) + "," +
           fmt_double(r.closed_value.imag()) + ",";
    if (r.oracle_value)
      out += fmt_double(r.oracle_value->real()) + "," +
             fmt_double(r.oracle_value->imag());
    else
      out += ",";
    out += "," + fmt_double(r.abs_error) + "," + (r.pass ? "true" : "false") +
           "\n";
  }
  return out;
}

std::string to_text(const std::vector<EvalReport>& reports) {
  std::string out;
  std::size_t failures = 0;
  for (const EvalReport& r : reports) {
    if (!r.pass) ++failures;
    out += r.pass ? "[pass] " : "[FAIL] ";
    out += "p=" + std::to_string(r.p) + " d=" + std::to_string(r.phi_depth) +
           " beta=" + r.beta + " theta=" + r.theta + " s=" + r.s +
           " thetap=" + r.thetap + " regime=" + r.regime +
           " closed=" + fmt_complex(r.closed_value);
    if (r.oracle_value)
      out += " oracle=" + fmt_complex(*r.oracle_value) +
             " err=" + fmt_double(r.abs_error);
    out += "\n";
  }
  out += std::to_string(reports.size()) + " points, " +
         std::to_string(failures) + " failures\n";
  return out;
}

}  // namespace sl2ft
