// sl2ft: Fourier transforms of regular semisimple orbital integrals on
// sl2(Q_p), odd p.
//
//   eval    closed form at one point (X*, Y), with its structural breakdown
//   verify  sweep a deterministic grid and compare the closed forms against
//           the defining principal-value integrals
//   table   sweep ord(s) and the square class of theta' at a fixed X*
//   sums    the exponential-sum building blocks on their own
//
// Exit codes: 0 success, 1 verification failure, 2 usage or domain error.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "sl2ft/bessel.hpp"
#include "sl2ft/exp_sums.hpp"
#include "sl2ft/report.hpp"
#include "sl2ft/transform.hpp"

using namespace sl2ft;

namespace {

struct Common {
  long long p = 0;
  int precision = 24;
  double tol = 1e-8;
  int phi_depth = -1;
  long long epsilon = 0;
  std::string format = "text";
  std::string out_file;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--p", c.p, "odd prime residue characteristic")->required();
  cmd->add_option("--precision", c.precision,
                  "base-p working digits, in [8, 64]");
  cmd->add_option("--tol", c.tol, "comparison tolerance, in (0, 1e-3]");
  cmd->add_option("--phi-depth", c.phi_depth,
                  "depth of the ambient additive character");
  cmd->add_option("--epsilon", c.epsilon,
                  "non-residue unit overriding the default eps");
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_option("--out", c.out_file, "write output to this file");
}

Qp make_context(const Common& c) {
  if (c.precision < 8 || c.precision > 64)
    throw std::invalid_argument("--precision must lie in [8, 64]");
  if (!(c.tol > 0) || c.tol > 1e-3)
    throw std::invalid_argument("--tol must lie in (0, 1e-3]");
  return Qp(c.p, c.precision, c.epsilon);
}

AdditiveCharacter ambient_phi(const Qp& k, int depth) {
  return AdditiveCharacter::standard(k).twist(k.unit_pow(1, -1 - depth));
}

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

std::string fmt_rational(const Rational& r) {
  std::string out = std::to_string(r.numerator());
  if (r.denominator() != 1) out += "/" + std::to_string(r.denominator());
  return out;
}

void emit(const Common& c, const std::string& text) {
  if (c.out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out_file, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot open --out file " + c.out_file);
  f << text;
}

// q^(-(d+1)) |D(Y)|^(-1/2) on the reduced pair: the leading coefficient of
// every non-constant closed-form term, used to normalize table values.
double leading_coef(const Qp& k, const DualOrbit& x, const OrbitPoint& y) {
  return std::pow(static_cast<double>(k.p), -(x.d() + 1)) *
         std::pow(static_cast<double>(k.p), 0.5 * y.discriminant().val());
}

const std::vector<std::string> kThetapClasses = {"1",     "eps",    "pi",
                                                 "epspi", "eps2pi", "pi2eps"};

struct EvalArgs {
  std::string beta, theta, s, thetap;
  bool perturb = false;
};

int run_eval(const Common& c, const EvalArgs& a) {
  Qp k = make_context(c);
  DualOrbit x(ambient_phi(k, c.phi_depth), parse_padic_literal(k, a.beta),
              k.class_rep(a.theta));
  OrbitPoint y{parse_padic_literal(k, a.s), k.class_rep(a.thetap)};
  EvalOptions opts;
  opts.negate_gauss = a.perturb;
  EvalReport r = evaluate_point(k, x, y, a.beta, a.theta, a.s, a.thetap,
                                /*with_oracle=*/false, c.tol, opts);
  if (c.format == "json") {
    emit(c, to_json({r}));
  } else if (c.format == "csv") {
    emit(c, to_csv({r}));
  } else {
    ReducedPair red = gl2_reduce(k, x, y);
    std::string out = "regime: " + r.regime + "\n";
    out += "gamma: " +
           fmt_complex(transfer_factor(red.x, red.y, opts.negate_gauss)) + "\n";
    if (classify(red.x, red.y) == Regime::Close)
      out += "c0: " +
             (red.x.elliptic() ? fmt_rational(red.x.c0()) : std::string("0")) +
             "\n";
    out += "value: " + fmt_complex(r.closed_value) + "\n";
    out += "structure: " + r.structure + "\n";
    emit(c, out);
  }
  return 0;
}

struct VerifyArgs {
  bool quick = false;
  bool perturb = false;
  std::string regime;
};

int run_verify(const Common& c, const VerifyArgs& a) {
  Qp k = make_context(c);
  GridSpec spec;
  spec.tolerance = c.tol;
  if (a.quick) spec.restrict_to_quick();
  spec.regime_filter = a.regime;
  spec.perturb = a.perturb;
  std::vector<EvalReport> reports = run_grid(k, spec);
  std::size_t failures = 0;
  std::string failure_lines;
  for (const EvalReport& r : reports) {
    if (r.pass) continue;
    ++failures;
    if (failures <= 10)
      failure_lines += "[FAIL] p=" + std::to_string(r.p) +
                       " d=" + std::to_string(r.phi_depth) + " beta=" + r.beta +
                       " theta=" + r.theta + " s=" + r.s +
                       " thetap=" + r.thetap + " regime=" + r.regime +
                       " closed=" + fmt_complex(r.closed_value) + " oracle=" +
                       (r.oracle_value ? fmt_complex(*r.oracle_value)
                                       : std::string("-")) +
                       " err=" + fmt_double(r.abs_error) + "\n";
  }
  if (c.format == "json")
    emit(c, to_json(reports));
  else if (c.format == "csv")
    emit(c, to_csv(reports));
  else
    emit(c, failure_lines + std::to_string(reports.size()) + " points, " +
                std::to_string(failures) + " failures\n");
  if (failures && c.format != "text") std::cerr << failure_lines;
  return failures ? 1 : 0;
}

struct TableArgs {
  std::string beta, theta;
};

const char* const kTableCsvHeader =
    "ord_s,thetap,regime,value_re,value_im,normalized_re,normalized_im";

int run_table(const Common& c, const TableArgs& a) {
  Qp k = make_context(c);
  DualOrbit x(ambient_phi(k, c.phi_depth), parse_padic_literal(k, a.beta),
              k.class_rep(a.theta));
  struct Row {
    int ord_s;
    std::string thetap, regime;
    Complex value, normalized;
  };
  std::vector<Row> rows;
  for (int ord_s = -3; ord_s <= 3; ++ord_s) {
    for (const std::string& tpn : kThetapClasses) {
      OrbitPoint y{k.unit_pow(1, ord_s), k.class_rep(tpn)};
      ReducedPair red = gl2_reduce(k, x, y);
      Complex value = mu_hat_closed(k, x, y);
      Complex normalized = value / leading_coef(k, red.x, red.y);
      rows.push_back(
          {ord_s, tpn, to_string(classify(x, y)), value, normalized});
    }
  }
  std::string out;
  if (c.format == "json") {
    out = "[\n";
    bool first = true;
    for (const Row& r : rows) {
      if (!first) out += ",\n";
      first = false;
      out += "  {\"ord_s\":" + std::to_string(r.ord_s) + ",\"thetap\":\"" +
             r.thetap + "\",\"regime\":\"" + r.regime +
             "\",\"value\":{\"re\":" + fmt_double(r.value.real()) +
             ",\"im\":" + fmt_double(r.value.imag()) +
             "},\"normalized\":{\"re\":" + fmt_double(r.normalized.real()) +
             ",\"im\":" + fmt_double(r.normalized.imag()) + "}}";
    }
    out += "\n]\n";
  } else if (c.format == "csv") {
    out = kTableCsvHeader;
    out += "\n";
    for (const Row& r : rows)
      out += std::to_string(r.ord_s) + "," + r.thetap + "," + r.regime + "," +
             fmt_double(r.value.real()) + "," + fmt_double(r.value.imag()) +
             "," + fmt_double(r.normalized.real()) + "," +
             fmt_double(r.normalized.imag()) + "\n";
  } else {
    char line[160];
    std::snprintf(line, sizeof line, "%5s  %-7s %-16s %-24s %s\n", "ord_s",
                  "thetap", "regime", "value", "normalized");
    out = line;
    for (const Row& r : rows) {
      std::snprintf(line, sizeof line, "%5d  %-7s %-16s %-24s %s\n", r.ord_s,
                    r.thetap.c_str(), r.regime.c_str(),
                    fmt_complex(r.value).c_str(),
                    fmt_complex(r.normalized).c_str());
      out += line;
    }
  }
  emit(c, out);
  return 0;
}

MultiplicativeCharacter parse_chi(const std::string& name) {
  std::string rest = name;
  Complex alpha = 0;
  if (rest.rfind("nu-minus-half", 0) == 0) {
    alpha = -0.5;
    rest = rest.substr(13);
  } else if (rest.rfind("nu-half", 0) == 0) {
    alpha = 0.5;
    rest = rest.substr(7);
  }
  if (!rest.empty() && rest[0] == '-') rest = rest.substr(1);
  SquareClass tau = SquareClass::One;
  if (rest == "sgn-eps")
    tau = SquareClass::Eps;
  else if (rest == "sgn-pi")
    tau = SquareClass::Pi;
  else if (rest == "sgn-epspi")
    tau = SquareClass::EpsPi;
  else if (!rest.empty())
    throw std::invalid_argument(
        "--chi: expected nu-half | nu-minus-half | sgn-eps | sgn-pi | "
        "sgn-epspi or a nu-...-sgn-... combination, got '" + name + "'");
  MultiplicativeCharacter chi(alpha, tau);
  if (chi.trivial())
    throw std::invalid_argument("--chi must name a nontrivial character");
  return chi;
}

int emit_sum_value(const Common& c, const char* label, Complex z) {
  if (c.format == "json")
    emit(c, std::string("{\"") + label + "\":{\"re\":" + fmt_double(z.real()) +
                ",\"im\":" + fmt_double(z.imag()) + "}}\n");
  else if (c.format == "csv")
    emit(c, std::string(label) + "_re," + label + "_im\n" +
                fmt_double(z.real()) + "," + fmt_double(z.imag()) + "\n");
  else
    emit(c, std::string(label) + ": " + fmt_complex(z) + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fourier transforms of orbital integrals on sl2 over Q_p"};
  app.require_subcommand(1);

  Common c_eval, c_verify, c_table, c_gauss, c_kloos, c_gamma;
  EvalArgs eval_args;
  VerifyArgs verify_args;
  TableArgs table_args;
  long long xi = 1;
  std::string chi_name, kloos_chi = "trivial";

  CLI::App* eval = app.add_subcommand("eval", "evaluate the closed form at one point");
  add_common(eval, c_eval);
  eval->add_option("--beta", eval_args.beta, "dual coordinate, u*p^k")->required();
  eval->add_option("--theta", eval_args.theta, "dual square-class representative")
      ->required();
  eval->add_option("--s", eval_args.s, "orbit coordinate, u*p^k")->required();
  eval->add_option("--thetap", eval_args.thetap, "orbit square-class representative")
      ->required();
  eval->add_flag("--perturb", eval_args.perturb,
                 "flip the sign of the Gauss sum inside the closed form");

  CLI::App* verify = app.add_subcommand(
      "verify", "compare closed forms against the defining integrals on a grid");
  add_common(verify, c_verify);
  verify->add_flag("--quick", verify_args.quick, "restrict to the smoke subgrid");
  verify->add_flag("--perturb", verify_args.perturb,
                   "flip the sign of the Gauss sum inside the closed form");
  verify->add_option("--regime", verify_args.regime,
                     "keep only points whose regime name starts with this");

  CLI::App* table = app.add_subcommand(
      "table", "sweep ord(s) and the class of theta' at a fixed dual point");
  add_common(table, c_table);
  table->add_option("--beta", table_args.beta, "dual coordinate, u*p^k")->required();
  table->add_option("--theta", table_args.theta, "dual square-class representative")
      ->required();

  CLI::App* sums = app.add_subcommand("sums", "exponential-sum building blocks");
  sums->require_subcommand(1);
  CLI::App* gauss = sums->add_subcommand("gauss", "normalized quadratic Gauss sum");
  add_common(gauss, c_gauss);
  CLI::App* kloos = sums->add_subcommand("kloosterman",
                                         "Kloosterman sum over the residue field");
  add_common(kloos, c_kloos);
  kloos->add_option("--xi", xi, "parameter of x + xi/x")->required();
  kloos->add_option("--chi", kloos_chi, "residue twist")
      ->check(CLI::IsMember({"trivial", "quadratic"}));
  CLI::App* gamma = sums->add_subcommand("gamma", "multiplicative gamma factor");
  add_common(gamma, c_gamma);
  gamma->add_option("--chi", chi_name, "character name, e.g. nu-half-sgn-pi")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (eval->parsed()) return run_eval(c_eval, eval_args);
    if (verify->parsed()) return run_verify(c_verify, verify_args);
    if (table->parsed()) return run_table(c_table, table_args);
    if (gauss->parsed()) {
      Qp k = make_context(c_gauss);
      return emit_sum_value(c_gauss, "gauss",
                            gauss_sum(k.uniformiser(), ambient_phi(k, c_gauss.phi_depth)));
    }
    if (kloos->parsed()) {
      Qp k = make_context(c_kloos);
      ResidueCharKind kind = kloos_chi == "quadratic" ? ResidueCharKind::Quadratic
                                                      : ResidueCharKind::Trivial;
      return emit_sum_value(c_kloos, "kloosterman",
                            kloosterman(kind, ResidueAdditiveCharacter{k.p, 1},
                                        ((xi % k.p) + k.p) % k.p));
    }
    if (gamma->parsed()) {
      Qp k = make_context(c_gamma);
      return emit_sum_value(c_gamma, "gamma",
                            gamma_factor(parse_chi(chi_name),
                                         ambient_phi(k, c_gamma.phi_depth)));
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "error: no subcommand\n";
  return 2;
}
