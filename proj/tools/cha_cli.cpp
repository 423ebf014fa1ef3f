// Command-line front end: parse elements from JSON, run the algebra
// operations, emit JSON results and diagnostics.
//
// Exit codes: 0 ok, 2 parse/input, 3 dimension mismatch, 4 series
// convergence, 5 verification failure, 6 selftest failure.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "cha/bch.hpp"
#include "cha/json_io.hpp"
#include "cha/kernels.hpp"
#include "cha/oracle.hpp"
#include "cha/selftest.hpp"

using namespace cha;

namespace {

/// Numeric policy knobs shared by the subcommands.
struct ToleranceConfig {
  double switch_radius = 1e-3;  // kernel direct/stable switch
  int max_terms = 200;          // series term cap
  int quad_nodes = 32;          // Gauss-Legendre order
  double term_tol = 1e-15;      // series truncation tolerance
  double verify_tol = 1e-10;    // group-law residual bound
};

enum ExitCode {
  kOk = 0,
  kParse = 2,
  kDimension = 3,
  kConvergence = 4,
  kVerification = 5,
  kSelftest = 6,
};

struct Output {
  bool pretty = false;

  void emit(const json& j) const {
    if (pretty)
      std::cout << pretty_print(j, 0) << "\n";
    else
      std::cout << j.dump(2) << "\n";
  }

  static std::string pretty_print(const json& j, int indent) {
    // compact human format, full 17-digit precision on numbers
    std::ostringstream out;
    const std::string pad(indent, ' ');
    if (j.is_object()) {
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out << "\n";
        first = false;
        out << pad << it.key() << ":";
        if (it.value().is_object() || it.value().is_array())
          out << "\n" << pretty_print(it.value(), indent + 2);
        else
          out << " " << pretty_print(it.value(), 0);
      }
    } else if (j.is_array()) {
      bool scalars = true;
      for (const auto& v : j) scalars = scalars && !(v.is_object() || v.is_array());
      if (scalars) {
        out << pad << "[";
        bool first = true;
        for (const auto& v : j) {
          if (!first) out << ", ";
          first = false;
          out << pretty_print(v, 0);
        }
        out << "]";
      } else {
        bool first = true;
        for (const auto& v : j) {
          if (!first) out << "\n";
          first = false;
          out << pad << "-\n" << pretty_print(v, indent + 2);
        }
      }
    } else if (j.is_number_float()) {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out << buf;
    } else {
      out << j.dump();
    }
    return out.str();
  }
};

/// Inline JSON (leading '{') or a path to a JSON file.
ChaElement load_element(const std::string& arg) {
  std::string text = arg;
  if (arg.empty()) throw NumericError("empty element argument");
  if (arg[0] != '{') {
    std::ifstream in(arg);
    if (!in) throw std::runtime_error("cannot open element file: " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  return json::parse(text).get<ChaElement>();
}

int cmd_bracket(const std::string& xs, const std::string& ys, const Output& out) {
  const ChaElement x = load_element(xs), y = load_element(ys);
  out.emit(json(commutator(x, y)));
  return kOk;
}

int cmd_bch(const std::string& xs, const std::string& ys, const std::string& method,
            const ToleranceConfig& tc, const Output& out) {
  const ChaElement x = load_element(xs), y = load_element(ys);
  const kernels::ScalarKernelSet ks(tc.switch_radius, 8);
  if (method == "closed") {
    out.emit(json{{"result", bch(x, y, ks)}});
  } else if (method == "series") {
    OracleOptions opts;
    opts.max_terms = tc.max_terms;
    opts.quad_nodes = tc.quad_nodes;
    opts.term_tol = tc.term_tol;
    const BchSeriesResult r = bch_series(x, y, opts);
    out.emit(json{{"result", r.value}, {"diagnostics", r.diagnostics}});
  } else if (method == "heisenberg") {
    out.emit(json{{"result", bch_heisenberg(x, y)}});
  } else if (method == "first-order") {
    out.emit(json{{"result", bch_first_order(x, y)}});
  } else {
    std::cerr << "unknown --method: " << method << "\n";
    return kParse;
  }
  return kOk;
}

int cmd_verify(const std::string& xs, const std::string& ys, const ToleranceConfig& tc,
               const Output& out) {
  const ChaElement x = load_element(xs), y = load_element(ys);
  const ChaElement z = bch(x, y);
  auto [ok, residual] = verify_group_law(x, y, z, tc.verify_tol);
  out.emit(json{{"ok", ok}, {"residual", residual}, {"tol", tc.verify_tol}, {"z", z}});
  return ok ? kOk : kVerification;
}

int cmd_sweep(const std::string& locus, double from, double to, int steps,
              const ToleranceConfig& tc, const Output& out) {
  if (steps < 2) throw NumericError("sweep: steps must be >= 2");
  if (!std::isfinite(from) || !std::isfinite(to))
    throw NumericError("sweep: range must be finite");
  const kernels::ScalarKernelSet ks(tc.switch_radius, 8);
  // the swept parameter moves the named quantity across its singular locus
  // while everything else stays at a generic value
  const ChaElement base_x(0.3, {1.0}, {0.5}, 0.0);
  const ChaElement base_y(-0.2, {0.4}, {-1.1}, 0.0);
  json rows = json::array();
  for (int i = 0; i < steps; ++i) {
    const double p = from + (to - from) * i / (steps - 1);
    double c = 0.0, cb = 0.0;
    if (locus == "c") {
      c = p;
    } else if (locus == "cbar") {
      cb = p;
    } else if (locus == "sum") {
      c = 0.8 + p / 2;
      cb = -0.8 + p / 2;
    } else {
      std::cerr << "unknown --locus: " << locus << "\n";
      return kParse;
    }
    ChaElement x = base_x, y = base_y;
    x.c = c;
    y.c = cb;
    const ChaElement z = bch(x, y, ks);
    rows.push_back(json{{"param", p},
                        {"c", c},
                        {"cbar", cb},
                        {"f", kernels::f_coeff(c, cb, ks)},
                        {"g1", kernels::g1_coeff(c, cb, ks)},
                        {"g2", kernels::g2_coeff(c, cb, ks)},
                        {"z", z}});
  }
  out.emit(rows);
  return kOk;
}

int cmd_selftest(int n, int cases, std::uint64_t seed, const Output& out) {
  const SelftestReport rep = run_selftest(n, cases, seed);
  json props = json::array();
  for (const auto& p : rep.properties) {
    json row{{"name", p.name},
             {"cases", p.cases},
             {"failures", p.failures},
             {"worst_excess", p.worst}};
    if (!p.repro.empty()) row["repro"] = json::parse(p.repro);
    props.push_back(std::move(row));
  }
  out.emit(json{{"n", n},
                {"cases", cases},
                {"seed", seed},
                {"all_pass", rep.all_pass()},
                {"properties", props}});
  return rep.all_pass() ? kOk : kSelftest;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "contact Heisenberg algebra: brackets, exact BCH products, oracles.\n"
      "Element JSON: {\"n\":1,\"z\":0,\"a\":[..],\"b\":[..],\"c\":0}; the b field is\n"
      "the coefficient of -X_p (pass b = -beta for z + a q + beta p + c S)."};
  app.require_subcommand(1);

  Output out;
  std::string output_mode = "json";
  app.add_option("--output", output_mode, "output mode: json or pretty")
      ->check(CLI::IsMember({"json", "pretty"}));

  std::string xs, ys, method = "closed", locus = "c";
  ToleranceConfig tc;
  double from = -1.0, to = 1.0;
  int steps = 21, n = 1, cases = 200;
  std::uint64_t seed = 20250801;

  auto* bracket = app.add_subcommand("bracket", "Lie bracket of two elements");
  bracket->fallthrough();
  bracket->add_option("--x", xs, "element: inline JSON or file path")->required();
  bracket->add_option("--y", ys, "element: inline JSON or file path")->required();

  auto* bchc = app.add_subcommand("bch", "product Z with e^Z = e^X e^Y");
  bchc->fallthrough();
  bchc->add_option("--x", xs)->required();
  bchc->add_option("--y", ys)->required();
  bchc->add_option("--method", method, "closed | series | heisenberg | first-order");
  bchc->add_option("--switch-radius", tc.switch_radius, "kernel direct/stable switch");
  bchc->add_option("--max-terms", tc.max_terms, "series: term cap");
  bchc->add_option("--quad-nodes", tc.quad_nodes, "series: Gauss-Legendre order");
  bchc->add_option("--term-tol", tc.term_tol, "series: truncation tolerance");

  auto* verify = app.add_subcommand("verify", "check e^{ad Z} = e^{ad X} e^{ad Y}");
  verify->fallthrough();
  verify->add_option("--x", xs)->required();
  verify->add_option("--y", ys)->required();
  verify->add_option("--tol", tc.verify_tol, "residual bound");

  auto* sweep = app.add_subcommand("sweep", "kernel/product values along a singular locus");
  sweep->fallthrough();
  sweep->add_option("--locus", locus, "c | cbar | sum")->required();
  sweep->add_option("--from", from)->required();
  sweep->add_option("--to", to)->required();
  sweep->add_option("--steps", steps);
  sweep->add_option("--switch-radius", tc.switch_radius);

  auto* selftest = app.add_subcommand("selftest", "randomized invariant suites");
  selftest->fallthrough();
  selftest->add_option("--n", n, "number of (q,p) pairs");
  selftest->add_option("--cases", cases, "draws per property");
  selftest->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }
  out.pretty = (output_mode == "pretty");

  try {
    if (bracket->parsed()) return cmd_bracket(xs, ys, out);
    if (bchc->parsed()) return cmd_bch(xs, ys, method, tc, out);
    if (verify->parsed()) return cmd_verify(xs, ys, tc, out);
    if (sweep->parsed()) return cmd_sweep(locus, from, to, steps, tc, out);
    if (selftest->parsed()) return cmd_selftest(n, cases, seed, out);
  } catch (const DimensionError& e) {
    std::cerr << "dimension error: " << e.what() << "\n";
    return kDimension;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what()
              << " (spectral_margin = " << e.spectral_margin << ")\n";
    return kConvergence;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const NumericError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  }
  return kParse;
}
