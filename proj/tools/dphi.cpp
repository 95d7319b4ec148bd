// dphi: exact and approximate evaluation of the dyadic-rational smooth bump
// phi (support [-1, 1], phi(0) = 1, phi'(t) = 2 (phi(2t + 1) - phi(2t - 1))).
//
// Exit codes: 0 success, 1 usage error, 2 internal invariant violation.

#include <cmath>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "dphi/acceptance.hpp"
#include "dphi/approximants.hpp"
#include "dphi/coefficients.hpp"
#include "dphi/dyadic_eval.hpp"
#include "dphi/report.hpp"
#include "dphi/spectral.hpp"
#include "dphi/stochastic.hpp"

namespace {

using json = nlohmann::ordered_json;
using dphi::BigInt;
using dphi::BigRational;
using dphi::Dyadic;

constexpr int kExitUsage = 1;
constexpr int kExitInvariant = 2;

struct Settings {
  bool json = false;
  std::size_t terms = dphi::spectral::kDefaultTerms;
  std::size_t m_max = dphi::spectral::kDefaultMMax;
  unsigned table_max = 12;
};

Dyadic dyadic_arg(const std::string& q, unsigned n) { return Dyadic(dphi::parse_bigint(q), n); }

json rationals_json(const std::vector<BigRational>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

json integers_json(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.get_str());
  return out;
}

int cmd_eval(const Settings& s, const std::string& q, unsigned n, bool raw) {
  const Dyadic t = dyadic_arg(q, n);
  const BigRational v = raw ? dphi::phi_exact_raw(t) : dphi::phi_exact(t);
  const bool with_level = n <= s.table_max;
  BigInt denominator;
  BigInt scaled;
  if (with_level) {
    denominator = dphi::level_denominator(n);
    const BigRational x = v * BigRational(denominator);
    if (!x.is_integer()) throw dphi::InvariantViolation("eval: level denominator does not clear the value");
    scaled = x.num();
  }
  if (s.json) {
    json out = {{"t", t.to_string()}, {"value", v.to_string()}};
    if (with_level) {
      out["level"] = n;
      out["common_denominator"] = denominator.get_str();
      out["scaled_numerator"] = scaled.get_str();
    }
    std::cout << out.dump() << '\n';
  } else {
    std::cout << v.to_string() << '\n';
    if (with_level) std::cout << scaled.get_str() << '/' << denominator.get_str() << '\n';
  }
  return 0;
}

int cmd_eval_float(const Settings& s, double t) {
  const auto fc = dphi::spectral::fourier_coefficients(s.terms, s.m_max);
  const double v = dphi::spectral::phi_fourier_supported(t, fc);
  if (s.json) {
    std::cout << json{{"t", t}, {"value", v}, {"terms", s.terms}, {"m_max", s.m_max}}.dump() << '\n';
  } else {
    std::cout << dphi::report::format_double(v) << '\n';
  }
  return 0;
}

int cmd_table(const Settings& s, unsigned n) {
  if (n > s.table_max) {
    throw std::invalid_argument("table: level " + std::to_string(n) + " exceeds the configured maximum " +
                                std::to_string(s.table_max));
  }
  const auto table = dphi::report::level_table(n);
  if (s.json) {
    json rows = json::array();
    for (std::size_t q = 0; q < table.values.size(); ++q) {
      rows.push_back({{"q", q}, {"scaled", table.scaled(q).get_str()}, {"value", table.values[q].to_string()}});
    }
    std::cout << json{{"level", n}, {"denominator", table.denominator.get_str()}, {"rows", rows}}.dump() << '\n';
  } else {
    std::cout << dphi::report::format_table(table);
  }
  return 0;
}

int cmd_coeffs(const Settings& s, const std::string& which, std::size_t N, bool flat) {
  std::vector<BigRational> rationals;
  std::vector<BigInt> integers;
  std::size_t first = 0;
  if (which == "c") {
    rationals = dphi::compute_c(N);
  } else if (which == "F") {
    integers = dphi::extract_F(dphi::compute_c(N));
  } else if (which == "d") {
    rationals = dphi::compute_d(N);
  } else if (which == "G") {
    integers = dphi::extract_G(dphi::compute_d(N));
  } else if (which == "moments") {
    rationals = dphi::CoefficientTable::build(N).moments();
  } else if (which == "near-one") {
    rationals = dphi::CoefficientTable::build(N == 0 ? 0 : N - 1).phi_near_one();
    rationals.resize(N + 1);
    first = 1;
  } else {
    throw std::invalid_argument("coeffs: unknown sequence '" + which + "'");
  }
  const bool is_int = rationals.empty();
  if (s.json) {
    json values = is_int ? integers_json(integers) : rationals_json(rationals);
    if (first > 0) values.erase(values.begin());
    std::cout << json{{"sequence", which}, {"first_index", first}, {"values", values}}.dump() << '\n';
  } else if (flat) {
    if (first > 0) rationals.erase(rationals.begin());
    std::cout << (is_int ? dphi::report::format_flat(integers) : dphi::report::format_flat(rationals));
  } else {
    std::cout << (is_int ? dphi::report::format_indexed(integers, first)
                         : dphi::report::format_indexed(rationals, first));
  }
  return 0;
}

int cmd_deriv(const Settings& s, unsigned k, const std::string& q, unsigned n) {
  const Dyadic t = dyadic_arg(q, n);
  const BigRational v = dphi::phi_derivative(k, t);
  if (s.json) {
    std::cout << json{{"order", k}, {"t", t.to_string()}, {"value", v.to_string()}}.dump() << '\n';
  } else {
    std::cout << v.to_string() << '\n';
  }
  return 0;
}

int cmd_taylor(const Settings& s, const std::string& q, unsigned n, std::size_t order) {
  const auto poly = dphi::taylor_at(dyadic_arg(q, n), order);
  if (s.json) {
    std::cout << json{{"center", poly.center.to_string()},
                      {"degree", poly.degree()},
                      {"coefficients", rationals_json(poly.coeffs)}}
                     .dump()
              << '\n';
  } else {
    std::cout << dphi::report::format_indexed(poly.coeffs);
  }
  return 0;
}

int cmd_approx(const Settings& s, unsigned m) {
  const auto sf = dphi::step_function(m);
  if (s.json) {
    json rows = json::array();
    for (std::size_t j = 0; j < sf.values.size(); ++j) {
      rows.push_back({{"left", sf.plateau_left(j).to_string()},
                      {"right", sf.plateau_left(j + 1).to_string()},
                      {"value", sf.values[j].to_string()}});
    }
    std::cout << json{{"level", m}, {"plateaus", rows}}.dump() << '\n';
  } else {
    std::cout << dphi::report::format_step_csv(sf);
  }
  return 0;
}

int cmd_fourier(const Settings& s, std::size_t K, int plot_level) {
  const auto fc = dphi::spectral::fourier_coefficients(K, s.m_max);
  if (plot_level >= 0) {
    std::cout << dphi::report::format_fourier_plot(fc, static_cast<unsigned>(plot_level));
  } else if (s.json) {
    std::cout << json{{"m_max", fc.m_max}, {"tolerance", fc.tolerance}, {"coefficients", fc.a}}.dump() << '\n';
  } else {
    std::cout << dphi::report::format_fourier_csv(fc);
  }
  return 0;
}

int cmd_mc(const Settings& s, double x, const dphi::stochastic::McOptions& opts) {
  if (!(x >= -1.0 && x <= 1.0)) throw std::domain_error("mc: x must lie in [-1, 1]");
  // the probabilistic form covers [-1, 0]; evenness extends it to (0, 1]
  auto e = dphi::stochastic::mc_phi(-std::fabs(x), opts);
  e.x = x;
  if (s.json) {
    std::cout << json{{"x", e.x},
                      {"estimate", e.estimate},
                      {"stderr", e.std_error},
                      {"bias_bound", e.bias_bound()},
                      {"seed", e.seed},
                      {"samples", e.samples},
                      {"depth", e.depth}}
                     .dump()
              << '\n';
  } else {
    using dphi::report::format_double;
    std::cout << "x=" << format_double(e.x) << " estimate=" << format_double(e.estimate)
              << " stderr=" << format_double(e.std_error) << " bias_bound=" << format_double(e.bias_bound())
              << " seed=" << e.seed << '\n';
  }
  return 0;
}

int cmd_selftest(const Settings& s, const std::string& fixture) {
  dphi::acceptance::Options opts;
  if (!fixture.empty()) opts.table_fixture = fixture;
  const auto results = dphi::acceptance::run_all(opts);
  bool ok = true;
  json rows = json::array();
  for (const auto& r : results) {
    ok = ok && r.passed;
    if (s.json) {
      rows.push_back({{"id", r.id}, {"name", r.name}, {"passed", r.passed}, {"seconds", r.seconds}, {"detail", r.detail}});
    } else {
      std::cout << dphi::acceptance::format_line(r) << '\n';
    }
  }
  if (s.json) std::cout << json{{"passed", ok}, {"criteria", rows}}.dump() << '\n';
  return ok ? 0 : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and approximate evaluation of the dyadic smooth bump phi"};
  app.require_subcommand(1);
  app.fallthrough();
  Settings s;
  app.add_flag("--json", s.json, "Emit JSON (exact numbers as strings)");
  app.add_option("--terms", s.terms, "Fourier terms K")->envname("DPHI_TERMS")->check(CLI::PositiveNumber);
  app.add_option("--m-max", s.m_max, "Product truncation m_max")->envname("DPHI_M_MAX")->check(CLI::PositiveNumber);
  app.add_option("--table-max", s.table_max, "Largest level for tables and level denominators")
      ->envname("DPHI_TABLE_MAX");

  std::string q;
  unsigned n = 0;
  bool raw = false;
  auto* eval = app.add_subcommand("eval", "Exact phi(q/2^n)");
  eval->add_option("q", q, "Numerator")->required();
  eval->add_option("n", n, "Exponent")->required();
  eval->add_flag("--raw", raw, "Skip symmetry folding (differential testing)");

  double t = 0.0;
  auto* eval_float = app.add_subcommand("eval-float", "phi(t) from the cosine expansion");
  eval_float->add_option("t", t, "Point")->required();

  auto* table = app.add_subcommand("table", "D * phi(q/2^n) for q = 0..2^n");
  table->add_option("n", n, "Level")->required();

  std::string which;
  std::size_t count = 0;
  bool flat = false;
  auto* coeffs = app.add_subcommand("coeffs", "Coefficient sequences");
  coeffs->add_option("which", which, "c | F | d | G | moments | near-one")
      ->required()
      ->check(CLI::IsMember({"c", "F", "d", "G", "moments", "near-one"}));
  coeffs->add_option("N", count, "Last index")->required();
  coeffs->add_flag("--flat", flat, "Single space-separated line");

  unsigned k = 0;
  auto* deriv = app.add_subcommand("deriv", "Exact phi^(k)(q/2^n)");
  deriv->add_option("k", k, "Order")->required();
  deriv->add_option("q", q, "Numerator")->required();
  deriv->add_option("n", n, "Exponent")->required();

  std::size_t order = 0;
  auto* taylor = app.add_subcommand("taylor", "Taylor coefficients at q/2^n");
  taylor->add_option("q", q, "Numerator")->required();
  taylor->add_option("n", n, "Exponent")->required();
  taylor->add_option("order", order, "Highest order")->required();

  unsigned m = 0;
  auto* approx = app.add_subcommand("approx", "Step-function approximant as CSV");
  approx->add_option("m", m, "Level")->required();

  std::size_t K = 0;
  int plot_level = -1;
  auto* fourier = app.add_subcommand("fourier-coeffs", "Cosine-expansion coefficients as CSV");
  fourier->add_option("K", K, "Number of coefficients")->required()->check(CLI::PositiveNumber);
  fourier->add_option("--plot", plot_level, "Emit t,phi_fourier,phi_exact,abs_err on the grid q/2^LEVEL")
      ->check(CLI::Range(0, 20));

  double x = 0.0;
  dphi::stochastic::McOptions mc_opts;
  auto* mc = app.add_subcommand("mc", "Monte Carlo estimate of phi(x)");
  mc->add_option("x", x, "Point in [-1, 1]")->required();
  mc->add_option("--samples", mc_opts.samples, "Sample count")->check(CLI::PositiveNumber);
  mc->add_option("--depth", mc_opts.depth, "Series terms per sample (>= 8)")->check(CLI::Range(8, 1000));
  mc->add_option("--seed", mc_opts.seed, "Generator seed");
  mc->add_option("--streams", mc_opts.streams, "Worker threads")->check(CLI::PositiveNumber);

  std::string fixture;
  auto* selftest = app.add_subcommand("selftest", "Run the acceptance criteria");
  selftest->add_option("--fixture", fixture, "Golden level-5 table file to compare against");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*eval) return cmd_eval(s, q, n, raw);
    if (*eval_float) return cmd_eval_float(s, t);
    if (*table) return cmd_table(s, n);
    if (*coeffs) return cmd_coeffs(s, which, count, flat);
    if (*deriv) return cmd_deriv(s, k, q, n);
    if (*taylor) return cmd_taylor(s, q, n, order);
    if (*approx) return cmd_approx(s, m);
    if (*fourier) return cmd_fourier(s, K, plot_level);
    if (*mc) return cmd_mc(s, x, mc_opts);
    if (*selftest) return cmd_selftest(s, fixture);
  } catch (const dphi::InvariantViolation& e) {
    std::cerr << "dphi: invariant violation: " << e.what() << '\n';
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    std::cerr << "dphi: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "dphi: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "dphi: internal error: " << e.what() << '\n';
    return kExitInvariant;
  }
  return kExitUsage;
}
