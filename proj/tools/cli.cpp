#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "expansion_io.hpp"
#include "json.hpp"

#include "fpa/appell_system.hpp"
#include "fpa/combinatorics.hpp"
#include "fpa/kernels.hpp"
#include "fpa/spaces.hpp"
#include "fpa/transforms.hpp"
#include "fpa/verify.hpp"
#include "fpa/wick.hpp"

namespace fpa::cli {

namespace {

using nlohmann::json;

struct Options {
  double lambda = 0.0;
  double beta = 0.0;
  unsigned k_max = 50;
  unsigned n_max = 8;
  unsigned n = 0;
  bool oracle = false;
  std::string kind = "C";
  std::string basis = "monomial";
  std::string op;
  std::string input;
  std::string a;
  std::string b;
  std::string z;
  std::string sign = "test";
  std::string suite = "all";
  unsigned terms = 12;
  unsigned power = 2;
  unsigned q = 0;
  double kappa = 0.0;
  std::uint64_t seed = kDefaultSeed;
};

Complex parse_z(const std::string& s) {
  std::istringstream in(s);
  double re = 0.0;
  double im = 0.0;
  char comma = 0;
  if (!(in >> re)) throw ArgumentError("--z expects re or re,im, got '" + s + "'");
  if (in >> comma) {
    if (comma != ',' || !(in >> im)) throw ArgumentError("--z expects re or re,im, got '" + s + "'");
  }
  if (in >> comma) throw ArgumentError("--z expects re or re,im, got '" + s + "'");
  return {re, im};
}

json document(const json& params) {
  return {{"params", params}, {"results", json::object()}, {"residuals", json::object()}, {"status", "ok"}};
}

json lambda_beta(const Options& o) { return io::params_json(FpmParams(o.lambda, o.beta)); }

int cmd_pmf(const Options& o, json& doc) {
  const FpmParams p(o.lambda, o.beta);
  doc["params"]["k_max"] = o.k_max;
  const auto v = pmf_block(p, 0, o.k_max + 1);
  long double total = 0.0L;
  json values = json::array();
  for (auto x : v) {
    total += x;
    values.push_back(static_cast<double>(x));
  }
  doc["results"]["pmf"] = values;
  doc["residuals"]["normalization_defect"] = static_cast<double>(std::fabs(1.0L - total));
  return kOk;
}

int cmd_moments(const Options& o, json& doc) {
  const FpmParams p(o.lambda, o.beta);
  doc["params"]["n_max"] = o.n_max;
  const MomentCache cache(p, o.n_max);
  json closed = json::array();
  for (double m : cache.moments()) closed.push_back(m);
  doc["results"]["closed_form"] = closed;
  if (o.oracle) {
    json direct = json::array();
    double worst = 0.0;
    for (unsigned n = 0; n <= o.n_max; ++n) {
      const double d = moment_oracle(p, n);
      direct.push_back(d);
      worst = std::max(worst, std::fabs(d - cache.moment(n)) / std::fabs(cache.moment(n)));
    }
    doc["results"]["oracle"] = direct;
    doc["residuals"]["max_relative_error"] = worst;
  }
  return kOk;
}

int cmd_appell(const Options& o, json& doc) {
  const FpmParams p(o.lambda, o.beta);
  doc["params"]["n"] = o.n;
  doc["params"]["kind"] = o.kind;
  doc["params"]["basis"] = o.basis;
  const MomentCache cache(p, o.n);
  const Poly poly = o.kind == "A" ? build_appell(p, o.n, cache) : build_gen_appell(p, o.n, cache);
  std::vector<Complex> coeffs = poly.coeffs_double();
  if (o.basis == "falling") {
    // x^j = sum_i S(j,i) (x)_i
    const auto table = shared_stirling(o.n);
    std::vector<Scalar> falling(o.n + 1);
    for (unsigned j = 0; j <= o.n; ++j) {
      for (unsigned i = 0; i <= j; ++i) falling[i] += poly[j] * Scalar(table->second_real(j, i));
    }
    coeffs.clear();
    for (const auto& c : falling) coeffs.push_back(to_complex(c));
  }
  doc["results"]["coeffs"] = io::coeffs_json(coeffs);
  doc["residuals"]["max_imag"] = max_imag(poly);
  doc["residuals"]["monic_defect"] = std::abs(poly.coeff(o.n) - 1.0);
  return kOk;
}

int cmd_pair(const Options& o, json& doc) {
  const FpmParams p(o.lambda, o.beta);
  doc["params"]["n_max"] = o.n_max;
  const MomentCache cache(p, o.n_max);
  const PolyFamily family = gen_appell_family(p, o.n_max, cache);
  const unsigned size = o.n_max + 1;
  for (auto [route, name] : {std::pair{PairingRoute::Difference, "difference"},
                             std::pair{PairingRoute::StirlingSeries, "stirling"}}) {
    const auto g = gram_matrix(family, cache, route);
    json rows = json::array();
    double worst = 0.0;
    for (unsigned n = 0; n < size; ++n) {
      json row = json::array();
      for (unsigned m = 0; m < size; ++m) {
        const Complex v = g[n * size + m];
        row.push_back(io::complex_json(v));
        const double target = n == m ? factorial(n) : 0.0;
        worst = std::max(worst, std::abs(v - target) / std::max(1.0, factorial(n)));
      }
      rows.push_back(row);
    }
    doc["results"][name] = rows;
    doc["residuals"][std::string("max_scaled_deviation_") + name] = worst;
  }
  return kOk;
}

int cmd_transform(const Options& o, json& doc) {
  const io::ExpansionDoc in = io::read_expansion(o.input);
  doc["params"] = io::params_json(in.params);
  doc["params"]["op"] = o.op;
  const std::optional<Complex> z = o.z.empty() ? std::nullopt : std::optional(parse_z(o.z));
  if (z) doc["params"]["z"] = io::complex_json(*z);

  if (o.op == "s") {
    const QExpansion q = io::as_q(in);
    if (z) {
      doc["results"]["value"] = io::complex_json(s_transform(q, *z));
    } else {
      const auto n = static_cast<unsigned>(std::max<std::size_t>(q.coeffs.size(), 1));
      doc["results"]["expansion"] = io::to_json(io::from_taylor(taylor_of_s(q, n), in.params));
    }
  } else if (o.op == "c") {
    if (!z) throw ArgumentError("transform --op c needs --z");
    doc["results"]["value"] = io::complex_json(c_transform(io::as_c(in), *z));
  } else {
    const TaylorSeries u = io::as_taylor(in);
    const QExpansion q = s_inverse(u, in.params);
    doc["results"]["expansion"] = io::to_json(io::from_q(q));
    if (z) doc["results"]["value"] = io::complex_json(s_transform(q, *z));
  }
  return kOk;
}

int cmd_wick(const Options& o, json& doc) {
  const QExpansion a = io::as_q(io::read_expansion(o.a));
  doc["params"] = io::params_json(a.params);
  doc["params"]["op"] = o.op;
  doc["params"]["terms"] = o.terms;
  QExpansion r{a.params, {}};
  if (o.op == "product") {
    if (o.b.empty()) throw ArgumentError("wick --op product needs --b");
    r = wick_product(a, io::as_q(io::read_expansion(o.b)));
  } else if (o.op == "power") {
    doc["params"]["power"] = o.power;
    r = truncate(wick_power(a, o.power), o.terms);
  } else if (o.op == "exp") {
    r = wick_exp(a, o.terms);
  } else if (o.op == "log") {
    r = wick_log(a, o.terms);
  } else {
    r = wick_inverse(a, o.terms);
  }
  doc["results"]["expansion"] = io::to_json(io::from_q(r));
  return kOk;
}

int cmd_norm(const Options& o, json& doc) {
  const io::ExpansionDoc in = io::read_expansion(o.input);
  doc["params"] = io::params_json(in.params);
  doc["params"]["q"] = o.q;
  doc["params"]["kappa"] = o.kappa;
  doc["params"]["sign"] = o.sign;
  const NormSign sign = o.sign == "test" ? NormSign::Test : NormSign::Distribution;
  NormResult r;
  if (in.basis == io::Basis::Taylor) {
    r = seminorm_series(io::as_taylor(in), o.q, o.kappa, sign);
    doc["results"]["kind"] = "squared_seminorm";
  } else if (sign == NormSign::Test) {
    r = test_norm(io::as_c(in), {o.q, o.kappa, sign});
    doc["results"]["kind"] = "norm";
  } else {
    r = dist_norm(io::as_q(in), {o.q, o.kappa, sign});
    doc["results"]["kind"] = "norm";
  }
  doc["results"]["value"] = std::isfinite(r.value) ? json(r.value) : json(nullptr);
  doc["results"]["norm_status"] = to_string(r.status);
  return kOk;
}

int cmd_verify(const Options& o, json& doc) {
  const FpmParams p(o.lambda, o.beta);
  doc["params"]["suite"] = o.suite;
  doc["params"]["seed"] = o.seed;
  std::vector<std::string> suites;
  if (o.suite == "all") {
    suites = suite_names();
  } else {
    suites.push_back(o.suite);
  }
  bool all_pass = true;
  for (const auto& s : suites) {
    json rows = json::array();
    for (const auto& r : run_suite(s, p, o.seed)) {
      rows.push_back({{"name", r.name},
                      {"residual", std::isfinite(r.residual) ? json(r.residual) : json(nullptr)},
                      {"threshold", r.threshold},
                      {"pass", r.pass}});
      all_pass = all_pass && r.pass;
    }
    doc["residuals"][s] = rows;
  }
  doc["status"] = all_pass ? "pass" : "fail";
  return all_pass ? kOk : kSuiteFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fractional Poisson analysis toolkit", "fpa"};
  app.require_subcommand(1);
  Options o;

  auto add_params = [&o](CLI::App* cmd) {
    cmd->add_option("--lambda", o.lambda, "Intensity lambda > 0")->required();
    cmd->add_option("--beta", o.beta, "Fractional order beta in (0, 1]")->required();
  };

  auto* pmf_cmd = app.add_subcommand("pmf", "Probability masses for k = 0..k-max and the normalization defect");
  add_params(pmf_cmd);
  pmf_cmd->add_option("--k-max", o.k_max, "Largest k")->required();

  auto* moments_cmd = app.add_subcommand("moments", "Closed-form moments, optionally against direct summation");
  add_params(moments_cmd);
  moments_cmd->add_option("--n-max", o.n_max, "Largest moment order")->required();
  moments_cmd->add_flag("--oracle", o.oracle, "Also sum n-th powers against the pmf");

  auto* appell_cmd = app.add_subcommand("appell", "Coefficients of A_n or C_n");
  add_params(appell_cmd);
  appell_cmd->add_option("--n", o.n, "Degree")->required();
  appell_cmd->add_option("--kind", o.kind, "A or C")->check(CLI::IsMember({"A", "C"}));
  appell_cmd->add_option("--basis", o.basis, "monomial or falling")->check(CLI::IsMember({"monomial", "falling"}));

  auto* pair_cmd = app.add_subcommand("pair", "Gram matrix <<C_n, Q_m>> by both routes");
  add_params(pair_cmd);
  pair_cmd->add_option("--n-max", o.n_max, "Largest index")->required();

  auto* transform_cmd = app.add_subcommand("transform", "S-transform, C-transform or S-inverse of a file");
  transform_cmd->add_option("--op", o.op, "s, c or s-inverse")->required()->check(CLI::IsMember({"s", "c", "s-inverse"}));
  transform_cmd->add_option("--input", o.input, "Expansion file")->required();
  transform_cmd->add_option("--z", o.z, "Evaluation point re,im");

  auto* wick_cmd = app.add_subcommand("wick", "Wick algebra on Q-expansions");
  wick_cmd->add_option("--op", o.op, "product, power, exp, log or inverse")
      ->required()
      ->check(CLI::IsMember({"product", "power", "exp", "log", "inverse"}));
  wick_cmd->add_option("--a", o.a, "Left operand file")->required();
  wick_cmd->add_option("--b", o.b, "Right operand file (product)");
  wick_cmd->add_option("--terms", o.terms, "Output truncation")->check(CLI::PositiveNumber);
  wick_cmd->add_option("--power", o.power, "Exponent for --op power");

  auto* norm_cmd = app.add_subcommand("norm", "Weighted Hilbert norm of a file");
  norm_cmd->add_option("--q", o.q, "Scale index q")->required();
  norm_cmd->add_option("--kappa", o.kappa, "Factorial weight kappa in [0, 1]")->required();
  norm_cmd->add_option("--sign", o.sign, "test or dist")->check(CLI::IsMember({"test", "dist"}));
  norm_cmd->add_option("--input", o.input, "Expansion file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Invariant suites with residuals and thresholds");
  add_params(verify_cmd);
  std::vector<std::string> suites{"all"};
  for (const auto& s : suite_names()) suites.push_back(s);
  verify_cmd->add_option("--suite", o.suite, "all or one suite")->check(CLI::IsMember(suites));
  verify_cmd->add_option("--seed", o.seed, "Seed for random inputs");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  CLI::App* cmd = app.get_subcommands().front();
  json doc = document(json::object());
  int code = kOk;
  try {
    if (cmd->get_option_no_throw("--lambda") != nullptr) doc["params"] = lambda_beta(o);
    const std::string name = cmd->get_name();
    if (name == "pmf") {
      code = cmd_pmf(o, doc);
    } else if (name == "moments") {
      code = cmd_moments(o, doc);
    } else if (name == "appell") {
      code = cmd_appell(o, doc);
    } else if (name == "pair") {
      code = cmd_pair(o, doc);
    } else if (name == "transform") {
      code = cmd_transform(o, doc);
    } else if (name == "wick") {
      code = cmd_wick(o, doc);
    } else if (name == "norm") {
      code = cmd_norm(o, doc);
    } else {
      code = cmd_verify(o, doc);
    }
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n\n" << cmd->help();
    return kUsage;
  } catch (const ConvergenceError& e) {
    doc["status"] = "error";
    doc["diagnostic"] = {{"kind", "convergence"}, {"message", e.what()}, {"partial_sum", io::complex_json(e.partial_sum())}};
    code = kNumerical;
  } catch (const DomainError& e) {
    doc["status"] = "error";
    doc["diagnostic"] = {{"kind", "domain"}, {"message", e.what()}};
    code = kNumerical;
  }
  out << doc.dump(2) << '\n';
  return code;
}

}  // namespace fpa::cli
