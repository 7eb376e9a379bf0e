#include "harmolift/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "harmolift/forms.hpp"
#include "harmolift/lift.hpp"
#include "harmolift/operators.hpp"
#include "harmolift/serialize.hpp"
#include "harmolift/specfun.hpp"
#include "harmolift/verify.hpp"

namespace harmolift {

namespace {

using nlohmann::json;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// "a" or "a,b" -> a + b i.
cplx parse_complex(const std::string& s, const char* flag) {
  std::stringstream ss(s);
  std::string part;
  std::vector<double> v;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(part, &used));
      if (used != part.size()) {
        throw std::invalid_argument(part);
      }
    } catch (const std::exception&) {
      throw UsageError(std::string(flag) + ": cannot parse '" + s + "'");
    }
  }
  if (v.empty() || v.size() > 2) {
    throw UsageError(std::string(flag) + ": expected a or a,b");
  }
  return {v[0], v.size() == 2 ? v[1] : 0.0};
}

json pair_json(cplx z) { return json::array({z.real(), z.imag()}); }

struct SeriesArgs {
  std::string name;
  std::string r{"0"};
  int trunc{64};
  int ell{0};
  int a{1};
  int k{4};
};

json cmd_series(const SeriesArgs& s) {
  if (s.trunc < 1) {
    throw UsageError("--trunc must be >= 1");
  }
  const cplx r = parse_complex(s.r, "--r");
  if (s.name == "eta-power") {
    return to_json(eta_power(Jet::variable(r), s.trunc));
  }
  if (s.name == "eisenstein") {
    return to_json(eisenstein(s.k, s.trunc));
  }
  if (s.name == "delta") {
    return to_json(delta(s.trunc));
  }
  if (s.name == "j") {
    return to_json(j_invariant(s.trunc));
  }
  if (s.name == "log-eta") {
    return to_json(log_eta(s.trunc));
  }
  // j-family
  json j = to_json(j_family(s.ell, s.a, Jet::variable(r), s.trunc));
  if (r == cplx{}) {
    j["exact"] = to_json(j_family_exact(s.ell, s.a, s.trunc))["exact"];
  }
  return j;
}

json cmd_eval(const std::string& target, const std::string& zs, int trunc) {
  const cplx zc = parse_complex(zs, "--z");
  if (zc.imag() < 0.3) {
    throw UsageError("--z: requires y >= 0.3");
  }
  if (trunc < 1) {
    throw UsageError("--trunc must be >= 1");
  }
  const UhpPoint z(zc);
  json out{{"target", target}, {"z", pair_json(zc)}};
  if (target == "hbar0" || target == "e2nh") {
    const auto h = target == "hbar0" ? eta_lift_at_zero(trunc) : e2_nonholomorphic(trunc);
    const EvalResult e = assemble(h, z);
    out["value"] = pair_json(e.value.val);
    out["tail"] = e.tail;
  } else if (target == "hbar0-deriv") {
    const EvalResult e = assemble(eta_lift_derivative_at_zero(trunc), z);
    out["value"] = pair_json(e.value.d1);
    out["tail"] = e.tail;
  } else {
    const HarmonicExpansion h = eta_lift_at_zero(trunc);
    const SampledFunction F{[h](const UhpPoint& w) { return assemble(h, w).value.val; }, 1e-12, 0.2};
    out["value"] = pair_json(xi(2.0, F, z));
    out["tail"] = assemble(h, z).tail;
  }
  return out;
}

struct VerifyArgs {
  std::string suite{"all"};
  std::string config;
  std::string report;
  std::string mutate;
  std::uint64_t seed{};
  int trunc{};
  double tol{};
  bool serial{false};
};

int cmd_verify(const VerifyArgs& v, const CLI::App& sub, std::ostream& out) {
  VerifyConfig cfg;
  std::string report_path;
  std::string mutate;
  if (!v.config.empty()) {
    std::ifstream in(v.config);
    if (!in) {
      throw UsageError("--config: cannot open '" + v.config + "'");
    }
    json c;
    try {
      c = json::parse(in);
    } catch (const json::exception& e) {
      throw UsageError(std::string("--config: ") + e.what());
    }
    cfg.seed = c.value("seed", cfg.seed);
    cfg.trunc = c.value("trunc", cfg.trunc);
    if (c.contains("tol")) {
      cfg.tol = c.at("tol").get<double>();
    }
    report_path = c.value("report", std::string{});
    mutate = c.value("mutate", std::string{});
  }
  if (sub.count("--seed") > 0) {
    cfg.seed = v.seed;
  }
  if (sub.count("--trunc") > 0) {
    cfg.trunc = v.trunc;
  }
  if (sub.count("--tol") > 0) {
    cfg.tol = v.tol;
  }
  if (sub.count("--report") > 0) {
    report_path = v.report;
  }
  if (sub.count("--mutate") > 0) {
    mutate = v.mutate;
  }
  if (cfg.trunc < 8) {
    throw UsageError("--trunc must be >= 8 for verification");
  }
  if (!mutate.empty()) {
    try {
      cfg.mutation = parse_mutation(mutate);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  cfg.parallel = !v.serial;

  std::vector<VerificationReport> reports;
  try {
    reports = run_suite(v.suite, cfg);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  json arr = json::array();
  bool all_pass = true;
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    all_pass = all_pass && r.pass;
  }
  if (report_path.empty()) {
    out << arr.dump(2) << '\n';
  } else {
    std::ofstream f(report_path);
    if (!f) {
      throw UsageError("--report: cannot write '" + report_path + "'");
    }
    f << arr.dump(2) << '\n';
    for (const auto& r : reports) {
      out << (r.pass ? "PASS " : "FAIL ") << r.check_id << "  max_residual=" << r.max_residual
          << " tolerance=" << r.tolerance << " (" << r.runtime_ms << " ms)\n";
    }
  }
  return all_pass ? kExitPass : kExitVerificationFailure;
}

struct SpecfunArgs {
  std::vector<std::string> words;
  std::string p{"1"}, a{"1"}, b{"1"}, x{"1"}, n{"0"};
  double y{1.0};
  double t{0.0};
  int u{1};
  long nn{1};
  long d{1};
  long c{1};
};

json special_json(const SpecialValue& v) { return {{"value", pair_json(v.val)}, {"err_est", v.err_est}}; }

json cmd_specfun(const SpecfunArgs& s, const CLI::App& sub) {
  std::vector<std::string> words = s.words;
  if (!words.empty() && words.front() == "eval") {
    words.erase(words.begin());
  }
  if (words.size() != 1) {
    throw UsageError("specfun: expected one function name");
  }
  const std::string& fn = words.front();
  json out;
  if (fn == "inc-gamma") {
    out = special_json(inc_gamma(parse_complex(s.p, "--p"), parse_complex(s.x, "--x")));
  } else if (fn == "m") {
    out = special_json(m_func(parse_complex(s.p, "--p"), parse_complex(s.n, "--n"), s.y));
  } else if (fn == "m-series") {
    out = special_json(m_func_series(parse_complex(s.p, "--p"), parse_complex(s.n, "--n"), s.y));
  } else if (fn == "m-hypergeometric") {
    out = special_json(m_func_hypergeometric(parse_complex(s.p, "--p"), parse_complex(s.n, "--n"), s.y));
  } else if (fn == "inc-beta") {
    out = special_json(inc_beta(s.t, parse_complex(s.a, "--a"), parse_complex(s.b, "--b")));
  } else if (fn == "1f1") {
    out = special_json(kummer_1f1(parse_complex(s.a, "--a"), parse_complex(s.b, "--b"), parse_complex(s.x, "--x")));
  } else if (fn == "gamma") {
    out = {{"value", pair_json(gamma(parse_complex(s.p, "--p")))}};
  } else if (fn == "sigma") {
    if (sub.count("--nn") == 0) {
      throw UsageError("sigma: --nn required");
    }
    out = {{"value", sigma(s.u, s.nn).str()}};
  } else if (fn == "dedekind") {
    out = {{"value", dedekind_sum(s.d, s.c).str()}};
  } else if (fn == "constants") {
    const auto k = constants();
    out = {{"euler_gamma", k.euler_gamma}, {"zeta_prime_2", k.zeta_prime_2}};
  } else {
    throw UsageError("specfun: unknown function '" + fn + "'");
  }
  out["function"] = fn;
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Harmonic lifts of eta powers: series, evaluation and verification"};
  app.name("harmolift");
  app.require_subcommand(1);

  SeriesArgs sa;
  auto* series = app.add_subcommand("series", "Emit a q-expansion as JSON");
  series->add_option("name", sa.name, "eta-power | eisenstein | delta | j | j-family | log-eta")
      ->required()
      ->check(CLI::IsMember({"eta-power", "eisenstein", "delta", "j", "j-family", "log-eta"}));
  series->add_option("--r", sa.r, "Family parameter a or a,b");
  series->add_option("--trunc", sa.trunc, "Truncation order");
  series->add_option("--ell", sa.ell, "Weight for j-family");
  series->add_option("--a", sa.a, "Pole order for j-family");
  series->add_option("--k", sa.k, "Eisenstein weight");

  std::string target;
  std::string zs;
  int eval_trunc = 64;
  auto* ev = app.add_subcommand("eval", "Evaluate the r = 0 lift or its derivative at a point");
  ev->add_option("target", target, "hbar0 | hbar0-deriv | e2nh | xi-hbar0")
      ->required()
      ->check(CLI::IsMember({"hbar0", "hbar0-deriv", "e2nh", "xi-hbar0"}));
  ev->add_option("--z", zs, "Point x,y")->required();
  ev->add_option("--trunc", eval_trunc, "Truncation order");

  VerifyArgs va;
  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("suite", va.suite, "operators | forms | specfun | lift | all")
      ->check(CLI::IsMember({"operators", "forms", "specfun", "lift", "all"}));
  ver->add_option("--config", va.config, "JSON config (seed, trunc, tol, report, mutate); flags take precedence");
  ver->add_option("--seed", va.seed, "Seed for random sample points");
  ver->add_option("--trunc", va.trunc, "Truncation order");
  ver->add_option("--tol", va.tol, "Override every check's tolerance");
  ver->add_option("--report", va.report, "Write the JSON report here");
  ver->add_option("--mutate", va.mutate, "Corrupt the lift data: b5, conv, divisor-log, sigma1, sigma-1, b0-const, b0-gamma, b0-zeta");
  ver->add_flag("--serial", va.serial, "Run checks one at a time");

  SpecfunArgs sf;
  auto* specfun_cmd = app.add_subcommand("specfun", "Evaluate a special function");
  specfun_cmd->add_option("function", sf.words, "[eval] inc-gamma | m | m-series | m-hypergeometric | inc-beta | 1f1 | gamma | sigma | dedekind | constants")
      ->required();
  specfun_cmd->add_option("--p", sf.p);
  specfun_cmd->add_option("--a", sf.a);
  specfun_cmd->add_option("--b", sf.b);
  specfun_cmd->add_option("--x", sf.x);
  specfun_cmd->add_option("--n", sf.n);
  specfun_cmd->add_option("--y", sf.y);
  specfun_cmd->add_option("--t", sf.t);
  specfun_cmd->add_option("--u", sf.u);
  specfun_cmd->add_option("--nn", sf.nn, "Argument of sigma");
  specfun_cmd->add_option("--d", sf.d);
  specfun_cmd->add_option("--c", sf.c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*series) {
      out << cmd_series(sa).dump() << '\n';
    } else if (*ev) {
      out << cmd_eval(target, zs, eval_trunc).dump() << '\n';
    } else if (*ver) {
      return cmd_verify(va, *ver, out);
    } else if (*specfun_cmd) {
      out << cmd_specfun(sf, *specfun_cmd).dump() << '\n';
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitPass;
}

}  // namespace harmolift
