// Command-line front end: exact bracket tables, catalog certification,
// contraction sweeps, group-to-algebra linkage and unitarity checks.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "mira/lab.hpp"
#include "mira/lie.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 2;
constexpr int kExitConfigError = 3;
constexpr int kExitIoError = 4;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "lambda=3/7,sigma=1" -> RepParams fields
mira::RepParams parse_params(const std::string& spec) {
  mira::RepParams p;
  if (spec.empty()) return p;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ConfigError("bad parameter assignment '" + item + "'");
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    try {
      if (key == "lambda")
        p.lambda = mira::Rational::parse(val);
      else if (key == "beta")
        p.beta = mira::Rational::parse(val);
      else if (key == "mu")
        p.mu = mira::Rational::parse(val);
      else if (key == "nu")
        p.nu = mira::Rational::parse(val);
      else if (key == "q")
        p.q = mira::Rational::parse(val);
      else if (key == "sigma")
        p.sigma = std::stoi(val);
      else if (key == "n")
        p.n = std::stoi(val);
      else
        throw ConfigError("unknown parameter key '" + key + "'");
    } catch (const ConfigError&) {
      throw;
    } catch (const std::exception& e) {
      throw ConfigError("parameter '" + key + "': " + e.what());
    }
  }
  return p;
}

mira::Family parse_family(const std::string& id) {
  auto f = mira::family_from_id(id);
  if (!f) throw ConfigError("unknown family '" + id + "'");
  return *f;
}

int cmd_brackets(int n, const std::string& eps_str) {
  mira::Rational eps = mira::Rational::parse(eps_str);
  std::cout << "bracket table of gl_" << n << " at epsilon = " << eps.str()
            << "\n";
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          auto b = mira::contracted_bracket(
              eps, mira::LieElement::basis(n, i, j),
              mira::LieElement::basis(n, k, l));
          if (b.is_zero()) continue;
          std::cout << "[e_" << i << j << ", e_" << k << l
                    << "] = " << b.str() << "\n";
        }
  auto rep = mira::jacobi_check(n, eps);
  std::cout << "Jacobi: " << (rep.pass ? "pass" : "FAIL " + rep.first_failure)
            << "\n";
  return rep.pass ? kExitPass : kExitCheckFailure;
}

int cmd_repcheck(const std::string& family, const std::string& params) {
  mira::RepParams p = parse_params(params);
  p.family = parse_family(family);
  mira::AlgebraRep rep;
  try {
    rep = mira::build_algebra_rep(p);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  auto check = mira::bracket_check(rep);
  if (check.pass) {
    std::cout << family << ": 16/16 bracket identities pass\n";
    return kExitPass;
  }
  std::cout << family << ": FAIL " << check.first_failure << "\n";
  return kExitCheckFailure;
}

int cmd_sweep(const std::string& scenario_id, const std::string& params,
              const std::string& out_path, const std::string& format) {
  mira::RepParams p = parse_params(params);
  mira::ContractionScenario sc;
  try {
    sc = mira::build_scenario(scenario_id, p);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  auto report = mira::sweep(sc, mira::default_test_set(sc.domain));

  std::string payload =
      format == "json" ? mira::to_json(report) : mira::to_csv(report);
  if (out_path.empty() || out_path == "-") {
    std::cout << payload;
  } else {
    std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
    if (!out) {
      std::cerr << "cannot open output file '" << out_path << "'\n";
      return kExitIoError;
    }
    out << payload;
    if (!out.good()) return kExitIoError;
  }

  bool pass = report.monotone && report.ratio_stable;
  for (const auto& r : report.rows)
    if (r.rel_err > 1e-8) pass = false;
  std::cout << "sweep " << scenario_id << ": "
            << (pass ? "pass" : "CHECK FAILURE") << " (" << report.rows.size()
            << " rows)\n";
  return pass ? kExitPass : kExitCheckFailure;
}

int cmd_linkage(const std::string& family, const std::string& params) {
  mira::RepParams p = parse_params(params);
  p.family = parse_family(family);
  if (p.family == mira::Family::DiscreteKirillov)
    throw ConfigError("discreteKirillov has no group-level model");
  mira::AlgebraRep rep;
  try {
    rep = mira::build_algebra_rep(p);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }

  auto fs = mira::default_test_set(rep.domain);
  const mira::TestFunction& f = fs.front();
  double x = rep.domain == mira::Domain::Singleton
                 ? 0.0
                 : (rep.domain == mira::Domain::Line ? 0.37 : 1.37);
  std::vector<double> ts = {1.0 / 8, 1.0 / 16, 1.0 / 32, 1.0 / 64, 1.0 / 128};

  bool pass = true;
  for (mira::BasisLabel y : mira::kBasisLabels) {
    auto r = mira::linkage_check(p, y, f, x, ts);
    if (r.zero_op) {
      bool ok = r.max_error <= 1e-9;
      std::cout << family << " " << mira::basis_name(y)
                << ": zero operator, max central difference "
                << mira::format_double(r.max_error) << (ok ? " (pass)" : " (FAIL)")
                << "\n";
      pass = pass && ok;
    } else {
      bool ok = r.slope >= 1.8 && r.slope <= 2.2;
      std::cout << family << " " << mira::basis_name(y)
                << ": slope " << mira::format_double(r.slope)
                << (ok ? " (pass)" : " (FAIL)") << "\n";
      pass = pass && ok;
    }
  }
  return pass ? kExitPass : kExitCheckFailure;
}

int cmd_unitarity(const std::string& family, const std::string& params) {
  mira::RepParams p = parse_params(params);
  p.family = parse_family(family);
  if (p.family == mira::Family::DiscreteKirillov)
    throw ConfigError("discreteKirillov has no group-level model");
  mira::AlgebraRep rep;
  try {
    rep = mira::build_algebra_rep(p);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  mira::GroupAction action{p};
  auto fs = mira::default_test_set(rep.domain);

  std::vector<mira::SemidirectElement<double>> gs;
  auto g = mira::SemidirectElement<double>::identity(2);
  gs.push_back(g);
  if (mira::is_gl2_family(p.family)) {
    g.A << 2.0, 1.0 / 3, 1.0 / 5, 1.0;
    gs.push_back(g);
    g.A << 0.5, -0.25, 0.0, 3.0;
    gs.push_back(g);
  } else {
    g.v << 0.5, -1.0 / 3;
    g.A << 2.0, 1.0 / 3, 0.0, 1.0;
    gs.push_back(g);
    g.v << -0.2, 0.7;
    g.A << -1.5, 0.1, 0.0, 1.0;
    gs.push_back(g);
  }

  bool pass = true;
  for (const auto& f : fs)
    for (size_t i = 0; i < gs.size(); ++i) {
      auto r = mira::unitarity_check(action, gs[i], f);
      bool ok = r.deviation <= 1e-9;
      std::cout << family << " g" << i << " " << f.id() << ": deviation "
                << mira::format_double(r.deviation)
                << (ok ? " (pass)" : " (FAIL)") << "\n";
      pass = pass && ok;
    }
  return pass ? kExitPass : kExitCheckFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact contraction of gl_n to R^n x| m_n and numerical verification "
      "of strong contractions of its representations"};
  app.require_subcommand(1);

  int n = 2;
  std::string eps = "0", family, params, scenario, out_path, format = "csv";

  auto* brackets = app.add_subcommand("brackets", "print the epsilon-bracket "
                                                  "table and Jacobi verdict");
  brackets->add_option("--n", n, "dimension (>= 2)")->required();
  brackets->add_option("--epsilon", eps, "exact rational epsilon")->required();

  auto* repcheck =
      app.add_subcommand("repcheck", "certify the bracket homomorphism "
                                     "property of a catalog family");
  repcheck->add_option("--family", family)->required();
  repcheck->add_option("--params", params, "comma-separated key=value");

  auto* sweep = app.add_subcommand("sweep", "run a contraction scenario and "
                                            "write the convergence report");
  sweep->add_option("--scenario", scenario)->required();
  sweep->add_option("--params", params);
  sweep->add_option("--out", out_path, "output file ('-' for stdout)");
  sweep->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));

  auto* linkage = app.add_subcommand(
      "linkage", "central-difference check of group vs algebra level");
  linkage->add_option("--family", family)->required();
  linkage->add_option("--params", params);

  auto* unitarity =
      app.add_subcommand("unitarity", "norm preservation of group actions");
  unitarity->add_option("--family", family)->required();
  unitarity->add_option("--params", params);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitConfigError;
  }

  try {
    if (brackets->parsed()) {
      if (n < 2) throw ConfigError("--n must be >= 2");
      return cmd_brackets(n, eps);
    }
    if (repcheck->parsed()) return cmd_repcheck(family, params);
    if (sweep->parsed()) return cmd_sweep(scenario, params, out_path, format);
    if (linkage->parsed()) return cmd_linkage(family, params);
    if (unitarity->parsed()) return cmd_unitarity(family, params);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitConfigError;
}
