// SPDX-License-Identifier: Apache-2.0
#include "mtf_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "mtf/error.hpp"
#include "mtf/krylov.hpp"
#include "mtf/modal.hpp"
#include "mtf/scenarios.hpp"
#include "mtf/selftest.hpp"
#include "mtf/symbols.hpp"
#include "mtf_cli/csv.hpp"

namespace mtf::cli {

namespace {

using json = nlohmann::ordered_json;
using cd = std::complex<double>;

struct RunConfig
{
  std::string scenario = "teflon-lf";
  std::string custom;
  std::string variant;
  int n_max = -1;
  bool scaled = false;
  bool multiplicity = false;
  std::uint64_t seed = 42;
  double tol = 1e-8;
  int restart = 20;
  std::string out;
  std::string format = "csv";
  bool json_flag = false;
  std::string inject_fault;
};

/// Where a command's primary payload and its summary go.
struct Sinks
{
  std::ostream& data;
  std::ostream& summary;
};

Scenario resolve_scenario(const RunConfig& cfg)
{
  return cfg.custom.empty() ? get_scenario(cfg.scenario) : load_custom_scenario(cfg.custom);
}

json points_json(const std::vector<cd>& points)
{
  json arr = json::array();
  for (const cd& p : points) {
    arr.push_back({{"re", p.real()}, {"im", p.imag()}});
  }
  return arr;
}

json scenario_json(const Scenario& s)
{
  return {{"name", s.name},
          {"kappa0", s.media.outer.kappa},
          {"kappa1", s.media.inner.kappa},
          {"eps_r", s.media.epsilon_ratio()},
          {"mu_r", s.media.mu_ratio()}};
}

void require_n_max(int n_max)
{
  if (n_max < 1) {
    throw UsageError("--nmax must be >= 1, got " + std::to_string(n_max));
  }
}

int cmd_spectrum(const RunConfig& cfg, Sinks sinks)
{
  const Scenario s = resolve_scenario(cfg);
  const Variant v = parse_variant(cfg.variant.empty() ? "mtf" : cfg.variant);
  const int n_max = cfg.n_max < 0 ? default_spectrum_truncation(s) : cfg.n_max;
  require_n_max(n_max);
  const modal::SpectrumReport rep = modal::spectrum_scan(s.media, v, n_max, cfg.scaled);

  json summary{{"command", "spectrum"},
               {"scenario", scenario_json(s)},
               {"variant", to_string(v)},
               {"n_max", n_max},
               {"scaled", cfg.scaled},
               {"closed_form", rep.closed_form},
               {"accumulation_points", points_json(rep.accumulation)},
               {"final_hausdorff", rep.modes.back().hausdorff},
               {"min_modulus", rep.min_modulus}};

  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& ms : rep.modes) {
      for (std::size_t i = 0; i < ms.eigenvalues.size(); ++i) {
        rows.push_back({ms.n, i, ms.eigenvalues[i].real(), ms.eigenvalues[i].imag(), ms.dist_to_accum[i]});
      }
    }
    summary["columns"] = {"n", "eig_index", "re", "im", "dist_to_accum"};
    summary["rows"] = std::move(rows);
    sinks.data << summary.dump(2) << '\n';
    return kOk;
  }
  CsvWriter csv(sinks.data);
  csv.field("n").field("eig_index").field("re").field("im").field("dist_to_accum");
  csv.end_row();
  for (const auto& ms : rep.modes) {
    for (std::size_t i = 0; i < ms.eigenvalues.size(); ++i) {
      csv.field(ms.n).field(static_cast<int>(i)).field(ms.eigenvalues[i].real());
      csv.field(ms.eigenvalues[i].imag()).field(ms.dist_to_accum[i]);
      csv.end_row();
    }
  }
  sinks.summary << summary.dump() << '\n';
  return kOk;
}

int cmd_accum(const RunConfig& cfg, Sinks sinks)
{
  const Scenario s = resolve_scenario(cfg);
  const Variant v = parse_variant(cfg.variant.empty() ? "mtf" : cfg.variant);
  json out{{"command", "accum"}, {"scenario", scenario_json(s)}, {"variant", to_string(v)}};
  out["lambda_mu"] = symbols::lambda_mu(s.media);
  out["lambda_eps"] = symbols::lambda_eps(s.media);
  out["upsilon_mu"] = symbols::upsilon_mu(s.media);
  out["upsilon_eps"] = symbols::upsilon_eps(s.media);
  bool closed = true;
  const auto points = modal::reference_points(s.media, v, cfg.scaled, &closed);
  out["closed_form"] = closed;
  out["points"] = points_json(points);
  sinks.data << out.dump(2) << '\n';
  return kOk;
}

int cmd_gmres(const RunConfig& cfg, Sinks sinks)
{
  const Scenario s = resolve_scenario(cfg);
  const int n_max = cfg.n_max < 0 ? default_truncation(s) : cfg.n_max;
  require_n_max(n_max);
  krylov::GmresOptions opts;
  opts.tol = cfg.tol;
  opts.restart = cfg.restart;
  opts.validate();

  std::vector<Variant> variants{Variant::mtf, Variant::mtf2, Variant::bmtf, Variant::stf2};
  if (!cfg.variant.empty()) {
    variants = {parse_variant(cfg.variant)};
  }
  const modal::ModalGrid grid{1, n_max, cfg.multiplicity};
  std::vector<krylov::VariantRun> runs;
  for (Variant v : variants) {
    runs.push_back(krylov::run_variant(v, s.media, grid, opts, cfg.seed));
  }

  json summary{{"command", "gmres"},
               {"scenario", scenario_json(s)},
               {"n_max", n_max},
               {"multiplicity", cfg.multiplicity},
               {"tol", opts.tol},
               {"restart", opts.restart},
               {"seed", cfg.seed}};
  json run_list = json::array();
  bool all_converged = true;
  for (const auto& r : runs) {
    all_converged = all_converged && r.report.converged;
    run_list.push_back({{"variant", to_string(r.variant)},
                        {"iterations", r.report.iterations},
                        {"converged", r.report.converged},
                        {"final_residual", r.report.final_residual}});
  }
  summary["runs"] = run_list;

  if (cfg.format == "json") {
    json hist = json::object();
    for (const auto& r : runs) {
      hist[std::string(to_string(r.variant))] = r.report.residual_history;
    }
    summary["histories"] = std::move(hist);
    sinks.data << summary.dump(2) << '\n';
  } else {
    CsvWriter csv(sinks.data);
    csv.field("variant").field("iteration").field("relative_residual");
    csv.end_row();
    for (const auto& r : runs) {
      for (std::size_t i = 0; i < r.report.residual_history.size(); ++i) {
        csv.field(to_string(r.variant)).field(static_cast<int>(i)).field(r.report.residual_history[i]);
        csv.end_row();
      }
    }
    sinks.summary << summary.dump() << '\n';
  }
  return all_converged ? kOk : kNotConverged;
}

int cmd_coercivity(const RunConfig& cfg, Sinks sinks)
{
  const Scenario s = resolve_scenario(cfg);
  const int n_max = cfg.n_max < 0 ? 500 : cfg.n_max;
  require_n_max(n_max);
  const auto rows = modal::coercivity_scan(s.media, n_max);
  json summary{{"command", "coercivity"},
               {"scenario", scenario_json(s)},
               {"n_max", n_max},
               {"asymptotic_limit", modal::coercivity_limit(s.media)}};
  double min_asym = rows.front().asymptotic;
  for (const auto& r : rows) {
    min_asym = std::min(min_asym, r.asymptotic);
  }
  summary["min_asymptotic"] = min_asym;

  if (cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      arr.push_back({r.n, r.exact, r.asymptotic});
    }
    summary["columns"] = {"n", "quotient_exact", "quotient_asymptotic"};
    summary["rows"] = std::move(arr);
    sinks.data << summary.dump(2) << '\n';
    return kOk;
  }
  CsvWriter csv(sinks.data);
  csv.field("n").field("quotient_exact").field("quotient_asymptotic");
  csv.end_row();
  for (const auto& r : rows) {
    csv.field(r.n).field(r.exact).field(r.asymptotic);
    csv.end_row();
  }
  sinks.summary << summary.dump() << '\n';
  return kOk;
}

int cmd_selftest(const RunConfig& cfg, Sinks sinks)
{
  selftest::SelftestOptions opts;
  if (cfg.n_max >= 0) {
    require_n_max(cfg.n_max);
    opts.n_max = cfg.n_max;
  }
  if (!cfg.inject_fault.empty()) {
    if (cfg.inject_fault != "k-sign") {
      throw UsageError("unknown fault '" + cfg.inject_fault + "'");
    }
    opts.inject_k_sign_fault = true;
  }
  const auto results = selftest::run_selftest(opts);
  const bool ok = selftest::all_passed(results);
  if (cfg.json_flag || cfg.format == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"name", r.name}, {"max_defect", r.max_defect}, {"tolerance", r.tolerance}, {"passed", r.passed}});
    }
    sinks.data << json{{"command", "selftest"}, {"passed", ok}, {"checks", arr}}.dump(2) << '\n';
  } else {
    for (const auto& r : results) {
      sinks.data << (r.passed ? "PASS " : "FAIL ") << r.name << " max_defect=" << format_double(r.max_defect)
                 << " tol=" << format_double(r.tolerance) << '\n';
    }
  }
  return ok ? kOk : kCheckFailed;
}

void add_common(CLI::App* sub, RunConfig& cfg)
{
  sub->add_option("--scenario", cfg.scenario, "Preset name (teflon-lf ... ferrite-vhf)");
  sub->add_option("--custom", cfg.custom, "key=value file with eps0, mu0, eps1, mu1, kappa0, kappa1");
  sub->add_option("--variant", cfg.variant, "mtf, mtf2, bmtf, stf2, amtf, pi, ktilde, stilde");
  sub->add_option("--nmax", cfg.n_max, "Largest mode index");
  sub->add_flag("--scaled", cfg.scaled, "Apply the variant normalization");
  sub->add_flag("--multiplicity", cfg.multiplicity, "Repeat each mode block 2n+1 times");
  sub->add_option("--seed", cfg.seed, "Seed for synthetic data");
  sub->add_option("--tol", cfg.tol, "GMRES relative tolerance");
  sub->add_option("--restart", cfg.restart, "GMRES restart length");
  sub->add_option("--out", cfg.out, "Output file (default: stdout)");
  sub->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
  CLI::App app{"Spectral symbols of the local multi-trace formulation on the sphere", "mtf-spectra"};
  app.require_subcommand(1);
  RunConfig cfg;
  using Handler = int (*)(const RunConfig&, Sinks);
  std::vector<std::pair<CLI::App*, Handler>> commands{
      {app.add_subcommand("spectrum", "Per-mode eigenvalues and distances to accumulation points"), cmd_spectrum},
      {app.add_subcommand("accum", "Accumulation points as JSON"), cmd_accum},
      {app.add_subcommand("gmres", "GMRES(restart) residual histories per variant"), cmd_gmres},
      {app.add_subcommand("coercivity", "Weighted coercivity quotients per mode"), cmd_coercivity},
      {app.add_subcommand("selftest", "Symbol identity suite"), cmd_selftest},
  };
  for (auto& [sub, handler] : commands) {
    add_common(sub, cfg);
  }
  CLI::App* selftest_cmd = commands.back().first;
  selftest_cmd->add_flag("--json", cfg.json_flag, "Machine-readable results");
  selftest_cmd->add_option("--inject-fault", cfg.inject_fault)->group("");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    for (auto& [sub, handler] : commands) {
      if (!sub->parsed()) {
        continue;
      }
      if (cfg.out.empty()) {
        return handler(cfg, Sinks{out, err});
      }
      std::ofstream file(cfg.out, std::ios::binary);
      if (!file) {
        throw IoError("cannot open '" + cfg.out + "' for writing");
      }
      const int code = handler(cfg, Sinks{file, out});
      file.close();
      if (!file) {
        throw IoError("failed writing '" + cfg.out + "'");
      }
      return code;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNotConverged;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kNotConverged;
  }
  return kUsage;
}

}  // namespace mtf::cli
