// nlolim: off-resonant polarizability/hyperpolarizability limits with
// lowest-order relativistic sum-rule corrections, plus a 1D eigensolver
// oracle. Subcommands: three-level scan-*, solve, sumrules, hydrogenic,
// consistency.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "nlolim/eigensolver.hpp"
#include "nlolim/errors.hpp"
#include "nlolim/hydrogenic.hpp"
#include "nlolim/scan.hpp"
#include "nlolim/scan_ops.hpp"
#include "nlolim/sos.hpp"
#include "nlolim/spectrum.hpp"
#include "nlolim/sum_rules.hpp"
#include "nlolim/three_level.hpp"
#include "nlolim/version.hpp"

using namespace nlolim;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitSolver = 3;
constexpr int kExitIo = 4;

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw io_error("cannot open output file " + path);
  out << contents;
  if (!out) throw io_error("failed writing " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open input file " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& out_path, const std::string& contents) {
  if (out_path.empty())
    std::cout << contents;
  else
    write_file(out_path, contents);
}

struct GlobalOpts {
  double c = kSpeedOfLight;
  std::string out;
  std::string format = "csv";
  unsigned threads = 1;
  std::uint64_t seed = 1;
};

void emit_table(const ScanTable& t, const GlobalOpts& g) {
  emit(g.out, g.format == "json" ? t.to_json() : t.to_csv());
}

struct SolveConfig {
  PotentialSpec potential;
  GridSpec grid;
  std::size_t states = 10;
  double c = kSpeedOfLight;
  double mass = 1.0;
  std::string mode = "perturbative";
};

// Config file carries the potential and optional grid/states/c/mode; command
// line flags override file values.
SolveConfig load_solve_config(const std::string& path) {
  SolveConfig cfg;
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw config_error(std::string("config parse error: ") + e.what());
  }
  try {
    cfg.potential = PotentialSpec::from_json(j.dump());
  } catch (const std::exception& e) {
    throw config_error(std::string("bad potential config: ") + e.what());
  }
  if (j.contains("grid")) {
    const auto& gj = j["grid"];
    cfg.grid.x_min = gj.value("x_min", cfg.grid.x_min);
    cfg.grid.x_max = gj.value("x_max", cfg.grid.x_max);
    cfg.grid.n_points = gj.value("n_points", cfg.grid.n_points);
  }
  cfg.states = j.value("states", cfg.states);
  cfg.c = j.value("c", cfg.c);
  cfg.mass = j.value("mass", cfg.mass);
  cfg.mode = j.value("mode", cfg.mode);
  return cfg;
}

int run_solve(const std::string& config_path, const GlobalOpts& g,
              const std::optional<std::size_t>& states_flag,
              const std::optional<std::string>& mode_flag, bool nonrel,
              const std::optional<double>& xmin_flag,
              const std::optional<double>& xmax_flag,
              const std::optional<std::size_t>& points_flag, bool c_flag_given,
              const std::optional<double>& mass_flag) {
  SolveConfig cfg = load_solve_config(config_path);
  if (states_flag) cfg.states = *states_flag;
  if (mode_flag) cfg.mode = *mode_flag;
  if (xmin_flag) cfg.grid.x_min = *xmin_flag;
  if (xmax_flag) cfg.grid.x_max = *xmax_flag;
  if (points_flag) cfg.grid.n_points = *points_flag;
  if (c_flag_given) cfg.c = g.c;
  if (mass_flag) cfg.mass = *mass_flag;

  Eigensystem es;
  if (nonrel) {
    es = solve_nonrel(cfg.potential, cfg.grid, cfg.states, cfg.mass);
  } else {
    SolveMode mode;
    if (cfg.mode == "direct")
      mode = SolveMode::relativistic_direct;
    else if (cfg.mode == "perturbative")
      mode = SolveMode::relativistic_perturbative;
    else
      throw config_error("mode must be 'direct' or 'perturbative'");
    es = solve_rel(cfg.potential, cfg.grid, cfg.states, cfg.mass, cfg.c, mode);
  }

  if (!es.confined)
    std::cerr << "warning: boundary tail probability " << format_float(es.boundary_tail)
              << " exceeds 1e-08; potential may not confine all requested states\n";
  if (es.collapse_flag)
    std::cerr << "warning: corrected eigenvalues below the potential minimum; "
                 "quartic-term spectrum collapse suspected, prefer perturbative mode\n";

  std::printf("# state  energy\n");
  for (std::size_t n = 0; n < es.num_states(); ++n)
    std::printf("%6zu  %s\n", n, format_float(es.eigenvalues[n]).c_str());

  if (!g.out.empty()) {
    const Spectrum s = spectrum_from_eigensystem(es, cfg.states);
    const LambdaMatrix lam = lambda_matrix_from_p2(es, cfg.states, nonrel ? kSpeedOfLight : cfg.c);
    // reproduction metadata rides along; readers ignore unknown keys
    auto j = nlohmann::ordered_json::parse(s.to_json(&lam));
    j["metadata"] = {{"command", "solve"},
                     {"version", kVersion},
                     {"potential", nlohmann::ordered_json::parse(cfg.potential.to_json())},
                     {"grid", {{"x_min", es.grid.x_min},
                               {"x_max", es.grid.x_max},
                               {"n_points", es.grid.n_points}}},
                     {"states", cfg.states},
                     {"c", cfg.c},
                     {"mass", cfg.mass},
                     {"mode", nonrel ? "nonrel" : cfg.mode}};
    write_file(g.out, j.dump(2) + "\n");
  }
  return kExitOk;
}

int run_sumrules(const std::string& spectrum_path, std::size_t max_index, std::size_t L,
                 const GlobalOpts& g) {
  std::optional<LambdaMatrix> lam;
  const Spectrum s = Spectrum::from_json(read_file(spectrum_path), &lam);
  const std::size_t ns = s.num_states();
  if (max_index >= ns) throw config_error("max-index exceeds spectrum states");
  if (L == 0 || L > ns) L = ns;

  const LambdaMatrix identity = LambdaMatrix::identity(ns, kSpeedOfLight);
  std::ostringstream os;
  os << "# nlolim sum-rule audit\n";
  os << "# schema: " << kSchema << "\n";
  os << "# meta spectrum: " << spectrum_path << "\n";
  os << "# meta L: " << L << "\n";
  os << "# meta lambda: " << (lam ? "embedded" : "identity-only") << "\n";
  os << "k,n,lhs,rhs_nonrel,residual_nonrel";
  if (lam) os << ",rhs_rel,residual_rel";
  os << "\n";
  for (std::size_t k = 0; k <= max_index; ++k)
    for (std::size_t n = 0; n <= max_index; ++n) {
      const double lhs = trk_lhs(s, k, n, L);
      const double rhs0 = trk_rhs_rel(identity, k, n, s.mass);
      os << k << "," << n << "," << format_float(lhs) << "," << format_float(rhs0) << ","
         << format_float(lhs - rhs0);
      if (lam) {
        const double rhs1 = trk_rhs_rel(*lam, k, n, s.mass);
        os << "," << format_float(rhs1) << "," << format_float(lhs - rhs1);
      }
      os << "\n";
    }

  // For a three-level spectrum with an embedded lambda block, also audit the
  // four constructed rules the ansatz moments are built from.
  if (ns == 3 && lam) {
    LambdaSet set;
    set.l00 = lam->values(0, 0);
    set.l11 = lam->values(1, 1);
    set.l10 = lam->values(1, 0);
    set.l20 = lam->values(2, 0);
    const auto r = three_level::sum_rule_residuals(s, set);
    os << "# constructed three-level rules (0,0),(1,1),(1,0),(2,0) residuals: "
       << format_float(r[0]) << " " << format_float(r[1]) << " " << format_float(r[2])
       << " " << format_float(r[3]) << "\n";
  }
  emit(g.out, os.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"off-resonant nonlinear-optical limits with relativistic sum-rule corrections"};
  app.set_version_flag("--version", std::string(kVersion));
  app.fallthrough();  // global flags may follow the subcommand name
  app.require_subcommand(1);

  GlobalOpts g;
  bool c_given = false;
  app.add_option("--c", g.c, "speed of light, atomic units")
      ->each([&](const std::string&) { c_given = true; });
  app.add_option("--out", g.out, "output file (default stdout)");
  app.add_option("--format", g.format, "csv|json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--threads", g.threads, "worker threads for grid scans");
  app.add_option("--seed", g.seed, "random seed for sampled commands");

  // three-level scan group
  auto* tl = app.add_subcommand("three-level", "closed-form three-level scans");
  tl->require_subcommand(1);

  double l10 = 0.0;
  AxisSpec ax1, ax2;
  auto add_axis_opts = [](CLI::App* cmd, const char* name, AxisSpec& a) {
    cmd->add_option(std::string("--") + name + "-lo", a.lo);
    cmd->add_option(std::string("--") + name + "-hi", a.hi);
    cmd->add_option(std::string("--") + name + "-n", a.n);
  };

  auto* sb = tl->add_subcommand("scan-beta",
                                "corrected hyperpolarizability limit over (l00, l11)");
  sb->add_option("--l10", l10, "off-diagonal lambda10 preset (0, 0.1, 0.2, ...)");
  add_axis_opts(sb, "l00", ax1);
  add_axis_opts(sb, "l11", ax2);

  auto* sgmax = tl->add_subcommand("scan-gamma-max",
                                   "corrected gamma maximum over (l00, l11)");
  sgmax->add_option("--l10", l10, "off-diagonal lambda10 preset");
  add_axis_opts(sgmax, "l00", ax1);
  add_axis_opts(sgmax, "l11", ax2);

  AxisSpec gmin_l10_axis{0.0, 0.5, 201};
  auto* sgmin = tl->add_subcommand("scan-gamma-min",
                                   "corrected gamma minimum over (l00, l10)");
  add_axis_opts(sgmin, "l00", ax1);
  add_axis_opts(sgmin, "l10", gmin_l10_axis);

  // solve
  auto* solve = app.add_subcommand("solve", "1D bound-state eigensolver");
  std::string config_path;
  solve->add_option("--config", config_path, "potential config JSON")->required();
  std::optional<std::size_t> states_flag;
  solve->add_option("--states", states_flag, "number of bound states");
  std::optional<std::string> mode_flag;
  solve->add_option("--mode", mode_flag, "direct|perturbative")
      ->check(CLI::IsMember({"direct", "perturbative"}));
  bool nonrel = false;
  solve->add_flag("--nonrel", nonrel, "solve the uncorrected Hamiltonian");
  std::optional<double> xmin_flag, xmax_flag, mass_flag;
  std::optional<std::size_t> points_flag;
  solve->add_option("--xmin", xmin_flag);
  solve->add_option("--xmax", xmax_flag);
  solve->add_option("--points", points_flag);
  solve->add_option("--mass", mass_flag, "particle mass, atomic units");

  // sumrules
  auto* sr = app.add_subcommand("sumrules", "sum-rule residual audit of a spectrum file");
  std::string spectrum_path;
  std::size_t max_index = 2, big_l = 0;
  sr->add_option("--spectrum", spectrum_path, "spectrum JSON")->required();
  sr->add_option("--max-index", max_index, "largest (k, n) index");
  sr->add_option("--L", big_l, "truncation count (default: all states)");

  // hydrogenic
  auto* hy = app.add_subcommand("hydrogenic", "H-like ion gamma ratio curve");
  int z_max = 100;
  double alpha_fs = hydrogenic::kFineStructure;
  hy->add_option("--zmax", z_max, "largest atomic number");
  hy->add_option("--alpha", alpha_fs, "fine-structure constant (0 for the classical limit)");

  // consistency
  auto* cons = app.add_subcommand("consistency", "closed-form vs SOS audit");
  std::uint64_t samples = 2000;
  cons->add_option("--samples", samples, "number of (X, E) draws");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (sb->parsed()) {
      emit_table(scan_beta(l10, ax1, ax2, g.threads), g);
      return kExitOk;
    }
    if (sgmax->parsed()) {
      emit_table(scan_gamma_max(l10, ax1, ax2, g.threads), g);
      return kExitOk;
    }
    if (sgmin->parsed()) {
      emit_table(scan_gamma_min(ax1, gmin_l10_axis, g.threads), g);
      return kExitOk;
    }
    if (solve->parsed())
      return run_solve(config_path, g, states_flag, mode_flag, nonrel, xmin_flag,
                       xmax_flag, points_flag, c_given, mass_flag);
    if (sr->parsed()) return run_sumrules(spectrum_path, max_index, big_l, g);
    if (hy->parsed()) {
      const auto rows = hydrogenic::gamma_ratio_curve(z_max, alpha_fs);
      emit(g.out, g.format == "json" ? hydrogenic_json(rows, alpha_fs)
                                     : hydrogenic_csv(rows, alpha_fs));
      return kExitOk;
    }
    if (cons->parsed()) {
      const auto rep = three_level::consistency_report(samples, g.seed);
      emit(g.out, rep.to_text());
      return kExitOk;  // findings are data, not failures
    }
  } catch (const config_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const solver_error& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const io_error& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::domain_error& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSolver;
  }
  return kExitConfig;
}
