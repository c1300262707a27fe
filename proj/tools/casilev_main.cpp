// Command-line front end: force/thermal curves, equilibrium tables, the
// frequency-resolved spectrum, and laboratory-unit conversions.  Output is
// CSV (with '#' comments) or JSON, deterministic across reruns.

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "casilev/analysis.hpp"
#include "casilev/errors.hpp"
#include "casilev/materials.hpp"
#include "casilev/potential.hpp"
#include "casilev/reflection.hpp"
#include "casilev/thermal.hpp"

namespace {

using nlohmann::json;
using namespace casilev;

constexpr const char* kVersion = "casilev 1.0.0";

// Bad option combinations detected after CLI11 parsing.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CurveOpts {
  double radius = 0.1;
  double gamma_s = 0.0;
  std::string wall = "2.0";  // omega_q / omega_p, or "perfect"
  double gamma_w = 0.0;
  double beta = 0.0;  // 0 means strict zero temperature
  double z_min = 2.0;
  double z_max = 16.0;
  int points = 200;
  double rel_tol = 1e-8;
  int max_subdivisions = 4000;
  bool include_perfect = false;
  // spectrum only
  double z = 5.0;
  double omega_min = 0.02;
  double omega_max = 2.0;

  std::string format = "csv";
  std::string out_path;
};

struct UnitOpts {
  double omega_p_ev = 10.0;
  double radius_nm = 20.0;
  double rho = 1.0;
  double z_um = 1.0;
  double gamma_s_ev = 0.0;
  double barrier = 1.4e-3;

  std::string format = "csv";
  std::string out_path;
};

std::string fmt17(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%.17g", v);
  return b;
}

std::string fmtg(double v) {
  char b[40];
  std::snprintf(b, sizeof b, "%g", v);
  return b;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

WallResponse parse_wall(const std::string& wall, double gamma_w) {
  if (wall == "perfect") {
    if (gamma_w != 0.0) {
      throw UsageError("--gamma-w has no meaning for a perfect wall");
    }
    return WallResponse::perfect();
  }
  std::size_t used = 0;
  double ratio = 0.0;
  try {
    ratio = std::stod(wall, &used);
  } catch (const std::exception&) {
    throw UsageError("--wall-ratio must be a number or 'perfect'");
  }
  if (used != wall.size() || !(ratio > 0.0)) {
    throw UsageError("--wall-ratio must be a positive number or 'perfect'");
  }
  return WallResponse::drude(ratio, gamma_w);
}

IntegrationSpec make_tol(const CurveOpts& o) {
  IntegrationSpec tol;
  tol.rel_tol = o.rel_tol;
  tol.max_subdivisions = o.max_subdivisions;
  return tol;
}

std::vector<double> make_grid(double lo, double hi, int n, const char* what) {
  if (n > 1 && !(hi > lo)) {
    throw UsageError(std::string("empty ") + what +
                     " range: max must exceed min");
  }
  return linspace(lo, hi, n);
}

std::string wall_echo(const CurveOpts& o) {
  if (o.wall == "perfect") return "perfect";
  return fmtg(std::stod(o.wall));
}

json wall_json(const CurveOpts& o) {
  if (o.wall == "perfect") return json("perfect");
  return json(std::stod(o.wall));
}

struct Output {
  std::vector<std::string> comments;  // without leading "# "
  std::vector<std::string> columns;
  std::vector<json> rows;  // objects keyed by column name
  json config;
  std::string command;
};

std::string render(const Output& out, const std::string& format) {
  if (format == "json") {
    json j;
    j["version"] = kVersion;
    j["command"] = out.command;
    j["config"] = out.config;
    j["comments"] = out.comments;
    j["rows"] = out.rows;
    return j.dump(2) + "\n";
  }
  std::string s;
  s += std::string("# ") + kVersion + "\n";
  s += "# command: " + out.command + "\n";
  for (const auto& c : out.comments) s += "# " + c + "\n";
  for (std::size_t i = 0; i < out.columns.size(); ++i) {
    s += (i ? "," : "") + out.columns[i];
  }
  s += "\n";
  for (const json& row : out.rows) {
    for (std::size_t i = 0; i < out.columns.size(); ++i) {
      if (i) s += ",";
      const json& v = row.at(out.columns[i]);
      if (v.is_null()) {
        s += "nan";
      } else if (v.is_boolean()) {
        s += v.get<bool>() ? "1" : "0";
      } else {
        s += fmt17(v.get<double>());
      }
    }
    s += "\n";
  }
  return s;
}

json curve_config(const CurveOpts& o, bool thermal) {
  json c;
  c["radius"] = o.radius;
  c["gamma_s"] = o.gamma_s;
  c["wall_ratio"] = wall_json(o);
  c["gamma_w"] = o.gamma_w;
  if (thermal) c["beta"] = o.beta;
  c["z_min"] = o.z_min;
  c["z_max"] = o.z_max;
  c["points"] = o.points;
  c["rel_tol"] = o.rel_tol;
  return c;
}

std::string config_echo(const CurveOpts& o, bool thermal) {
  std::string s = "config: radius=" + fmtg(o.radius) +
                  " gamma_s=" + fmtg(o.gamma_s) + " wall_ratio=" +
                  wall_echo(o) + " gamma_w=" + fmtg(o.gamma_w);
  if (thermal) s += " beta=" + fmtg(o.beta);
  s += " z_min=" + fmtg(o.z_min) + " z_max=" + fmtg(o.z_max) +
       " points=" + std::to_string(o.points) + " rel_tol=" + fmtg(o.rel_tol);
  return s;
}

int run_curve(const CurveOpts& o, bool thermal) {
  const SphereSpec sphere(o.radius, Material(1.0, o.gamma_s));
  const WallResponse wall = parse_wall(o.wall, o.gamma_w);
  const IntegrationSpec tol = make_tol(o);
  const std::vector<double> grid = make_grid(o.z_min, o.z_max, o.points, "z");
  std::optional<ThermalState> th;
  if (thermal) th.emplace(o.beta);

  Output out;
  out.command = thermal ? "thermal" : "force";
  out.config = curve_config(o, thermal);
  out.comments.push_back(config_echo(o, thermal));
  out.columns = {"z", "f_total", "f_j", "f_p", "v_total", "v_j", "v_p"};
  if (o.include_perfect) out.columns.push_back("f_perfect");

  std::vector<std::string> warnings;
  for (double zc : {grid.front(), grid.back()}) {
    const Scenario sc{sphere, wall, zc};
    for (const auto& w : scenario_warnings(sc)) {
      if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) {
        warnings.push_back(w);
      }
    }
    if (th) {
      for (const auto& w : thermal_warnings(sc, *th)) {
        if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) {
          warnings.push_back(w);
        }
      }
    }
  }
  for (const auto& w : warnings) out.comments.push_back("warning: " + w);

  const SystemConfig pc{sphere, WallResponse::perfect(), std::nullopt};
  for (double z : grid) {
    const Scenario s{sphere, wall, z};
    const PotentialBreakdown b =
        th ? breakdown_thermal(s, *th, tol) : breakdown(s, tol);
    json row;
    row["z"] = z;
    row["f_total"] = b.f_total();
    row["f_j"] = b.f_j;
    row["f_p"] = b.f_p;
    row["v_total"] = b.v_total();
    row["v_j"] = b.v_j;
    row["v_p"] = b.v_p;
    if (o.include_perfect) row["f_perfect"] = total_force(pc, z, tol);
    out.rows.push_back(std::move(row));
  }

  emit(o.out_path, render(out, o.format));
  return 0;
}

int run_equilibria(const CurveOpts& o) {
  const SphereSpec sphere(o.radius, Material(1.0, o.gamma_s));
  const WallResponse wall = parse_wall(o.wall, o.gamma_w);
  const std::vector<double> grid = make_grid(o.z_min, o.z_max, o.points, "z");
  const bool thermal = o.beta > 0.0;
  SystemConfig cfg{sphere, wall,
                   thermal ? std::optional<double>(o.beta) : std::nullopt};

  CurveOptions copt;
  copt.tolerance = make_tol(o);
  const ForceCurve curve = force_curve(cfg, grid, copt);

  Output out;
  out.command = "equilibria";
  out.config = curve_config(o, thermal);
  out.comments.push_back(config_echo(o, thermal));
  for (const auto& w : curve.warnings) out.comments.push_back("warning: " + w);
  for (const auto& e : curve.point_errors) out.comments.push_back("error: " + e);
  out.columns = {"z_star", "stable", "stiffness", "barrier_to_next"};

  for (const EquilibriumPoint& p : find_equilibria(curve)) {
    json row;
    row["z_star"] = p.z_star;
    row["stable"] = p.stable;
    row["stiffness"] = p.stiffness;
    if (p.barrier_to_next) {
      row["barrier_to_next"] = *p.barrier_to_next;
    } else {
      row["barrier_to_next"] = nullptr;
    }
    out.rows.push_back(std::move(row));
  }

  emit(o.out_path, render(out, o.format));
  return 0;
}

int run_spectrum(const CurveOpts& o) {
  const WallResponse wall = parse_wall(o.wall, o.gamma_w);
  const IntegrationSpec tol = make_tol(o);
  if (!(o.z > 0.0)) throw UsageError("--z must be positive");
  if (!(o.omega_min > 0.0)) throw UsageError("--omega-min must be positive");
  const std::vector<double> omegas =
      make_grid(o.omega_min, o.omega_max, o.points, "omega");

  Output out;
  out.command = "spectrum";
  out.config["wall_ratio"] = wall_json(o);
  out.config["gamma_w"] = o.gamma_w;
  out.config["z"] = o.z;
  out.config["omega_min"] = o.omega_min;
  out.config["omega_max"] = o.omega_max;
  out.config["points"] = o.points;
  out.config["rel_tol"] = o.rel_tol;
  out.comments.push_back("config: wall_ratio=" + wall_echo(o) + " gamma_w=" +
                         fmtg(o.gamma_w) + " z=" + fmtg(o.z) + " omega=[" +
                         fmtg(o.omega_min) + "," + fmtg(o.omega_max) +
                         "] points=" + std::to_string(o.points) +
                         " rel_tol=" + fmtg(o.rel_tol));

  const double regularized = regularized_cp_spectrum_integral(o.z, tol);
  const double cp_limit = -1.5 / o.z;
  out.config["regularized_sigma_integral"] = regularized;
  out.config["cp_limit"] = cp_limit;
  out.comments.push_back("regularized_sigma_integral: " + fmt17(regularized));
  out.comments.push_back("cp_limit_-3/(2z): " + fmt17(cp_limit));

  out.columns = {"omega", "sigma", "e2"};
  for (double w : omegas) {
    json row;
    row["omega"] = w;
    row["sigma"] = cp_spectrum(w, o.z);
    row["e2"] = spectral_e2(wall, o.z, w, tol);
    out.rows.push_back(std::move(row));
  }

  emit(o.out_path, render(out, o.format));
  return 0;
}

int run_units(const UnitOpts& o) {
  if (!(o.omega_p_ev > 0.0)) throw UsageError("--omega-p-ev must be positive");
  if (!(o.rho > 0.0)) throw UsageError("--rho must be positive");
  if (!(o.z_um > 0.0)) throw UsageError("--z-um must be positive");
  LabUnits units;
  units.omega_p_ev = o.omega_p_ev;
  units.rho_g_cm3 = o.rho;

  const SizeBound bound = sphere_size_bound(units);
  const double kelvin = barrier_in_kelvin(units, o.barrier, o.radius_nm);
  // gamma_s z in natural units from gamma_s in eV and z in um.
  const double gamma_s_z =
      o.gamma_s_ev * o.z_um * 1000.0 / LabUnits::hbar_c_ev_nm;
  const double ratio = levitation_ratio_formula(units, o.z_um, gamma_s_z);

  Output out;
  out.command = "units";
  out.config["omega_p_ev"] = o.omega_p_ev;
  out.config["radius_nm"] = o.radius_nm;
  out.config["rho_g_cm3"] = o.rho;
  out.config["z_um"] = o.z_um;
  out.config["gamma_s_ev"] = o.gamma_s_ev;
  out.config["barrier"] = o.barrier;
  out.comments.push_back(
      "config: omega_p_ev=" + fmtg(o.omega_p_ev) + " radius_nm=" +
      fmtg(o.radius_nm) + " rho=" + fmtg(o.rho) + " z_um=" + fmtg(o.z_um) +
      " gamma_s_ev=" + fmtg(o.gamma_s_ev) + " barrier=" + fmtg(o.barrier));
  out.columns = {"quantity", "value"};

  auto push = [&](const char* name, double value) {
    json row;
    row["quantity"] = name;
    row["value"] = value;
    out.rows.push_back(std::move(row));
  };
  push("dipole_scale_nm", bound.dipole_scale_nm);
  push("stated_gold_bound_nm", bound.stated_gold_bound_nm);
  push("barrier_kelvin", kelvin);
  push("levitation_ratio", ratio);

  // The quantity column is a string; render() expects doubles, so build the
  // CSV here instead.
  if (o.format == "json") {
    json j;
    j["version"] = kVersion;
    j["command"] = out.command;
    j["config"] = out.config;
    j["comments"] = out.comments;
    j["rows"] = out.rows;
    emit(o.out_path, j.dump(2) + "\n");
    return 0;
  }
  std::string s;
  s += std::string("# ") + kVersion + "\n";
  s += "# command: units\n";
  for (const auto& c : out.comments) s += "# " + c + "\n";
  s += "quantity,value\n";
  for (const json& row : out.rows) {
    s += row.at("quantity").get<std::string>() + "," +
         fmt17(row.at("value").get<double>()) + "\n";
  }
  emit(o.out_path, s);
  return 0;
}

void add_format_opts(CLI::App* sub, std::string& format,
                     std::string& out_path) {
  sub->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", out_path, "write output to this file");
}

void add_wall_opts(CLI::App* sub, CurveOpts& o) {
  sub->add_option("--wall-ratio", o.wall,
                  "wall plasma frequency over sphere plasma frequency, or "
                  "'perfect'")
      ->capture_default_str();
  sub->add_option("--gamma-w", o.gamma_w, "wall damping rate")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

void add_sphere_opts(CLI::App* sub, CurveOpts& o) {
  sub->add_option("--radius", o.radius, "sphere radius (units of 1/omega_p)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--gamma-s", o.gamma_s, "sphere damping rate")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

void add_range_opts(CLI::App* sub, CurveOpts& o) {
  sub->add_option("--z-min", o.z_min, "smallest separation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--z-max", o.z_max, "largest separation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--points", o.points, "number of grid points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_accuracy_opts(CLI::App* sub, CurveOpts& o) {
  sub->add_option("--rel-tol", o.rel_tol, "relative integration tolerance")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--max-subdivisions", o.max_subdivisions,
                  "adaptive quadrature panel budget")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_config_file(CLI::App* sub) {
  // Parsed by expand_config_args before CLI11 runs; registered here so the
  // flag shows up in --help for every subcommand.
  sub->add_option("--config")->description(
      "read options from a flat key=value file (explicit flags win)");
}

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])) != 0) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])) != 0) --e;
  return s.substr(b, e - b);
}

// Turns a flat key=value scenario file into long-option tokens for one
// subcommand.  Keys are long option names without the leading dashes
// (underscores accepted); unknown keys are rejected.  The expansion is
// inserted ahead of the explicit flags so take-last precedence lets the
// command line override the file.
std::vector<std::string> config_file_tokens(const CLI::App& sub,
                                            const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file: " + path);
  std::vector<std::string> tokens;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string entry = trim(line);
    if (entry.empty() || entry.front() == '#' || entry.front() == ';') {
      continue;
    }
    const std::string where =
        path + " line " + std::to_string(lineno) + ": ";
    const std::size_t eq = entry.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config file " + where + "expected key=value, got '" +
                       entry + "'");
    }
    std::string key = trim(entry.substr(0, eq));
    std::string value = trim(entry.substr(eq + 1));
    if (value.size() >= 2 &&
        ((value.front() == '"' && value.back() == '"') ||
         (value.front() == '\'' && value.back() == '\''))) {
      value = value.substr(1, value.size() - 2);
    }
    std::replace(key.begin(), key.end(), '_', '-');
    if (key.empty() || value.empty()) {
      throw UsageError("config file " + where + "empty key or value");
    }
    if (key == "config" || key == "help") {
      throw UsageError("config file " + where + "'" + key +
                       "' cannot be set from a file");
    }
    if (sub.get_option_no_throw("--" + key) == nullptr) {
      throw UsageError("config file " + where + "unknown key '" + key + "'");
    }
    tokens.push_back("--" + key + "=" + value);
  }
  return tokens;
}

// Strips --config PATH from the argument list and splices the file contents
// in, right after the subcommand name.  Leaves the arguments untouched when
// no recognised subcommand or no --config is present (CLI11 then reports its
// own usage error).
void expand_config_args(CLI::App& app, std::vector<std::string>& args) {
  if (args.empty()) return;
  const CLI::App* sub = app.get_subcommand_no_throw(args.front());
  if (sub == nullptr) return;
  std::string config_path;
  std::vector<std::string> rest;
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& tok = args[i];
    if (tok == "--config") {
      if (i + 1 >= args.size()) {
        throw UsageError("--config requires a file path");
      }
      config_path = args[++i];
    } else if (tok.rfind("--config=", 0) == 0) {
      config_path = tok.substr(std::string("--config=").size());
    } else {
      rest.push_back(tok);
    }
  }
  if (config_path.empty()) return;
  std::vector<std::string> expanded{args.front()};
  for (std::string& tok : config_file_tokens(*sub, config_path)) {
    expanded.push_back(std::move(tok));
  }
  for (std::string& tok : rest) expanded.push_back(std::move(tok));
  args = std::move(expanded);
}

// File tokens precede explicit flags, so repeated options must resolve to
// the last occurrence instead of erroring out.
void take_last_options(CLI::App* sub) {
  for (CLI::Option* opt : sub->get_options()) {
    if (opt->get_expected_max() >= 1) {
      opt->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sphere-wall vacuum force toolkit"};
  app.require_subcommand(1);

  CurveOpts fo, to, eo, so;
  UnitOpts uo;

  CLI::App* force = app.add_subcommand(
      "force", "zero-temperature force/potential curve over a z grid");
  add_sphere_opts(force, fo);
  add_wall_opts(force, fo);
  add_range_opts(force, fo);
  add_accuracy_opts(force, fo);
  add_format_opts(force, fo.format, fo.out_path);
  force->add_flag("--include-perfect", fo.include_perfect,
                  "add a perfect-wall force column");
  add_config_file(force);

  CLI::App* thermal = app.add_subcommand(
      "thermal", "finite-temperature force/potential curve");
  add_sphere_opts(thermal, to);
  add_wall_opts(thermal, to);
  add_range_opts(thermal, to);
  add_accuracy_opts(thermal, to);
  add_format_opts(thermal, to.format, to.out_path);
  thermal->add_flag("--include-perfect", to.include_perfect,
                    "add a perfect-wall force column");
  thermal->add_option("--beta", to.beta, "inverse temperature omega_p/T")
      ->check(CLI::PositiveNumber)
      ->required();
  add_config_file(thermal);

  CLI::App* equilibria = app.add_subcommand(
      "equilibria", "locate force zeros, their stability and barriers");
  add_sphere_opts(equilibria, eo);
  add_wall_opts(equilibria, eo);
  add_range_opts(equilibria, eo);
  add_accuracy_opts(equilibria, eo);
  add_format_opts(equilibria, eo.format, eo.out_path);
  equilibria->add_option("--beta", eo.beta,
                         "inverse temperature (omit for zero temperature)")
      ->check(CLI::PositiveNumber);
  add_config_file(equilibria);

  CLI::App* spectrum = app.add_subcommand(
      "spectrum", "frequency-resolved field energy at fixed separation");
  add_wall_opts(spectrum, so);
  spectrum->add_option("--z", so.z, "separation")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  spectrum->add_option("--omega-min", so.omega_min, "lowest frequency")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  spectrum->add_option("--omega-max", so.omega_max, "highest frequency")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  spectrum->add_option("--points", so.points, "number of frequencies")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_accuracy_opts(spectrum, so);
  add_format_opts(spectrum, so.format, so.out_path);
  add_config_file(spectrum);

  CLI::App* units = app.add_subcommand(
      "units", "laboratory-unit conversions for a gold-like sphere");
  units->add_option("--omega-p-ev", uo.omega_p_ev, "plasma frequency in eV")
      ->capture_default_str();
  units->add_option("--radius-nm", uo.radius_nm, "sphere radius in nm")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  units->add_option("--rho", uo.rho, "mass density in g/cm^3")
      ->capture_default_str();
  units->add_option("--z-um", uo.z_um, "separation in micrometres")
      ->capture_default_str();
  units->add_option("--gamma-s-ev", uo.gamma_s_ev, "sphere damping in eV")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  units->add_option("--barrier", uo.barrier,
                    "dimensionless barrier (units alpha0 omega_p^4)")
      ->capture_default_str();
  add_format_opts(units, uo.format, uo.out_path);
  add_config_file(units);

  for (CLI::App* sub : {force, thermal, equilibria, spectrum, units}) {
    take_last_options(sub);
  }

  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    expand_config_args(app, args);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(force)) return run_curve(fo, false);
    if (app.got_subcommand(thermal)) return run_curve(to, true);
    if (app.got_subcommand(equilibria)) return run_equilibria(eo);
    if (app.got_subcommand(spectrum)) return run_spectrum(so);
    if (app.got_subcommand(units)) return run_units(uo);
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
