#include "casilev/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <span>
#include <thread>

#include "casilev/errors.hpp"

namespace casilev {
namespace {

constexpr double kPi = std::numbers::pi;

void require_grid(const std::vector<double>& grid, const char* who) {
  if (grid.empty()) {
    throw DomainError(std::string(who) + ": empty separation grid");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) {
      throw DomainError(std::string(who) + ": separations must be positive");
    }
    if (i > 0 && !(grid[i] > grid[i - 1])) {
      throw DomainError(std::string(who) +
                        ": separations must be strictly increasing");
    }
  }
}

void append_unique(std::vector<std::string>& dst,
                   const std::vector<std::string>& src) {
  for (const auto& s : src) {
    if (std::find(dst.begin(), dst.end(), s) == dst.end()) dst.push_back(s);
  }
}

}  // namespace

double total_force(const SystemConfig& config, double z,
                   const IntegrationSpec& tol) {
  const Scenario s = config.at(z);
  if (config.beta) {
    const ThermalState t(*config.beta);
    return force_j_thermal(s, t, tol) + force_p_thermal(s, t, tol);
  }
  return force_j(s, tol) + force_p(s, tol);
}

PotentialBreakdown evaluate_point(const SystemConfig& config, double z,
                                  const IntegrationSpec& tol) {
  const Scenario s = config.at(z);
  if (config.beta) {
    return breakdown_thermal(s, ThermalState(*config.beta), tol);
  }
  return breakdown(s, tol);
}

ForceCurve force_curve(const SystemConfig& config,
                       const std::vector<double>& grid,
                       const CurveOptions& options) {
  require_grid(grid, "force_curve");
  const std::size_t n = grid.size();

  ForceCurve curve{config, options.tolerance, grid, {}, {}, {}, {}};
  curve.force.assign(n, std::numeric_limits<double>::quiet_NaN());
  std::vector<std::string> errors(n);

  auto run = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      try {
        curve.force[i] = total_force(config, grid[i], options.tolerance);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };

  std::size_t workers = 1;
  if (options.parallel) {
    workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min(workers, n);
  }
  if (workers <= 1) {
    run(0, n);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) {
      pool.emplace_back(run, n * t / workers, n * (t + 1) / workers);
    }
    for (auto& th : pool) th.join();
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (!errors[i].empty()) {
      char head[64];
      std::snprintf(head, sizeof head, "z=%.17g: ", grid[i]);
      curve.point_errors.push_back(head + errors[i]);
    }
  }

  if (options.include_perfect_wall) {
    // Closed-route perfect-wall forces; cheap enough to run serially.
    const SystemConfig pc{config.sphere, WallResponse::perfect(),
                          std::nullopt};
    curve.force_perfect.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      curve.force_perfect[i] =
          total_force(pc, grid[i], options.tolerance);
    }
  }

  append_unique(curve.warnings, scenario_warnings(config.at(grid.front())));
  append_unique(curve.warnings, scenario_warnings(config.at(grid.back())));
  if (config.beta) {
    append_unique(curve.warnings, thermal_warnings(config.at(grid.front()),
                                                   ThermalState(*config.beta)));
  }
  if (n >= 2) {
    const double spacing = (grid.back() - grid.front()) / double(n - 1);
    const double period = kPi / pole_data(config.sphere).resonance;
    if (spacing > 0.25 * period) {
      curve.warnings.push_back(
          "grid spacing exceeds a quarter of the oscillation period "
          "pi/Omega; equilibria may slip between samples");
    }
  }
  return curve;
}

std::vector<EquilibriumPoint> find_equilibria(
    const std::vector<double>& grid, const std::function<double(double)>& f,
    const std::function<double(double, double)>& barrier) {
  if (grid.size() < 2) return {};
  require_grid(grid, "find_equilibria");

  const auto roots =
      find_roots_bracketed(f, std::span<const double>(grid.data(), grid.size()));
  const double spacing =
      (grid.back() - grid.front()) / double(grid.size() - 1);
  const double h = 5e-3 * spacing;

  std::vector<EquilibriumPoint> out;
  out.reserve(roots.size());
  for (const Root& r : roots) {
    const double d = (f(r.x + h) - f(r.x - h)) / (2.0 * h);
    EquilibriumPoint p;
    p.z_star = r.x;
    p.stable = d < 0.0;
    p.stiffness = std::fabs(d);
    out.push_back(p);
  }
  if (barrier) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (!out[i].stable) continue;
      for (std::size_t j = i + 1; j < out.size(); ++j) {
        if (!out[j].stable) {
          // Work to climb from the potential minimum to the barrier top:
          // V(z_u) - V(z_s) = -int_{z_s}^{z_u} F dz.
          out[i].barrier_to_next = -barrier(out[i].z_star, out[j].z_star);
          break;
        }
      }
    }
  }
  return out;
}

std::vector<EquilibriumPoint> find_equilibria(const ForceCurve& curve) {
  std::vector<double> grid;
  grid.reserve(curve.z.size());
  for (std::size_t i = 0; i < curve.z.size(); ++i) {
    if (std::isfinite(curve.force[i])) grid.push_back(curve.z[i]);
  }
  auto f = [&curve](double z) {
    return total_force(curve.config, z, curve.tolerance);
  };
  auto barrier = [&curve](double a, double b) {
    std::optional<ThermalState> t;
    if (curve.config.beta) t.emplace(*curve.config.beta);
    return activation_barrier(curve.config.sphere, curve.config.wall, a, b, t,
                              curve.tolerance);
  };
  return find_equilibria(grid, f, barrier);
}

double barrier_in_kelvin(const LabUnits& units, double barrier_dimensionless,
                         double radius_nm) {
  if (!(radius_nm > 0.0)) {
    throw DomainError("barrier_in_kelvin: radius must be positive");
  }
  // alpha0 omega_p^4 in eV: 4 pi (a omega_p / hbar c)^3 omega_p.
  const double a_nat = radius_nm / LabUnits::hbar_c_ev_nm;  // in 1/eV
  const double wp = units.omega_p_ev;
  const double ev =
      barrier_dimensionless * 4.0 * kPi * a_nat * a_nat * a_nat * wp * wp *
      wp * wp;
  return ev * LabUnits::kelvin_per_ev;
}

double levitation_ratio_formula(const LabUnits& units, double z_um,
                                double gamma_s_z) {
  if (!(z_um > 0.0)) {
    throw DomainError("levitation_ratio_formula: z must be positive");
  }
  const double wp = units.omega_p_ev;
  return 27.0 * wp * wp * wp * wp / (z_um * units.rho_g_cm3) *
         std::exp(-5.0 * gamma_s_z);
}

double force_gravity_ratio(const LabUnits& units, double force_dimensionless) {
  const double wp = units.omega_p_ev;
  const double hbarc = LabUnits::hbar_c_ev_nm;
  // Force: f alpha0 omega_p^5 with alpha0 = 4 pi a^3.  In eV/nm per nm^3 of
  // a^3 that is f 4 pi omega_p^5 / (hbar c)^4; the sphere volume also
  // carries the weight, so a^3 cancels in the ratio.
  const double force_n_per_nm3 = force_dimensionless * 4.0 * kPi * wp * wp *
                                 wp * wp * wp /
                                 (hbarc * hbarc * hbarc * hbarc) *
                                 LabUnits::ev_per_nm_newton;
  // Weight per nm^3 of a^3: rho (4/3) pi in g/cm^3 * nm^3 = 1e-24 kg.
  const double weight_n_per_nm3 = units.rho_g_cm3 * (4.0 / 3.0) * kPi *
                                  1e-24 * LabUnits::gravity_m_s2;
  return force_n_per_nm3 / weight_n_per_nm3;
}

SizeBound sphere_size_bound(const LabUnits& units) {
  return SizeBound{LabUnits::hbar_c_ev_nm / units.omega_p_ev, 20.0};
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw DomainError("linspace: need at least one point");
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  for (int i = 0; i < n; ++i) {
    v[i] = lo + (hi - lo) * double(i) / double(n - 1);
  }
  v.back() = hi;
  return v;
}

std::vector<double> logspace(double lo, double hi, int n) {
  if (!(lo > 0.0) || !(hi > 0.0)) {
    throw DomainError("logspace: endpoints must be positive");
  }
  std::vector<double> v = linspace(std::log(lo), std::log(hi), n);
  for (double& x : v) x = std::exp(x);
  if (n >= 1) {
    v.front() = lo;
    v.back() = hi;
  }
  return v;
}

}  // namespace casilev
