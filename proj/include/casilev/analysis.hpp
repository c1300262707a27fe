#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "casilev/potential.hpp"
#include "casilev/quadrature.hpp"
#include "casilev/thermal.hpp"

namespace casilev {

// A sphere-wall system plus (optionally) a temperature. beta absent means
// strict zero temperature, not beta -> infinity by limit taking.
struct SystemConfig {
  SphereSpec sphere;
  WallResponse wall;
  std::optional<double> beta;

  Scenario at(double z) const { return Scenario{sphere, wall, z}; }
};

// Total force (joint continuum part plus resonance-pole part) at one
// separation, thermal when config.beta is set.
double total_force(const SystemConfig& config, double z,
                   const IntegrationSpec& tol = {});

// Potential/force split at one separation, thermal-aware.
PotentialBreakdown evaluate_point(const SystemConfig& config, double z,
                                  const IntegrationSpec& tol = {});

struct CurveOptions {
  bool include_perfect_wall = false;
  bool parallel = true;
  IntegrationSpec tolerance{};
};

struct ForceCurve {
  SystemConfig config;
  IntegrationSpec tolerance;
  std::vector<double> z;
  std::vector<double> force;
  // Closed-route perfect-wall force on the same grid, when requested.
  std::vector<double> force_perfect;
  std::vector<std::string> warnings;
  // One entry per failed grid point: "z=...: message". The corresponding
  // force entry is NaN.
  std::vector<std::string> point_errors;
};

// Evaluate the total force on a grid of separations. Points are
// independent, so evaluation is chunked across threads when allowed; the
// output ordering matches the input grid regardless.
ForceCurve force_curve(const SystemConfig& config,
                       const std::vector<double>& grid,
                       const CurveOptions& options = {});

struct EquilibriumPoint {
  double z_star = 0.0;
  bool stable = false;
  // |dF/dz| at the root, from a centered difference.
  double stiffness = 0.0;
  // For a stable point: work to push the sphere out to the next unstable
  // point above (positive when that point exists).
  std::optional<double> barrier_to_next;
};

// Locate force zeros bracketed by the curve samples, refining each bracket
// with fresh evaluations of the underlying model (not interpolation).
std::vector<EquilibriumPoint> find_equilibria(const ForceCurve& curve);

// Core routine on a plain callable; used by the curve overload and directly
// testable against closed forms.
std::vector<EquilibriumPoint> find_equilibria(
    const std::vector<double>& grid, const std::function<double(double)>& f,
    const std::function<double(double, double)>& barrier =
        std::function<double(double, double)>());

// Conversion of the dimensionless model (energies in alpha0 omega_p^4,
// forces in alpha0 omega_p^5, lengths in 1/omega_p) to laboratory numbers.
struct LabUnits {
  double omega_p_ev = 10.0;
  double rho_g_cm3 = 1.0;

  static constexpr double hbar_c_ev_nm = 197.327;
  static constexpr double kelvin_per_ev = 11604.5;
  static constexpr double gravity_m_s2 = 9.80665;
  static constexpr double ev_per_nm_newton = 1.602176634e-10;
};

// Barrier expressed as a temperature: W alpha0 omega_p^4 -> eV -> K for a
// sphere of the given radius in nm.
double barrier_in_kelvin(const LabUnits& units, double barrier_dimensionless,
                         double radius_nm);

// Peak force over gravity for an undamped or weakly damped sphere held at
// z micrometres: 27 omega_p[eV]^4 (1 um / z) / rho[g/cm^3] e^{-5 gamma_s z},
// with gamma_s z in model units. Sphere radius cancels.
double levitation_ratio_formula(const LabUnits& units, double z_um,
                                double gamma_s_z = 0.0);

// Exact force/gravity ratio from a computed force in units alpha0 omega_p^5
// (a breakdown force divided by sphere.alpha0()); the sphere volume then
// cancels against the weight.
double force_gravity_ratio(const LabUnits& units, double force_dimensionless);

// Radius bound for the dipole treatment: a << c/omega_p.
struct SizeBound {
  double dipole_scale_nm;
  double stated_gold_bound_nm;
};
SizeBound sphere_size_bound(const LabUnits& units);

std::vector<double> linspace(double lo, double hi, int n);
std::vector<double> logspace(double lo, double hi, int n);

}  // namespace casilev
