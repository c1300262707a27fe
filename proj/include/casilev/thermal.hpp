#pragma once

// Finite-temperature version of the contour split: the imaginary-axis
// integral becomes a Matsubara sum and the pole term picks up a Bose
// weight.  Both reduce to their zero-temperature forms as beta -> inf.

#include <optional>
#include <string>
#include <vector>

#include "casilev/potential.hpp"

namespace casilev {

struct ThermalState {
  double beta;  // inverse temperature, > 0

  explicit ThermalState(double beta);
  double zeta(int n) const;  // 2 pi n / beta
};

// Soft validity notes: the sphere must stay small against the thermal
// wavelength (warns when radius > beta / 4).
std::vector<std::string> thermal_warnings(const Scenario& s,
                                          const ThermalState& t);

// Matsubara sum over zeta_n = 2 pi n / beta (half weight at n = 0):
//   v_j^T = -(1/4 pi beta) sum'_n alpha_im(zeta_n)
//             Int dk (k/kappa) [-zeta_n^2 r + (2k^2 + zeta_n^2) r']
//             e^{-2 kappa z},   kappa = sqrt(k^2 + zeta_n^2).
// Undamped (gamma_w = 0) or perfect walls only.
double v_j_thermal(const Scenario& s, const ThermalState& t,
                   const IntegrationSpec& tol = {},
                   const SeriesSpec& series = {});
double force_j_thermal(const Scenario& s, const ThermalState& t,
                       const IntegrationSpec& tol = {},
                       const SeriesSpec& series = {});

// Pole term with weight (1/(e^{beta omega1} - 1) + 1/2) replacing the
// zero-temperature 1/2; shares the k-integral engine with v_p.
double v_p_thermal(const Scenario& s, const ThermalState& t,
                   const IntegrationSpec& tol = {});
double force_p_thermal(const Scenario& s, const ThermalState& t,
                       const IntegrationSpec& tol = {});

PotentialBreakdown breakdown_thermal(const Scenario& s, const ThermalState& t,
                                     const IntegrationSpec& tol = {},
                                     const SeriesSpec& series = {});

// Work done by the total force along [z_from, z_to]:
//   W = Int_{z_from}^{z_to} f_total(z) dz,
// signed, so reversing the limits negates it.  Between an unstable and the
// next stable equilibrium this is the (positive) escape barrier.
double activation_barrier(const SphereSpec& sphere, const WallResponse& wall,
                          double z_from, double z_to,
                          const std::optional<ThermalState>& t = std::nullopt,
                          const IntegrationSpec& tol = {});

}  // namespace casilev
