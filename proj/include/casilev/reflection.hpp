#pragma once

// Vacuum/wall wave numbers and Fresnel coefficients in the three
// parametrizations used by the potential integrals: general complex
// frequency, the polar imaginary-axis variables (u, t), and discrete
// Matsubara frequencies.  All three agree on overlapping domains; tests
// pin that to 1e-12.

#include <complex>
#include <optional>

#include "casilev/materials.hpp"

namespace casilev {

// A wall is either a Drude mirror or the ideal perfectly conducting limit,
// for which every parametrization returns exactly (r, r') = (-1, +1).
struct WallResponse {
  std::optional<Material> material;  // nullopt = perfect conductor

  static WallResponse perfect() { return WallResponse{std::nullopt}; }
  static WallResponse drude(double omega_plasma, double gamma = 0.0) {
    return WallResponse{Material(omega_plasma, gamma)};
  }
  bool is_perfect() const { return !material.has_value(); }
};

struct TransverseMode {
  double k;       // transverse wave number, k >= 0
  cdouble omega;  // frequency, possibly complex
};

struct Reflection {
  cdouble r;   // TE (perpendicular) coefficient
  cdouble rp;  // TM (parallel) coefficient
};

struct ReflectionReal {
  double r;
  double rp;
};

// Branch of sqrt(x) for wave numbers kappa = sqrt(k^2 - w^2 eps): the
// principal root (Re >= 0), except that an exactly negative real radicand
// takes the limit from Im(x) < 0, i.e. -i sqrt(-x).  Physical frequencies
// in the upper half plane give Im(x) < 0, so this continues the damped
// case; it realizes kappa(k = 0, omega1) = -i omega1.
cdouble branch_sqrt(cdouble x);

// Vacuum wave number sqrt(k^2 - w^2) on that branch.
cdouble kappa(const TransverseMode& mode);

// Fresnel coefficients at a general complex frequency:
//   r  = (kappa - kappa1) / (kappa + kappa1)
//   r' = (kappa eps - kappa1) / (kappa eps + kappa1)
// with kappa1 = branch_sqrt(k^2 - w^2 eps(w)).
Reflection fresnel(const WallResponse& wall, const TransverseMode& mode);

// Average over the wall damping sign, (r(+gw) + r(-gw)) / 2 per
// coefficient; reduces to fresnel for gw = 0 and for perfect walls.
Reflection fresnel_averaged(const WallResponse& wall,
                            const TransverseMode& mode);

// Coefficients at positive real frequency, parametrized directly by the
// sector variable so the vacuum wave number is exact: propagating modes by
// q = sqrt(w^2 - k^2) with kappa = -i q (0 <= q <= w), evanescent modes by
// p = sqrt(k^2 - w^2) with kappa = p (p >= 0).  Going through k instead
// would square and re-root the sector variable; near the surface-plasmon
// pole that double rounding moves the TM root by enough to spoil the
// principal-value cancellation.  The eps overloads take the wall
// permittivity directly; the wall overloads evaluate it, using exact real
// radicands when gamma_w = 0.
Reflection fresnel_propagating(cdouble eps, double omega, double q);
Reflection fresnel_propagating(const WallResponse& wall, double omega,
                               double q);
Reflection fresnel_evanescent(cdouble eps, double omega, double p);
Reflection fresnel_evanescent(const WallResponse& wall, double omega,
                              double p);

// Imaginary-axis coefficients in polar variables zeta = u t, k = u sqrt(1-t^2)
// for an undamped (gamma_w = 0) wall:
//   r  = (u - sqrt(u^2 + wq^2)) / (u + sqrt(u^2 + wq^2))
//   r' = (u^2 t^2 + wq^2 - u t^2 sqrt(u^2 + wq^2))
//        / (u^2 t^2 + wq^2 + u t^2 sqrt(u^2 + wq^2))
// Requires u >= 0 and 0 <= t <= 1; throws for damped walls.
ReflectionReal fresnel_polar(const WallResponse& wall, double u, double t);

// The same coefficients at a Matsubara frequency zeta_n with
// kappa = sqrt(k^2 + zeta_n^2); gamma_w = 0 walls only.  At zeta_n = 0 the
// TM coefficient is exactly +1 (including at k = 0).
ReflectionReal fresnel_matsubara(const WallResponse& wall, double zeta_n,
                                 double k);

}  // namespace casilev
