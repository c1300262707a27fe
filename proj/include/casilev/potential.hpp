#pragma once

// Sphere-wall interaction at zero temperature, split along the rotated
// frequency contour into an imaginary-axis part (v_j) and the
// polarizability-pole part (v_p).  Energies come out in units where the
// scenario's alpha0 and frequencies carry the dimensions; forces are
// -dV/dz with positive values meaning repulsion.

#include <string>
#include <vector>

#include "casilev/materials.hpp"
#include "casilev/quadrature.hpp"
#include "casilev/reflection.hpp"

namespace casilev {

struct Scenario {
  SphereSpec sphere;
  WallResponse wall;
  double z;  // sphere-wall separation, > 0
};

struct PotentialBreakdown {
  double v_j;
  double v_p;
  double f_j;
  double f_p;

  double v_total() const { return v_j + v_p; }
  double f_total() const { return f_j + f_p; }
};

// Soft validity notes (dipole approximation, plasma-model damping window);
// never errors.  Thresholds: radius > z/5, radius * omega_plasma > 1,
// gamma_s * z > 0.3.
std::vector<std::string> scenario_warnings(const Scenario& s);

// Imaginary-axis part as the polar double integral
//   v_j = -(1/8 pi^2) Int du u^3 e^{-2uz} Int_0^1 dt alpha_im(u t)
//           * Re[-t^2 rbar + (2 - t^2) rbar']
// valid for any wall (a perfect conductor just has constant coefficients).
double v_j(const Scenario& s, const IntegrationSpec& tol = {});

// Pole part Re of a single k-integral at omega1 (thermal weight 1/2).
double v_p(const Scenario& s, const IntegrationSpec& tol = {});

// Forces by differentiation under the integral sign.  For a perfect
// conductor force_j switches to the closed single-integral reduction and
// force_p to the closed form; both routes agree with -dV/dz.
double force_j(const Scenario& s, const IntegrationSpec& tol = {});
double force_p(const Scenario& s, const IntegrationSpec& tol = {});

PotentialBreakdown breakdown(const Scenario& s, const IntegrationSpec& tol = {});

// Perfect-wall reductions, kept as an independent route from v_j/v_p for
// cross-checking: a single arctan-weighted integral and a closed form.
// Throw DomainError unless s.wall is the perfect conductor.
double v_j_perfect_wall(const Scenario& s, const IntegrationSpec& tol = {});
double v_p_perfect_wall(const Scenario& s);

// Leading small-z behavior against a Drude wall,
//   F ~ -(alpha0 / 4 pi) (3 sqrt(2) / 8) wp^2 wq / (2 wp^2 - 3 wq^2) z^-4.
// Throws DomainError at the resonant ratio 2 wp^2 = 3 wq^2 and for
// perfect-conductor walls (the coefficient has no finite wq -> inf limit).
double force_small_z_asymptote(const Scenario& s);

// Reference atom-wall potential -3 alpha0 / (32 pi^2 z^4).
double casimir_polder(double alpha0, double z);

// Oscillatory weight sigma(w) = (2 w^2 z^2 - 1) sin(2wz) + 2wz cos(2wz)
// whose (regularized) frequency integral rebuilds the z^-4 law.
double cp_spectrum(double omega, double z);

// Int_0^inf sigma(w) e^{-g w} dw extrapolated g -> 0; equals -3/(2z).
double regularized_cp_spectrum_integral(double z,
                                        const IntegrationSpec& tol = {});

// Diagnostic spectral density of the squared field at real frequency,
//   <E^2>_w = -(1/4 pi) Re{ i Int dk (k/kappa) [w^2 r + (2k^2 - w^2) r']
//                            e^{-2 kappa z} }.
// Depends only on the wall and z.  For a perfect conductor this equals
// -sigma(w) / (8 pi z^3).
double spectral_e2(const WallResponse& wall, double z, double omega,
                   const IntegrationSpec& tol = {});
double spectral_e2(const Scenario& s, double omega,
                   const IntegrationSpec& tol = {});

namespace detail {

// Shared pole-term engine: the k-integrals at omega1 for the potential
// (i_v, carrying 1/kappa) and the force (i_f, the 1/kappa cancelled
// against -d/dz).  The finite-temperature wrapper reuses these with a
// Bose weight, so the zero-T and thermal routes cannot drift apart.
struct PoleIntegrals {
  cdouble i_v;
  cdouble i_f;
};

PoleIntegrals pole_integrals(const Scenario& s, const IntegrationSpec& tol);

// alpha0 wp^2 / (24 pi Omega); multiply by Re{weight * i_v} with weight
// 1/2 at T = 0 or the Bose-augmented weight at finite T.
double pole_prefactor(const Scenario& s);

}  // namespace detail

}  // namespace casilev
