#pragma once

// Drude materials and the small-sphere polarizability.  Units are
// Lorentz-Heaviside with hbar = c = 1; the static polarizability of a
// sphere of radius a is alpha0 = 4 pi a^3.

#include <complex>

namespace casilev {

using cdouble = std::complex<double>;

struct Material {
  double omega_plasma;
  double gamma;

  // Validates omega_plasma > 0 and gamma >= 0.
  Material(double omega_plasma, double gamma);
};

// Resonance data of the sphere's dynamic polarizability: the real resonance
// frequency Omega = sqrt(12 wp^2 - 9 g^2)/6 and the first-quadrant pole
// omega1 = Omega + i g/2 used by the rotated-contour pole term.
struct PoleData {
  double resonance;
  cdouble pole;
};

struct SphereSpec {
  double radius;
  Material material;

  // Rejects non-positive radius and overdamped spheres
  // (gamma >= 2 omega_plasma / sqrt(3)), for which the polarizability
  // pole leaves the right half plane and the contour split breaks down.
  SphereSpec(double radius, Material material);

  double alpha0() const;  // 4 pi radius^3
};

// Drude dielectric function eps(w) = 1 - wp^2 / (w (w + i gamma)) at a
// general complex frequency.  Throws DomainError at the poles w = 0 and
// w = -i gamma.  The unvalidated overload admits gamma of either sign; the
// +/-gamma average of the reflection module needs the flipped branch.
cdouble drude_epsilon(double omega_plasma, double gamma, cdouble omega);
cdouble drude_epsilon(const Material& m, cdouble omega);

// Real part of the sphere polarizability at real frequency,
//   alpha0 wp^2 (wp^2 - 3 w^2) / ((3 w^2 - wp^2)^2 + 9 w^2 g^2).
// At gamma = 0 the undamped resonance w = wp/sqrt(3) is a genuine pole and
// throws rather than being regularized.
double alpha_real(const SphereSpec& s, double omega);

// The same rational function continued to w = i zeta, which is the weight
// appearing in the imaginary-frequency potential integrand:
//   alpha0 wp^2 (3 z^2 + wp^2) / ((3 z^2 + wp^2)^2 - 9 z^2 g^2).
// Note this is the continuation of alpha_real, not Re[alpha(i zeta)].
double alpha_imaginary_axis(const SphereSpec& s, double zeta);

// Throws DomainError when 12 wp^2 - 9 g^2 <= 0 (overdamped).
PoleData pole_data(double omega_plasma, double gamma);
PoleData pole_data(const SphereSpec& s);

}  // namespace casilev
