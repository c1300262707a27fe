#include "casilev/materials.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "casilev/errors.hpp"

namespace casilev {

Material::Material(double omega_plasma_in, double gamma_in)
    : omega_plasma(omega_plasma_in), gamma(gamma_in) {
  if (!(omega_plasma > 0.0)) {
    throw DomainError("Material: omega_plasma must be positive");
  }
  if (!(gamma >= 0.0)) {
    throw DomainError("Material: gamma must be non-negative");
  }
}

SphereSpec::SphereSpec(double radius_in, Material material_in)
    : radius(radius_in), material(material_in) {
  if (!(radius > 0.0)) {
    throw DomainError("SphereSpec: radius must be positive");
  }
  // Overdamped spheres have no right-half-plane polarizability resonance;
  // the pole + imaginary-axis split used downstream does not apply.
  pole_data(material.omega_plasma, material.gamma);
}

double SphereSpec::alpha0() const {
  return 4.0 * std::numbers::pi * radius * radius * radius;
}

cdouble drude_epsilon(double omega_plasma, double gamma, cdouble omega) {
  if (omega == cdouble(0.0, 0.0)) {
    throw DomainError("drude_epsilon: pole at omega = 0");
  }
  if (omega == cdouble(0.0, -gamma)) {
    throw DomainError("drude_epsilon: pole at omega = -i gamma");
  }
  return 1.0 - omega_plasma * omega_plasma /
                   (omega * (omega + cdouble(0.0, gamma)));
}

cdouble drude_epsilon(const Material& m, cdouble omega) {
  return drude_epsilon(m.omega_plasma, m.gamma, omega);
}

double alpha_real(const SphereSpec& s, double omega) {
  const double wp2 = s.material.omega_plasma * s.material.omega_plasma;
  const double g = s.material.gamma;
  const double res = 3.0 * omega * omega - wp2;
  const double den = res * res + 9.0 * omega * omega * g * g;
  if (den == 0.0) {
    throw DomainError(
        "alpha_real: undamped resonance at omega = omega_plasma/sqrt(3)");
  }
  return s.alpha0() * wp2 * (-res) / den;
}

double alpha_imaginary_axis(const SphereSpec& s, double zeta) {
  const double wp2 = s.material.omega_plasma * s.material.omega_plasma;
  const double g = s.material.gamma;
  const double num = 3.0 * zeta * zeta + wp2;
  const double den = num * num - 9.0 * zeta * zeta * g * g;
  if (!(den > 0.0)) {
    // Unreachable for constructed spheres: (3z^2+wp^2)^2 >= 12 z^2 wp^2
    // exceeds 9 z^2 g^2 whenever g < 2 wp / sqrt(3).
    throw DomainError("alpha_imaginary_axis: denominator vanished");
  }
  return s.alpha0() * wp2 * num / den;
}

PoleData pole_data(double omega_plasma, double gamma) {
  const double radicand =
      12.0 * omega_plasma * omega_plasma - 9.0 * gamma * gamma;
  if (!(radicand > 0.0)) {
    throw DomainError(
        "pole_data: overdamped sphere (gamma >= 2 omega_plasma / sqrt(3))");
  }
  const double resonance = std::sqrt(radicand) / 6.0;
  return PoleData{resonance, cdouble(resonance, 0.5 * gamma)};
}

PoleData pole_data(const SphereSpec& s) {
  return pole_data(s.material.omega_plasma, s.material.gamma);
}

}  // namespace casilev
