#include "casilev/thermal.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "casilev/errors.hpp"

namespace casilev {
namespace {

constexpr double kPi = std::numbers::pi;

void require_positive_z(double z, const char* who) {
  if (!(z > 0.0)) {
    throw DomainError(std::string(who) + ": separation z must be positive");
  }
}

void require_matsubara_wall(const WallResponse& wall, const char* who) {
  if (!wall.is_perfect() && wall.material->gamma != 0.0) {
    throw DomainError(std::string(who) +
                      ": Matsubara coefficients assume an undamped wall");
  }
}

// Bose factor 1/(e^x - 1) for Re x > 0, written to avoid overflow in e^x.
cdouble bose(cdouble x) {
  const cdouble e = std::exp(-x);
  return e / (1.0 - e);
}

// v_j^T and its force; the force measure replaces k/kappa by 2k, exactly
// as -d/dz acts on e^{-2 kappa z}.
double matsubara_engine(const Scenario& s, const ThermalState& t, bool force,
                        const IntegrationSpec& tol, const SeriesSpec& series) {
  require_positive_z(s.z, "v_j_thermal");
  require_matsubara_wall(s.wall, "v_j_thermal");
  const double z = s.z;
  IntegrationSpec ks = tol;
  ks.decay_scale = 1.0 / (2.0 * z);

  auto term = [&](int n) {
    const double zeta = t.zeta(n);
    auto f = [&](double k) {
      const double kap = std::hypot(k, zeta);
      if (kap == 0.0) return 0.0;
      const ReflectionReal rr = fresnel_matsubara(s.wall, zeta, k);
      const double bracket = -zeta * zeta * rr.r +
                             (2.0 * k * k + zeta * zeta) * rr.rp;
      const double measure = force ? 2.0 * k : k / kap;
      return measure * bracket * std::exp(-2.0 * kap * z);
    };
    return alpha_imaginary_axis(s.sphere, zeta) *
           integrate_semi_infinite(f, ks).value;
  };

  return -sum_matsubara(term, series).value / (4.0 * kPi * t.beta);
}

// Weight multiplying the pole k-integrals at inverse temperature beta.
cdouble thermal_pole_weight(const Scenario& s, const ThermalState& t) {
  const cdouble x = t.beta * pole_data(s.sphere).pole;
  return bose(x) + 0.5;
}

}  // namespace

ThermalState::ThermalState(double beta_in) : beta(beta_in) {
  if (!(beta > 0.0)) {
    throw DomainError("ThermalState: beta must be positive");
  }
}

double ThermalState::zeta(int n) const { return 2.0 * kPi * n / beta; }

std::vector<std::string> thermal_warnings(const Scenario& s,
                                          const ThermalState& t) {
  std::vector<std::string> w;
  if (s.sphere.radius * 4.0 > t.beta) {
    w.push_back("sphere radius approaches the thermal wavelength beta; "
                "the dipole-with-Bose-weight treatment degrades");
  }
  return w;
}

double v_j_thermal(const Scenario& s, const ThermalState& t,
                   const IntegrationSpec& tol, const SeriesSpec& series) {
  return matsubara_engine(s, t, false, tol, series);
}

double force_j_thermal(const Scenario& s, const ThermalState& t,
                       const IntegrationSpec& tol, const SeriesSpec& series) {
  return matsubara_engine(s, t, true, tol, series);
}

double v_p_thermal(const Scenario& s, const ThermalState& t,
                   const IntegrationSpec& tol) {
  require_positive_z(s.z, "v_p_thermal");
  return detail::pole_prefactor(s) *
         std::real(thermal_pole_weight(s, t) *
                   detail::pole_integrals(s, tol).i_v);
}

double force_p_thermal(const Scenario& s, const ThermalState& t,
                       const IntegrationSpec& tol) {
  require_positive_z(s.z, "force_p_thermal");
  return detail::pole_prefactor(s) *
         std::real(thermal_pole_weight(s, t) *
                   detail::pole_integrals(s, tol).i_f);
}

PotentialBreakdown breakdown_thermal(const Scenario& s, const ThermalState& t,
                                     const IntegrationSpec& tol,
                                     const SeriesSpec& series) {
  return PotentialBreakdown{
      v_j_thermal(s, t, tol, series), v_p_thermal(s, t, tol),
      force_j_thermal(s, t, tol, series), force_p_thermal(s, t, tol)};
}

double activation_barrier(const SphereSpec& sphere, const WallResponse& wall,
                          double z_from, double z_to,
                          const std::optional<ThermalState>& t,
                          const IntegrationSpec& tol) {
  if (!(z_from > 0.0) || !(z_to > 0.0)) {
    throw DomainError("activation_barrier: separations must be positive");
  }
  if (z_from == z_to) return 0.0;
  const double lo = std::min(z_from, z_to);
  const double hi = std::max(z_from, z_to);
  const double sign = (z_to > z_from) ? 1.0 : -1.0;

  auto f = [&](double z) {
    const Scenario sc{sphere, wall, z};
    if (t) {
      return force_j_thermal(sc, *t, tol) + force_p_thermal(sc, *t, tol);
    }
    return force_j(sc, tol) + force_p(sc, tol);
  };

  // The force oscillates through zero, so a pure relative target can never
  // be met near cancellation; anchor the absolute tolerance to the force
  // scale across the window.
  double scale = 0.0;
  for (int i = 0; i <= 4; ++i) {
    scale = std::max(scale, std::fabs(f(lo + (hi - lo) * i / 4.0)));
  }
  IntegrationSpec w = tol;
  w.abs_tol = std::max(w.abs_tol, 1e-10 * scale * (hi - lo));
  return sign * integrate_finite(f, lo, hi, w).value;
}

}  // namespace casilev
