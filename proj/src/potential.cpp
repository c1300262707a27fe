#include "casilev/potential.hpp"

#include <cmath>
#include <numbers>
#include <optional>
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

void require_perfect(const WallResponse& wall, const char* who) {
  if (!wall.is_perfect()) {
    throw DomainError(std::string(who) +
                      ": reduction only valid for a perfect-conductor wall");
  }
}

bool wall_undamped(const WallResponse& wall) {
  return wall.is_perfect() || wall.material->gamma == 0.0;
}

IntegrationSpec inner_spec(const IntegrationSpec& tol) {
  IntegrationSpec s = tol;
  s.rel_tol = std::max(1e-13, 0.1 * tol.rel_tol);
  return s;
}

// Re[-t^2 rbar + (2 - t^2) rbar'] at the polar imaginary-axis point
// zeta = u t, k = u sqrt(1 - t^2).
double imaginary_axis_coeff(const WallResponse& wall, double u, double t) {
  if (wall_undamped(wall)) {
    const ReflectionReal rr = fresnel_polar(wall, u, t);
    return -t * t * rr.r + (2.0 - t * t) * rr.rp;
  }
  const double k = u * std::sqrt(std::max(0.0, (1.0 - t) * (1.0 + t)));
  const Reflection rr =
      fresnel_averaged(wall, TransverseMode{k, cdouble(0.0, u * t)});
  return std::real(-t * t * rr.r + (2.0 - t * t) * rr.rp);
}

// Imaginary-axis part and its force through one engine; -d/dz acting on
// e^{-2uz} multiplies the u integrand by 2u.
double vj_engine(const Scenario& s, bool force, const IntegrationSpec& tol) {
  const double z = s.z;
  IntegrationSpec outer = tol;
  outer.decay_scale = 1.0 / (2.0 * z);
  const IntegrationSpec inner = inner_spec(tol);
  auto outer_f = [&](double u) {
    if (u == 0.0) return 0.0;
    auto inner_f = [&](double t) {
      return alpha_imaginary_axis(s.sphere, u * t) *
             imaginary_axis_coeff(s.wall, u, t);
    };
    double g = u * u * u * integrate_finite(inner_f, 0.0, 1.0, inner).value;
    if (force) g *= 2.0 * u;
    return g * std::exp(-2.0 * u * z);
  };
  return -integrate_semi_infinite(outer_f, outer).value / (8.0 * kPi * kPi);
}

// Perfect-wall single-integral force (t-integral done in closed form and
// the z derivative taken under the integral):
//   J = -(1/16 pi^2 z^4) Int dxi alpha_im(xi)
//         (4 (z xi)^3 + 6 (z xi)^2 + 6 z xi + 3) e^{-2 z xi}.
double force_j_perfect(const Scenario& s, const IntegrationSpec& tol) {
  const double z = s.z;
  IntegrationSpec q = tol;
  q.decay_scale = 1.0 / (2.0 * z);
  auto f = [&](double xi) {
    const double zx = z * xi;
    const double poly = ((4.0 * zx + 6.0) * zx + 6.0) * zx + 3.0;
    return alpha_imaginary_axis(s.sphere, xi) * poly * std::exp(-2.0 * zx);
  };
  const double z2 = z * z;
  return -integrate_semi_infinite(f, q).value / (16.0 * kPi * kPi * z2 * z2);
}

// Surface-plasmon location on the evanescent sector at real frequency w:
// the TM denominator kappa eps + kappa1 vanishes at
// k_sp^2 = w^2 (wq^2 - w^2) / (wq^2 - 2 w^2), present for w < wq/sqrt(2).
std::optional<double> plasmon_p(const WallResponse& wall, double w) {
  if (wall.is_perfect() || wall.material->gamma != 0.0) return std::nullopt;
  const double wq2 =
      wall.material->omega_plasma * wall.material->omega_plasma;
  const double w2 = w * w;
  if (!(wq2 > 2.0 * w2)) return std::nullopt;
  // p_sp = sqrt(k_sp^2 - w^2) simplified to a cancellation-free form; the
  // subtraction loses the pole position by ~1e-13 for wq >> w, enough to
  // leave a residual pole inside the symmetric principal-value window.
  return w2 / std::sqrt(wq2 - 2.0 * w2);
}

// Residue in p of G(k(p)) e^{-2pz} at the plasmon pole (gamma_w = 0):
// only the TM term is singular, with Res r' = 2 p_sp eps^2 / (eps^2 - 1).
double plasmon_residue(const WallResponse& wall, double w, double p_sp,
                       double z) {
  const double wq2 =
      wall.material->omega_plasma * wall.material->omega_plasma;
  const double eps = 1.0 - wq2 / (w * w);
  const double ksp2 = w * w + p_sp * p_sp;
  const double res_rp = 2.0 * p_sp * eps * eps / (eps * eps - 1.0);
  return (2.0 * ksp2 - w * w) * res_rp * std::exp(-2.0 * p_sp * z);
}

// Damping-sign averaged sector coefficients, matching fresnel_averaged on
// the real axis but parametrized by q / p so the vacuum wave number stays
// exact (no pole can sit on the path once gamma_w > 0, so no guard needed).
Reflection averaged_propagating(const WallResponse& wall, double w, double q) {
  if (wall_undamped(wall)) return fresnel_propagating(wall, w, q);
  const Material& m = *wall.material;
  const Reflection plus =
      fresnel_propagating(drude_epsilon(m.omega_plasma, m.gamma, cdouble(w)),
                          w, q);
  const Reflection minus =
      fresnel_propagating(drude_epsilon(m.omega_plasma, -m.gamma, cdouble(w)),
                          w, q);
  return Reflection{0.5 * (plus.r + minus.r), 0.5 * (plus.rp + minus.rp)};
}

Reflection averaged_evanescent(const WallResponse& wall, double w, double p) {
  if (wall_undamped(wall)) return fresnel_evanescent(wall, w, p);
  const Material& m = *wall.material;
  const Reflection plus =
      fresnel_evanescent(drude_epsilon(m.omega_plasma, m.gamma, cdouble(w)),
                         w, p);
  const Reflection minus =
      fresnel_evanescent(drude_epsilon(m.omega_plasma, -m.gamma, cdouble(w)),
                         w, p);
  return Reflection{0.5 * (plus.r + minus.r), 0.5 * (plus.rp + minus.rp)};
}

// i Int_0^w dq G e^{2iqz} with G = w^2 r + (2k^2 - w^2) r' and
// k^2 = (w - q)(w + q): the propagating sector of
// Int dk (k/kappa) G e^{-2 kappa z} after q = sqrt(w^2 - k^2).  refl maps
// q to the sector coefficients.  The force variant replaces the measure by
// 2 q dq (no leading i).  kappa1 switches branch at q = wq for transparent
// walls, so the interval is split there.
template <typename Refl>
cdouble propagating_integral(Refl&& refl, const WallResponse& wall, double w,
                             double z, bool force,
                             const IntegrationSpec& tol) {
  const double w2 = w * w;
  auto f = [&](double q) -> cdouble {
    const Reflection rr = refl(q);
    const double k2 = (w - q) * (w + q);
    const cdouble bracket = w2 * rr.r + (2.0 * k2 - w2) * rr.rp;
    const cdouble phase = std::polar(1.0, 2.0 * q * z);
    if (force) return 2.0 * q * bracket * phase;
    return cdouble(0.0, 1.0) * bracket * phase;
  };
  std::vector<double> pts{0.0};
  if (!wall.is_perfect()) {
    const double wq = wall.material->omega_plasma;
    if (wq < w) pts.push_back(wq);
  }
  pts.push_back(w);
  cdouble total{};
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    total += integrate_finite(f, pts[i], pts[i + 1], tol).value;
  }
  return total;
}

// Evanescent sector Int_0^inf dp h(p) G e^{-2pz}, k^2 = w^2 + p^2, with
// h = 1 (potential measure) or 2p (force measure).  When the plasmon pole
// sits on the path the value is the damped-case limit PV + i pi Res (pole
// approaches from the upper half p plane).
template <typename Refl>
cdouble evanescent_integral(Refl&& refl, const WallResponse& wall, double w,
                            double z, bool force,
                            const IntegrationSpec& tol) {
  const double w2 = w * w;
  auto f = [&](double p) -> cdouble {
    const Reflection rr = refl(p);
    const double k2 = w2 + p * p;
    const cdouble bracket = w2 * rr.r + (2.0 * k2 - w2) * rr.rp;
    const double h = force ? 2.0 * p : 1.0;
    return h * bracket * std::exp(-2.0 * p * z);
  };
  IntegrationSpec tail = tol;
  tail.decay_scale = 1.0 / (2.0 * z);

  const std::optional<double> pole = plasmon_p(wall, w);
  if (!pole) return integrate_semi_infinite(f, tail).value;

  const double p_sp = *pole;
  const double delta = 0.5 * p_sp;
  auto symmetric = [&](double x) -> cdouble {
    return f(p_sp + x) + f(p_sp - x);  // 1/(p - p_sp) parts cancel
  };
  cdouble value = integrate_finite(f, 0.0, p_sp - delta, tol).value;
  value += integrate_finite(symmetric, 0.0, delta, tol).value;
  value += integrate_semi_infinite(f, tail, p_sp + delta).value;

  double res = plasmon_residue(wall, w, p_sp, z);
  if (force) res *= 2.0 * p_sp;
  return value + cdouble(0.0, kPi * res);
}

}  // namespace

std::vector<std::string> scenario_warnings(const Scenario& s) {
  std::vector<std::string> w;
  if (s.sphere.radius * 5.0 > s.z) {
    w.push_back("sphere radius is not small compared to the separation; "
                "dipole treatment of the sphere is marginal");
  }
  if (s.sphere.radius * s.sphere.material.omega_plasma > 1.0) {
    w.push_back("sphere radius exceeds 1/omega_plasma; single-dipole "
                "response underestimates higher multipoles");
  }
  if (s.sphere.material.gamma * s.z > 0.3) {
    w.push_back("gamma_s * z > 0.3: pole-term damping suppresses the "
                "oscillations this split is built around");
  }
  return w;
}

double v_j(const Scenario& s, const IntegrationSpec& tol) {
  require_positive_z(s.z, "v_j");
  return vj_engine(s, false, tol);
}

double force_j(const Scenario& s, const IntegrationSpec& tol) {
  require_positive_z(s.z, "force_j");
  if (s.wall.is_perfect()) return force_j_perfect(s, tol);
  return vj_engine(s, true, tol);
}

namespace detail {

double pole_prefactor(const Scenario& s) {
  const double wp = s.sphere.material.omega_plasma;
  return s.sphere.alpha0() * wp * wp / (24.0 * kPi * pole_data(s.sphere).resonance);
}

PoleIntegrals pole_integrals(const Scenario& s, const IntegrationSpec& tol) {
  require_positive_z(s.z, "pole_integrals");
  const PoleData pd = pole_data(s.sphere);
  const cdouble w1 = pd.pole;
  const cdouble w1sq = w1 * w1;
  const double z = s.z;

  if (s.sphere.material.gamma == 0.0) {
    // omega1 = Omega on the real axis: use the q/p substitutions.
    const double om = pd.resonance;
    auto refl_q = [&](double q) { return averaged_propagating(s.wall, om, q); };
    auto refl_p = [&](double p) { return averaged_evanescent(s.wall, om, p); };
    PoleIntegrals out;
    out.i_v = propagating_integral(refl_q, s.wall, om, z, false, tol) +
              evanescent_integral(refl_p, s.wall, om, z, false, tol);
    out.i_f = propagating_integral(refl_q, s.wall, om, z, true, tol) +
              evanescent_integral(refl_p, s.wall, om, z, true, tol);
    return out;
  }

  // Damped sphere: omega1 sits off the real axis, integrate in k directly.
  // Split at the kappa minimum near k = Omega where the integrand peaks.
  auto g = [&](double k) -> cdouble {
    const Reflection rr = fresnel_averaged(s.wall, TransverseMode{k, w1});
    return w1sq * rr.r + (2.0 * k * k - w1sq) * rr.rp;
  };
  auto fv = [&](double k) -> cdouble {
    const cdouble kap = kappa(TransverseMode{k, w1});
    return k / kap * g(k) * std::exp(-2.0 * kap * z);
  };
  auto ff = [&](double k) -> cdouble {
    const cdouble kap = kappa(TransverseMode{k, w1});
    return 2.0 * k * g(k) * std::exp(-2.0 * kap * z);
  };
  IntegrationSpec tail = tol;
  tail.decay_scale = 1.0 / (2.0 * z);
  const double split = pd.resonance;
  PoleIntegrals out;
  out.i_v = integrate_finite(fv, 0.0, split, tol).value +
            integrate_semi_infinite(fv, tail, split).value;
  out.i_f = integrate_finite(ff, 0.0, split, tol).value +
            integrate_semi_infinite(ff, tail, split).value;
  return out;
}

}  // namespace detail

double v_p(const Scenario& s, const IntegrationSpec& tol) {
  require_positive_z(s.z, "v_p");
  return detail::pole_prefactor(s) *
         std::real(0.5 * detail::pole_integrals(s, tol).i_v);
}

double force_p(const Scenario& s, const IntegrationSpec& tol) {
  require_positive_z(s.z, "force_p");
  if (s.wall.is_perfect()) {
    // Closed form; see force_p_perfect below.
    const PoleData pd = pole_data(s.sphere);
    const cdouble w1 = pd.pole;
    const double z = s.z;
    const cdouble iz = cdouble(0.0, 1.0);
    const cdouble k_poly = 4.0 * iz * w1 * w1 * w1 * z * z * z -
                           6.0 * w1 * w1 * z * z - 6.0 * iz * w1 * z + 3.0;
    const double wp = s.sphere.material.omega_plasma;
    const double pref =
        s.sphere.alpha0() * wp * wp / (96.0 * kPi * pd.resonance);
    return pref * std::real(k_poly * std::exp(2.0 * iz * w1 * z)) /
           (z * z * z * z);
  }
  return detail::pole_prefactor(s) *
         std::real(0.5 * detail::pole_integrals(s, tol).i_f);
}

PotentialBreakdown breakdown(const Scenario& s, const IntegrationSpec& tol) {
  require_positive_z(s.z, "breakdown");
  // Plain aggregation of the four public ops, so the fields can never
  // disagree with them.
  return PotentialBreakdown{v_j(s, tol), v_p(s, tol), force_j(s, tol),
                            force_p(s, tol)};
}

double v_j_perfect_wall(const Scenario& s, const IntegrationSpec& tol) {
  require_positive_z(s.z, "v_j_perfect_wall");
  require_perfect(s.wall, "v_j_perfect_wall");
  const double wp = s.sphere.material.omega_plasma;
  const double gs = s.sphere.material.gamma;
  const double root = std::sqrt(4.0 * wp * wp - 3.0 * gs * gs);
  const double z = s.z;
  const double s3 = std::sqrt(3.0);
  IntegrationSpec q = tol;
  q.decay_scale = 1.0 / (2.0 * z);
  auto f = [&](double u) {
    const double bracket = std::atan(s3 * (gs - 2.0 * u) / root) -
                           std::atan(s3 * (gs + 2.0 * u) / root);
    return u * u * bracket * std::exp(-2.0 * u * z);
  };
  const double pref =
      s.sphere.alpha0() * wp * wp / (4.0 * kPi * kPi * s3 * root);
  return pref * integrate_semi_infinite(f, q).value;
}

double v_p_perfect_wall(const Scenario& s) {
  require_positive_z(s.z, "v_p_perfect_wall");
  require_perfect(s.wall, "v_p_perfect_wall");
  const PoleData pd = pole_data(s.sphere);
  const cdouble w1 = pd.pole;
  const double z = s.z;
  const cdouble iz = cdouble(0.0, 1.0);
  const cdouble poly = 2.0 * w1 * w1 * z * z + 2.0 * iz * w1 * z - 1.0;
  const double wp = s.sphere.material.omega_plasma;
  const double pref =
      s.sphere.alpha0() * wp * wp / (96.0 * kPi * pd.resonance);
  return -pref * std::real(poly * std::exp(2.0 * iz * w1 * z)) / (z * z * z);
}

double force_small_z_asymptote(const Scenario& s) {
  require_positive_z(s.z, "force_small_z_asymptote");
  if (s.wall.is_perfect()) {
    throw DomainError(
        "force_small_z_asymptote: no finite-coefficient z^-4 law in the "
        "perfect-conductor limit");
  }
  const double wp = s.sphere.material.omega_plasma;
  const double wq = s.wall.material->omega_plasma;
  const double den = 2.0 * wp * wp - 3.0 * wq * wq;
  if (den == 0.0) {
    throw DomainError(
        "force_small_z_asymptote: resonant ratio 2 wp^2 = 3 wq^2");
  }
  const double z2 = s.z * s.z;
  return -s.sphere.alpha0() / (4.0 * kPi) * (3.0 * std::sqrt(2.0) / 8.0) *
         wp * wp * wq / den / (z2 * z2);
}

double casimir_polder(double alpha0, double z) {
  if (!(alpha0 > 0.0)) {
    throw DomainError("casimir_polder: alpha0 must be positive");
  }
  require_positive_z(z, "casimir_polder");
  const double z2 = z * z;
  return -3.0 * alpha0 / (32.0 * kPi * kPi * z2 * z2);
}

double cp_spectrum(double omega, double z) {
  require_positive_z(z, "cp_spectrum");
  const double a = 2.0 * omega * z;
  return (0.5 * a * a - 1.0) * std::sin(a) + a * std::cos(a);
}

double regularized_cp_spectrum_integral(double z, const IntegrationSpec& tol) {
  require_positive_z(z, "regularized_cp_spectrum_integral");
  auto damped = [&](double g) {
    IntegrationSpec q = tol;
    q.decay_scale = 1.0 / g;
    q.max_subdivisions = std::max(tol.max_subdivisions, 40000);
    auto f = [&](double w) { return cp_spectrum(w, z) * std::exp(-g * w); };
    return integrate_semi_infinite(f, q).value;
  };
  // Corrections are a series in g^2, so halving g and Richardson steps of
  // ratio 4 strip them order by order.
  const double g0 = 0.2 * z;
  const double a0 = damped(g0);
  const double a1 = damped(0.5 * g0);
  const double a2 = damped(0.25 * g0);
  const double a3 = damped(0.125 * g0);
  const double b0 = (4.0 * a1 - a0) / 3.0;
  const double b1 = (4.0 * a2 - a1) / 3.0;
  const double b2 = (4.0 * a3 - a2) / 3.0;
  const double c0 = (16.0 * b1 - b0) / 15.0;
  const double c1 = (16.0 * b2 - b1) / 15.0;
  return (64.0 * c1 - c0) / 63.0;
}

double spectral_e2(const WallResponse& wall, double z, double omega,
                   const IntegrationSpec& tol) {
  require_positive_z(z, "spectral_e2");
  if (!(omega > 0.0)) {
    throw DomainError("spectral_e2: omega must be positive");
  }
  auto refl_q = [&](double q) { return fresnel_propagating(wall, omega, q); };
  auto refl_p = [&](double p) { return fresnel_evanescent(wall, omega, p); };
  const cdouble total =
      propagating_integral(refl_q, wall, omega, z, false, tol) +
      evanescent_integral(refl_p, wall, omega, z, false, tol);
  return -std::real(cdouble(0.0, 1.0) * total) / (4.0 * kPi);
}

double spectral_e2(const Scenario& s, double omega,
                   const IntegrationSpec& tol) {
  return spectral_e2(s.wall, s.z, omega, tol);
}

}  // namespace casilev
