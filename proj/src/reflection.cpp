#include "casilev/reflection.hpp"

#include <cmath>
#include <limits>

#include "casilev/errors.hpp"

namespace casilev {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}  // namespace

cdouble branch_sqrt(cdouble x) {
  if (x.imag() == 0.0 && x.real() < 0.0) {
    return cdouble(0.0, -std::sqrt(-x.real()));
  }
  return std::sqrt(x);  // principal branch, Re >= 0
}

cdouble kappa(const TransverseMode& mode) {
  return branch_sqrt(mode.k * mode.k - mode.omega * mode.omega);
}

namespace {

Reflection fresnel_from_kappas(cdouble eps, cdouble kap, cdouble kap1) {
  const cdouble den_te = kap + kap1;
  const cdouble den_tm = kap * eps + kap1;
  const double scale = std::abs(kap) + std::abs(kap1);
  if (std::abs(den_te) <= 1e-14 * scale || std::abs(den_tm) <= 1e-14 * scale) {
    // Both wave numbers sit on the Re >= 0 / -i branch, so a cancelling
    // denominator means the branch selection went wrong, not physics.
    throw DomainError("fresnel: vanishing denominator (branch error)");
  }
  return Reflection{(kap - kap1) / den_te, (kap * eps - kap1) / den_tm};
}

Reflection fresnel_with_eps(cdouble eps, const TransverseMode& mode) {
  const cdouble kap = kappa(mode);
  const cdouble kap1 =
      branch_sqrt(mode.k * mode.k - mode.omega * mode.omega * eps);
  return fresnel_from_kappas(eps, kap, kap1);
}

void require_sector_args(double omega, double s, double s_max,
                         const char* who) {
  if (!(omega > 0.0) || !(s >= 0.0) || !(s <= s_max)) {
    throw DomainError(std::string(who) + ": sector variable out of range");
  }
}

void require_undamped_wall(const WallResponse& wall, const char* who) {
  if (!wall.is_perfect() && wall.material->gamma != 0.0) {
    throw DomainError(std::string(who) +
                      ": damped wall; use fresnel_averaged instead");
  }
}

}  // namespace

Reflection fresnel(const WallResponse& wall, const TransverseMode& mode) {
  if (wall.is_perfect()) return Reflection{cdouble(-1.0), cdouble(1.0)};
  return fresnel_with_eps(drude_epsilon(*wall.material, mode.omega), mode);
}

Reflection fresnel_averaged(const WallResponse& wall,
                            const TransverseMode& mode) {
  if (wall.is_perfect()) return Reflection{cdouble(-1.0), cdouble(1.0)};
  const Material& m = *wall.material;
  if (m.gamma == 0.0) return fresnel(wall, mode);
  // A quadrature node can land exactly on one branch's permittivity pole
  // (omega = -i gamma).  |eps| -> infinity there and both coefficients have
  // the mirror limit, which keeps the averaged integrand finite.
  auto one_sign = [&](double g) -> Reflection {
    if (mode.omega == cdouble(0.0, -g)) {
      return Reflection{cdouble(-1.0, 0.0), cdouble(1.0, 0.0)};
    }
    return fresnel_with_eps(drude_epsilon(m.omega_plasma, g, mode.omega),
                            mode);
  };
  const Reflection plus = one_sign(m.gamma);
  const Reflection minus = one_sign(-m.gamma);
  return Reflection{0.5 * (plus.r + minus.r), 0.5 * (plus.rp + minus.rp)};
}

Reflection fresnel_propagating(cdouble eps, double omega, double q) {
  require_sector_args(omega, q, omega, "fresnel_propagating");
  const cdouble kap(0.0, -q);
  const cdouble kap1 = branch_sqrt((1.0 - eps) * (omega * omega) - q * q);
  return fresnel_from_kappas(eps, kap, kap1);
}

Reflection fresnel_propagating(const WallResponse& wall, double omega,
                               double q) {
  require_sector_args(omega, q, omega, "fresnel_propagating");
  if (wall.is_perfect()) return Reflection{cdouble(-1.0), cdouble(1.0)};
  const Material& m = *wall.material;
  const cdouble eps = drude_epsilon(m, cdouble(omega));
  if (m.gamma == 0.0) {
    // Real radicand wq^2 - q^2; branch_sqrt switches kappa1 from real decay
    // to -i propagation exactly at q = wq.
    const double wq2 = m.omega_plasma * m.omega_plasma;
    return fresnel_from_kappas(eps, cdouble(0.0, -q),
                               branch_sqrt(cdouble(wq2 - q * q)));
  }
  return fresnel_propagating(eps, omega, q);
}

Reflection fresnel_evanescent(cdouble eps, double omega, double p) {
  require_sector_args(omega, p, kInf, "fresnel_evanescent");
  const cdouble kap(p, 0.0);
  const cdouble kap1 = branch_sqrt((1.0 - eps) * (omega * omega) + p * p);
  return fresnel_from_kappas(eps, kap, kap1);
}

Reflection fresnel_evanescent(const WallResponse& wall, double omega,
                              double p) {
  require_sector_args(omega, p, kInf, "fresnel_evanescent");
  if (wall.is_perfect()) return Reflection{cdouble(-1.0), cdouble(1.0)};
  const Material& m = *wall.material;
  const cdouble eps = drude_epsilon(m, cdouble(omega));
  if (m.gamma == 0.0) {
    const double wq2 = m.omega_plasma * m.omega_plasma;
    return fresnel_from_kappas(eps, cdouble(p),
                               cdouble(std::sqrt(wq2 + p * p)));
  }
  return fresnel_evanescent(eps, omega, p);
}

ReflectionReal fresnel_polar(const WallResponse& wall, double u, double t) {
  if (!(u >= 0.0) || !(t >= 0.0) || !(t <= 1.0)) {
    throw DomainError("fresnel_polar: need u >= 0 and t in [0, 1]");
  }
  if (wall.is_perfect()) return ReflectionReal{-1.0, 1.0};
  require_undamped_wall(wall, "fresnel_polar");
  const double wq2 = wall.material->omega_plasma * wall.material->omega_plasma;
  const double root = std::sqrt(u * u + wq2);
  const double ut2 = u * t * t;
  return ReflectionReal{(u - root) / (u + root),
                        (u * ut2 + wq2 - ut2 * root) /
                            (u * ut2 + wq2 + ut2 * root)};
}

ReflectionReal fresnel_matsubara(const WallResponse& wall, double zeta_n,
                                 double k) {
  if (!(zeta_n >= 0.0) || !(k >= 0.0)) {
    throw DomainError("fresnel_matsubara: need zeta_n >= 0 and k >= 0");
  }
  if (wall.is_perfect()) return ReflectionReal{-1.0, 1.0};
  require_undamped_wall(wall, "fresnel_matsubara");
  const double wq2 = wall.material->omega_plasma * wall.material->omega_plasma;
  const double z2 = zeta_n * zeta_n;
  const double kap = std::sqrt(k * k + z2);
  const double kap1 = std::sqrt(kap * kap + wq2);
  const double r = (kap - kap1) / (kap + kap1);
  // The static TM coefficient is exactly +1 for any wq, including the
  // otherwise indeterminate k = 0 corner.
  if (zeta_n == 0.0) return ReflectionReal{r, 1.0};
  const double num = kap * (z2 + wq2) - z2 * kap1;
  const double den = kap * (z2 + wq2) + z2 * kap1;
  return ReflectionReal{r, num / den};
}

}  // namespace casilev
