#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>

#include "casilev/errors.hpp"
#include "casilev/thermal.hpp"

using namespace casilev;

namespace {

Scenario make(double radius, double gamma_s, const WallResponse& wall,
              double z) {
  return Scenario{SphereSpec(radius, Material(1.0, gamma_s)), wall, z};
}

// Test-local Matsubara sum, written from the definition: explicit n loop,
// Simpson k-integral, and the imaginary-axis Fresnel coefficients spelled
// out from eps(i zeta) = 1 + wq^2 / zeta^2.  Only shares the material
// response (a closed rational formula pinned in test_materials) with the
// production engine.
double matsubara_by_hand(const Scenario& s, double beta, bool force) {
  const double z = s.z;
  const double wq2 = s.wall.material->omega_plasma *
                     s.wall.material->omega_plasma;
  const double wp2 = s.sphere.material.omega_plasma *
                     s.sphere.material.omega_plasma;
  const double alpha0 = s.sphere.alpha0();

  auto integrand = [&](double zeta, double k) {
    const double kap = std::hypot(k, zeta);
    if (kap == 0.0) return 0.0;
    const double kap1 = std::sqrt(kap * kap + wq2);
    const double r = (kap - kap1) / (kap + kap1);
    double rp;
    if (zeta == 0.0) {
      rp = 1.0;
    } else {
      const double eps = 1.0 + wq2 / (zeta * zeta);
      rp = (eps * kap - kap1) / (eps * kap + kap1);
    }
    const double bracket =
        -zeta * zeta * r + (2.0 * k * k + zeta * zeta) * rp;
    const double measure = force ? 2.0 * k : k / kap;
    return measure * bracket * std::exp(-2.0 * kap * z);
  };

  auto simpson_k = [&](double zeta) {
    const int n = 20000;  // even
    const double kmax = 25.0 / (2.0 * z) * (2.0 * z);  // fixed 25 range
    const double h = kmax / n;
    double acc = integrand(zeta, 0.0) + integrand(zeta, kmax);
    for (int i = 1; i < n; ++i) {
      acc += (i % 2 ? 4.0 : 2.0) * integrand(zeta, i * h);
    }
    return acc * h / 3.0;
  };

  const double pi = 3.14159265358979323846;
  double sum = 0.0;
  for (int n = 0; n <= 40; ++n) {
    const double zeta = 2.0 * pi * n / beta;
    const double a3 = 3.0 * zeta * zeta + wp2;
    const double alpha_im = alpha0 * wp2 * a3 / (a3 * a3);  // gamma_s = 0
    const double weight = (n == 0) ? 0.5 : 1.0;
    sum += weight * alpha_im * simpson_k(zeta);
  }
  return -sum / (4.0 * pi * beta);
}

}  // namespace

TEST_CASE("near-zero temperature reproduces the zero-temperature split") {
  // beta = 1000 in units of 1/omega_p: the Matsubara spacing 2 pi / beta
  // is far below every structure scale, and the Bose weight on the pole is
  // e^{-577}-level gone.
  const ThermalState cold(1000.0);
  const IntegrationSpec tol;
  for (const WallResponse& wall :
       {WallResponse::perfect(), WallResponse::drude(2.0)}) {
    for (double z : {3.0, 8.0}) {
      const Scenario s = make(0.1, 0.0, wall, z);
      CHECK(v_j_thermal(s, cold, tol) ==
            doctest::Approx(v_j(s, tol)).epsilon(0.01));
      CHECK(force_j_thermal(s, cold, tol) ==
            doctest::Approx(force_j(s, tol)).epsilon(0.01));
      // The pole weight itself is exactly 1/2 once the Bose factor
      // underflows, so these agree to quadrature determinism.
      CHECK(v_p_thermal(s, cold, tol) ==
            doctest::Approx(v_p(s, tol)).epsilon(1e-13));
      CHECK(force_p_thermal(s, cold, tol) ==
            doctest::Approx(force_p(s, tol)).epsilon(1e-13));
    }
  }

  SUBCASE("damped sphere pole weight also collapses to 1/2") {
    const Scenario s = make(0.1, 0.1, WallResponse::drude(2.0), 4.0);
    CHECK(v_p_thermal(s, cold, tol) ==
          doctest::Approx(v_p(s, tol)).epsilon(1e-13));
  }
}

TEST_CASE("matsubara engine against a term-by-term reimplementation") {
  const double beta = 5.0;
  const ThermalState t(beta);
  const Scenario s = make(0.1, 0.0, WallResponse::drude(1.0), 2.0);
  const IntegrationSpec tol = IntegrationSpec::oracle();

  const double v_hand = matsubara_by_hand(s, beta, false);
  const double v_prod = v_j_thermal(s, t, tol);
  CHECK(v_prod == doctest::Approx(v_hand).epsilon(1e-7));

  const double f_hand = matsubara_by_hand(s, beta, true);
  const double f_prod = force_j_thermal(s, t, tol);
  CHECK(f_prod == doctest::Approx(f_hand).epsilon(1e-7));
}

TEST_CASE("pole weight is the Bose-augmented half") {
  // For an undamped sphere omega1 = Omega is real; at beta = ln 2 / Omega
  // the Bose factor is exactly 1, so the thermal pole term is 3x the
  // zero-temperature one with the identical k-integral.
  const Scenario s = make(0.1, 0.0, WallResponse::drude(2.0), 4.0);
  const double omega_res = pole_data(s.sphere).resonance;
  const ThermalState t(std::log(2.0) / omega_res);
  const IntegrationSpec tol;
  CHECK(v_p_thermal(s, t, tol) ==
        doctest::Approx(3.0 * v_p(s, tol)).epsilon(1e-12));
  CHECK(force_p_thermal(s, t, tol) ==
        doctest::Approx(3.0 * force_p(s, tol)).epsilon(1e-12));
}

TEST_CASE("classical limit keeps only the n = 0 term") {
  // beta omega_p = 0.05: the first nonzero Matsubara frequency is ~126, so
  // only zeta = 0 survives.  There r' = 1 for any wall and the k-integral
  // closes to 1/(2 z^3), giving v_j^T -> -alpha0 / (16 pi beta z^3).
  const ThermalState hot(0.05);
  const double z = 6.0;
  const double pi = 3.14159265358979323846;
  for (const WallResponse& wall :
       {WallResponse::perfect(), WallResponse::drude(2.0)}) {
    const Scenario s = make(0.1, 0.0, wall, z);
    const double classical =
        -s.sphere.alpha0() / (16.0 * pi * hot.beta * z * z * z);
    CHECK(v_j_thermal(s, hot) == doctest::Approx(classical).epsilon(1e-9));
    // Force: -d/dz of the classical form, 3x / z.
    CHECK(force_j_thermal(s, hot) ==
          doctest::Approx(3.0 * classical / z).epsilon(1e-9));
  }
}

TEST_CASE("thermal force is the separation derivative") {
  const ThermalState t(5.0);
  const Scenario base = make(0.1, 0.0, WallResponse::drude(2.0), 5.0);
  const IntegrationSpec tol = IntegrationSpec::oracle();
  const double h = 2e-3;

  auto v_total = [&](double z) {
    Scenario s = base;
    s.z = z;
    return v_j_thermal(s, t, tol) + v_p_thermal(s, t, tol);
  };
  const double fd = (v_total(base.z - h) - v_total(base.z + h)) / (2.0 * h);
  const double f =
      force_j_thermal(base, t, tol) + force_p_thermal(base, t, tol);
  CHECK(f == doctest::Approx(fd).epsilon(1e-5));
}

TEST_CASE("activation barrier is the force integral between separations") {
  const SphereSpec sphere(0.1, Material(1.0, 0.0));
  const WallResponse wall = WallResponse::perfect();
  const IntegrationSpec tol = IntegrationSpec::oracle();

  auto v_total = [&](double z) {
    const PotentialBreakdown b = breakdown(Scenario{sphere, wall, z}, tol);
    return b.v_total();
  };

  // Int_4^7 f dz = V(4) - V(7).
  const double w = activation_barrier(sphere, wall, 4.0, 7.0, std::nullopt,
                                      tol);
  const double dv = v_total(4.0) - v_total(7.0);
  const double scale = std::fabs(v_total(4.0)) + std::fabs(v_total(7.0));
  CHECK(std::fabs(w - dv) < 1e-6 * scale);

  CHECK(activation_barrier(sphere, wall, 5.0, 5.0) == 0.0);
  CHECK(activation_barrier(sphere, wall, 7.0, 4.0, std::nullopt, tol) ==
        doctest::Approx(-w).epsilon(1e-12));

  SUBCASE("finite-temperature route integrates the thermal force") {
    const ThermalState t(5.0);
    const double wt =
        activation_barrier(sphere, wall, 4.0, 6.0, t, tol);
    auto vt = [&](double z) {
      const PotentialBreakdown b =
          breakdown_thermal(Scenario{sphere, wall, z}, t, tol);
      return b.v_total();
    };
    const double dvt = vt(4.0) - vt(6.0);
    CHECK(std::fabs(wt - dvt) < 1e-6 * (std::fabs(vt(4.0)) +
                                        std::fabs(vt(6.0))));
  }
}

TEST_CASE("thermal breakdown aggregates the four operations") {
  const ThermalState t(8.0);
  const Scenario s = make(0.1, 0.0, WallResponse::drude(2.0), 4.0);
  const IntegrationSpec tol;
  const PotentialBreakdown b = breakdown_thermal(s, t, tol);
  CHECK(b.v_j == v_j_thermal(s, t, tol));
  CHECK(b.v_p == v_p_thermal(s, t, tol));
  CHECK(b.f_j == force_j_thermal(s, t, tol));
  CHECK(b.f_p == force_p_thermal(s, t, tol));
  CHECK(b.v_total() == b.v_j + b.v_p);
  CHECK(b.f_total() == b.f_j + b.f_p);
}

TEST_CASE("thermal validity warnings") {
  const Scenario s = make(0.1, 0.0, WallResponse::perfect(), 5.0);
  CHECK(thermal_warnings(s, ThermalState(5.0)).empty());
  // radius * 4 > beta: sphere comparable to the thermal wavelength.
  CHECK(thermal_warnings(s, ThermalState(0.3)).size() == 1);
}

TEST_CASE("thermal argument validation") {
  CHECK_THROWS_AS(ThermalState(0.0), DomainError);
  CHECK_THROWS_AS(ThermalState(-2.0), DomainError);

  const ThermalState t(5.0);
  const Scenario bad_z = make(0.1, 0.0, WallResponse::perfect(), -1.0);
  CHECK_THROWS_AS(v_j_thermal(bad_z, t), DomainError);
  CHECK_THROWS_AS(v_p_thermal(bad_z, t), DomainError);

  // Matsubara coefficients are the undamped-wall closed forms; a damped
  // wall has no +/- averaged continuation wired up here.
  const Scenario damped_wall = make(0.1, 0.0, WallResponse::drude(2.0, 0.1),
                                    5.0);
  CHECK_THROWS_AS(v_j_thermal(damped_wall, t), DomainError);
  CHECK_THROWS_AS(force_j_thermal(damped_wall, t), DomainError);

  CHECK_THROWS_AS(activation_barrier(SphereSpec(0.1, Material(1.0, 0.0)),
                                     WallResponse::perfect(), 0.0, 5.0),
                  DomainError);
}
