#pragma once

// Adaptive Gauss-Kronrod quadrature, Matsubara-style series summation and
// bracketed root refinement.  Everything is templated on the integrand's
// value type so the same engine serves real integrands and the complex
// rotated-contour ones.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <queue>
#include <span>
#include <type_traits>
#include <vector>

#include "casilev/errors.hpp"

namespace casilev {

struct IntegrationSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-300;  // effectively "relative control only"
  int max_subdivisions = 4000;
  // Tail model for semi-infinite integrals: |f| ~ exp(-x/decay_scale) for
  // large x.  Callers set this to 1/(2z) for the exp(-2*u*z) kernels.
  double decay_scale = 1.0;

  static IntegrationSpec production() { return IntegrationSpec{}; }
  static IntegrationSpec oracle() {
    IntegrationSpec s;
    s.rel_tol = 1e-10;
    s.max_subdivisions = 20000;
    return s;
  }
};

struct SeriesSpec {
  double relative_tail_tolerance = 1e-10;
  int max_terms = 100000;
};

template <typename T>
struct Integral {
  T value;
  double error;  // estimated bound on |true - value|
  int panels;    // panels in the final subdivision
};

template <typename T>
struct SeriesSum {
  T value;
  double tail_estimate;
  int terms;  // highest index actually evaluated
};

inline double norm_of(double x) { return std::fabs(x); }
inline double norm_of(const std::complex<double>& x) { return std::abs(x); }

namespace detail {

// 15-point Kronrod nodes with embedded 7-point Gauss rule (QUADPACK dqk15).
inline constexpr double kGK15Nodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.000000000000000};
inline constexpr double kGK15WeightsK[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kGK15WeightsG[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <typename T>
struct Panel {
  double a, b;
  T value;
  double error;
};

template <typename T>
struct PanelOrder {
  bool operator()(const Panel<T>& x, const Panel<T>& y) const {
    return x.error < y.error;  // largest error on top
  }
};

// One Kronrod pass over [a, b].  The error estimate follows QUADPACK:
// |K15 - G7| sharpened through the scaled deviation integral resasc, with
// a roundoff floor of 50 eps * integral of |f|.
template <typename F, typename T>
Panel<T> gk15_panel(F& f, double a, double b) {
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);

  T fv[15];
  fv[7] = f(mid);
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kGK15Nodes[j];
    fv[j] = f(mid - dx);
    fv[14 - j] = f(mid + dx);
  }

  T resk = kGK15WeightsK[7] * fv[7];
  T resg = kGK15WeightsG[3] * fv[7];
  double resabs = kGK15WeightsK[7] * norm_of(fv[7]);
  for (int j = 0; j < 7; ++j) {
    const T pair_sum = fv[j] + fv[14 - j];
    resk += kGK15WeightsK[j] * pair_sum;
    if (j % 2 == 1) resg += kGK15WeightsG[j / 2] * pair_sum;
    resabs += kGK15WeightsK[j] * (norm_of(fv[j]) + norm_of(fv[14 - j]));
  }

  const T reskh = 0.5 * resk;
  double resasc = kGK15WeightsK[7] * norm_of(fv[7] - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kGK15WeightsK[j] *
              (norm_of(fv[j] - reskh) + norm_of(fv[14 - j] - reskh));
  }

  const double habs = std::fabs(half);
  resabs *= habs;
  resasc *= habs;
  double err = norm_of(resk - resg) * habs;
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  const double eps = std::numeric_limits<double>::epsilon();
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * resabs, err);
  }
  return Panel<T>{a, b, half * resk, err};
}

// Core adaptive loop over an initial partition.  extra_error (e.g. a
// truncation-tail bound) participates in the stopping test and is folded
// into the reported error.
template <typename F,
          typename T = std::decay_t<std::invoke_result_t<F&, double>>>
Integral<T> adaptive(F& f, std::span<const double> breakpoints,
                     const IntegrationSpec& spec, double extra_error) {
  std::priority_queue<Panel<T>, std::vector<Panel<T>>, PanelOrder<T>> heap;
  T total{};
  double total_err = extra_error;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    Panel<T> p = gk15_panel<F, T>(f, breakpoints[i], breakpoints[i + 1]);
    total += p.value;
    total_err += p.error;
    heap.push(std::move(p));
  }

  int splits = 0;
  while (true) {
    const double target =
        std::max(spec.abs_tol, spec.rel_tol * norm_of(total));
    if (total_err <= target) break;
    if (splits >= spec.max_subdivisions) {
      // Re-sum before reporting so the carried estimate is clean.
      T best{};
      double err = extra_error;
      while (!heap.empty()) {
        best += heap.top().value;
        err += heap.top().error;
        heap.pop();
      }
      throw ConvergenceError(
          "quadrature: subdivision budget exhausted before tolerance",
          norm_of(best), err);
    }
    Panel<T> worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel<T> left = gk15_panel<F, T>(f, worst.a, mid);
    Panel<T> right = gk15_panel<F, T>(f, mid, worst.b);
    total += (left.value + right.value) - worst.value;
    total_err += (left.error + right.error) - worst.error;
    heap.push(std::move(left));
    heap.push(std::move(right));
    ++splits;
  }

  // Fresh accumulation of the final partition; the incremental running sum
  // above has add/subtract drift that the reported error need not cover.
  T value{};
  double err = extra_error;
  int n = 0;
  while (!heap.empty()) {
    value += heap.top().value;
    err += heap.top().error;
    heap.pop();
    ++n;
  }
  return Integral<T>{value, err, n};
}

}  // namespace detail

// Integral of f over [a, b].
template <typename F,
          typename T = std::decay_t<std::invoke_result_t<F&, double>>>
Integral<T> integrate_finite(F&& f, double a, double b,
                             const IntegrationSpec& spec = {}) {
  if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0)) {
    throw DomainError("integrate_finite: tolerances must be positive");
  }
  if (!(b >= a)) {
    throw DomainError("integrate_finite: interval must satisfy a <= b");
  }
  if (a == b) return Integral<T>{T{}, 0.0, 0};
  const double pts[2] = {a, b};
  return detail::adaptive(f, std::span<const double>(pts, 2), spec, 0.0);
}

// Integral of f over [a, infinity) for integrands with an exp(-x/decay_scale)
// envelope.  The domain is truncated where that envelope reaches ~1e-18 and
// the discarded tail is bounded from samples near the cut; if the bound is
// not negligible against the requested tolerance the cut is pushed out.
template <typename F,
          typename T = std::decay_t<std::invoke_result_t<F&, double>>>
Integral<T> integrate_semi_infinite(F&& f, const IntegrationSpec& spec = {},
                                    double a = 0.0) {
  if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0)) {
    throw DomainError("integrate_semi_infinite: tolerances must be positive");
  }
  if (!(spec.decay_scale > 0.0)) {
    throw DomainError("integrate_semi_infinite: decay_scale must be positive");
  }
  const double s = spec.decay_scale;

  double span_lengths = 40.0;  // exp(-40) ~ 4e-18 relative envelope
  for (int attempt = 0;; ++attempt) {
    const double cut = a + s * span_lengths;

    // Geometric initial partition: fine near the lower end where the
    // integrand structure lives, coarse along the decaying tail.
    std::vector<double> pts;
    pts.push_back(a);
    for (double w = s * 0.5; a + w < cut; w *= 2.0) pts.push_back(a + w);
    pts.push_back(cut);

    // Envelope-based tail bound from samples just inside the cut.  Offsets
    // are incommensurate with typical oscillation periods so a zero of f is
    // unlikely to fool all of them.
    double tail = 0.0;
    for (double frac : {0.912, 0.947, 0.981, 1.0}) {
      const double x = a + (cut - a) * frac;
      tail = std::max(tail, norm_of(f(x)) * s * std::exp(-(cut - x) / s));
    }
    tail *= 2.0;  // safety on the single-sample envelope fit

    // The tail bound enters the adaptive stopping test as an irreducible
    // error, so it must sit below the relative target before any panel is
    // subdivided; otherwise the budget is spent on an unreachable goal.
    // Judge that from one non-adaptive pass over the initial partition.
    T rough{};
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      rough += detail::gk15_panel<F, T>(f, pts[i], pts[i + 1]).value;
    }
    const double pre_target =
        std::max(spec.abs_tol, spec.rel_tol * norm_of(rough));
    if (attempt < 3 && tail > 0.25 * pre_target) {
      span_lengths *= 2.0;
      continue;
    }
    if (tail > pre_target) {
      throw ConvergenceError(
          "integrate_semi_infinite: tail bound stuck above tolerance "
          "(decay_scale too small for this integrand?)",
          norm_of(rough), tail);
    }

    Integral<T> result = detail::adaptive(f, pts, spec, tail);
    const double target =
        std::max(spec.abs_tol, spec.rel_tol * norm_of(result.value));
    if (tail <= 0.5 * target || attempt >= 3) {
      if (tail > target && attempt >= 3) {
        throw ConvergenceError(
            "integrate_semi_infinite: tail bound stuck above tolerance "
            "(decay_scale too small for this integrand?)",
            norm_of(result.value), result.error);
      }
      return result;
    }
    span_lengths *= 2.0;
  }
}

// Sum over Matsubara indices: w(0)*term(0) + sum_{n>=1} term(n) with the
// conventional half weight on n = 0.  Stops once a geometric-ratio estimate
// of the remaining tail drops below the relative tolerance.
template <typename F,
          typename T = std::decay_t<std::invoke_result_t<F&, int>>>
SeriesSum<T> sum_matsubara(F&& term, const SeriesSpec& spec = {}) {
  if (!(spec.relative_tail_tolerance > 0.0)) {
    throw DomainError("sum_matsubara: tail tolerance must be positive");
  }
  T total = 0.5 * term(0);
  double prev_norm = -1.0;
  int zero_streak = 0;
  for (int n = 1; n <= spec.max_terms; ++n) {
    const T t = term(n);
    total += t;
    const double tn = norm_of(t);
    if (tn == 0.0) {
      if (++zero_streak >= 2) return SeriesSum<T>{total, 0.0, n};
      prev_norm = 0.0;
      continue;
    }
    zero_streak = 0;
    if (prev_norm > 0.0 && tn < prev_norm) {
      const double r = tn / prev_norm;
      const double tail = tn * r / (1.0 - r);
      if (tail <= spec.relative_tail_tolerance * norm_of(total)) {
        return SeriesSum<T>{total, tail, n};
      }
    }
    prev_norm = tn;
  }
  throw ConvergenceError("sum_matsubara: term budget exhausted",
                         norm_of(total), prev_norm);
}

struct Root {
  double x;
  int slope_sign;  // sign of f' at the root from a centered difference
};

namespace detail {

// Brent's method on a sign-changing bracket.  fa, fb are f at a, b.
template <typename F>
double brent(F& f, double a, double b, double fa, double fb) {
  if (fa == 0.0) return a;
  if (fb == 0.0) return b;
  double c = a, fc = fa;
  double d = b - a, e = d;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int iter = 0; iter < 128; ++iter) {
    if ((fb > 0.0) == (fc > 0.0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::fabs(fc) < std::fabs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * eps * std::fabs(b) + 1e-15;
    const double m = 0.5 * (c - b);
    if (std::fabs(m) <= tol || fb == 0.0) return b;
    if (std::fabs(e) < tol || std::fabs(fa) <= std::fabs(fb)) {
      d = e = m;  // bisection
    } else {
      double p, q;
      const double s = fb / fa;
      if (a == c) {  // secant
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {  // inverse quadratic
        const double qa = fa / fc;
        const double r = fb / fc;
        p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
        q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0.0) q = -q; else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::fabs(tol * q),
                             std::fabs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = e = m;
      }
    }
    a = b;
    fa = fb;
    b += (std::fabs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
    fb = f(b);
  }
  return b;
}

}  // namespace detail

// Scan a monotone grid for sign changes of f and refine each bracket.
// Roots landing exactly on grid points are kept once.  The slope sign uses
// a centered difference with a step tied to the local grid spacing.
template <typename F>
std::vector<Root> find_roots_bracketed(F&& f, std::span<const double> grid) {
  std::vector<Root> roots;
  if (grid.size() < 2) return roots;
  std::vector<double> fv(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) fv[i] = f(grid[i]);

  auto slope_sign_at = [&](double x, double h) {
    const double df = f(x + h) - f(x - h);
    return (df > 0.0) - (df < 0.0);
  };

  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    const double h = 1e-3 * (grid[i + 1] - grid[i]);
    if (fv[i] == 0.0) {
      if (roots.empty() || roots.back().x != grid[i]) {
        roots.push_back(Root{grid[i], slope_sign_at(grid[i], h)});
      }
      continue;
    }
    if ((fv[i] > 0.0) != (fv[i + 1] > 0.0) && fv[i + 1] != 0.0) {
      const double x =
          detail::brent(f, grid[i], grid[i + 1], fv[i], fv[i + 1]);
      roots.push_back(Root{x, slope_sign_at(x, h)});
    }
  }
  // Trailing exact zero not covered by the loop above.
  if (fv.back() == 0.0) {
    const double h = 1e-3 * (grid[grid.size() - 1] - grid[grid.size() - 2]);
    roots.push_back(Root{grid.back(), slope_sign_at(grid.back(), h)});
  }
  return roots;
}

}  // namespace casilev
