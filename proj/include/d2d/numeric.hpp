#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace d2d {

inline double log_beta(double a, double b) {
  return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b);
}

namespace detail {

// Continued fraction for the incomplete beta (modified Lentz). Converges for
// x < (a+1)/(a+b+2); callers use the symmetry relation otherwise.
inline double beta_cf(double a, double b, double x) {
  constexpr int kMaxIter = 300;
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  constexpr double kTiny = 1e-300;

  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= kMaxIter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::fabs(del - 1.0) < kEps) break;
  }
  return h;
}

}  // namespace detail

/// Regularized incomplete beta function I_x(a, b) for a, b > 0, x in [0, 1].
inline double regularized_incomplete_beta(double a, double b, double x) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::domain_error("incomplete beta requires a, b > 0");
  if (x < 0.0 || x > 1.0)
    throw std::domain_error("incomplete beta requires x in [0, 1]");
  if (x == 0.0) return 0.0;
  if (x == 1.0) return 1.0;
  const double front =
      std::exp(a * std::log(x) + b * std::log1p(-x) - log_beta(a, b));
  if (x < (a + 1.0) / (a + b + 2.0))
    return front * detail::beta_cf(a, b, x) / a;
  return 1.0 - std::exp(b * std::log1p(-x) + a * std::log(x) - log_beta(b, a)) *
                   detail::beta_cf(b, a, 1.0 - x) / b;
}

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;   // accumulated error estimate
  bool converged = true;
};

namespace detail {

// 7-point Gauss / 15-point Kronrod pair on [-1, 1] (QUADPACK abscissae).
inline constexpr double kKronrodNodes[8] = {
    0.991455371120813, 0.949107912342759, 0.864864423359769,
    0.741531185599394, 0.586087235467691, 0.405845151377397,
    0.207784955007898, 0.0};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529, 0.063092092629979, 0.104790010322250,
    0.140653259715525, 0.169004726639267, 0.190350578064785,
    0.204432940075298, 0.209482141084728};
inline constexpr double kGaussWeights[4] = {
    0.129484966168870, 0.279705391489277, 0.381830050505119,
    0.417959183673469};

template <typename F>
void gk15(F&& f, double a, double b, double& kronrod, double& err) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double fv[15];
  for (int j = 0; j < 7; ++j) {
    fv[j] = f(mid - half * kKronrodNodes[j]);
    fv[14 - j] = f(mid + half * kKronrodNodes[j]);
  }
  fv[7] = f(mid);
  double resk = kKronrodWeights[7] * fv[7];
  double resg = kGaussWeights[3] * fv[7];
  for (int j = 0; j < 7; ++j) {
    resk += kKronrodWeights[j] * (fv[j] + fv[14 - j]);
    if (j % 2 == 1)  // odd Kronrod indices are the Gauss points
      resg += kGaussWeights[j / 2] * (fv[j] + fv[14 - j]);
  }
  kronrod = resk * half;
  err = std::fabs((resk - resg) * half);
}

template <typename F>
void adapt(F&& f, double a, double b, double tol, int depth, int max_depth,
           QuadratureResult& out) {
  double value = 0.0, err = 0.0;
  gk15(f, a, b, value, err);
  if (err <= tol || depth >= max_depth) {
    out.value += value;
    out.error += err;
    if (err > tol) out.converged = false;
    return;
  }
  const double mid = 0.5 * (a + b);
  adapt(f, a, mid, 0.5 * tol, depth + 1, max_depth, out);
  adapt(f, mid, b, 0.5 * tol, depth + 1, max_depth, out);
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b] to absolute tolerance
/// abs_tol, bisecting to a hard depth cap.
template <typename F>
QuadratureResult integrate(F&& f, double a, double b, double abs_tol = 1e-10,
                           int max_depth = 48) {
  QuadratureResult out;
  if (a == b) return out;
  detail::adapt(f, a, b, abs_tol, 0, max_depth, out);
  return out;
}

}  // namespace d2d
