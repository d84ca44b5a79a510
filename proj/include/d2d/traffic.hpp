#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "d2d/config.hpp"
#include "d2d/numeric.hpp"

namespace d2d {

/// Beta-distributed activation density on [0, horizon]:
///   p(t) = t^(a-1) (T-t)^(b-1) / (T^(a+b-1) B(a, b)).
/// Endpoints follow the power-law limits (0, finite, or +inf depending on the
/// shape), so a < 1 or b < 1 yields integrable singularities.
inline double beta_pdf(double t, double alpha, double beta, double horizon) {
  if (!(alpha > 0.0) || !(beta > 0.0))
    throw std::domain_error("beta_pdf requires alpha, beta > 0");
  if (!(horizon > 0.0)) throw std::domain_error("beta_pdf requires horizon > 0");
  if (t < 0.0 || t > horizon)
    throw std::domain_error("beta_pdf: t outside [0, horizon]");
  const double x = t / horizon;
  auto edge = [&](double shape) {
    if (shape > 1.0) return 0.0;
    if (shape == 1.0) return std::exp(-log_beta(alpha, beta)) / horizon;
    return std::numeric_limits<double>::infinity();
  };
  if (x == 0.0) return edge(alpha);
  if (x == 1.0) return edge(beta);
  return std::exp((alpha - 1.0) * std::log(x) + (beta - 1.0) * std::log1p(-x) -
                  log_beta(alpha, beta)) /
         horizon;
}

namespace detail {

inline void check_window_index(std::int64_t i, const DzTimeline& tl) {
  if (i < 1 || i > tl.dz_count)
    throw std::out_of_range("window index " + std::to_string(i) +
                            " outside 1.." + std::to_string(tl.dz_count));
}

// Closed-form mass of the arrival window via the regularized incomplete beta.
inline double window_mass_closed_form(std::int64_t i, double a, double b,
                                      const DzTimeline& tl) {
  const double T = tl.horizon();
  return regularized_incomplete_beta(a, b, tl.window_hi(i) / T) -
         regularized_incomplete_beta(a, b, tl.window_lo(i) / T);
}

// int t p(t) dt over the window, closed form: t*p_{a,b}(t) = T*a/(a+b) * p_{a+1,b}(t).
inline double window_time_closed_form(std::int64_t i, double a, double b,
                                      const DzTimeline& tl) {
  const double T = tl.horizon();
  return T * a / (a + b) *
         (regularized_incomplete_beta(a + 1.0, b, tl.window_hi(i) / T) -
          regularized_incomplete_beta(a + 1.0, b, tl.window_lo(i) / T));
}

}  // namespace detail

/// Probability mass of the arrival window feeding zone i, by adaptive
/// quadrature of the density (absolute tolerance 1e-10). Falls back to the
/// incomplete-beta closed form if the subdivision cap is hit.
inline double window_mass(std::int64_t i, double alpha, double beta,
                          const DzTimeline& tl) {
  detail::check_window_index(i, tl);
  const double T = tl.horizon();
  auto q = integrate(
      [&](double t) { return beta_pdf(t, alpha, beta, T); },
      tl.window_lo(i), tl.window_hi(i));
  if (!q.converged) return detail::window_mass_closed_form(i, alpha, beta, tl);
  return q.value;
}

/// Unnormalized absolute-time integral of t*p(t) over the window feeding
/// zone i (the literal per-zone arrival-time term of the delay model).
inline double window_time(std::int64_t i, double alpha, double beta,
                          const DzTimeline& tl) {
  detail::check_window_index(i, tl);
  const double T = tl.horizon();
  auto q = integrate(
      [&](double t) { return t * beta_pdf(t, alpha, beta, T); },
      tl.window_lo(i), tl.window_hi(i));
  if (!q.converged) return detail::window_time_closed_form(i, alpha, beta, tl);
  return q.value;
}

/// Cached per-zone traffic profile.
struct ArrivalProfile {
  double alpha = 0.0;
  double beta = 0.0;
  double horizon = 0.0;
  std::vector<double> mass;  // mass[i-1] = window_mass(i)
  std::vector<double> time;  // time[i-1] = window_time(i)
};

inline ArrivalProfile make_arrival_profile(const ScenarioConfig& cfg) {
  const DzTimeline tl = timeline(cfg);
  ArrivalProfile p;
  p.alpha = cfg.alpha;
  p.beta = cfg.beta;
  p.horizon = tl.horizon();
  p.mass.reserve(static_cast<std::size_t>(tl.dz_count));
  p.time.reserve(static_cast<std::size_t>(tl.dz_count));
  for (std::int64_t i = 1; i <= tl.dz_count; ++i) {
    p.mass.push_back(window_mass(i, cfg.alpha, cfg.beta, tl));
    p.time.push_back(window_time(i, cfg.alpha, cfg.beta, tl));
  }
  return p;
}

/// Expected fluid count of first-time transmitters in zone i: M * mass(i).
inline double new_arrivals(std::int64_t i, const ScenarioConfig& cfg,
                           const ArrivalProfile& profile) {
  if (i < 1 || i > static_cast<std::int64_t>(profile.mass.size()))
    throw std::out_of_range("new_arrivals: window index out of range");
  return static_cast<double>(cfg.total_ues) *
         profile.mass[static_cast<std::size_t>(i - 1)];
}

/// Across-zone average of the per-zone arrival-time terms (the literal
/// 1/K sum that feeds the per-attempt delay).
inline double mean_arrival_time(const ArrivalProfile& profile) {
  double sum = 0.0;
  for (double v : profile.time) sum += v;
  return sum / static_cast<double>(profile.time.size());
}

/// Conditional mean wait from arrival to the start of the contended zone,
/// for UEs arriving in window i: dz_start(i) - E[t | t in window i]. This is
/// the physically meaningful per-UE waiting time the literal model lacks;
/// returns NaN when the window carries no mass.
inline double conditional_window_wait(std::int64_t i,
                                      const ArrivalProfile& profile,
                                      const DzTimeline& tl) {
  detail::check_window_index(i, tl);
  const double mass = profile.mass[static_cast<std::size_t>(i - 1)];
  if (mass <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  const double mean_t = profile.time[static_cast<std::size_t>(i - 1)] / mass;
  return tl.dz_start(i) - mean_t;
}

}  // namespace d2d
