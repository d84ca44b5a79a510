#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "d2d/config.hpp"
#include "d2d/ledger.hpp"
#include "d2d/traffic.hpp"

namespace d2d {

/// Expected number of singleton occupants when a fluid mass m of balls is
/// thrown into r bins: m * (1 - 1/r)^(m-1). The exponent is clamped at zero
/// so fractional masses below one succeed in full, keeping ms <= m.
inline double expected_success(double m, double r) {
  if (m < 0.0) throw std::domain_error("expected_success: negative mass");
  if (!(r >= 1.0)) throw std::domain_error("expected_success: need r >= 1");
  if (m == 0.0) return 0.0;
  return m * std::pow(1.0 - 1.0 / r, std::max(m - 1.0, 0.0));
}

/// Success weight of an l-th attempt under the exponential weighting
/// P_S = 1 - e^{-l}.
inline double attempt_success_weight(std::int64_t l) {
  return 1.0 - std::exp(-static_cast<double>(l));
}

/// Aggregated fluid-run results. per_dz_success and cumulative_success follow
/// the configured eq15 weighting; the raw and weighted series are always kept.
struct AnalyticReport {
  TransmissionLedger ledger{0, 0};
  std::vector<double> per_dz_total;         // M_i
  std::vector<double> per_dz_success_raw;   // sum_l ms(i, l)
  std::vector<double> per_dz_success_eq15;  // sum_l ms(i, l) * (1 - e^{-l})
  std::vector<double> per_dz_success;       // raw or eq15 per config
  double cumulative_raw = 0.0;
  double cumulative_eq15 = 0.0;
  double cumulative_success = 0.0;
  double discovery_probability = 0.0;
  // Mass sinks: together with successes these balance the arrival total.
  double dropped_mass = 0.0;     // failed on the final permitted attempt
  double pending_mass = 0.0;     // backoff target beyond the last zone
  double suppressed_mass = 0.0;  // backoff target inside the no-retransmission head
};

/// Advances the recursion by one zone: fills row i of the ledger from rows
/// 1..i-1 (failed mass spread uniformly over the next backoff_window zones,
/// no retransmission groups while i <= backoff_window) and splits each
/// attempt group into successes and failures.
inline void step_dz(std::int64_t i, TransmissionLedger& ledger,
                    const ScenarioConfig& cfg, const ArrivalProfile& profile) {
  const std::int64_t W = cfg.backoff_window;
  const std::int64_t lmax = cfg.max_transmissions;
  const double r = static_cast<double>(cfg.resources);

  ledger.m(i, 1) = new_arrivals(i, cfg, profile);
  if (i > W) {
    const double eta = 1.0 / static_cast<double>(W);
    for (std::int64_t l = 2; l <= lmax; ++l) {
      double redistributed = 0.0;
      for (std::int64_t w = 1; w <= W; ++w)
        if (i - w >= 1) redistributed += ledger.mf(i - w, l - 1);
      ledger.m(i, l) = eta * redistributed;
    }
  }

  const double dz_total = ledger.dz_total(i);
  for (std::int64_t l = 1; l <= lmax; ++l) {
    const double group = ledger.m(i, l);
    if (group <= 0.0) continue;
    const double exponent_mass =
        cfg.success_mode == SuccessMode::literal ? group : dz_total;
    ledger.ms(i, l) =
        group * std::pow(1.0 - 1.0 / r, std::max(exponent_mass - 1.0, 0.0));
    ledger.mf(i, l) = group - ledger.ms(i, l);
  }
  ledger.complete_row(i);
}

inline AnalyticReport run_analytic(const ScenarioConfig& cfg,
                                   const ArrivalProfile& profile) {
  validate(cfg);
  const std::int64_t K = cfg.dz_count;
  const std::int64_t W = cfg.backoff_window;
  const std::int64_t lmax = cfg.max_transmissions;

  AnalyticReport rep;
  rep.ledger = TransmissionLedger(K, lmax);
  rep.per_dz_total.resize(static_cast<std::size_t>(K));
  rep.per_dz_success_raw.resize(static_cast<std::size_t>(K));
  rep.per_dz_success_eq15.resize(static_cast<std::size_t>(K));
  rep.per_dz_success.resize(static_cast<std::size_t>(K));

  for (std::int64_t i = 1; i <= K; ++i) {
    step_dz(i, rep.ledger, cfg, profile);
    const auto idx = static_cast<std::size_t>(i - 1);
    rep.per_dz_total[idx] = rep.ledger.dz_total(i);
    double raw = 0.0, weighted = 0.0;
    for (std::int64_t l = 1; l <= lmax; ++l) {
      raw += rep.ledger.ms(i, l);
      weighted += rep.ledger.ms(i, l) * attempt_success_weight(l);
    }
    rep.per_dz_success_raw[idx] = raw;
    rep.per_dz_success_eq15[idx] = weighted;
    rep.per_dz_success[idx] = cfg.eq15_weighting ? weighted : raw;
    rep.cumulative_raw += raw;
    rep.cumulative_eq15 += weighted;

    // Sink accounting for the global mass balance.
    for (std::int64_t l = 1; l <= lmax; ++l) {
      const double failed = rep.ledger.mf(i, l);
      if (failed <= 0.0) continue;
      if (l == lmax) {
        rep.dropped_mass += failed;
        continue;
      }
      const double share = failed / static_cast<double>(W);
      for (std::int64_t w = 1; w <= W; ++w) {
        const std::int64_t target = i + w;
        if (target > K)
          rep.pending_mass += share;
        else if (target <= W)
          rep.suppressed_mass += share;
      }
    }
  }

  rep.cumulative_success = cfg.eq15_weighting ? rep.cumulative_eq15 : rep.cumulative_raw;
  rep.discovery_probability =
      cfg.total_ues > 0
          ? rep.cumulative_success / static_cast<double>(cfg.total_ues)
          : 0.0;
  return rep;
}

inline AnalyticReport run_analytic(const ScenarioConfig& cfg) {
  validate(cfg);
  return run_analytic(cfg, make_arrival_profile(cfg));
}

}  // namespace d2d
