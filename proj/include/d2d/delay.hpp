#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "d2d/analytic.hpp"
#include "d2d/config.hpp"
#include "d2d/ledger.hpp"
#include "d2d/traffic.hpp"

namespace d2d {

/// Mean backoff wait: the uniform average over window draws 1..W of one
/// discovery period each, (W+1)/2 * (T_d + T_DZ).
inline double mean_backoff_time(std::int64_t backoff_window, double dz_interval,
                                double dz_length) {
  double sum = 0.0;
  for (std::int64_t w = 1; w <= backoff_window; ++w)
    sum += static_cast<double>(w) * (dz_interval + dz_length);
  return sum / static_cast<double>(backoff_window);
}

/// Access delay of a UE discovered on its l-th transmission:
/// mean_arrival + (l-1) * mean_backoff + processing_delay. Constant across
/// zones because the across-zone average arrival term is used.
inline double attempt_delay(std::int64_t l, const ScenarioConfig& cfg,
                            double mean_arrival) {
  return mean_arrival +
         static_cast<double>(l - 1) *
             mean_backoff_time(cfg.backoff_window, cfg.dz_interval, cfg.dz_length) +
         cfg.processing_delay;
}

struct DelayReport {
  double mean_backoff = 0.0;                  // per-retransmission wait
  double mean_arrival = 0.0;                  // across-zone arrival term
  std::vector<double> per_attempt_delay;      // [l-1] = delay of an l-th-attempt success
  std::optional<double> average_delay;        // success-weighted mean; empty if none discovered
  std::optional<double> tradeoff;             // average_delay / cumulative successes
  std::optional<double> mean_corrected_wait;  // success-mass-weighted conditional wait
};

/// Success-weighted average delay over the completed ledger plus the
/// delay/throughput tradeoff. The average uses the raw success masses; the
/// tradeoff denominator follows the configured eq15 weighting so that it
/// matches the reported cumulative discovered count.
inline DelayReport average_delay(const TransmissionLedger& ledger,
                                 const ScenarioConfig& cfg,
                                 const ArrivalProfile& profile) {
  DelayReport rep;
  rep.mean_backoff =
      mean_backoff_time(cfg.backoff_window, cfg.dz_interval, cfg.dz_length);
  rep.mean_arrival = mean_arrival_time(profile);
  rep.per_attempt_delay.reserve(static_cast<std::size_t>(cfg.max_transmissions));
  for (std::int64_t l = 1; l <= cfg.max_transmissions; ++l)
    rep.per_attempt_delay.push_back(attempt_delay(l, cfg, rep.mean_arrival));

  double weighted_sum = 0.0, raw_total = 0.0, flag_total = 0.0;
  for (std::int64_t i = 1; i <= ledger.dz_count(); ++i) {
    for (std::int64_t l = 1; l <= ledger.max_transmissions(); ++l) {
      const double s = ledger.ms(i, l);
      if (s <= 0.0) continue;
      weighted_sum += s * rep.per_attempt_delay[static_cast<std::size_t>(l - 1)];
      raw_total += s;
      flag_total += cfg.eq15_weighting ? s * attempt_success_weight(l) : s;
    }
  }
  if (raw_total > 0.0) {
    rep.average_delay = weighted_sum / raw_total;
    if (flag_total > 0.0) rep.tradeoff = *rep.average_delay / flag_total;
  }

  // Corrected per-UE wait (conditional within-window mean), success-weighted
  // over first attempts; reported alongside the literal model.
  const DzTimeline tl{cfg.dz_interval, cfg.dz_length, cfg.dz_count};
  double wait_sum = 0.0, wait_mass = 0.0;
  for (std::int64_t i = 1; i <= ledger.dz_count(); ++i) {
    const double s = ledger.ms(i, 1);
    if (s <= 0.0) continue;
    const double wait = conditional_window_wait(i, profile, tl);
    if (std::isnan(wait)) continue;
    wait_sum += s * wait;
    wait_mass += s;
  }
  if (wait_mass > 0.0) rep.mean_corrected_wait = wait_sum / wait_mass;
  return rep;
}

}  // namespace d2d
