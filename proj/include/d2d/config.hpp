#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace d2d {

/// How the per-attempt success expectation couples attempt groups sharing a DZ.
/// `literal` thins each attempt group against itself only; `coupled` uses the
/// DZ-wide contender total in the exponent.
enum class SuccessMode { literal, coupled };

inline const char* to_string(SuccessMode m) {
  return m == SuccessMode::literal ? "literal" : "coupled";
}

/// Full scenario parameterisation. Defaults are the Table-I-style baseline:
/// 450 UEs contending on 22 resources across 20 zones, beta(3,4) arrivals.
struct ScenarioConfig {
  std::int64_t total_ues = 450;        // M
  std::int64_t resources = 22;         // R, contention resources per DZ
  double dz_length = 0.030;            // T_DZ seconds
  double dz_interval = 10.0;           // T_d seconds
  std::int64_t dz_count = 20;          // K
  std::int64_t max_transmissions = 3;  // L_max
  std::int64_t backoff_window = 3;     // W
  double processing_delay = 0.005;     // T_h seconds
  double alpha = 3.0;                  // beta-distribution shape
  double beta = 4.0;                   // beta-distribution shape
  SuccessMode success_mode = SuccessMode::literal;
  bool eq15_weighting = false;         // weight successes by 1 - e^{-l}
};

/// Thrown when a ScenarioConfig violates an invariant or an input file cannot
/// be parsed. The message names the offending field (and line, for files).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Validates every field invariant; returns the config unchanged on success.
inline const ScenarioConfig& validate(const ScenarioConfig& c) {
  auto fail = [](const std::string& msg) { throw ConfigError(msg); };
  if (c.total_ues < 0) fail("total_ues must be >= 0");
  if (c.resources < 1) fail("resources must be >= 1");
  if (!(c.dz_length > 0.0)) fail("dz_length must be > 0");
  if (!(c.dz_interval > 0.0)) fail("dz_interval must be > 0");
  if (c.dz_count < 1) fail("dz_count must be >= 1");
  if (c.max_transmissions < 1) fail("max_transmissions must be >= 1");
  if (c.backoff_window < 1) fail("backoff_window must be >= 1");
  if (c.backoff_window > c.dz_count)
    fail("backoff_window (" + std::to_string(c.backoff_window) +
         ") must not exceed dz_count (" + std::to_string(c.dz_count) + ")");
  if (!(c.processing_delay > 0.0)) fail("processing_delay must be > 0");
  if (!(c.alpha > 0.0)) fail("alpha must be > 0");
  if (!(c.beta > 0.0)) fail("beta must be > 0");
  return c;
}

/// Time geometry of the discovery zones. Zone i occupies
/// [i*T_d + (i-1)*T_DZ, i*(T_d + T_DZ)]; the arrival window feeding zone i is
/// [dz_start(i-1), dz_start(i)] (with 0 as the left edge for i = 1), so the
/// dz_count windows tile [0, horizon] exactly.
struct DzTimeline {
  double dz_interval = 0.0;
  double dz_length = 0.0;
  std::int64_t dz_count = 0;

  double dz_start(std::int64_t i) const {
    return static_cast<double>(i) * dz_interval +
           static_cast<double>(i - 1) * dz_length;
  }
  double dz_end(std::int64_t i) const { return dz_start(i) + dz_length; }
  double horizon() const {
    return static_cast<double>(dz_count) * dz_interval +
           static_cast<double>(dz_count - 1) * dz_length;
  }
  /// Arrival-window bounds for zone i (1-based).
  double window_lo(std::int64_t i) const { return i == 1 ? 0.0 : dz_start(i - 1); }
  double window_hi(std::int64_t i) const { return i == 1 ? dz_interval : dz_start(i); }
};

inline DzTimeline timeline(const ScenarioConfig& c) {
  return DzTimeline{c.dz_interval, c.dz_length, c.dz_count};
}

}  // namespace d2d
