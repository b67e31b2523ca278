#pragma once

#include <array>
#include <cstdint>

#include "lorageo/common.hpp"
#include "lorageo/model.hpp"
#include "lorageo/spread.hpp"

namespace lorageo {

/// Support [nu1, nu2] of the uniform inter-transmission time for a stream
/// with air-time tau; nu1_hat = max(nu1, tau).
struct IntervalBounds {
  double nu1_ms = 0.0;
  double nu2_ms = 0.0;
  double tau_ms = 0.0;
  double nu1_hat_ms = 0.0;

  double mean_ms() const { return 0.5 * (nu1_ms + nu2_ms); }
  double variance_ms2() const {
    const double half = 0.5 * (nu2_ms - nu1_ms);
    return half * half / 3.0;
  }
};

/// Thrown when v(tau) >= u tau, which would make nu1 non-positive.
class InvalidSpreadError : public ConfigError {
 public:
  InvalidSpreadError(const std::string& what, int sf) : ConfigError(what), sf_(sf) {}
  int sf() const noexcept { return sf_; }

 private:
  int sf_;
};

/// Thrown when the air-time is at least the longest possible gap.
class DegenerateStreamError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// `sf` is only used to label errors (0 = unknown).
IntervalBounds interval_bounds(double tau_ms, double u, const SpreadFunction& spread, int sf = 0);

/// Closed-form collision probability of a tagged transmission of length tau
/// against one asynchronous co-SF stream. Deterministic intervals
/// (nu1 == nu2) are evaluated through their exact limit.
double collision_probability(const IntervalBounds& bounds);

/// Leading-order approximation of the collision probability for the given
/// spread family (constant for linear spread).
double collision_probability_regime(double tau_ms, double u, const SpreadFunction& spread);

/// E[tau / (nu + tau)], the mean duty cycle of the stream.
double duty_cycle(const IntervalBounds& bounds);

/// Collision probability of each ring's SF, p_n for n = 1..6 (index n-1).
using CollisionProfile = std::array<double, kNumRings>;
CollisionProfile collision_profile(const NetworkConfig& cfg, const RingTable& rings);

enum class StreamSampling {
  /// t̂ falls in a cycle with a freshly drawn gap; the stays-off test uses
  /// another fresh gap with a uniform offset. Converges to the closed form.
  per_interval,
  /// t̂ uniform over the total simulated time (pure time average).
  time_average,
};

struct StreamSimOptions {
  std::int64_t samples = 1000000;
  /// Length of the simulated interferer timeline (time_average only).
  std::int64_t cycles = 200000;
  StreamSampling sampling = StreamSampling::per_interval;
};

struct Estimate {
  double mean = 0.0;
  double stderr_ = 0.0;
  std::int64_t samples = 0;
};

/// Monte-Carlo collision rate: simulates an alternating (tau, nu_k) timeline
/// for the interferer and tests whether [t̂, t̂ + tagged_tau] overlaps one of
/// its transmissions.
Estimate simulate_collision_rate(double tagged_tau_ms, const IntervalBounds& interferer,
                                 std::uint64_t seed, const StreamSimOptions& options = {});

}  // namespace lorageo
