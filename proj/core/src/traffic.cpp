#include "lorageo/traffic.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "lorageo/numerics.hpp"

namespace lorageo {
namespace {

std::string sf_label(int sf) { return sf > 0 ? "SF" + std::to_string(sf) : "the given air-time"; }

// Relative interval width below which the stream is treated as periodic.
constexpr double kDeterministicWidth = 1e-12;

}  // namespace

IntervalBounds interval_bounds(double tau_ms, double u, const SpreadFunction& spread, int sf) {
  if (!(tau_ms > 0.0)) throw DomainError("air-time must be positive");
  if (!(u >= 99.0)) throw DomainError("u must be >= 99");
  const double mean = u * tau_ms;
  const double v = spread(tau_ms);
  if (!(v >= 0.0) || !(v < mean)) {
    throw InvalidSpreadError("spread " + to_string(spread) + " gives v(tau) = " + std::to_string(v) +
                                 " ms >= u*tau = " + std::to_string(mean) + " ms for " + sf_label(sf),
                             sf);
  }
  IntervalBounds bounds;
  bounds.tau_ms = tau_ms;
  bounds.nu1_ms = mean - v;
  bounds.nu2_ms = mean + v;
  bounds.nu1_hat_ms = std::max(bounds.nu1_ms, tau_ms);
  return bounds;
}

double collision_probability(const IntervalBounds& bounds) {
  const double tau = bounds.tau_ms;
  const double nu1 = bounds.nu1_ms;
  const double nu2 = bounds.nu2_ms;
  const double width = nu2 - nu1;
  if (width <= kDeterministicWidth * nu2) {
    const double nu = 0.5 * (nu1 + nu2);
    if (!(nu > tau)) throw DegenerateStreamError("air-time is not shorter than the inter-transmission time");
    return 1.0 - (nu / (tau + nu)) * (1.0 - tau / nu);
  }
  const double nu1_hat = bounds.nu1_hat_ms;
  if (!(nu2 > nu1_hat)) {
    throw DegenerateStreamError("air-time exceeds the longest inter-transmission time");
  }
  const double off_fraction = 1.0 - tau / width * std::log1p(width / (nu1 + tau));
  const double stays_off = (nu2 - nu1_hat - tau * std::log1p((nu2 - nu1_hat) / nu1_hat)) / width;
  return std::clamp(1.0 - off_fraction * stays_off, 0.0, 1.0);
}

double collision_probability_regime(double tau_ms, double u, const SpreadFunction& spread) {
  if (!(tau_ms > 0.0)) throw DomainError("air-time must be positive");
  const double c = spread.c;
  switch (spread.kind) {
    case SpreadKind::linear:
      if (c == 0.0) return 2.0 / u;
      return std::log((u + c) / (u - c)) / c;
    case SpreadKind::log_scaled: {
      const double cl = c * std::log(tau_ms);
      if (cl == 0.0) return 2.0 / u;
      return std::log((u + cl) / (u - cl)) / cl;
    }
    case SpreadKind::inverse_log_scaled: {
      const double lt = std::log(tau_ms);
      if (c == 0.0) return 2.0 / u;
      return lt / c * std::log((u * lt + c) / (u * lt - c));
    }
    case SpreadKind::quadratic:
      return 2.0 / u + 2.0 * c * c * tau_ms * tau_ms / (3.0 * u * u * u);
    case SpreadKind::sqrt:
      return 2.0 / u + 2.0 * c * c / (3.0 * tau_ms * u * u * u);
  }
  throw DomainError("unknown spread kind");
}

double duty_cycle(const IntervalBounds& bounds) {
  const double tau = bounds.tau_ms;
  const double width = bounds.nu2_ms - bounds.nu1_ms;
  if (width <= kDeterministicWidth * bounds.nu2_ms) {
    return tau / (0.5 * (bounds.nu1_ms + bounds.nu2_ms) + tau);
  }
  return tau / width * std::log1p(width / (bounds.nu1_ms + tau));
}

CollisionProfile collision_profile(const NetworkConfig& cfg, const RingTable& rings) {
  CollisionProfile profile{};
  for (const SfRing& ring : rings) {
    const auto bounds = interval_bounds(ring.airtime_ms, cfg.u, cfg.spread, ring.sf);
    profile[static_cast<std::size_t>(ring.n - 1)] = collision_probability(bounds);
  }
  return profile;
}

Estimate simulate_collision_rate(double tagged_tau_ms, const IntervalBounds& interferer, std::uint64_t seed,
                                 const StreamSimOptions& options) {
  if (options.samples <= 0) throw DomainError("simulation needs samples > 0");
  Rng rng(seed);
  const double tau_k = interferer.tau_ms;
  auto draw_gap = [&] { return rng.uniform(interferer.nu1_ms, interferer.nu2_ms); };

  std::int64_t hits = 0;
  if (options.sampling == StreamSampling::per_interval) {
    // Each sample draws its own gaps, so samples are i.i.d. Bernoulli.
    for (std::int64_t s = 0; s < options.samples; ++s) {
      const double offset = rng.uniform(0.0, tau_k + draw_gap());
      bool collide = offset < tau_k;
      if (!collide) {
        const double gap = draw_gap();
        collide = !(rng.uniform(0.0, gap) + tagged_tau_ms < gap);
      }
      hits += collide ? 1 : 0;
    }
  } else {
    if (options.cycles <= 1) throw DomainError("time-average sampling needs cycles > 1");
    // Interferer timeline: cycle k starts at starts[k] with a transmission of
    // length tau followed by a silent gap gaps[k].
    const auto cycles = static_cast<std::size_t>(options.cycles);
    std::vector<double> gaps(cycles);
    std::vector<double> starts(cycles + 1);
    starts[0] = 0.0;
    for (std::size_t k = 0; k < cycles; ++k) {
      gaps[k] = draw_gap();
      starts[k + 1] = starts[k] + tau_k + gaps[k];
    }
    for (std::int64_t s = 0; s < options.samples; ++s) {
      // Stop short of the last cycle so a following transmission exists.
      const double t_hat = rng.uniform(0.0, starts[cycles - 1]);
      const auto it = std::upper_bound(starts.begin(), starts.end(), t_hat);
      const auto j = static_cast<std::size_t>(std::distance(starts.begin(), it) - 1);
      const double offset = t_hat - starts[j];
      const bool collide = offset < tau_k || !((offset - tau_k) + tagged_tau_ms < gaps[j]);
      hits += collide ? 1 : 0;
    }
  }
  Estimate est;
  est.samples = options.samples;
  est.mean = static_cast<double>(hits) / static_cast<double>(options.samples);
  est.stderr_ = std::sqrt(est.mean * (1.0 - est.mean) / static_cast<double>(options.samples));
  return est;
}

}  // namespace lorageo
