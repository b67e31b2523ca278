#pragma once

#include <cstdint>
#include <vector>

#include "lorageo/analytics.hpp"

namespace lorageo {

struct LinkSimOptions {
  std::int64_t realizations = 10000;
  int fading_draws = 1;
  /// Forces interferer activation probability to zero.
  bool silence_interferers = false;
  /// Radial grid; empty means five interior points per ring.
  std::vector<double> grid_km;
  /// 0 = hardware concurrency. Results do not depend on this value.
  unsigned threads = 0;
};

struct LinkSimPoint {
  double d_km = 0.0;
  int ring = 1;
  double q_hat = 0.0, q_se = 0.0;
  double w_hat = 0.0, w_se = 0.0;
  double h_hat = 0.0, h_se = 0.0;
};

/// Five points per ring at fractions 1/6 .. 5/6 of each annulus width.
std::vector<double> default_radial_grid(const RingTable& rings, int per_ring = 5);

/// Empirical Q, W and H on a radial grid. For each realization a tagged ED is
/// placed at d, co-SF interferers are drawn from the PPP restricted to its
/// ring, each is activated with the collision probability, and unit-mean
/// exponential gains decide the SNR and SIR tests (the tagged gain is shared
/// by both tests).
std::vector<LinkSimPoint> simulate_link_success(const Scenario& s, const LinkSimOptions& options,
                                                std::uint64_t seed);

struct MetaSimOptions {
  std::int64_t realizations = 10000;
  Scope scope{};
  /// Reliability grid for the empirical curve; empty means 0.01..0.99.
  std::vector<double> z_grid;
  unsigned threads = 0;
};

struct MetaSimResult {
  double m1_hat = 0.0, m1_se = 0.0;
  double m2_hat = 0.0, m2_se = 0.0;
  std::vector<double> z;
  std::vector<double> empirical;  // empirical C(z) = E[Q(d) 1{W_Phi(d) >= z}]
  std::vector<double> beta;       // fitted 1 - G(z) from the analytic moments
  double sup_distance = 0.0;      // max |empirical - beta| over z
  MetaDistribution analytic{};
};

/// Empirical meta distribution. Per realization the tagged ED is drawn from
/// the deployment density over the scope, the thinned co-SF interferers are
/// sampled, and W_Phi = prod_k 1 / (1 + w (d/d_k)^eta) is computed exactly
/// (fading is averaged in closed form). Each realization is weighted by Q(d).
MetaSimResult simulate_meta(const Scenario& s, const MetaSimOptions& options, std::uint64_t seed);

/// W_Phi for a tagged ED at d given active interferer radii.
double conditional_sir_success(const Scenario& s, double d_km, const std::vector<double>& interferers_km);

}  // namespace lorageo
