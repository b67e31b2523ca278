#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "lorageo/analytics.hpp"

namespace lorageo {

using RingValues = std::array<double, kNumRings>;

/// O_n = C_n(z) N_n / |V_n|: EDs per km^2 in ring n reaching reliability z.
double effective_density(const Scenario& s, int n, double z);
RingValues effective_densities(const Scenario& s, double z);

/// sum_n ln O_n, -inf if any O_n is zero.
double log_objective(const RingValues& densities);
/// prod_n O_n.
double product_objective(const RingValues& densities);
double objective(const Scenario& s, double z);

struct GridSpec {
  double kappa_min = 0.0;
  double kappa_max = 0.0;
  int kappa_points = 41;
  /// lambda0_j = lambda0_max * j / lambda0_points, j = 1..lambda0_points.
  double lambda0_max = 3.0;
  int lambda0_points = 41;

  double kappa_at(int i) const;
  double lambda0_at(int j) const;
  double kappa_step() const;
  double lambda0_step() const;
};

/// kappa over [-2/R^2, 2/R^2] and lambda0 over (0, lambda0_max].
GridSpec default_grid(const Scenario& s, int resolution = 41, double lambda0_max = 3.0);

struct SweepPoint {
  double kappa = 0.0;
  double lambda0 = 0.0;
  double objective = 0.0;  // log-sum form
  RingValues densities{};
  bool feasible = false;   // all O_n > 0
};

struct SweepResult {
  GridSpec grid;
  double z = 0.7;
  std::vector<SweepPoint> points;  // kappa-major: index = i * lambda0_points + j
  std::size_t argmax = 0;

  const SweepPoint& best() const { return points.at(argmax); }
};

/// Exhaustive evaluation of the log-sum objective on the grid.
SweepResult grid_search(const Scenario& base, const GridSpec& grid, double z, unsigned threads = 0);

/// Argmax of the product form over feasible points.
std::size_t product_argmax(const SweepResult& result);

}  // namespace lorageo
