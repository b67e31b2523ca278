#include "lorageo/optimizer.hpp"

#include <cmath>
#include <limits>

#include "lorageo/geometry.hpp"
#include "parallel.hpp"

namespace lorageo {

double effective_density(const Scenario& s, int n, double z) {
  if (!(z > 0.0 && z < 1.0)) throw DomainError("reliability z must be in (0, 1)");
  const SfRing& ring = s.rings[n];
  const double count = expected_count(s.cfg, s.cell_radius(), ring.inner_km, ring.outer_km);
  const MetaDistribution md = meta_distribution(s, Scope::of_ring(n));
  return md.coverage_at(z) * count / ring.area_km2();
}

RingValues effective_densities(const Scenario& s, double z) {
  RingValues values{};
  for (int n = 1; n <= kNumRings; ++n) values[static_cast<std::size_t>(n - 1)] = effective_density(s, n, z);
  return values;
}

double log_objective(const RingValues& densities) {
  double total = 0.0;
  for (double o : densities) {
    if (!(o > 0.0)) return -std::numeric_limits<double>::infinity();
    total += std::log(o);
  }
  return total;
}

double product_objective(const RingValues& densities) {
  double product = 1.0;
  for (double o : densities) product *= o;
  return product;
}

double objective(const Scenario& s, double z) { return log_objective(effective_densities(s, z)); }

double GridSpec::kappa_at(int i) const {
  if (kappa_points <= 1) return kappa_min;
  return kappa_min + (kappa_max - kappa_min) * i / (kappa_points - 1);
}

double GridSpec::lambda0_at(int j) const { return lambda0_max * (j + 1) / lambda0_points; }

double GridSpec::kappa_step() const {
  return kappa_points <= 1 ? 0.0 : (kappa_max - kappa_min) / (kappa_points - 1);
}

double GridSpec::lambda0_step() const { return lambda0_max / lambda0_points; }

GridSpec default_grid(const Scenario& s, int resolution, double lambda0_max) {
  const double r = s.cell_radius();
  GridSpec grid;
  grid.kappa_min = -2.0 / (r * r);
  grid.kappa_max = 2.0 / (r * r);
  grid.kappa_points = resolution;
  grid.lambda0_max = lambda0_max;
  grid.lambda0_points = resolution;
  return grid;
}

SweepResult grid_search(const Scenario& base, const GridSpec& grid, double z, unsigned threads) {
  if (grid.kappa_points < 1 || grid.lambda0_points < 1) throw DomainError("grid needs at least one point per axis");
  SweepResult result;
  result.grid = grid;
  result.z = z;
  const auto nl = static_cast<std::size_t>(grid.lambda0_points);
  result.points.resize(static_cast<std::size_t>(grid.kappa_points) * nl);

  detail::parallel_for(result.points.size(), threads, [&](std::size_t index) {
    SweepPoint& point = result.points[index];
    point.kappa = grid.kappa_at(static_cast<int>(index / nl));
    point.lambda0 = grid.lambda0_at(static_cast<int>(index % nl));
    const Scenario s = with_deployment(base, point.kappa, point.lambda0);
    point.densities = effective_densities(s, z);
    point.objective = log_objective(point.densities);
    point.feasible = std::isfinite(point.objective);
  });

  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    if (result.points[i].objective > best) {
      best = result.points[i].objective;
      result.argmax = i;
    }
  }
  return result;
}

std::size_t product_argmax(const SweepResult& result) {
  std::size_t argmax = 0;
  double best = -1.0;
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    if (!result.points[i].feasible) continue;
    const double value = product_objective(result.points[i].densities);
    if (value > best) {
      best = value;
      argmax = i;
    }
  }
  return argmax;
}

}  // namespace lorageo
