#include "lorageo/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "lorageo/numerics.hpp"

namespace lorageo {
namespace {

constexpr double kRadiusSlack = 1e-12;

// Antiderivative of x * lambda(x) / lambda0.
double radial_mass(double x, double kappa, double r) {
  const double x2 = x * x;
  return 0.5 * x2 + kappa * (0.25 * x2 * x2 - 0.25 * r * r * x2);
}

void check_range(double a, double b, double r) {
  if (!(a >= 0.0) || !(b > a) || b > r * (1.0 + kRadiusSlack)) {
    throw DomainError("annulus (" + std::to_string(a) + ", " + std::to_string(b) + "] is not inside (0, R]");
  }
}

}  // namespace

double density(double d_km, const NetworkConfig& cfg, double cell_radius_km) {
  if (!(d_km >= 0.0) || d_km > cell_radius_km * (1.0 + kRadiusSlack)) {
    throw DomainError("density: distance outside [0, R]");
  }
  return cfg.lambda0 * (1.0 + cfg.kappa * (d_km * d_km - 0.5 * cell_radius_km * cell_radius_km));
}

double expected_count(const NetworkConfig& cfg, double cell_radius_km, double a_km, double b_km) {
  check_range(a_km, b_km, cell_radius_km);
  return 2.0 * kPi * cfg.lambda0 *
         (radial_mass(b_km, cfg.kappa, cell_radius_km) - radial_mass(a_km, cfg.kappa, cell_radius_km));
}

double expected_total(const NetworkConfig& cfg, double cell_radius_km) {
  return cfg.lambda0 * kPi * cell_radius_km * cell_radius_km;
}

double radial_cdf(double r_km, double kappa, double cell_radius_km) {
  const double r = std::clamp(r_km, 0.0, cell_radius_km);
  return radial_mass(r, kappa, cell_radius_km) / (0.5 * cell_radius_km * cell_radius_km);
}

double radial_quantile(double p, double kappa, double cell_radius_km, double a_km, double b_km) {
  check_range(a_km, b_km, cell_radius_km);
  const double lo = radial_mass(a_km, kappa, cell_radius_km);
  const double hi = radial_mass(b_km, kappa, cell_radius_km);
  const double target = lo + std::clamp(p, 0.0, 1.0) * (hi - lo);
  if (target <= 0.0) return a_km;
  // kappa/4 s^2 + (1/2 - kappa R^2/4) s - target = 0 in s = r^2; the root
  // in [0, R^2] written without cancellation.
  const double qa = 0.25 * kappa;
  const double qb = 0.5 - 0.25 * kappa * cell_radius_km * cell_radius_km;
  const double disc = std::max(0.0, qb * qb + 4.0 * qa * target);
  const double s = 2.0 * target / (qb + std::sqrt(disc));
  return std::clamp(std::sqrt(s), a_km, b_km);
}

std::vector<double> sample_annulus_radii(const NetworkConfig& cfg, double cell_radius_km, double a_km,
                                         double b_km, double scale, Rng& rng) {
  const double mean = scale * expected_count(cfg, cell_radius_km, a_km, b_km);
  const auto count = rng.poisson(mean);
  std::vector<double> radii;
  radii.reserve(static_cast<std::size_t>(count));
  while (static_cast<std::int64_t>(radii.size()) < count) {
    const double r = radial_quantile(rng.uniform(), cfg.kappa, cell_radius_km, a_km, b_km);
    if (r > 0.0) radii.push_back(r);
  }
  return radii;
}

Deployment sample(const NetworkConfig& cfg, const RingTable& rings, std::uint64_t seed) {
  Rng rng(seed);
  const double r_cell = rings.cell_radius();
  Deployment deployment;
  deployment.seed = seed;
  const auto radii = sample_annulus_radii(cfg, r_cell, 0.0, r_cell, 1.0, rng);
  deployment.devices.reserve(radii.size());
  for (double r : radii) {
    DevicePosition pos;
    pos.r_km = r;
    pos.theta_rad = 2.0 * kPi * rng.uniform();
    pos.ring = rings.ring_of(r);
    deployment.devices.push_back(pos);
  }
  return deployment;
}

void write_deployment_csv(std::ostream& out, const Deployment& deployment) {
  out << "r_km,theta_rad,x_km,y_km,ring\n";
  for (const DevicePosition& p : deployment.devices) {
    out << format_double(p.r_km) << ',' << format_double(p.theta_rad) << ','
        << format_double(p.r_km * std::cos(p.theta_rad)) << ',' << format_double(p.r_km * std::sin(p.theta_rad))
        << ',' << p.ring << '\n';
  }
}

}  // namespace lorageo
