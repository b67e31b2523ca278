#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "lorageo/config.hpp"
#include "lorageo/model.hpp"

namespace lorageo {

/// Radial ED intensity lambda0 (1 + kappa (d^2 - R^2/2)), EDs/km^2.
/// Throws DomainError for d outside [0, R].
double density(double d_km, const NetworkConfig& cfg, double cell_radius_km);

/// Expected number of EDs in the annulus (a, b]:
/// 2 pi lambda0 [x^2/2 + kappa (x^4/4 - R^2 x^2/4)]_a^b.
double expected_count(const NetworkConfig& cfg, double cell_radius_km, double a_km, double b_km);

/// Expected EDs in the whole disk, lambda0 pi R^2.
double expected_total(const NetworkConfig& cfg, double cell_radius_km);

/// CDF of the radius of one ED, F(r) = [r^2/2 + kappa (r^4/4 - R^2 r^2/4)] / (R^2/2).
double radial_cdf(double r_km, double kappa, double cell_radius_km);

/// Inverse of `radial_cdf` restricted to the sub-range (a, b]: maps a uniform
/// p in [0, 1] to a radius whose law is the density conditioned on (a, b].
/// Solves the quadratic in r^2 in closed form.
double radial_quantile(double p, double kappa, double cell_radius_km, double a_km, double b_km);

struct DevicePosition {
  double r_km = 0.0;
  double theta_rad = 0.0;
  int ring = 1;
};

struct Deployment {
  std::vector<DevicePosition> devices;
  std::uint64_t seed = 0;
};

/// One realization of the inhomogeneous PPP on the cell disk.
Deployment sample(const NetworkConfig& cfg, const RingTable& rings, std::uint64_t seed);

class Rng;
/// Radii of a PPP with intensity scale * lambda(r) restricted to (a, b].
std::vector<double> sample_annulus_radii(const NetworkConfig& cfg, double cell_radius_km, double a_km,
                                         double b_km, double scale, Rng& rng);

/// CSV with columns r_km,theta_rad,x_km,y_km,ring.
void write_deployment_csv(std::ostream& out, const Deployment& deployment);

}  // namespace lorageo
