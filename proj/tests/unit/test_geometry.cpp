#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "lorageo/geometry.hpp"
#include "lorageo/numerics.hpp"

using namespace lorageo;

namespace {
const RingTable kRings = build_rings(NetworkConfig{});
const double kR = kRings.cell_radius();

NetworkConfig with_kappa(double k, double lambda0 = 1.0) {
  NetworkConfig cfg;
  cfg.kappa = k;
  cfg.lambda0 = lambda0;
  return cfg;
}

// Kolmogorov-Smirnov statistic of sorted samples against radial_cdf.
double ks_statistic(std::vector<double> r, double kappa) {
  std::sort(r.begin(), r.end());
  const double n = static_cast<double>(r.size());
  double d = 0.0;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const double f = radial_cdf(r[i], kappa, kR);
    d = std::max({d, f - static_cast<double>(i) / n, static_cast<double>(i + 1) / n - f});
  }
  return d;
}
}  // namespace

TEST_CASE("density is non-negative across the admissible curvature range") {
  for (double k : {-2.0 / (kR * kR), -1.0 / (kR * kR), 0.0, 1.0 / (kR * kR), 2.0 / (kR * kR)}) {
    const auto cfg = with_kappa(k);
    for (int i = 0; i <= 200; ++i) CHECK(density(kR * i / 200.0, cfg, kR) >= -1e-15);
  }
  CHECK(density(0.0, with_kappa(2.0 / (kR * kR)), kR) == doctest::Approx(0.0));
  CHECK(density(kR, with_kappa(-2.0 / (kR * kR)), kR) == doctest::Approx(0.0));
  CHECK_THROWS_AS(density(kR * 1.01, NetworkConfig{}, kR), DomainError);
}

TEST_CASE("expected counts match quadrature of the density") {
  for (double k : {-2.0 / (kR * kR), 0.0, 1.3 / (kR * kR)}) {
    const auto cfg = with_kappa(k, 0.8);
    for (const auto& ring : kRings) {
      const double q = 2.0 * kPi *
                       integrate_value([&](double x) { return density(x, cfg, kR) * x; }, ring.inner_km, ring.outer_km);
      CHECK(expected_count(cfg, kR, ring.inner_km, ring.outer_km) == doctest::Approx(q).epsilon(1e-10));
    }
  }
}

TEST_CASE("total count does not depend on curvature") {
  const double base = expected_total(with_kappa(0.0, 1.7), kR);
  CHECK(base == doctest::Approx(1.7 * kPi * kR * kR));
  for (double k : {-2.0 / (kR * kR), -0.004, 0.01, 2.0 / (kR * kR)}) {
    const auto cfg = with_kappa(k, 1.7);
    double sum = 0.0;
    for (const auto& ring : kRings) sum += expected_count(cfg, kR, ring.inner_km, ring.outer_km);
    CHECK(sum == doctest::Approx(base).epsilon(1e-12));
    CHECK(expected_count(cfg, kR, 0.0, kR) == doctest::Approx(base).epsilon(1e-12));
  }
}

TEST_CASE("radial cdf and quantile are inverse") {
  for (double k : {-2.0 / (kR * kR), 0.0, 2.0 / (kR * kR)}) {
    CHECK(radial_cdf(0.0, k, kR) == 0.0);
    CHECK(radial_cdf(kR, k, kR) == doctest::Approx(1.0));
    for (double p : {0.01, 0.25, 0.5, 0.9, 0.999}) {
      const double r = radial_quantile(p, k, kR, 0.0, kR);
      CHECK(radial_cdf(r, k, kR) == doctest::Approx(p).epsilon(1e-10));
    }
    const auto& ring = kRings[4];
    const double r = radial_quantile(0.5, k, kR, ring.inner_km, ring.outer_km);
    CHECK(r > ring.inner_km);
    CHECK(r < ring.outer_km);
  }
}

TEST_CASE("sampled radii follow the radial law") {
  Rng rng(2024);
  for (double k : {-2.0 / (kR * kR), 0.0, 2.0 / (kR * kR)}) {
    auto cfg = with_kappa(k, 20.0);
    const auto r = sample_annulus_radii(cfg, kR, 0.0, kR, 1.0, rng);
    // 1% critical value ~ 1.63 / sqrt(n)
    CHECK(ks_statistic(r, k) < 1.63 / std::sqrt(static_cast<double>(r.size())));
  }
}

TEST_CASE("deployment counts are Poisson with the expected mean") {
  NetworkConfig cfg = with_kappa(1.0 / (kR * kR), 1.0);
  double sum = 0.0, sum2 = 0.0;
  const int draws = 400;
  for (int s = 0; s < draws; ++s) {
    const double n = static_cast<double>(sample(cfg, kRings, static_cast<std::uint64_t>(s)).devices.size());
    sum += n;
    sum2 += n * n;
  }
  const double mean = sum / draws;
  const double var = sum2 / draws - mean * mean;
  const double want = expected_total(cfg, kR);
  CHECK(std::abs(mean - want) < 4.0 * std::sqrt(want / draws));
  CHECK(var == doctest::Approx(want).epsilon(0.25));
}

TEST_CASE("deployment is reproducible and ring labels are consistent") {
  const NetworkConfig cfg;
  const auto a = sample(cfg, kRings, 77);
  const auto b = sample(cfg, kRings, 77);
  REQUIRE(a.devices.size() == b.devices.size());
  CHECK(a.seed == 77);
  for (std::size_t i = 0; i < a.devices.size(); ++i) {
    CHECK(a.devices[i].r_km == b.devices[i].r_km);
    CHECK(a.devices[i].ring == kRings.ring_of(a.devices[i].r_km));
  }

  std::ostringstream out;
  write_deployment_csv(out, a);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "r_km,theta_rad,x_km,y_km,ring");
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == a.devices.size());
}
