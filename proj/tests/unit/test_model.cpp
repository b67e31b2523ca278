#include "doctest.h"

#include <cmath>

#include "lorageo/model.hpp"

using namespace lorageo;

TEST_CASE("noise floor") {
  CHECK(noise_power_dbm(6.0, 125000.0) == doctest::Approx(-117.03089986991944).epsilon(1e-13));
  CHECK(noise_power_dbm(0.0, 1.0) == doctest::Approx(-174.0));
  CHECK(noise_power_dbm(6.0, 250000.0) == doctest::Approx(-114.02059991327963).epsilon(1e-13));
  CHECK_THROWS_AS(noise_power_dbm(6.0, 0.0), DomainError);
}

TEST_CASE("free-space gain at 1 km") {
  NetworkConfig cfg;
  CHECK(path_gain(1.0, cfg) == doctest::Approx(4.833313037379014e-13).epsilon(1e-12));
  // gain falls as d^-eta
  const double ratio = path_gain(2.0, cfg) / path_gain(1.0, cfg);
  CHECK(ratio == doctest::Approx(std::pow(2.0, -cfg.eta)).epsilon(1e-13));
}

TEST_CASE("ring radii, default link budget") {
  NetworkConfig cfg;
  const auto l = ring_radii(cfg);
  const double want[] = {3.264583225531521, 4.216371371348445, 5.445653032243431,
                         7.03333134958129,  8.704697245095437, 10.773238222778021};
  for (int i = 0; i < kNumRings; ++i) CHECK(l[i] == doctest::Approx(want[i]).epsilon(1e-12));
}

TEST_CASE("ring radii, eta = 4") {
  NetworkConfig cfg;
  cfg.eta = 4.0;
  const auto l = ring_radii(cfg);
  CHECK(l[0] == doctest::Approx(0.07317820085447838).epsilon(1e-12));
  CHECK(l[5] == doctest::Approx(0.16382558513532047).epsilon(1e-12));
}

TEST_CASE("mean SNR at the ring edge equals the threshold") {
  NetworkConfig cfg;
  const auto l = ring_radii(cfg);
  const double n_mw = dbm_to_mw(noise_power_dbm(cfg.nf_db, cfg.bw_hz));
  for (int i = 0; i < kNumRings; ++i) {
    const double snr = dbm_to_mw(cfg.power_dbm) * path_gain(l[i], cfg) / n_mw;
    CHECK(linear_to_db(snr) == doctest::Approx(cfg.q_db[i]).epsilon(1e-10));
  }
}

TEST_CASE("air-time and bit rate") {
  const double want[] = {36.57142857142857, 64.0, 113.77777777777777, 204.8, 372.3636363636364,
                         682.6666666666666};
  for (int sf = 7; sf <= 12; ++sf)
    CHECK(airtime_ms(sf, 25, 1, 125000.0) == doctest::Approx(want[sf - 7]).epsilon(1e-13));
  CHECK(bitrate_bps(7, 1, 125000.0) == doctest::Approx(5468.75));
  CHECK_THROWS(airtime_ms(6, 25, 1, 125000.0));
  CHECK_THROWS(airtime_ms(7, 25, 5, 125000.0));
}

TEST_CASE("ring table") {
  const RingTable rings = build_rings(NetworkConfig{});
  CHECK(rings[1].inner_km == 0.0);
  CHECK(rings[1].sf == 7);
  CHECK(rings[6].sf == 12);
  for (int n = 2; n <= kNumRings; ++n) {
    CHECK(rings[n].inner_km == rings[n - 1].outer_km);
    CHECK(rings[n].outer_km > rings[n].inner_km);
    CHECK(rings[n].airtime_ms > rings[n - 1].airtime_ms);
  }
  CHECK(rings.cell_radius() == doctest::Approx(10.773238222778021));
  CHECK(rings.ring_of(0.5) == 1);
  CHECK(rings.ring_of(rings[1].outer_km) == 1);
  CHECK(rings.ring_of(std::nextafter(rings[1].outer_km, 100.0)) == 2);
  CHECK(rings.ring_of(rings.cell_radius()) == 6);
  CHECK_THROWS(rings.ring_of(0.0));
  CHECK_THROWS(rings.ring_of(11.0));

  double area = 0.0;
  for (const auto& r : rings) area += r.area_km2();
  CHECK(area == doctest::Approx(kPi * 10.773238222778021 * 10.773238222778021));
}

TEST_CASE("non-monotone thresholds rejected") {
  NetworkConfig cfg;
  cfg.q_db[2] = -5.0;
  CHECK_THROWS_AS(build_rings(cfg), ConfigError);
}
