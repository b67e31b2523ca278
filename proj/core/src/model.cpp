#include "lorageo/model.hpp"

#include <cmath>
#include <string>

namespace lorageo {

RingTable::RingTable(const std::array<SfRing, kNumRings>& rings) : rings_(rings) {
  double previous_outer = 0.0;
  double previous_airtime = 0.0;
  for (std::size_t i = 0; i < rings_.size(); ++i) {
    const SfRing& ring = rings_[i];
    if (ring.n != static_cast<int>(i) + 1 || ring.sf != ring.n + 6) {
      throw DomainError("ring table must list rings 1..6 with SF = n + 6");
    }
    if (ring.inner_km != previous_outer || !(ring.outer_km > ring.inner_km)) {
      throw DomainError("ring radii must satisfy 0 = l0 < l1 < ... < l6");
    }
    if (!(ring.airtime_ms > previous_airtime)) {
      throw DomainError("ring air-times must increase with SF");
    }
    if (i > 0 && !(ring.q_n_db < rings_[i - 1].q_n_db)) {
      throw DomainError("SNR thresholds must decrease with SF");
    }
    previous_outer = ring.outer_km;
    previous_airtime = ring.airtime_ms;
  }
}

int RingTable::ring_of(double d_km) const {
  if (!(d_km > 0.0) || d_km > cell_radius()) {
    throw DomainError("distance " + std::to_string(d_km) + " km is outside (0, R]");
  }
  for (const SfRing& ring : rings_) {
    if (d_km <= ring.outer_km) return ring.n;
  }
  return kNumRings;
}

double noise_power_dbm(double nf_db, double bw_hz) {
  if (!(bw_hz > 0.0)) throw DomainError("bandwidth must be positive");
  return -174.0 + nf_db + 10.0 * std::log10(bw_hz);
}

double path_gain(double d_km, const NetworkConfig& cfg) {
  if (!(d_km > 0.0)) throw DomainError("path_gain needs d > 0");
  return std::pow(cfg.wavelength_km() / (4.0 * kPi * d_km), cfg.eta);
}

std::array<double, kNumRings> ring_radii(const NetworkConfig& cfg) {
  const double noise = noise_power_dbm(cfg.nf_db, cfg.bw_hz);
  const double base = cfg.wavelength_km() / (4.0 * kPi);
  std::array<double, kNumRings> radii{};
  for (std::size_t i = 0; i < radii.size(); ++i) {
    radii[i] = base * std::pow(10.0, (cfg.power_dbm - cfg.q_db[i] - noise) / (10.0 * cfg.eta));
    if (i > 0 && !(radii[i] > radii[i - 1])) {
      throw ConfigError("ring radii are not strictly increasing; check q_db ordering");
    }
  }
  return radii;
}

double bitrate_bps(int sf, int cr, double bw_hz) {
  if (sf < kMinSf || sf > kMaxSf) throw DomainError("spreading factor must be in [7, 12]");
  if (cr < 1 || cr > 4) throw DomainError("coding rate index must be in [1, 4]");
  if (!(bw_hz > 0.0)) throw DomainError("bandwidth must be positive");
  const double symbol_s = std::ldexp(1.0, sf) / bw_hz;
  return 4.0 * sf / ((4.0 + cr) * symbol_s);
}

double airtime_ms(int sf, int payload_bytes, int cr, double bw_hz) {
  if (payload_bytes <= 0) throw DomainError("payload must be positive");
  return 1000.0 * 8.0 * payload_bytes / bitrate_bps(sf, cr, bw_hz);
}

RingTable build_rings(const NetworkConfig& cfg) {
  const auto radii = ring_radii(cfg);
  std::array<SfRing, kNumRings> rings{};
  double inner = 0.0;
  for (int n = 1; n <= kNumRings; ++n) {
    const auto i = static_cast<std::size_t>(n - 1);
    SfRing& ring = rings[i];
    ring.n = n;
    ring.sf = n + 6;
    ring.q_n_db = cfg.q_db[i];
    ring.inner_km = inner;
    ring.outer_km = radii[i];
    ring.bitrate_bps = bitrate_bps(ring.sf, cfg.cr, cfg.bw_hz);
    ring.airtime_ms = airtime_ms(ring.sf, cfg.payload_bytes, cfg.cr, cfg.bw_hz);
    inner = radii[i];
  }
  return RingTable(rings);
}

double cell_radius(const NetworkConfig& cfg) { return ring_radii(cfg).back(); }

}  // namespace lorageo
