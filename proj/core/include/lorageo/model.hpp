#pragma once

#include <array>

#include "lorageo/common.hpp"
#include "lorageo/config.hpp"

namespace lorageo {

/// One spreading-factor annulus (inner_km, outer_km].
struct SfRing {
  int n = 1;  // 1..6
  int sf = 7;
  double q_n_db = 0.0;
  double inner_km = 0.0;
  double outer_km = 0.0;
  double airtime_ms = 0.0;
  double bitrate_bps = 0.0;

  double area_km2() const { return kPi * (outer_km * outer_km - inner_km * inner_km); }
};

/// The six rings of a cell, ordered by n. The cell radius R is the outer
/// radius of ring 6.
class RingTable {
 public:
  explicit RingTable(const std::array<SfRing, kNumRings>& rings);

  const SfRing& operator[](int n) const { return rings_.at(static_cast<std::size_t>(n - 1)); }
  const std::array<SfRing, kNumRings>& rings() const { return rings_; }
  double cell_radius() const { return rings_.back().outer_km; }

  /// Ring index n with l_{n-1} < d <= l_n. Throws DomainError if d is not
  /// in (0, R].
  int ring_of(double d_km) const;

  auto begin() const { return rings_.begin(); }
  auto end() const { return rings_.end(); }

 private:
  std::array<SfRing, kNumRings> rings_;
};

double noise_power_dbm(double nf_db, double bw_hz);

/// Free-space-style gain (psi / (4 pi d))^eta with d in km.
double path_gain(double d_km, const NetworkConfig& cfg);

/// Outer radii l_1..l_6 from E[SNR](l_n) = q_n.
std::array<double, kNumRings> ring_radii(const NetworkConfig& cfg);

/// LoRa bit rate 4 SF / ((4 + CR) T_s) with T_s = 2^SF / BW, bits/s.
double bitrate_bps(int sf, int cr, double bw_hz);

/// Payload bits over bit rate, preamble ignored, in ms.
double airtime_ms(int sf, int payload_bytes, int cr, double bw_hz);

RingTable build_rings(const NetworkConfig& cfg);

/// Cell radius R = l_6.
double cell_radius(const NetworkConfig& cfg);

}  // namespace lorageo
