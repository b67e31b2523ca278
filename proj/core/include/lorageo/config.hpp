#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <string_view>

#include "lorageo/common.hpp"
#include "lorageo/spread.hpp"

namespace lorageo {

/// Physical and protocol parameters of a single-gateway LoRa cell.
///
/// Units: distances in km (the wavelength is stored in metres as written in
/// config files and converted with `wavelength_km()`), powers in dBm,
/// noise figure and thresholds in dB, bandwidth in Hz, air-times in ms.
struct NetworkConfig {
  double lambda0 = 1.0;        // mean PPP intensity, EDs/km^2
  double kappa = 0.0;          // deployment curvature, 1/km^2
  double eta = 2.7;            // path-loss exponent
  double psi_m = 0.345;        // carrier wavelength, m
  double power_dbm = 14.0;     // transmit power
  double nf_db = 6.0;          // receiver noise figure
  double bw_hz = 125000.0;     // bandwidth
  double w = 1.259;            // co-SF SIR threshold (linear)
  double u = 99.0;             // duty-cycle multiplier
  SpreadFunction spread{};
  int payload_bytes = 25;
  int cr = 1;                  // coding-rate index 1..4
  // SNR thresholds per SF7..SF12. SF12 is -20 dB so that the outermost ring
  // radius lands at ~10.8 km.
  std::array<double, kNumRings> q_db{-6.0, -9.0, -12.0, -15.0, -17.5, -20.0};

  double wavelength_km() const { return psi_m * 1e-3; }

  friend bool operator==(const NetworkConfig&, const NetworkConfig&) = default;
};

/// Checks the parameter invariants that do not depend on the ring geometry.
/// Throws ConfigError naming the offending key.
void validate_basic(const NetworkConfig& cfg);

/// Full validation: basic checks plus kappa in [-2/R^2, 2/R^2] with R the
/// outer ring radius implied by the link budget.
void validate(const NetworkConfig& cfg);

/// Applies one `key = value` assignment. Throws ConfigError for unknown keys
/// or unparsable values.
void apply_setting(NetworkConfig& cfg, std::string_view key, std::string_view value);

/// Parses a flat key-value text: one `key = value` per line, `#` starts a
/// comment, blank lines ignored. Unspecified keys keep their defaults.
NetworkConfig parse_config(std::string_view text, NetworkConfig base = {});
NetworkConfig load_config_file(const std::string& path, NetworkConfig base = {});

/// Writes every key in a form `parse_config` reads back to an identical
/// config. Values use shortest round-trip decimal formatting.
std::string dump_config(const NetworkConfig& cfg);

/// One-line `key=value;...` summary used in output file comment headers.
std::string config_summary(const NetworkConfig& cfg);

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double value);
/// Strict full-string double parse. Throws ConfigError.
double parse_double(std::string_view text, std::string_view what);

}  // namespace lorageo
