#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace lorageo {

inline constexpr int kNumRings = 6;
inline constexpr int kMinSf = 7;
inline constexpr int kMaxSf = 12;
inline constexpr double kPi = 3.14159265358979323846;

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Invalid or inconsistent configuration value.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An iterative numerical method stopped before meeting its tolerance.
/// Carries the best estimate it had reached.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, double best_estimate, double error_estimate)
      : std::runtime_error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

// dB <-> linear conversions. Everything downstream of config parsing works
// in linear units (mW for powers, ratios for thresholds).
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
inline double dbm_to_mw(double dbm) { return db_to_linear(dbm); }

}  // namespace lorageo
