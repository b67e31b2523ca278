#pragma once

#include <string>
#include <string_view>

namespace lorageo {

enum class SpreadKind { linear, sqrt, quadratic, log_scaled, inverse_log_scaled };

/// Half-width v(tau) of the uniform inter-transmission interval
/// [u*tau - v(tau), u*tau + v(tau)]. Both tau and v are in ms.
struct SpreadFunction {
  SpreadKind kind = SpreadKind::sqrt;
  double c = 598.0;

  double operator()(double tau_ms) const;

  friend bool operator==(const SpreadFunction&, const SpreadFunction&) = default;
};

std::string_view to_string(SpreadKind kind);
SpreadKind parse_spread_kind(std::string_view name);

/// Formats as "kind:c", e.g. "sqrt:598".
std::string to_string(const SpreadFunction& spread);
/// Parses "kind:c". Throws ConfigError on malformed input.
SpreadFunction parse_spread(std::string_view text);

}  // namespace lorageo
