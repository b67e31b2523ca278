#include "lorageo/spread.hpp"

#include <cmath>

#include "lorageo/common.hpp"
#include "lorageo/config.hpp"

namespace lorageo {

double SpreadFunction::operator()(double tau_ms) const {
  switch (kind) {
    case SpreadKind::linear:
      return c * tau_ms;
    case SpreadKind::sqrt:
      return c * std::sqrt(tau_ms);
    case SpreadKind::quadratic:
      return c * tau_ms * tau_ms;
    case SpreadKind::log_scaled:
      return c * tau_ms * std::log(tau_ms);
    case SpreadKind::inverse_log_scaled:
      return c * tau_ms / std::log(tau_ms);
  }
  throw DomainError("unknown spread kind");
}

std::string_view to_string(SpreadKind kind) {
  switch (kind) {
    case SpreadKind::linear:
      return "linear";
    case SpreadKind::sqrt:
      return "sqrt";
    case SpreadKind::quadratic:
      return "quadratic";
    case SpreadKind::log_scaled:
      return "log";
    case SpreadKind::inverse_log_scaled:
      return "invlog";
  }
  return "?";
}

SpreadKind parse_spread_kind(std::string_view name) {
  if (name == "linear") return SpreadKind::linear;
  if (name == "sqrt" || name == "sublinear") return SpreadKind::sqrt;
  if (name == "quadratic" || name == "superlinear") return SpreadKind::quadratic;
  if (name == "log") return SpreadKind::log_scaled;
  if (name == "invlog") return SpreadKind::inverse_log_scaled;
  throw ConfigError("unknown spread kind '" + std::string(name) +
                    "' (expected linear, sqrt, quadratic, log or invlog)");
}

std::string to_string(const SpreadFunction& spread) {
  return std::string(to_string(spread.kind)) + ":" + format_double(spread.c);
}

SpreadFunction parse_spread(std::string_view text) {
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw ConfigError("spread must look like kind:c, got '" + std::string(text) + "'");
  }
  SpreadFunction spread;
  spread.kind = parse_spread_kind(text.substr(0, colon));
  spread.c = parse_double(text.substr(colon + 1), "spread coefficient");
  if (!(spread.c >= 0.0)) throw ConfigError("spread coefficient must be non-negative");
  return spread;
}

}  // namespace lorageo
