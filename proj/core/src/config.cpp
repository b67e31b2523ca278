#include "lorageo/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <system_error>

#include "lorageo/model.hpp"

namespace lorageo {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("invalid integer for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ConfigError(message);
}

}  // namespace

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

double parse_double(std::string_view text, std::string_view what) {
  text = trim(text);
  double value = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ConfigError("invalid number for " + std::string(what) + ": '" + std::string(text) + "'");
  }
  return value;
}

void validate_basic(const NetworkConfig& cfg) {
  require(cfg.lambda0 > 0.0, "lambda0 must be > 0");
  require(cfg.eta >= 2.0, "eta must be >= 2");
  require(cfg.psi_m > 0.0, "psi_m must be > 0");
  require(cfg.bw_hz > 0.0, "bw_hz must be > 0");
  require(cfg.w > 0.0, "w must be > 0");
  require(cfg.u >= 99.0, "u must be >= 99 (1% duty cycle)");
  require(cfg.payload_bytes > 0, "payload_bytes must be > 0");
  require(cfg.cr >= 1 && cfg.cr <= 4, "cr must be in [1, 4]");
  require(cfg.spread.c >= 0.0, "spread coefficient must be >= 0");
  for (std::size_t i = 1; i < cfg.q_db.size(); ++i) {
    require(cfg.q_db[i] < cfg.q_db[i - 1], "q_db must be strictly decreasing from SF7 to SF12");
  }
}

void validate(const NetworkConfig& cfg) {
  validate_basic(cfg);
  const double r = cell_radius(cfg);
  const double limit = 2.0 / (r * r);
  // Slack so that kappa = +-2/R^2 written with finite precision is accepted.
  require(std::abs(cfg.kappa) <= limit * (1.0 + 1e-9),
          "kappa must lie in [-2/R^2, 2/R^2] = [" + format_double(-limit) + ", " + format_double(limit) + "]");
}

void apply_setting(NetworkConfig& cfg, std::string_view key, std::string_view value) {
  key = trim(key);
  value = trim(value);
  if (key == "lambda0") {
    cfg.lambda0 = parse_double(value, key);
  } else if (key == "kappa") {
    cfg.kappa = parse_double(value, key);
  } else if (key == "eta") {
    cfg.eta = parse_double(value, key);
  } else if (key == "psi_m") {
    cfg.psi_m = parse_double(value, key);
  } else if (key == "power_dbm") {
    cfg.power_dbm = parse_double(value, key);
  } else if (key == "nf_db") {
    cfg.nf_db = parse_double(value, key);
  } else if (key == "bw_hz") {
    cfg.bw_hz = parse_double(value, key);
  } else if (key == "w") {
    cfg.w = parse_double(value, key);
  } else if (key == "u") {
    cfg.u = parse_double(value, key);
  } else if (key == "spread") {
    cfg.spread = parse_spread(value);
  } else if (key == "payload_bytes") {
    cfg.payload_bytes = parse_int(value, key);
  } else if (key == "cr") {
    cfg.cr = parse_int(value, key);
  } else if (key == "q_db") {
    std::array<double, kNumRings> q{};
    std::size_t count = 0;
    std::string_view rest = value;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const auto item = rest.substr(0, comma);
      if (count == q.size()) throw ConfigError("q_db needs exactly 6 values");
      q[count++] = parse_double(item, key);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (count != q.size()) throw ConfigError("q_db needs exactly 6 values");
    cfg.q_db = q;
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

NetworkConfig parse_config(std::string_view text, NetworkConfig base) {
  int line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return base;
}

NetworkConfig load_config_file(const std::string& path, NetworkConfig base) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), base);
}

std::string dump_config(const NetworkConfig& cfg) {
  std::ostringstream out;
  out << "lambda0 = " << format_double(cfg.lambda0) << "\n"
      << "kappa = " << format_double(cfg.kappa) << "\n"
      << "eta = " << format_double(cfg.eta) << "\n"
      << "psi_m = " << format_double(cfg.psi_m) << "\n"
      << "power_dbm = " << format_double(cfg.power_dbm) << "\n"
      << "nf_db = " << format_double(cfg.nf_db) << "\n"
      << "bw_hz = " << format_double(cfg.bw_hz) << "\n"
      << "w = " << format_double(cfg.w) << "\n"
      << "u = " << format_double(cfg.u) << "\n"
      << "spread = " << to_string(cfg.spread) << "\n"
      << "payload_bytes = " << cfg.payload_bytes << "\n"
      << "cr = " << cfg.cr << "\n"
      << "q_db = ";
  for (std::size_t i = 0; i < cfg.q_db.size(); ++i) {
    out << (i ? "," : "") << format_double(cfg.q_db[i]);
  }
  out << "\n";
  return out.str();
}

std::string config_summary(const NetworkConfig& cfg) {
  std::string text = dump_config(cfg);
  std::string out;
  for (char ch : text) {
    if (ch == '\n') {
      out += ';';
    } else if (ch != ' ') {
      out += ch;
    }
  }
  if (!out.empty() && out.back() == ';') out.pop_back();
  return out;
}

}  // namespace lorageo
