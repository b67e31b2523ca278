#include "doctest.h"

#include <string>

#include "lorageo/config.hpp"
#include "lorageo/model.hpp"

using namespace lorageo;

TEST_CASE("defaults are valid") {
  const NetworkConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  CHECK(cfg.wavelength_km() == doctest::Approx(0.345e-3));
  CHECK(cfg.spread == SpreadFunction{SpreadKind::sqrt, 598.0});
}

TEST_CASE("dump and parse round-trip") {
  NetworkConfig cfg;
  cfg.kappa = -0.0137862;
  cfg.lambda0 = 0.8048780487804879;
  cfg.spread = parse_spread("quadratic:0.145");
  cfg.q_db[5] = -19.0;
  const NetworkConfig back = parse_config(dump_config(cfg));
  CHECK(back == cfg);
}

TEST_CASE("parser handles comments, blanks and overrides") {
  const auto cfg = parse_config("# header\n\n  eta = 3.1   # inline\nspread=linear:80\nq_db = -6,-9,-12,-15,-18,-21\n");
  CHECK(cfg.eta == 3.1);
  CHECK(cfg.spread.kind == SpreadKind::linear);
  CHECK(cfg.q_db[5] == -21.0);
  CHECK(cfg.lambda0 == 1.0);

  NetworkConfig base;
  base.u = 150.0;
  CHECK(parse_config("w = 2", base).u == 150.0);
}

TEST_CASE("parser errors name the line") {
  try {
    parse_config("eta = 2.7\nbogus = 1\n");
    FAIL("expected ConfigError");
  } catch (const ConfigError& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_config("eta 2.7"), ConfigError);
  CHECK_THROWS_AS(parse_config("eta = 2.7x"), ConfigError);
  CHECK_THROWS_AS(parse_config("q_db = 1,2,3"), ConfigError);
  CHECK_THROWS_AS(parse_config("q_db = 1,2,3,4,5,6,7"), ConfigError);
  CHECK_THROWS_AS(parse_config("cr = 1.5"), ConfigError);
  CHECK_THROWS_AS(load_config_file("/nonexistent/lorageo.cfg"), ConfigError);
}

TEST_CASE("validation") {
  NetworkConfig cfg;
  cfg.eta = 1.5;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg = {};
  cfg.u = 50.0;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg = {};
  cfg.lambda0 = -1.0;
  CHECK_THROWS_AS(validate(cfg), ConfigError);
  cfg = {};
  const double r = cell_radius(cfg);
  cfg.kappa = 2.0 / (r * r);
  CHECK_NOTHROW(validate(cfg));
  cfg.kappa = 2.1 / (r * r);
  CHECK_THROWS_AS(validate(cfg), ConfigError);
}

TEST_CASE("number formatting") {
  CHECK(format_double(0.1) == "0.1");
  CHECK(format_double(-20.0) == "-20");
  CHECK(parse_double(format_double(1.0 / 3.0), "x") == 1.0 / 3.0);
  CHECK_THROWS_AS(parse_double("", "x"), ConfigError);
  CHECK(config_summary(NetworkConfig{}).find("spread=sqrt:598") != std::string::npos);
}
