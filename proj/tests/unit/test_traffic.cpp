#include "doctest.h"

#include <cmath>

#include "lorageo/model.hpp"
#include "lorageo/traffic.hpp"

using namespace lorageo;

namespace {
const double kTau[] = {36.57142857142857, 64.0, 113.77777777777777, 204.8, 372.3636363636364, 682.6666666666666};

double p_of(double tau, SpreadFunction spread) { return collision_probability(interval_bounds(tau, 99.0, spread)); }
}  // namespace

TEST_CASE("spread parsing") {
  CHECK(parse_spread("sqrt:598") == SpreadFunction{SpreadKind::sqrt, 598.0});
  CHECK(parse_spread("sublinear:1").kind == SpreadKind::sqrt);
  CHECK(parse_spread("superlinear:0.145").kind == SpreadKind::quadratic);
  CHECK(to_string(parse_spread("linear:80")) == "linear:80");
  CHECK(to_string(parse_spread("invlog:2.5")) == "invlog:2.5");
  CHECK_THROWS_AS(parse_spread("sqrt"), ConfigError);
  CHECK_THROWS_AS(parse_spread("cubic:1"), ConfigError);
  CHECK_THROWS_AS(parse_spread("linear:-1"), ConfigError);
  CHECK_THROWS_AS(parse_spread("linear:abc"), ConfigError);
}

TEST_CASE("interval bounds") {
  const auto b = interval_bounds(36.6, 99.0, {SpreadKind::sqrt, 598.0});
  CHECK(b.nu1_ms == doctest::Approx(5.62355582880163).epsilon(1e-10));
  CHECK(b.nu2_ms == doctest::Approx(7241.176444171198).epsilon(1e-12));
  CHECK(b.nu1_hat_ms == doctest::Approx(36.6));
  CHECK(b.mean_ms() == doctest::Approx(99.0 * 36.6));

  const auto q = interval_bounds(682.0, 99.0, {SpreadKind::quadratic, 0.145});
  CHECK(q.nu1_ms == doctest::Approx(75.02));
  CHECK(q.nu1_hat_ms == doctest::Approx(682.0));

  CHECK_THROWS_AS(interval_bounds(100.0, 99.0, {SpreadKind::linear, 99.0}), InvalidSpreadError);
  CHECK_THROWS_AS(interval_bounds(100.0, 50.0, {SpreadKind::linear, 1.0}), DomainError);
  try {
    interval_bounds(1000.0, 99.0, {SpreadKind::quadratic, 0.145}, 12);
    FAIL("expected InvalidSpreadError");
  } catch (const InvalidSpreadError& e) {
    CHECK(e.sf() == 12);
  }
}

TEST_CASE("collision probability reference values") {
  const double sqrt_want[] = {0.056604562905078516, 0.02594146909876478, 0.02262702791902142,
                              0.02131152914258648,  0.020683660158319957, 0.020362555974101294};
  const double quad_want[] = {0.02001887459358099, 0.020058007424720928, 0.02018543743700223,
                              0.020624549447019705, 0.022391750200023448, 0.057520407842727286};
  for (int i = 0; i < 6; ++i) {
    CAPTURE(i);
    CHECK(p_of(kTau[i], {SpreadKind::sqrt, 598.0}) == doctest::Approx(sqrt_want[i]).epsilon(1e-11));
    CHECK(p_of(kTau[i], {SpreadKind::quadratic, 0.145}) == doctest::Approx(quad_want[i]).epsilon(1e-11));
    CHECK(p_of(kTau[i], {SpreadKind::linear, 80.0}) == doctest::Approx(0.027558561201111654).epsilon(1e-11));
  }
}

TEST_CASE("deterministic stream limit") {
  // periodic interferer: p = 1 - nu/(tau+nu) (1 - tau/nu) = 2 tau/(tau + nu)
  const double tau = 50.0;
  const double p = p_of(tau, {SpreadKind::linear, 0.0});
  CHECK(p == doctest::Approx(2.0 * tau / (tau + 99.0 * tau)).epsilon(1e-14));
  // a vanishing spread approaches it continuously
  CHECK(p_of(tau, {SpreadKind::linear, 1e-6}) == doctest::Approx(p).epsilon(1e-8));
}

TEST_CASE("regime approximations") {
  CHECK(collision_probability_regime(100.0, 99.0, {SpreadKind::linear, 80.0}) ==
        doctest::Approx(0.028036835333428933).epsilon(1e-13));
  CHECK(collision_probability_regime(682.0, 99.0, {SpreadKind::sqrt, 598.0}) ==
        doctest::Approx(0.020562284437447096).epsilon(1e-13));
  // the sqrt regime form tracks the exact value for long air-times
  CHECK(collision_probability_regime(682.0, 99.0, {SpreadKind::sqrt, 598.0}) ==
        doctest::Approx(0.02036292212871967).epsilon(0.02));
  CHECK(collision_probability_regime(10.0, 99.0, {SpreadKind::quadratic, 0.0}) == doctest::Approx(2.0 / 99.0));
}

TEST_CASE("duty cycle") {
  const double want[] = {0.02621142919249654, 0.01294000150764248, 0.011304244356469194,
                         0.01065182747971296, 0.01033993462269966, 0.010180313454936708};
  for (int i = 0; i < 6; ++i)
    CHECK(duty_cycle(interval_bounds(kTau[i], 99.0, {SpreadKind::sqrt, 598.0})) ==
          doctest::Approx(want[i]).epsilon(1e-11));
  // Jensen: E[tau/(nu+tau)] >= tau/(E[nu]+tau) = 1/(u+1)
  CHECK(duty_cycle(interval_bounds(100.0, 99.0, {SpreadKind::linear, 80.0})) > 0.01);
}

TEST_CASE("collision profile follows the rings") {
  const NetworkConfig cfg;
  const auto profile = collision_profile(cfg, build_rings(cfg));
  CHECK(profile[0] == doctest::Approx(0.056604562905078516).epsilon(1e-10));
  for (int i = 1; i < 6; ++i) CHECK(profile[i] < profile[i - 1]);
}

TEST_CASE("stream simulation agrees with the closed form") {
  StreamSimOptions opt;
  opt.samples = 200000;
  opt.cycles = 50000;
  for (const SpreadFunction spread : {SpreadFunction{SpreadKind::sqrt, 598.0}, SpreadFunction{SpreadKind::linear, 80.0},
                                      SpreadFunction{SpreadKind::quadratic, 0.145}}) {
    for (int i : {0, 5}) {
      const auto b = interval_bounds(kTau[i], 99.0, spread);
      const auto est = simulate_collision_rate(kTau[i], b, 1234 + i, opt);
      CAPTURE(to_string(spread));
      CAPTURE(i);
      CHECK(est.samples == opt.samples);
      CHECK(std::abs(est.mean - collision_probability(b)) < 4.0 * est.stderr_);
    }
  }
}

TEST_CASE("stream simulation is seed-deterministic") {
  StreamSimOptions opt;
  opt.samples = 10000;
  opt.cycles = 1000;
  const auto b = interval_bounds(64.0, 99.0, {SpreadKind::sqrt, 598.0});
  CHECK(simulate_collision_rate(64.0, b, 9, opt).mean == simulate_collision_rate(64.0, b, 9, opt).mean);
  opt.sampling = StreamSampling::time_average;
  const auto t = simulate_collision_rate(64.0, b, 9, opt);
  CHECK(t.mean > 0.0);
  CHECK(t.mean < 1.0);
  opt.cycles = 1;
  CHECK_THROWS_AS(simulate_collision_rate(64.0, b, 9, opt), DomainError);
  opt.sampling = StreamSampling::per_interval;
  opt.samples = 0;
  CHECK_THROWS_AS(simulate_collision_rate(64.0, b, 9, opt), DomainError);
}
