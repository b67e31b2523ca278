#include "doctest.h"

#include <cmath>

#include "lorageo/montecarlo.hpp"

using namespace lorageo;

namespace {
const Scenario kBase = make_scenario(NetworkConfig{});
}

TEST_CASE("default grid sits inside each ring") {
  const auto grid = default_radial_grid(kBase.rings, 5);
  CHECK(grid.size() == 30);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const int n = static_cast<int>(i / 5) + 1;
    CHECK(kBase.rings.ring_of(grid[i]) == n);
  }
}

TEST_CASE("conditional SIR success") {
  CHECK(conditional_sir_success(kBase, 2.0, {}) == 1.0);
  const double one = conditional_sir_success(kBase, 2.0, {2.0});
  CHECK(one == doctest::Approx(1.0 / (1.0 + kBase.cfg.w)));
  CHECK(conditional_sir_success(kBase, 2.0, {2.0, 2.0}) == doctest::Approx(one * one));
}

TEST_CASE("simulated link success matches analytics") {
  LinkSimOptions opt;
  opt.realizations = 4000;
  opt.grid_km = {0.8, 2.9, 4.0, 6.2, 9.5};
  const auto pts = simulate_link_success(kBase, opt, 31);
  REQUIRE(pts.size() == opt.grid_km.size());
  for (const auto& p : pts) {
    CAPTURE(p.d_km);
    CHECK(std::abs(p.q_hat - snr_success(kBase, p.d_km)) <= 4.0 * p.q_se + 1e-12);
    CHECK(std::abs(p.w_hat - sir_success(kBase, p.d_km)) <= 4.0 * p.w_se + 1e-12);
    const auto h = h_bounds(kBase, p.d_km);
    CHECK(p.h_hat >= h.lower - 4.0 * p.h_se);
    CHECK(p.h_hat <= h.upper + 4.0 * p.h_se);
  }
}

TEST_CASE("link simulation is deterministic across thread counts") {
  LinkSimOptions opt;
  opt.realizations = 1200;
  opt.grid_km = {1.0, 5.0};
  opt.threads = 1;
  const auto a = simulate_link_success(kBase, opt, 5);
  opt.threads = 4;
  const auto b = simulate_link_success(kBase, opt, 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].w_hat == b[i].w_hat);
    CHECK(a[i].h_hat == b[i].h_hat);
  }
}

TEST_CASE("silenced interferers leave only the SNR") {
  LinkSimOptions opt;
  opt.realizations = 600;
  opt.grid_km = {3.0};
  opt.silence_interferers = true;
  const auto p = simulate_link_success(kBase, opt, 8).front();
  CHECK(p.w_hat == 1.0);
  CHECK(p.h_hat == doctest::Approx(p.q_hat));
}

TEST_CASE("meta simulation moments") {
  MetaSimOptions opt;
  opt.realizations = 4000;
  for (const Scope scope : {Scope::network(), Scope::of_ring(3)}) {
    opt.scope = scope;
    const auto r = simulate_meta(kBase, opt, 17);
    CAPTURE(scope.label());
    CHECK(std::abs(r.m1_hat - r.analytic.m1) <= 4.0 * r.m1_se);
    CHECK(std::abs(r.m2_hat - r.analytic.m2) <= 4.0 * r.m2_se);
    CHECK(r.z.size() == 99);
    CHECK(r.empirical.size() == r.z.size());
    for (double e : r.empirical) CHECK((e >= 0.0 && e <= 1.0));
  }
}

TEST_CASE("invalid simulation sizes") {
  LinkSimOptions opt;
  opt.realizations = 1;
  CHECK_THROWS_AS(simulate_link_success(kBase, opt, 1), DomainError);
  MetaSimOptions mopt;
  mopt.realizations = 0;
  CHECK_THROWS_AS(simulate_meta(kBase, mopt, 1), DomainError);
}
