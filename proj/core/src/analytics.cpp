#include "lorageo/analytics.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "lorageo/geometry.hpp"

namespace lorageo {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::nearbyint(v); }

double reciprocal_gamma(double x) { return is_nonpositive_integer(x) ? 0.0 : 1.0 / std::tgamma(x); }

// Activity probability applied to the tagged ED's co-SF interferers.
double ring_activity(const Scenario& s, int n) { return s.collision[static_cast<std::size_t>(n - 1)]; }

// The ring-1 interference integral diverges at the gateway when
// 1 - (1 + w (d/x)^eta)^(-b) ~ -(w d^eta)^|b| x^(-|b| eta) is not
// integrable against x dx, i.e. for b <= -2/eta.
bool diverges_at_gateway(const Scenario& s, const SfRing& ring, double b) {
  return ring.inner_km == 0.0 && b <= -2.0 / s.cfg.eta;
}

// Antiderivative of x^(m-1) (1 - (1 + w d^eta x^-eta)^(-b)):
//   x^m/m * (1 - 2F1(b, -m/eta; 1 - m/eta; -w (d/x)^eta)).
// At x = 0 its value is the limit -(1/m) lim x^m 2F1(...), which follows from
// the large-argument connection formula.
double moment_antiderivative(double x, int m, double d, double b, double w, double eta) {
  const double delta = m / eta;
  const double c = 1.0 - delta;
  if (is_nonpositive_integer(c)) {
    throw DomainError("closed form unavailable: 1 - " + std::to_string(m) + "/eta is a non-positive integer");
  }
  if (x == 0.0) {
    const double limit = std::tgamma(c) * std::tgamma(b + delta) * reciprocal_gamma(b) * std::pow(w, delta) *
                         std::pow(d, static_cast<double>(m));
    return -limit / m;
  }
  const double arg = -w * std::pow(d / x, eta);
  return std::pow(x, m) / m * (1.0 - hyp2f1(b, -delta, c, arg));
}

double moment_with_fallback(const Scenario& s, double d_km, double b, double w) {
  try {
    return sir_moment_closed_form(s, d_km, b, w);
  } catch (const DomainError&) {
  } catch (const ConvergenceError&) {
  }
  QuadratureSpec spec;
  spec.rel_tol = 1e-10;
  spec.abs_tol = 1e-14;
  return sir_moment_numeric(s, d_km, b, w, spec);
}

}  // namespace

Scenario make_scenario(const NetworkConfig& cfg, ActivityMode mode) {
  validate(cfg);
  RingTable rings = build_rings(cfg);
  const CollisionProfile collision = collision_profile(cfg, rings);
  return Scenario{cfg, rings, collision, mode};
}

Scenario with_deployment(const Scenario& base, double kappa, double lambda0) {
  Scenario s = base;
  s.cfg.kappa = kappa;
  s.cfg.lambda0 = lambda0;
  const double r = s.cell_radius();
  if (!(lambda0 > 0.0)) throw ConfigError("lambda0 must be > 0");
  if (std::abs(kappa) > 2.0 / (r * r) * (1.0 + 1e-9)) throw ConfigError("kappa outside [-2/R^2, 2/R^2]");
  return s;
}

double snr_success(const Scenario& s, double d_km) {
  const int n = s.rings.ring_of(d_km);
  const double noise_mw = dbm_to_mw(noise_power_dbm(s.cfg.nf_db, s.cfg.bw_hz));
  const double power_mw = dbm_to_mw(s.cfg.power_dbm);
  const double q = db_to_linear(s.rings[n].q_n_db);
  return std::exp(-noise_mw * q / (power_mw * path_gain(d_km, s.cfg)));
}

double sir_moment_closed_form(const Scenario& s, double d_km, double b, double w) {
  const int n = s.rings.ring_of(d_km);
  const SfRing& ring = s.rings[n];
  const double p = ring_activity(s, n);
  if (p == 0.0 || b == 0.0) return 1.0;
  if (diverges_at_gateway(s, ring, b)) return kInf;

  const double eta = s.cfg.eta;
  const double r = s.cell_radius();
  auto bracket = [&](int m) {
    return moment_antiderivative(ring.outer_km, m, d_km, b, w, eta) -
           moment_antiderivative(ring.inner_km, m, d_km, b, w, eta);
  };
  const double kappa = s.cfg.kappa;
  const double integral = s.cfg.lambda0 * ((1.0 - 0.5 * kappa * r * r) * bracket(2) + kappa * bracket(4));
  return std::exp(-2.0 * kPi * p * integral);
}

double sir_moment_numeric(const Scenario& s, double d_km, double b, double w, const QuadratureSpec& spec) {
  const int n = s.rings.ring_of(d_km);
  const SfRing& ring = s.rings[n];
  const double r = s.cell_radius();
  const double eta = s.cfg.eta;
  const double tagged_p = ring_activity(s, n);
  const bool per_interferer = s.mode == ActivityMode::per_interferer;

  if (b == 0.0) return 1.0;
  if (!per_interferer && tagged_p == 0.0) return 1.0;
  if (diverges_at_gateway(s, ring, b) && tagged_p > 0.0) return kInf;

  auto integrand = [&](double x) {
    const double ratio = w * std::pow(d_km / x, eta);
    // 1 - (1 + ratio)^(-b) without cancellation for small ratios.
    const double blocked = -std::expm1(-b * std::log1p(ratio));
    const double activity = per_interferer ? s.collision_at(x) : 1.0;
    return activity * blocked * density(x, s.cfg, r) * x;
  };
  const double integral = integrate_value(integrand, ring.inner_km, ring.outer_km, spec);
  const double scale = per_interferer ? 1.0 : tagged_p;
  return std::exp(-2.0 * kPi * scale * integral);
}

double sir_moment_numeric(const Scenario& s, double d_km, double b, const QuadratureSpec& spec) {
  return sir_moment_numeric(s, d_km, b, s.cfg.w, spec);
}

double sir_moment(const Scenario& s, double d_km, double b) { return moment_with_fallback(s, d_km, b, s.cfg.w); }

HBounds h_bounds(const Scenario& s, double d_km) {
  const double q = snr_success(s, d_km);
  HBounds bounds;
  bounds.lower = q * moment_with_fallback(s, d_km, 1.0, s.cfg.w);
  bounds.upper = std::sqrt(q) * moment_with_fallback(s, d_km, 1.0, 0.5 * s.cfg.w);
  return bounds;
}

LinkMetrics link_metrics(const Scenario& s, double d_km) {
  LinkMetrics m;
  m.d_km = d_km;
  m.ring = s.rings.ring_of(d_km);
  m.q_success = snr_success(s, d_km);
  m.w_success = sir_moment(s, d_km, 1.0);
  const HBounds h = h_bounds(s, d_km);
  m.h_lower = h.lower;
  m.h_upper = h.upper;
  return m;
}

std::string Scope::label() const { return is_network() ? "network" : "ring" + std::to_string(ring); }

double md_moment(const Scenario& s, double b, Scope scope, const QuadratureSpec& spec) {
  const double r = s.cell_radius();
  int first = 1;
  int last = kNumRings;
  if (!scope.is_network()) {
    if (scope.ring < 1 || scope.ring > kNumRings) throw DomainError("ring index must be in [1, 6]");
    first = last = scope.ring;
  }
  double total = 0.0;
  for (int n = first; n <= last; ++n) {
    const SfRing& ring = s.rings[n];
    if (diverges_at_gateway(s, ring, b) && ring_activity(s, n) > 0.0) return kInf;
    auto integrand = [&](double d) {
      return snr_success(s, d) * sir_moment(s, d, b) * density(d, s.cfg, r) * d;
    };
    total += integrate_value(integrand, ring.inner_km, ring.outer_km, spec);
  }
  const double count = scope.is_network() ? expected_total(s.cfg, r)
                                          : expected_count(s.cfg, r, s.rings[scope.ring].inner_km,
                                                           s.rings[scope.ring].outer_km);
  if (!(count > 0.0)) throw DomainError("scope holds no devices on average");
  return 2.0 * kPi * total / count;
}

double coverage(const Scenario& s) { return md_moment(s, 1.0, Scope::network()); }

double coverage_per_sf(const Scenario& s, int n) { return md_moment(s, 1.0, Scope::of_ring(n)); }

BetaParams beta_fit(double m1, double m2) {
  if (!(m1 > 0.0 && m1 < 1.0)) throw DegenerateFitError("Beta fit needs 0 < M1 < 1");
  const double variance = m2 - m1 * m1;
  if (!(variance > 0.0)) {
    throw DegenerateFitError("M2 <= M1^2: zero spread, treat the distribution as a point mass at M1");
  }
  if (!(m2 < m1)) throw DegenerateFitError("M2 >= M1 is incompatible with a distribution on [0, 1]");
  const double common = (m1 - m2) / variance;
  return {m1 * common, (1.0 - m1) * common};
}

double MetaDistribution::coverage_at(double z) const {
  if (z <= 0.0) return 1.0;
  if (z >= 1.0) return 0.0;
  if (degenerate) return m1 >= z ? 1.0 : 0.0;
  return 1.0 - reg_inc_beta(z, alpha, beta);
}

MetaDistribution meta_distribution(const Scenario& s, Scope scope) {
  MetaDistribution md;
  md.scope = scope;
  md.m1 = md_moment(s, 1.0, scope);
  md.m2 = md_moment(s, 2.0, scope);
  try {
    const BetaParams fit = beta_fit(md.m1, md.m2);
    md.alpha = fit.alpha;
    md.beta = fit.beta;
  } catch (const DegenerateFitError&) {
    md.degenerate = true;
  }
  return md;
}

double md_coverage(const Scenario& s, double z, Scope scope) { return meta_distribution(s, scope).coverage_at(z); }

}  // namespace lorageo
