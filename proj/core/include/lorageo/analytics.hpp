#pragma once

#include <array>
#include <string>

#include "lorageo/config.hpp"
#include "lorageo/model.hpp"
#include "lorageo/numerics.hpp"
#include "lorageo/traffic.hpp"

namespace lorageo {

/// Which collision probability thins an interferer at distance d_k from a
/// tagged ED at d_i. Interferers are co-SF, i.e. in the tagged ED's ring,
/// so with ring-wise air-times both modes give the same numbers.
enum class ActivityMode {
  tagged_ring,     // p(d_i), factored out of the interference integral
  per_interferer,  // p(d_k) inside the integral (numeric route only)
};

/// Everything the closed-form metrics need, resolved once from a config.
struct Scenario {
  NetworkConfig cfg;
  RingTable rings;
  CollisionProfile collision{};
  ActivityMode mode = ActivityMode::tagged_ring;

  double cell_radius() const { return rings.cell_radius(); }
  /// p(d): collision probability of the ring containing d.
  double collision_at(double d_km) const { return collision[static_cast<std::size_t>(rings.ring_of(d_km) - 1)]; }
};

/// Validates `cfg`, builds the ring table and the per-ring collision
/// probabilities.
Scenario make_scenario(const NetworkConfig& cfg, ActivityMode mode = ActivityMode::tagged_ring);

/// Same geometry and traffic, new deployment parameters (kappa, lambda0).
Scenario with_deployment(const Scenario& base, double kappa, double lambda0);

/// Q(d) = exp(-N q_n / (P g(d))).
double snr_success(const Scenario& s, double d_km);

/// M_b(d) = E[W_Phi(d)^b] through the hypergeometric closed form. Falls back
/// to quadrature when the closed form is unavailable (c a non-positive
/// integer, e.g. eta = 2 or 4) or its series does not converge. Returns
/// +inf when the moment diverges (b <= -2/eta in ring 1).
double sir_moment(const Scenario& s, double d_km, double b);

/// Closed form only; propagates hyp2f1 errors instead of falling back.
double sir_moment_closed_form(const Scenario& s, double d_km, double b, double w);

/// M_b(d) by adaptive quadrature of the interference integral.
double sir_moment_numeric(const Scenario& s, double d_km, double b, const QuadratureSpec& spec = {});
double sir_moment_numeric(const Scenario& s, double d_km, double b, double w, const QuadratureSpec& spec);

/// W(d) = M_1(d).
inline double sir_success(const Scenario& s, double d_km) { return sir_moment(s, d_km, 1.0); }

struct HBounds {
  double lower = 0.0;  // Q(d) W(d)
  double upper = 0.0;  // sqrt(Q(d)) * W(d) evaluated with w/2
};
HBounds h_bounds(const Scenario& s, double d_km);

struct LinkMetrics {
  double d_km = 0.0;
  int ring = 1;
  double q_success = 0.0;
  double w_success = 0.0;
  double h_lower = 0.0;
  double h_upper = 0.0;
};
LinkMetrics link_metrics(const Scenario& s, double d_km);

/// Averaging scope for coverage-type metrics: the whole cell or one ring.
struct Scope {
  int ring = 0;  // 0 = network-wide, otherwise 1..6

  static Scope network() { return {}; }
  static Scope of_ring(int n) { return {n}; }
  bool is_network() const { return ring == 0; }
  std::string label() const;
};

/// (2 pi / N) * integral of Q(d) M_b(d) lambda(d) d over the scope, split at
/// ring boundaries. b = 1 gives the coverage probability.
double md_moment(const Scenario& s, double b, Scope scope, const QuadratureSpec& spec = {});

/// C(kappa, lambda0).
double coverage(const Scenario& s);
/// C_n(kappa, lambda0).
double coverage_per_sf(const Scenario& s, int n);

struct BetaParams {
  double alpha = 0.0;
  double beta = 0.0;
};

/// Thrown by beta_fit when m2 <= m1^2 (no spread) or moments are outside
/// the Beta-compatible region.
class DegenerateFitError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Moment-matched Beta parameters.
BetaParams beta_fit(double m1, double m2);

struct MetaDistribution {
  double m1 = 0.0;
  double m2 = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  Scope scope{};
  /// True when the moments admit no Beta fit; the MD is then treated as a
  /// point mass at m1.
  bool degenerate = false;

  /// M2 - M1^2.
  double fairness_variance() const { return m2 - m1 * m1; }
  /// 1 - G(z), or the point-mass convention (1 if m1 >= z else 0).
  double coverage_at(double z) const;
};

MetaDistribution meta_distribution(const Scenario& s, Scope scope);

/// MD coverage curve value at reliability z.
double md_coverage(const Scenario& s, double z, Scope scope);

}  // namespace lorageo
