#pragma once

#include <cstdint>
#include <functional>
#include <random>

namespace lorageo {

/// Gauss hypergeometric 2F1(a, b; c; x) for x <= 0.
///
/// Uses the Pfaff transformation 2F1(a,b;c;x) = (1-x)^{-a} 2F1(a, c-b; c; y)
/// with y = x/(x-1) in [0, 1), then sums the series until the term ratio
/// drops below 1e-16. Throws DomainError for x > 0 or c a non-positive
/// integer, and ConvergenceError if more than `max_terms` terms are needed.
double hyp2f1(double a, double b, double c, double x, long max_terms = 100000);

/// Regularized incomplete Beta I_x(alpha, beta), continued-fraction
/// evaluation (modified Lentz).
double reg_inc_beta(double x, double alpha, double beta);

struct QuadratureSpec {
  double rel_tol = 1e-8;
  double abs_tol = 1e-12;
  int max_subdivisions = 2000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
};

/// Adaptive Gauss-Kronrod (7/15) quadrature on [a, b] with global interval
/// bisection. Integrands must be finite on the open interval; endpoints are
/// never evaluated. Throws ConvergenceError (carrying the best estimate)
/// when `max_subdivisions` is exhausted.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

/// Convenience wrapper returning only the value.
double integrate_value(const std::function<double(double)>& f, double a, double b,
                       const QuadratureSpec& spec = {});

/// Mixes a seed and a stream index into a 64-bit state (SplitMix64 finalizer).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Reproducible variate stream. The engine is std::mt19937_64 (its output
/// sequence is fixed by the C++ standard); all transforms below are
/// implemented here so streams are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();
  /// Uniform on [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Unit-mean exponential by inverse transform -ln(1 - U).
  double exponential();
  /// Poisson by sequential inversion; means above 500 are split into
  /// smaller independent pieces to avoid exp underflow.
  std::int64_t poisson(double mean);

 private:
  std::mt19937_64 engine_;
};

}  // namespace lorageo
