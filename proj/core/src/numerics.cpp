#include "lorageo/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "lorageo/common.hpp"

namespace lorageo {
namespace {

bool is_nonpositive_integer(double v) { return v <= 0.0 && v == std::nearbyint(v); }

}  // namespace

double hyp2f1(double a, double b, double c, double x, long max_terms) {
  if (!(x <= 0.0)) throw DomainError("hyp2f1 is implemented for x <= 0 only");
  if (is_nonpositive_integer(c)) throw DomainError("hyp2f1: c must not be a non-positive integer");
  if (x == 0.0 || a == 0.0 || b == 0.0) return 1.0;

  // Pfaff: 2F1(a, b; c; x) = (1 - x)^(-a) 2F1(a, c - b; c; x / (x - 1)).
  const double y = x / (x - 1.0);
  const double bb = c - b;
  double term = 1.0;
  double sum = 1.0;
  int small_in_a_row = 0;
  for (long k = 0; k < max_terms; ++k) {
    const double kd = static_cast<double>(k);
    const double ratio = (a + kd) * (bb + kd) / ((c + kd) * (kd + 1.0)) * y;
    term *= ratio;
    sum += term;
    if (term == 0.0) return std::pow(1.0 - x, -a) * sum;
    if (std::abs(term) <= 1e-16 * std::abs(sum) && std::abs(ratio) < 1.0) {
      if (++small_in_a_row >= 2) return std::pow(1.0 - x, -a) * sum;
    } else {
      small_in_a_row = 0;
    }
  }
  throw ConvergenceError("hyp2f1 series did not converge in " + std::to_string(max_terms) + " terms",
                         std::pow(1.0 - x, -a) * sum, std::abs(term));
}

namespace {

// Continued fraction for the incomplete Beta (modified Lentz).
double beta_continued_fraction(double x, double a, double b) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 10000; ++m) {
    const double md = m;
    const double m2 = 2.0 * md;
    double aa = md * (b - md) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + md) * (qab + md) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + aa / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < eps) return h;
  }
  throw ConvergenceError("incomplete Beta continued fraction did not converge", h, 0.0);
}

}  // namespace

double reg_inc_beta(double x, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) throw DomainError("reg_inc_beta needs alpha, beta > 0");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  const double log_front = std::lgamma(alpha + beta) - std::lgamma(alpha) - std::lgamma(beta) +
                           alpha * std::log(x) + beta * std::log1p(-x);
  const double front = std::exp(log_front);
  if (x < (alpha + 1.0) / (alpha + beta + 2.0)) {
    return std::clamp(front * beta_continued_fraction(x, alpha, beta) / alpha, 0.0, 1.0);
  }
  return std::clamp(1.0 - front * beta_continued_fraction(1.0 - x, beta, alpha) / beta, 0.0, 1.0);
}

namespace {

constexpr double kKronrodNodes[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for nodes 1, 3, 5, 7 above.
constexpr double kGaussWeights[4] = {0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
                                     0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a, b, value, error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

double checked(double v) {
  if (!std::isfinite(v)) throw DomainError("integrand is not finite inside the interval");
  return v;
}

Segment kronrod(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = checked(f(center));
  double kronrod_sum = kKronrodWeights[7] * fc;
  double gauss_sum = kGaussWeights[3] * fc;
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kKronrodNodes[i];
    const double f1 = checked(f(center - dx));
    const double f2 = checked(f(center + dx));
    kronrod_sum += kKronrodWeights[i] * (f1 + f2);
    if (i % 2 == 1) gauss_sum += kGaussWeights[i / 2] * (f1 + f2);
  }
  const double value = kronrod_sum * half;
  const double error = std::abs((kronrod_sum - gauss_sum) * half);
  return {a, b, value, error};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b, const QuadratureSpec& spec) {
  if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0)) throw DomainError("quadrature tolerances must be positive");
  if (a == b) return {};
  if (a > b) {
    QuadratureResult flipped = integrate(f, b, a, spec);
    flipped.value = -flipped.value;
    return flipped;
  }

  std::priority_queue<Segment> queue;
  Segment first = kronrod(f, a, b);
  double total = first.value;
  double total_error = first.error;
  queue.push(first);
  int subdivisions = 0;
  while (total_error > std::max(spec.abs_tol, spec.rel_tol * std::abs(total))) {
    if (subdivisions >= spec.max_subdivisions) {
      throw ConvergenceError("adaptive quadrature exceeded " + std::to_string(spec.max_subdivisions) +
                                 " subdivisions",
                             total, total_error);
    }
    const Segment worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = kronrod(f, worst.a, mid);
    const Segment right = kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++subdivisions;
    // Re-sum occasionally to stop rounding drift in the running totals.
    if (subdivisions % 64 == 0) {
      auto copy = queue;
      total = 0.0;
      total_error = 0.0;
      while (!copy.empty()) {
        total += copy.top().value;
        total_error += copy.top().error;
        copy.pop();
      }
    }
  }
  return {total, total_error, subdivisions};
}

double integrate_value(const std::function<double(double)>& f, double a, double b, const QuadratureSpec& spec) {
  return integrate(f, a, b, spec).value;
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  auto mix = [](std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  };
  return mix(mix(seed + 0x9E3779B97F4A7C15ULL) + 0x9E3779B97F4A7C15ULL * (stream + 1));
}

Rng::Rng(std::uint64_t seed, std::uint64_t stream) : engine_(derive_seed(seed, stream)) {}

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

double Rng::exponential() { return -std::log(1.0 - uniform()); }

std::int64_t Rng::poisson(double mean) {
  if (!(mean > 0.0)) return 0;
  constexpr double kChunk = 500.0;
  std::int64_t total = 0;
  while (mean > kChunk) {
    total += poisson(kChunk);
    mean -= kChunk;
  }
  double p = std::exp(-mean);
  double cdf = p;
  const double target = uniform();
  std::int64_t k = 0;
  while (target > cdf) {
    ++k;
    p *= mean / static_cast<double>(k);
    if (p == 0.0) break;
    cdf += p;
  }
  return total + k;
}

}  // namespace lorageo
