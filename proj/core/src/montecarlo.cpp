#include "lorageo/montecarlo.hpp"

#include <algorithm>
#include <cmath>

#include "lorageo/geometry.hpp"
#include "parallel.hpp"

namespace lorageo {
namespace {

constexpr std::int64_t kChunk = 500;

struct Moments {
  double sum = 0.0;
  double sum_sq = 0.0;

  void add(double v) {
    sum += v;
    sum_sq += v * v;
  }
  void merge(const Moments& other) {
    sum += other.sum;
    sum_sq += other.sum_sq;
  }
  double mean(std::int64_t n) const { return sum / static_cast<double>(n); }
  double stderr_of_mean(std::int64_t n) const {
    const double m = mean(n);
    const double nd = static_cast<double>(n);
    const double var = std::max(0.0, (sum_sq - nd * m * m) / (nd - 1.0));
    return std::sqrt(var / nd);
  }
};

std::size_t chunk_count(std::int64_t realizations) {
  return static_cast<std::size_t>((realizations + kChunk - 1) / kChunk);
}

std::int64_t chunk_size(std::size_t chunk, std::int64_t realizations) {
  const auto begin = static_cast<std::int64_t>(chunk) * kChunk;
  return std::min(kChunk, realizations - begin);
}

// Active co-SF interferers: the full PPP of the ring, each point kept with
// its activation probability.
std::vector<double> active_interferers(const Scenario& s, const SfRing& ring, double tagged_p, bool silent,
                                       Rng& rng) {
  const auto radii = sample_annulus_radii(s.cfg, s.cell_radius(), ring.inner_km, ring.outer_km, 1.0, rng);
  std::vector<double> active;
  for (double x : radii) {
    const double p = silent ? 0.0 : (s.mode == ActivityMode::per_interferer ? s.collision_at(x) : tagged_p);
    if (rng.uniform() < p) active.push_back(x);
  }
  return active;
}

}  // namespace

std::vector<double> default_radial_grid(const RingTable& rings, int per_ring) {
  std::vector<double> grid;
  for (const SfRing& ring : rings) {
    for (int k = 1; k <= per_ring; ++k) {
      grid.push_back(ring.inner_km + (ring.outer_km - ring.inner_km) * k / (per_ring + 1.0));
    }
  }
  return grid;
}

double conditional_sir_success(const Scenario& s, double d_km, const std::vector<double>& interferers_km) {
  double log_w = 0.0;
  for (double x : interferers_km) log_w -= std::log1p(s.cfg.w * std::pow(d_km / x, s.cfg.eta));
  return std::exp(log_w);
}

std::vector<LinkSimPoint> simulate_link_success(const Scenario& s, const LinkSimOptions& options,
                                                std::uint64_t seed) {
  if (options.realizations < 2 || options.fading_draws < 1) {
    throw DomainError("link simulation needs at least 2 realizations and 1 fading draw");
  }
  const std::vector<double> grid = options.grid_km.empty() ? default_radial_grid(s.rings) : options.grid_km;
  const std::size_t chunks = chunk_count(options.realizations);
  const double noise_mw = dbm_to_mw(noise_power_dbm(s.cfg.nf_db, s.cfg.bw_hz));
  const double power_mw = dbm_to_mw(s.cfg.power_dbm);

  struct ChunkStats {
    Moments q, w, h;
  };
  std::vector<ChunkStats> stats(grid.size() * chunks);

  detail::parallel_for(stats.size(), options.threads, [&](std::size_t task) {
    const std::size_t g = task / chunks;
    const std::size_t chunk = task % chunks;
    const double d = grid[g];
    const int n = s.rings.ring_of(d);
    const SfRing& ring = s.rings[n];
    const double tagged_p = s.collision[static_cast<std::size_t>(n - 1)];
    const double snr_threshold = noise_mw * db_to_linear(ring.q_n_db) / (power_mw * path_gain(d, s.cfg));
    Rng rng(seed, (static_cast<std::uint64_t>(g) << 32) | chunk);
    ChunkStats& out = stats[task];
    const double draws = options.fading_draws;
    for (std::int64_t r = 0; r < chunk_size(chunk, options.realizations); ++r) {
      const auto interferers = active_interferers(s, ring, tagged_p, options.silence_interferers, rng);
      int q_ok = 0, w_ok = 0, h_ok = 0;
      for (int f = 0; f < options.fading_draws; ++f) {
        const double gain = rng.exponential();
        double interference = 0.0;
        for (double x : interferers) interference += rng.exponential() * std::pow(d / x, s.cfg.eta);
        const bool snr = gain >= snr_threshold;
        const bool sir = gain >= s.cfg.w * interference;
        q_ok += snr;
        w_ok += sir;
        h_ok += snr && sir;
      }
      out.q.add(q_ok / draws);
      out.w.add(w_ok / draws);
      out.h.add(h_ok / draws);
    }
  });

  std::vector<LinkSimPoint> points;
  points.reserve(grid.size());
  for (std::size_t g = 0; g < grid.size(); ++g) {
    ChunkStats total;
    for (std::size_t chunk = 0; chunk < chunks; ++chunk) {
      const ChunkStats& part = stats[g * chunks + chunk];
      total.q.merge(part.q);
      total.w.merge(part.w);
      total.h.merge(part.h);
    }
    const auto n = options.realizations;
    LinkSimPoint p;
    p.d_km = grid[g];
    p.ring = s.rings.ring_of(grid[g]);
    p.q_hat = total.q.mean(n);
    p.q_se = total.q.stderr_of_mean(n);
    p.w_hat = total.w.mean(n);
    p.w_se = total.w.stderr_of_mean(n);
    p.h_hat = total.h.mean(n);
    p.h_se = total.h.stderr_of_mean(n);
    points.push_back(p);
  }
  return points;
}

MetaSimResult simulate_meta(const Scenario& s, const MetaSimOptions& options, std::uint64_t seed) {
  if (options.realizations < 2) throw DomainError("meta simulation needs at least 2 realizations");
  const double r_cell = s.cell_radius();
  double lo = 0.0;
  double hi = r_cell;
  if (!options.scope.is_network()) {
    lo = s.rings[options.scope.ring].inner_km;
    hi = s.rings[options.scope.ring].outer_km;
  }

  const std::size_t chunks = chunk_count(options.realizations);
  std::vector<double> q_weight(static_cast<std::size_t>(options.realizations));
  std::vector<double> w_phi(q_weight.size());

  detail::parallel_for(chunks, options.threads, [&](std::size_t chunk) {
    Rng rng(seed, chunk);
    const auto begin = static_cast<std::size_t>(chunk) * static_cast<std::size_t>(kChunk);
    for (std::int64_t k = 0; k < chunk_size(chunk, options.realizations); ++k) {
      double d = 0.0;
      while (!(d > 0.0)) d = radial_quantile(rng.uniform(), s.cfg.kappa, r_cell, lo, hi);
      const int n = s.rings.ring_of(d);
      const SfRing& ring = s.rings[n];
      const auto interferers =
          active_interferers(s, ring, s.collision[static_cast<std::size_t>(n - 1)], false, rng);
      q_weight[begin + static_cast<std::size_t>(k)] = snr_success(s, d);
      w_phi[begin + static_cast<std::size_t>(k)] = conditional_sir_success(s, d, interferers);
    }
  });

  MetaSimResult result;
  Moments first, second;
  for (std::size_t i = 0; i < q_weight.size(); ++i) {
    first.add(q_weight[i] * w_phi[i]);
    second.add(q_weight[i] * w_phi[i] * w_phi[i]);
  }
  const auto n = options.realizations;
  result.m1_hat = first.mean(n);
  result.m1_se = first.stderr_of_mean(n);
  result.m2_hat = second.mean(n);
  result.m2_se = second.stderr_of_mean(n);

  result.analytic = meta_distribution(s, options.scope);
  result.z = options.z_grid;
  if (result.z.empty()) {
    for (int k = 1; k <= 99; ++k) result.z.push_back(k / 100.0);
  }
  for (double z : result.z) {
    double covered = 0.0;
    for (std::size_t i = 0; i < q_weight.size(); ++i) {
      if (w_phi[i] >= z) covered += q_weight[i];
    }
    const double empirical = covered / static_cast<double>(n);
    const double beta = result.analytic.coverage_at(z);
    result.empirical.push_back(empirical);
    result.beta.push_back(beta);
    result.sup_distance = std::max(result.sup_distance, std::abs(empirical - beta));
  }
  return result;
}

}  // namespace lorageo
