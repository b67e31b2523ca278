#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lorageo/lorageo.hpp"

using namespace lorageo;
using json = nlohmann::json;

namespace {

constexpr const char* kConfigEnv = "LORAGEO_CONFIG";

struct GlobalOptions {
  std::string config_path;
  std::vector<std::string> settings;
  std::string out_dir;
  std::uint64_t seed = 1;
  unsigned threads = 0;
  bool dump_config = false;
};

NetworkConfig resolve_config(const GlobalOptions& g) {
  NetworkConfig cfg;
  std::string path = g.config_path;
  if (path.empty()) {
    if (const char* env = std::getenv(kConfigEnv)) path = env;
  }
  if (!path.empty()) cfg = load_config_file(path);
  for (const auto& kv : g.settings) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + kv + "'");
    apply_setting(cfg, kv.substr(0, eq), kv.substr(eq + 1));
  }
  validate(cfg);
  return cfg;
}

// Sink for one command's outputs: CSV tables and a JSON summary go to
// --out DIR when given, otherwise to stdout.
class Output {
 public:
  Output(const GlobalOptions& g, std::string command, const NetworkConfig& cfg)
      : dir_(g.out_dir), command_(std::move(command)), seed_(g.seed), summary_(config_summary(cfg)) {
    if (!dir_.empty()) std::filesystem::create_directories(dir_);
  }

  std::ostream& table(const std::string& name, const std::string& header) {
    if (dir_.empty()) {
      stream_ = nullptr;
      if (tables_++) std::cout << '\n';
      return preamble(std::cout, header);
    }
    const auto path = std::filesystem::path(dir_) / (name + ".csv");
    stream_ = std::make_unique<std::ofstream>(path);
    if (!*stream_) throw std::runtime_error("cannot write " + path.string());
    return preamble(*stream_, header);
  }

  void summary(json j) {
    j["command"] = command_;
    j["seed"] = seed_;
    j["config"] = summary_;
    if (dir_.empty()) {
      std::cout << (tables_ ? "\n" : "") << j.dump(2) << '\n';
      return;
    }
    std::ofstream out(std::filesystem::path(dir_) / (command_ + ".json"));
    out << j.dump(2) << '\n';
  }

 private:
  std::ostream& preamble(std::ostream& out, const std::string& header) {
    out << "# lorageo " << command_ << " seed=" << seed_ << " " << summary_ << '\n' << header << '\n';
    return out;
  }

  std::string dir_;
  std::string command_;
  std::uint64_t seed_;
  std::string summary_;
  std::unique_ptr<std::ofstream> stream_;
  int tables_ = 0;
};

std::string num(double v) { return format_double(v); }

Scope parse_scope(const std::string& text) {
  if (text == "network") return Scope::network();
  if (text.rfind("ring", 0) == 0 && text.size() == 5 && text[4] >= '1' && text[4] <= '6') {
    return Scope::of_ring(text[4] - '0');
  }
  throw ConfigError("scope must be network or ring1..ring6, got '" + text + "'");
}

void run_rings(const GlobalOptions& g) {
  const auto cfg = resolve_config(g);
  const auto rings = build_rings(cfg);
  Output out(g, "rings", cfg);
  auto& csv = out.table("rings", "ring,sf,q_db,inner_km,outer_km,airtime_ms,bitrate_bps,expected_devices");
  const double r = rings.cell_radius();
  for (const auto& ring : rings) {
    csv << ring.n << ',' << ring.sf << ',' << num(ring.q_n_db) << ',' << num(ring.inner_km) << ','
        << num(ring.outer_km) << ',' << num(ring.airtime_ms) << ',' << num(ring.bitrate_bps) << ','
        << num(expected_count(cfg, r, ring.inner_km, ring.outer_km)) << '\n';
  }
  out.summary({{"cell_radius_km", r},
               {"noise_dbm", noise_power_dbm(cfg.nf_db, cfg.bw_hz)},
               {"expected_devices", expected_total(cfg, r)}});
}

void run_collision(const GlobalOptions& g, std::int64_t trials, bool time_average) {
  const auto cfg = resolve_config(g);
  const auto rings = build_rings(cfg);
  Output out(g, "collision", cfg);
  auto& csv = out.table("collision", "sf,airtime_ms,nu1_ms,nu2_ms,p,p_regime,duty_cycle,p_sim,p_sim_stderr");
  StreamSimOptions sim;
  sim.samples = trials;
  sim.sampling = time_average ? StreamSampling::time_average : StreamSampling::per_interval;
  json rows = json::array();
  for (const auto& ring : rings) {
    const auto b = interval_bounds(ring.airtime_ms, cfg.u, cfg.spread, ring.sf);
    const double p = collision_probability(b);
    csv << ring.sf << ',' << num(ring.airtime_ms) << ',' << num(b.nu1_ms) << ',' << num(b.nu2_ms) << ',' << num(p)
        << ',' << num(collision_probability_regime(ring.airtime_ms, cfg.u, cfg.spread)) << ',' << num(duty_cycle(b));
    if (trials > 0) {
      const auto est = simulate_collision_rate(ring.airtime_ms, b, derive_seed(g.seed, ring.sf), sim);
      csv << ',' << num(est.mean) << ',' << num(est.stderr_);
    } else {
      csv << ",,";
    }
    csv << '\n';
    rows.push_back(p);
  }
  out.summary({{"spread", to_string(cfg.spread)}, {"u", cfg.u}, {"p", rows}, {"trials", trials}});
}

void run_profile(const GlobalOptions& g, int points) {
  const auto cfg = resolve_config(g);
  const Scenario s = make_scenario(cfg);
  Output out(g, "profile", cfg);
  auto& csv = out.table("profile", "d_km,ring,q,w,h_lower,h_upper");
  const double r = s.cell_radius();
  for (int i = 1; i <= points; ++i) {
    const auto m = link_metrics(s, r * i / points);
    csv << num(m.d_km) << ',' << m.ring << ',' << num(m.q_success) << ',' << num(m.w_success) << ','
        << num(m.h_lower) << ',' << num(m.h_upper) << '\n';
  }
  out.summary({{"points", points}, {"cell_radius_km", r}});
}

void run_coverage(const GlobalOptions& g, int sweep) {
  const auto cfg = resolve_config(g);
  const Scenario base = make_scenario(cfg);
  Output out(g, "coverage", cfg);
  auto& csv = out.table("coverage", "kappa,lambda0,c,c1,c2,c3,c4,c5,c6");
  const double r = base.cell_radius();
  auto row = [&](const Scenario& s) {
    csv << num(s.cfg.kappa) << ',' << num(s.cfg.lambda0) << ',' << num(coverage(s));
    for (int n = 1; n <= kNumRings; ++n) csv << ',' << num(coverage_per_sf(s, n));
    csv << '\n';
  };
  if (sweep > 1) {
    for (int i = 0; i < sweep; ++i) {
      const double kappa = -2.0 / (r * r) + 4.0 / (r * r) * i / (sweep - 1);
      row(with_deployment(base, kappa, cfg.lambda0));
    }
  } else {
    row(base);
  }
  json per_sf = json::array();
  for (int n = 1; n <= kNumRings; ++n) per_sf.push_back(coverage_per_sf(base, n));
  out.summary({{"coverage", coverage(base)}, {"coverage_per_sf", per_sf}, {"sweep_points", sweep}});
}

void run_meta(const GlobalOptions& g, const std::string& scope_text, std::int64_t trials) {
  const auto cfg = resolve_config(g);
  const Scenario s = make_scenario(cfg);
  const Scope scope = parse_scope(scope_text);
  Output out(g, "meta", cfg);
  json summary;
  summary["scope"] = scope.label();
  if (trials > 0) {
    MetaSimOptions opt;
    opt.realizations = trials;
    opt.scope = scope;
    opt.threads = g.threads;
    const auto sim = simulate_meta(s, opt, g.seed);
    auto& csv = out.table("meta", "z,md_beta,md_empirical");
    for (std::size_t i = 0; i < sim.z.size(); ++i)
      csv << num(sim.z[i]) << ',' << num(sim.beta[i]) << ',' << num(sim.empirical[i]) << '\n';
    summary["m1_sim"] = sim.m1_hat;
    summary["m2_sim"] = sim.m2_hat;
    summary["sup_distance"] = sim.sup_distance;
  } else {
    const auto md = meta_distribution(s, scope);
    auto& csv = out.table("meta", "z,md_beta");
    for (int k = 1; k <= 99; ++k) csv << num(k / 100.0) << ',' << num(md.coverage_at(k / 100.0)) << '\n';
  }
  const auto md = meta_distribution(s, scope);
  summary["m1"] = md.m1;
  summary["m2"] = md.m2;
  summary["alpha"] = md.alpha;
  summary["beta"] = md.beta;
  summary["degenerate"] = md.degenerate;
  summary["fairness_variance"] = md.fairness_variance();
  out.summary(summary);
}

void run_simulate(const GlobalOptions& g, std::int64_t trials, int per_ring) {
  const auto cfg = resolve_config(g);
  const Scenario s = make_scenario(cfg);
  LinkSimOptions opt;
  opt.realizations = trials;
  opt.grid_km = default_radial_grid(s.rings, per_ring);
  opt.threads = g.threads;
  const auto pts = simulate_link_success(s, opt, g.seed);
  Output out(g, "simulate", cfg);
  auto& csv = out.table("simulate", "d_km,ring,q_sim,q_se,q,w_sim,w_se,w,h_sim,h_se,h_lower,h_upper");
  for (const auto& p : pts) {
    const auto m = link_metrics(s, p.d_km);
    csv << num(p.d_km) << ',' << p.ring << ',' << num(p.q_hat) << ',' << num(p.q_se) << ',' << num(m.q_success) << ','
        << num(p.w_hat) << ',' << num(p.w_se) << ',' << num(m.w_success) << ',' << num(p.h_hat) << ','
        << num(p.h_se) << ',' << num(m.h_lower) << ',' << num(m.h_upper) << '\n';
  }
  out.summary({{"realizations", trials}, {"points", pts.size()}});
}

void run_optimize(const GlobalOptions& g, double z, int resolution, double lambda0_max) {
  const auto cfg = resolve_config(g);
  const Scenario base = make_scenario(cfg);
  const auto grid = default_grid(base, resolution, lambda0_max);
  const auto result = grid_search(base, grid, z, g.threads);
  Output out(g, "optimize", cfg);
  auto& csv = out.table("optimize", "kappa,lambda0,objective,feasible,o1,o2,o3,o4,o5,o6");
  for (const auto& p : result.points) {
    csv << num(p.kappa) << ',' << num(p.lambda0) << ',' << num(p.objective) << ',' << (p.feasible ? 1 : 0);
    for (double o : p.densities) csv << ',' << num(o);
    csv << '\n';
  }
  const auto& best = result.best();
  const double r = base.cell_radius();
  out.summary({{"z", z},
               {"kappa", best.kappa},
               {"lambda0", best.lambda0},
               {"objective", best.objective},
               {"devices", best.lambda0 * kPi * r * r},
               {"effective_density", std::vector<double>(best.densities.begin(), best.densities.end())},
               {"grid", {{"kappa_points", grid.kappa_points}, {"lambda0_points", grid.lambda0_points}}}});
}

void run_deploy(const GlobalOptions& g) {
  const auto cfg = resolve_config(g);
  const auto rings = build_rings(cfg);
  const auto deployment = sample(cfg, rings, g.seed);
  Output out(g, "deploy", cfg);
  std::ostringstream body;
  write_deployment_csv(body, deployment);
  const std::string text = body.str();
  const auto newline = text.find('\n');
  out.table("deploy", text.substr(0, newline)) << text.substr(newline + 1);
  std::vector<int> counts(kNumRings, 0);
  for (const auto& d : deployment.devices) ++counts[static_cast<std::size_t>(d.ring - 1)];
  out.summary({{"devices", deployment.devices.size()},
               {"expected_devices", expected_total(cfg, rings.cell_radius())},
               {"per_ring", counts}});
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LoRa cell coverage, meta distribution and deployment density tool"};
  app.require_subcommand(0, 1);
  GlobalOptions g;
  app.add_option("-c,--config", g.config_path, std::string("Config file (key = value); default from $") + kConfigEnv);
  app.add_option("-s,--set", g.settings, "Override a config key, e.g. --set kappa=-0.01")->allow_extra_args(false);
  app.add_option("-o,--out", g.out_dir, "Write CSV and JSON files to this directory instead of stdout");
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("-j,--threads", g.threads, "Worker threads (0 = hardware)")->capture_default_str();
  app.add_flag("--dump-config", g.dump_config, "Print the resolved config and exit");

  auto* rings = app.add_subcommand("rings", "SF ring radii, air-times and expected device counts");

  auto* collision = app.add_subcommand("collision", "Per-SF collision probability");
  std::string spread;
  std::int64_t collision_trials = 0;
  bool time_average = false;
  collision->add_option("--spread", spread, "Spread function kind:c (linear, sqrt, quadratic, log, invlog)");
  collision->add_option("--trials", collision_trials, "Stream simulation samples per SF (0 = none)");
  collision->add_flag("--time-average", time_average, "Simulate with the time-average sampler");

  auto* profile = app.add_subcommand("profile", "Q, W and H bounds along the radius");
  int profile_points = 200;
  profile->add_option("--points", profile_points, "Number of radial points")->capture_default_str();

  auto* cov = app.add_subcommand("coverage", "Network and per-SF coverage");
  int sweep = 0;
  cov->add_option("--sweep", sweep, "Sweep kappa over [-2/R^2, 2/R^2] with this many points");

  auto* meta = app.add_subcommand("meta", "Meta distribution moments and Beta fit");
  std::string scope = "network";
  std::int64_t meta_trials = 0;
  meta->add_option("--scope", scope, "network or ring1..ring6")->capture_default_str();
  meta->add_option("--trials", meta_trials, "PPP realizations for the empirical curve (0 = none)");

  auto* simulate = app.add_subcommand("simulate", "Monte-Carlo link success vs analytics");
  std::int64_t sim_trials = 10000;
  int per_ring = 5;
  simulate->add_option("--trials", sim_trials, "PPP realizations per distance")->capture_default_str();
  simulate->add_option("--per-ring", per_ring, "Distances per ring")->capture_default_str();

  auto* optimize = app.add_subcommand("optimize", "Grid search of (kappa, lambda0)");
  double z = 0.7;
  int resolution = 41;
  double lambda0_max = 3.0;
  optimize->add_option("-z,--z", z, "Reliability threshold")->capture_default_str();
  optimize->add_option("--spread", spread, "Spread function kind:c");
  optimize->add_option("--grid", resolution, "Points per axis")->capture_default_str();
  optimize->add_option("--lambda0-max", lambda0_max, "Largest lambda0 on the grid")->capture_default_str();

  auto* deploy = app.add_subcommand("deploy", "Sample one deployment");

  CLI11_PARSE(app, argc, argv);

  try {
    if (!spread.empty()) g.settings.push_back("spread=" + spread);
    if (g.dump_config) {
      std::cout << dump_config(resolve_config(g));
      return 0;
    }
    if (app.got_subcommand(rings)) run_rings(g);
    else if (app.got_subcommand(collision)) run_collision(g, collision_trials, time_average);
    else if (app.got_subcommand(profile)) run_profile(g, profile_points);
    else if (app.got_subcommand(cov)) run_coverage(g, sweep);
    else if (app.got_subcommand(meta)) run_meta(g, scope, meta_trials);
    else if (app.got_subcommand(simulate)) run_simulate(g, sim_trials, per_ring);
    else if (app.got_subcommand(optimize)) run_optimize(g, z, resolution, lambda0_max);
    else if (app.got_subcommand(deploy)) run_deploy(g);
    else {
      std::cout << app.help();
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
