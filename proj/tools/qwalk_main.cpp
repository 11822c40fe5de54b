// qwalk: command-line front end for the three-state Grover walk library.
//
//   qwalk evolve       --psi0 "0,1,0" --t 1
//   qwalk localization --psi0 "1,-1.9,1" --psi0 "10,0,1" --t 65536
//   qwalk asymptotic   --psi0 "0,1i,1" --t 4096
//   qwalk weak-limit   --psi0 "1,-2,1"
//   qwalk moments      --psi0 "1,0,0"
//   qwalk convergence  --psi0 "0,1i,1" --site 0 --t-min 256 --t-max 16384
//   qwalk oracle-check --psi0 "1,0,0" --t 512
//
// Every subcommand accepts --format csv|json and --output <path>.
// Exit status: 0 success, 1 usage error, 2 domain or resource error.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "qwalk/analysis.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/localization.hpp"
#include "qwalk/output.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/weaklimit.hpp"

namespace {

using namespace qwalk;

constexpr std::int64_t kDefaultCap = std::int64_t{1} << 14;
constexpr std::int64_t kDefaultScanCap = std::int64_t{1} << 16;
constexpr const char* kDefaultPsi0 = "0,1i,1";

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> psi0_text{kDefaultPsi0};
  std::int64_t t = -1;
  std::int64_t t_min = 256;
  std::int64_t t_max = std::int64_t{1} << 14;
  std::int64_t site = 0;
  std::int64_t n_max = 8;
  std::int64_t window = kDefaultSmoothingWindow;
  std::int64_t time_window = 1024;
  std::int64_t samples = -1;
  std::int64_t points = 201;
  std::vector<std::int64_t> times{256, 512, 1024, 2048, 4096};
  std::string format = "csv";
  std::string output;
  double guard = kDefaultFrontGuard;
  std::int64_t cap = -1;
};

/// Optional override of the evolution cap, QWALK_MAX_STEPS.
std::int64_t cap_from_environment(std::int64_t fallback) {
  const char* env = std::getenv("QWALK_MAX_STEPS");
  if (env == nullptr || *env == '\0') return fallback;
  try {
    std::size_t used = 0;
    const long long v = std::stoll(env, &used);
    if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
    return v;
  } catch (const std::exception&) {
    throw ParseError(std::string("QWALK_MAX_STEPS must be a positive integer, got '") + env + "'");
  }
}

Meta config_meta(const RunConfig& cfg, std::int64_t cap) {
  Meta m;
  m["tool"] = "qwalk";
  m["version"] = kVersion;
  m["subcommand"] = cfg.subcommand;
  m["psi0_input"] = cfg.psi0_text;
  m["t"] = cfg.t;
  m["t_min"] = cfg.t_min;
  m["t_max"] = cfg.t_max;
  m["site"] = cfg.site;
  m["n_max"] = cfg.n_max;
  m["window"] = cfg.window;
  m["time_window"] = cfg.time_window;
  m["samples"] = cfg.samples < 0 ? default_samples(cfg.t) : cfg.samples;
  m["points"] = cfg.points;
  m["times"] = cfg.times;
  m["format"] = cfg.format;
  m["output"] = cfg.output.empty() ? "-" : cfg.output;
  m["guard"] = cfg.guard;
  m["max_steps"] = cap;
  return m;
}

void validate(const RunConfig& cfg) {
  auto positive = [](std::int64_t v, const char* name) {
    if (v < 1) throw ParseError(std::string("--") + name + " must be >= 1");
  };
  if (cfg.t < 0) throw ParseError("--t must be >= 0");
  if (cfg.t_min < 1 || cfg.t_max < cfg.t_min) throw ParseError("need 1 <= --t-min <= --t-max");
  if (cfg.n_max < 0) throw ParseError("--n-max must be >= 0");
  positive(cfg.window, "window");
  positive(cfg.time_window, "time-window");
  if (cfg.subcommand == "asymptotic" && cfg.window > 2 * cfg.t + 1) {
    throw ParseError("--window must not exceed the support width 2t+1");
  }
  positive(cfg.points, "points");
  if (cfg.samples != -1 && cfg.samples < min_samples(cfg.t)) {
    throw ParseError("--samples must be >= 2t+1 = " + std::to_string(min_samples(cfg.t)));
  }
  if (!(cfg.guard >= 0.0) || !(cfg.guard < kFrontSpeed)) throw ParseError("--guard must lie in [0, 1/sqrt(3))");
  if (cfg.cap < 1) throw ParseError("--max-steps must be >= 1");
  if (cfg.psi0_text.empty()) throw ParseError("at least one --psi0 is required");
  for (std::size_t i = 0; i < cfg.times.size(); ++i) {
    if (cfg.times[i] < 1 || (i > 0 && cfg.times[i] <= cfg.times[i - 1])) {
      throw ParseError("--times must be strictly increasing positive integers");
    }
  }
}

std::vector<SeriesRecord> cmd_evolve(const RunConfig& cfg, const Spinor3& psi, Meta& meta) {
  const PdfSlice p = pdf(evolve(psi, cfg.t, EvolutionLimits{cfg.cap}));
  SeriesRecord rec;
  rec.label = "pdf";
  rec.abscissa_name = "n";
  rec.columns = {"p"};
  for (std::int64_t n = p.first_site(); n <= p.last_site(); ++n) rec.add_row(static_cast<double>(n), {p.at(n)});
  meta["total_probability"] = p.sum();
  return {rec};
}

std::vector<SeriesRecord> cmd_localization(const RunConfig& cfg, const std::vector<Spinor3>& states, Meta& meta) {
  LocalizationScanConfig sc;
  sc.t_final = cfg.t;
  sc.n_max = cfg.n_max;
  sc.window = cfg.time_window;
  sc.max_steps = cfg.cap;
  meta["decay_ratio"] = kKappaPlus * kKappaPlus;
  return run_localization_scan(states, sc);
}

std::vector<SeriesRecord> cmd_asymptotic(const RunConfig& cfg, const Spinor3& psi, Meta& meta) {
  SeriesRecord rec = run_pdf_comparison(psi, cfg.t, AnalysisLimits{cfg.cap, cfg.guard}, static_cast<int>(cfg.window));
  const auto eps = rec.column("eps_r");
  double worst = 0.0;
  for (double e : eps) worst = std::max(worst, e);
  meta["max_eps_r"] = worst;
  return {rec};
}

std::vector<SeriesRecord> cmd_weak_limit(const RunConfig& cfg, const Spinor3& psi, Meta& meta) {
  const WeakLimitDensity wl = limit_density(psi);
  const double integral = wl.integral();
  meta["delta_weight"] = wl.delta_weight;
  meta["front_integral"] = integral;
  meta["normalization_residual"] = std::abs(wl.delta_weight + integral - 1.0);
  meta["localization_total"] = localization_total(psi);

  SeriesRecord rec;
  rec.label = "weak_limit";
  rec.abscissa_name = "v";
  rec.columns = {"f"};
  // Open interval: the density diverges at the front edge.
  const double edge = kFrontSpeed;
  for (std::int64_t i = 0; i < cfg.points; ++i) {
    const double v = -edge + 2.0 * edge * (static_cast<double>(i) + 0.5) / static_cast<double>(cfg.points);
    rec.add_row(v, {wl.density(v)});
  }
  return {rec};
}

std::vector<SeriesRecord> cmd_moments(const RunConfig& cfg, const Spinor3& psi, Meta& meta) {
  const MomentSet m = moments(psi);
  meta["m0"] = m.m0;
  meta["m1_rate"] = m.m1_rate;
  meta["m2_rate"] = m.m2_rate;
  meta["delta_weight"] = limit_density(psi).delta_weight;
  return {run_moment_sweep(psi, cfg.times, AnalysisLimits{cfg.cap, cfg.guard})};
}

std::vector<SeriesRecord> cmd_convergence(const RunConfig& cfg, const Spinor3& psi, Meta& meta) {
  SeriesRecord rec = run_time_series(psi, cfg.site, cfg.t_min, cfg.t_max, AnalysisLimits{cfg.cap, cfg.guard});
  for (const char* column : {"deviation", "eps_r"}) {
    const std::string key = std::string("envelope_") + column;
    try {
      const EnvelopeFit f = fit_envelope(rec, column);
      meta[key] = {{"exponent", f.exponent}, {"intercept", f.intercept}, {"r_squared", f.r_squared},
                   {"points", f.points}};
    } catch (const DiagnosticError& e) {
      meta[key] = std::string("unavailable: ") + e.what();
    }
  }
  return {rec};
}

std::vector<SeriesRecord> cmd_oracle_check(const RunConfig& cfg, const Spinor3& psi, Meta& meta) {
  const std::int64_t samples = cfg.samples > 0 ? cfg.samples : default_samples(cfg.t);
  const AmplitudeLine direct = evolve(psi, cfg.t, EvolutionLimits{cfg.cap});
  const AmplitudeLine oracle = inverse_transform_line(psi, cfg.t, samples);
  SeriesRecord rec;
  rec.label = "oracle_check";
  rec.abscissa_name = "n";
  rec.columns = {"p_direct", "p_oracle", "max_component_error"};
  double worst = 0.0;
  for (std::int64_t n = -cfg.t; n <= cfg.t; ++n) {
    const Spinor3 a = direct.at(n);
    const Spinor3 b = oracle.at(n);
    const double err = max_abs_diff(a, b);
    worst = std::max(worst, err);
    rec.add_row(static_cast<double>(n), {a.norm_squared(), b.norm_squared(), err});
  }
  meta["samples_used"] = samples;
  meta["max_component_error"] = worst;
  meta["norm_residual"] = std::abs(direct.total_probability() - 1.0);
  return {rec};
}

void add_common_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--psi0", cfg.psi0_text, "initial coin state, e.g. \"0,1i,1\" (normalized automatically)")
      ->default_str(kDefaultPsi0);
  sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--output", cfg.output, "output file (default: standard output)");
  sub->add_option("--max-steps", cfg.cap, "evolution cap (default 16384, 65536 for localization)");
  sub->add_option("--guard", cfg.guard, "excluded band below the front edge |v| = 1/sqrt(3)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Three-state Grover walk on the line: simulation and asymptotic analysis"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* evolve_cmd = app.add_subcommand("evolve", "site probabilities at time t");
  evolve_cmd->add_option("--t", cfg.t, "time step")->required();

  auto* loc_cmd = app.add_subcommand("localization", "stationary profile p1(n) against time-averaged simulation");
  loc_cmd->add_option("--t", cfg.t, "final time (default 65536)");
  loc_cmd->add_option("--n-max", cfg.n_max, "largest |n| reported");
  loc_cmd->add_option("--time-window", cfg.time_window, "number of final steps averaged (default 1024)");

  auto* asym_cmd = app.add_subcommand("asymptotic", "stationary-phase PDF and relative difference at time t");
  asym_cmd->add_option("--t", cfg.t, "time step")->required();
  asym_cmd->add_option("--window", cfg.window, "sites in the spatial average column (default 16)");

  auto* wl_cmd = app.add_subcommand("weak-limit", "limit density f(v), delta weight and normalization");
  wl_cmd->add_option("--points", cfg.points, "number of velocity samples");

  auto* mom_cmd = app.add_subcommand("moments", "closed-form moment rates and a simulated sweep");
  mom_cmd->add_option("--times", cfg.times, "strictly increasing sweep times")->delimiter(',');

  auto* conv_cmd = app.add_subcommand("convergence", "time series at one site with envelope fits");
  conv_cmd->add_option("--site", cfg.site, "lattice site");
  conv_cmd->add_option("--t-min", cfg.t_min, "first time step");
  conv_cmd->add_option("--t-max", cfg.t_max, "last time step");

  auto* oracle_cmd = app.add_subcommand("oracle-check", "direct evolution against the inverse-DFT oracle");
  oracle_cmd->add_option("--t", cfg.t, "time step (default 512)");
  oracle_cmd->add_option("--samples", cfg.samples, "DFT samples (default 2t+2)");

  for (auto* sub : {evolve_cmd, loc_cmd, asym_cmd, wl_cmd, mom_cmd, conv_cmd, oracle_cmd}) {
    add_common_options(sub, cfg);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "qwalk: " << e.what() << "\n\n" << app.help();
    return 1;
  }

  std::vector<Spinor3> states;
  std::int64_t cap = 0;
  try {
    cfg.subcommand = app.get_subcommands().front()->get_name();
    const bool is_scan = cfg.subcommand == "localization";
    if (cfg.t < 0) {
      if (is_scan) cfg.t = std::int64_t{1} << 16;
      if (cfg.subcommand == "oracle-check") cfg.t = 512;
      if (cfg.subcommand == "weak-limit" || cfg.subcommand == "moments" || cfg.subcommand == "convergence") cfg.t = 0;
    }
    if (cfg.cap < 0) cfg.cap = cap_from_environment(is_scan ? kDefaultScanCap : kDefaultCap);
    cap = cfg.cap;
    validate(cfg);
    for (const auto& text : cfg.psi0_text) states.push_back(parse_spinor(text, true));
    if (!is_scan && states.size() != 1) throw ParseError("only the localization subcommand accepts several --psi0");
  } catch (const ParseError& e) {
    std::cerr << "qwalk: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "qwalk: " << e.what() << '\n';
    return 2;
  }

  try {
    Meta meta = config_meta(cfg, cap);
    if (states.size() == 1) meta["psi0"] = format_spinor(states.front());
    std::vector<SeriesRecord> records;
    const Spinor3& psi = states.front();
    if (cfg.subcommand == "evolve") {
      records = cmd_evolve(cfg, psi, meta);
    } else if (cfg.subcommand == "localization") {
      records = cmd_localization(cfg, states, meta);
    } else if (cfg.subcommand == "asymptotic") {
      records = cmd_asymptotic(cfg, psi, meta);
    } else if (cfg.subcommand == "weak-limit") {
      records = cmd_weak_limit(cfg, psi, meta);
    } else if (cfg.subcommand == "moments") {
      records = cmd_moments(cfg, psi, meta);
    } else if (cfg.subcommand == "convergence") {
      records = cmd_convergence(cfg, psi, meta);
    } else {
      records = cmd_oracle_check(cfg, psi, meta);
    }

    const OutputFormat format = cfg.format == "json" ? OutputFormat::json : OutputFormat::csv;
    if (cfg.output.empty()) {
      write_records(std::cout, format, records, meta);
    } else {
      std::ofstream out(cfg.output, std::ios::binary);
      if (!out) throw ResourceError("cannot open output file '" + cfg.output + "'");
      write_records(out, format, records, meta);
    }
  } catch (const std::exception& e) {
    std::cerr << "qwalk: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
