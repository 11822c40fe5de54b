#include "qwalk/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/evolution.hpp"
#include "qwalk/localization.hpp"
#include "qwalk/weaklimit.hpp"

namespace qwalk {

namespace {

void check_cap(std::int64_t t, std::int64_t cap) {
  if (t > cap) {
    throw ResourceError("time " + std::to_string(t) + " exceeds the configured cap of " + std::to_string(cap) +
                        " steps");
  }
}

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
};

LineFit least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<double>(x.size());
  double sx = 0, sy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n, my = sy / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  LineFit f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - (f.intercept + f.slope * x[i]);
    ss_res += r * r;
  }
  f.r_squared = syy > 0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  return f;
}

std::string describe(const Spinor3& psi) { return format_spinor(psi); }

}  // namespace

void SeriesRecord::add_row(double x, std::vector<double> values) {
  if (values.size() != columns.size()) {
    throw DomainError("row has " + std::to_string(values.size()) + " values, record '" + label + "' has " +
                      std::to_string(columns.size()) + " columns");
  }
  if (!std::isfinite(x)) throw DomainError("non-finite abscissa in record '" + label + "'");
  for (double v : values) {
    if (!std::isfinite(v)) throw DomainError("non-finite value in record '" + label + "'");
  }
  if (!abscissa.empty() && !(x > abscissa.back())) {
    throw DomainError("abscissa of record '" + label + "' must be strictly increasing");
  }
  abscissa.push_back(x);
  rows.push_back(std::move(values));
}

std::vector<double> SeriesRecord::column(std::string_view name) const {
  auto it = std::find(columns.begin(), columns.end(), name);
  if (it == columns.end()) throw DomainError("record '" + label + "' has no column '" + std::string(name) + "'");
  const auto idx = static_cast<std::size_t>(it - columns.begin());
  std::vector<double> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r[idx]);
  return out;
}

SeriesRecord run_pdf_comparison(const Spinor3& psi0, std::int64_t t, const AnalysisLimits& limits,
                                int smoothing_window) {
  if (t < 0) throw DomainError("time must be non-negative");
  if (smoothing_window < 1) throw DomainError("smoothing window must be >= 1");
  check_cap(t, limits.max_steps);
  SeriesRecord rec;
  rec.label = "pdf_comparison";
  rec.abscissa_name = "n";
  rec.columns = {"p_s", "p_a", "eps_r", "p_smooth", "p_avg"};
  rec.meta["psi0"] = describe(psi0);
  rec.meta["t"] = std::to_string(t);
  rec.meta["smoothing_window"] = std::to_string(smoothing_window);

  const PdfSlice ps = pdf(evolve(psi0, t, EvolutionLimits{limits.max_steps}));
  const PdfSlice smooth = spatial_average(ps, smoothing_window);
  for (std::int64_t n = ps.first_site(); n <= ps.last_site(); ++n) {
    const double s = ps.at(n);
    // At t = 0 the walk is exactly the initial condition.
    const double a = t == 0 ? s : asymptotic_pdf(psi0, n, t, limits.guard);
    const double avg = t == 0 ? 0.0 : p_avg(psi0, n, t);
    rec.add_row(static_cast<double>(n), {s, a, relative_difference(s, a), smooth.at(n), avg});
  }
  return rec;
}

std::vector<SeriesRecord> run_localization_scan(const std::vector<Spinor3>& initial_states,
                                                const LocalizationScanConfig& config) {
  if (config.window < 1 || config.window > config.t_final) {
    throw DomainError("localization window must lie in [1, t_final]");
  }
  if (config.n_max < 0) throw DomainError("n_max must be non-negative");
  check_cap(config.t_final, config.max_steps);

  std::vector<SeriesRecord> out;
  for (std::size_t idx = 0; idx < initial_states.size(); ++idx) {
    const Spinor3& psi = initial_states[idx];
    const std::int64_t width = 2 * config.n_max + 1;
    std::vector<double> sum_ps(static_cast<std::size_t>(width), 0.0);
    std::vector<double> sum_excess(static_cast<std::size_t>(width), 0.0);

    Walker w(psi, EvolutionLimits{config.max_steps});
    const std::int64_t t_first = config.t_final - config.window + 1;
    w.advance_to(t_first - 1);
    while (w.time() < config.t_final) {
      w.advance();
      for (std::int64_t n = -config.n_max; n <= config.n_max; ++n) {
        const double p = w.probability(n);
        const auto i = static_cast<std::size_t>(n + config.n_max);
        sum_ps[i] += p;
        sum_excess[i] += p - p_avg(psi, n, w.time());
      }
    }

    SeriesRecord rec;
    rec.label = "localization[" + std::to_string(idx) + "]";
    rec.abscissa_name = "n";
    rec.columns = {"p1", "p_s_time_avg", "excess_time_avg", "excess_instant", "rel_err_time_avg", "rel_err_instant"};
    rec.meta["psi0"] = describe(psi);
    rec.meta["t_final"] = std::to_string(config.t_final);
    rec.meta["window"] = std::to_string(config.window);
    rec.meta["excess"] = "p_s(n,t) - p_avg(n,t)";
    rec.meta["rel_err"] = "|excess - p1| / p1, or |excess| where p1 == 0";

    const auto wdw = static_cast<double>(config.window);
    for (std::int64_t n = -config.n_max; n <= config.n_max; ++n) {
      const auto i = static_cast<std::size_t>(n + config.n_max);
      const double pred = p1(psi, n);
      const double avg = sum_excess[i] / wdw;
      const double inst = w.probability(n) - p_avg(psi, n, config.t_final);
      auto rel = [pred](double x) { return pred > 0 ? std::abs(x - pred) / pred : std::abs(x); };
      rec.add_row(static_cast<double>(n), {pred, sum_ps[i] / wdw, avg, inst, rel(avg), rel(inst)});
    }
    out.push_back(std::move(rec));
  }
  return out;
}

SeriesRecord run_time_series(const Spinor3& psi0, std::int64_t site, std::int64_t t_min, std::int64_t t_max,
                             const AnalysisLimits& limits) {
  if (t_min < 1 || t_max < t_min) throw DomainError("time series needs 1 <= t_min <= t_max");
  check_cap(t_max, limits.max_steps);

  SeriesRecord rec;
  rec.label = "time_series";
  rec.abscissa_name = "t";
  rec.columns = {"p_s", "p_smooth", "deviation", "p_a", "eps_r", "q1", "q_avg"};
  rec.meta["psi0"] = describe(psi0);
  rec.meta["site"] = std::to_string(site);
  rec.meta["p_smooth"] = "p1(n) + p_avg(n,t)";

  const double stationary = p1(psi0, site);
  Walker w(psi0, EvolutionLimits{limits.max_steps});
  w.advance_to(t_min);
  while (true) {
    const std::int64_t t = w.time();
    const double ps = w.probability(site);
    const double smooth = stationary + p_avg(psi0, site, t);
    const double pa = asymptotic_pdf(psi0, site, t, limits.guard);
    rec.add_row(static_cast<double>(t), {ps, smooth, ps - smooth, pa, relative_difference(ps, pa),
                                         q1(psi0, site, t, limits.guard), q_avg(psi0, site, t, limits.guard)});
    if (t == t_max) break;
    w.advance();
  }
  return rec;
}

EnvelopeFit fit_envelope(const SeriesRecord& series, std::string_view column, const EnvelopeOptions& options) {
  const std::vector<double> y = series.column(column);
  const std::vector<double>& x = series.abscissa;
  if (x.empty()) throw DiagnosticError("cannot fit an envelope to an empty series");
  const double lo = options.t_min > 0 ? options.t_min : x.front();
  const double hi = options.t_max > 0 ? options.t_max : x.back();
  if (!(lo > 0) || !(hi > lo)) throw DiagnosticError("envelope fit needs 0 < t_min < t_max");
  if (options.bins < 1) throw DiagnosticError("envelope fit needs at least one bin");

  // Largest local maximum of |y| in each logarithmic bin.
  const double log_lo = std::log(lo);
  const double bin_width = (std::log(hi) - log_lo) / options.bins;
  std::vector<double> best(static_cast<std::size_t>(options.bins), -1.0);
  std::vector<double> best_x(static_cast<std::size_t>(options.bins), 0.0);
  for (std::size_t i = 1; i + 1 < y.size(); ++i) {
    if (x[i] < lo || x[i] > hi) continue;
    const double a = std::abs(y[i]);
    if (!(a > 0) || a < std::abs(y[i - 1]) || a < std::abs(y[i + 1])) continue;
    auto b = static_cast<int>((std::log(x[i]) - log_lo) / bin_width);
    b = std::clamp(b, 0, options.bins - 1);
    if (a > best[static_cast<std::size_t>(b)]) {
      best[static_cast<std::size_t>(b)] = a;
      best_x[static_cast<std::size_t>(b)] = x[i];
    }
  }
  std::vector<double> lx, ly;
  for (std::size_t b = 0; b < best.size(); ++b) {
    if (best[b] > 0) {
      lx.push_back(std::log(best_x[b]));
      ly.push_back(std::log(best[b]));
    }
  }
  if (lx.size() < kMinEnvelopePoints) {
    throw DiagnosticError("envelope fit found only " + std::to_string(lx.size()) + " local maxima in [" +
                          std::to_string(lo) + ", " + std::to_string(hi) + "]; need " +
                          std::to_string(kMinEnvelopePoints));
  }
  const LineFit f = least_squares(lx, ly);
  return EnvelopeFit{f.slope, f.intercept, f.r_squared, lo, hi, lx.size()};
}

EnvelopeFit fit_power_law(const SeriesRecord& series, std::string_view column, double t_min, double t_max) {
  const std::vector<double> y = series.column(column);
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double x = series.abscissa[i];
    if (x < t_min || x > t_max || !(y[i] > 0) || !(x > 0)) continue;
    lx.push_back(std::log(x));
    ly.push_back(std::log(y[i]));
  }
  if (lx.size() < 2) throw DiagnosticError("power-law fit needs at least two positive points");
  const LineFit f = least_squares(lx, ly);
  return EnvelopeFit{f.slope, f.intercept, f.r_squared, t_min, t_max, lx.size()};
}

SeriesRecord run_moment_sweep(const Spinor3& psi0, const std::vector<std::int64_t>& times,
                              const AnalysisLimits& limits) {
  if (times.empty()) throw DomainError("moment sweep needs at least one time");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (times[i] < 1) throw DomainError("moment sweep times must be >= 1");
    if (i > 0 && times[i] <= times[i - 1]) throw DomainError("moment sweep times must be strictly increasing");
  }
  check_cap(times.back(), limits.max_steps);

  const MomentSet m = moments(psi0);
  SeriesRecord rec;
  rec.label = "moment_sweep";
  rec.abscissa_name = "t";
  rec.columns = {"m1_sim", "m1_pred", "m1_rel_diff", "m2_sim", "m2_pred", "m2_rel_diff"};
  rec.meta["psi0"] = describe(psi0);

  Walker w(psi0, EvolutionLimits{limits.max_steps});
  for (std::int64_t t : times) {
    w.advance_to(t);
    const auto td = static_cast<double>(t);
    const double m1s = w.first_moment();
    const double m2s = w.second_moment();
    const double m1p = m.m1_rate * td;
    const double m2p = m.m2_rate * td * td;
    const double m1rel = m1p != 0 ? std::abs(m1s - m1p) / std::abs(m1p) : std::abs(m1s);
    const double m2rel = m2p != 0 ? std::abs(m2s - m2p) / m2p : std::abs(m2s);
    rec.add_row(td, {m1s, m1p, m1rel, m2s, m2p, m2rel});
  }
  return rec;
}

}  // namespace qwalk
