#pragma once

// Experiment drivers that assemble simulation and analytic predictions into
// tables, and the envelope fits used to measure convergence rates.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qwalk/algebra.hpp"
#include "qwalk/asymptotics.hpp"

namespace qwalk {

/// A table with one strictly monotone abscissa and named real columns.
struct SeriesRecord {
  std::string label;
  std::string abscissa_name;
  std::vector<std::string> columns;
  std::vector<double> abscissa;
  std::vector<std::vector<double>> rows;
  /// Free-form provenance (initial condition, window sizes, ...).
  std::map<std::string, std::string> meta;

  /// Throws DomainError on non-finite values, wrong arity, or a
  /// non-monotone abscissa.
  void add_row(double x, std::vector<double> values);
  std::size_t size() const { return rows.size(); }
  std::vector<double> column(std::string_view name) const;
};

struct AnalysisLimits {
  std::int64_t max_steps = std::int64_t{1} << 14;
  double guard = kDefaultFrontGuard;
};

inline constexpr int kDefaultSmoothingWindow = 16;

/// Per-site p_s (simulation), p_a (stationary phase), eps_r, the spatial
/// average of p_s over `smoothing_window` sites and the smooth p_avg.
SeriesRecord run_pdf_comparison(const Spinor3& psi0, std::int64_t t, const AnalysisLimits& limits = {},
                                int smoothing_window = kDefaultSmoothingWindow);

struct LocalizationScanConfig {
  std::int64_t t_final = std::int64_t{1} << 16;
  std::int64_t n_max = 8;
  /// Number of final steps averaged over.
  std::int64_t window = 1024;
  std::int64_t max_steps = std::int64_t{1} << 16;
};

/// For each initial condition: p1(n) against the simulated excess
/// p_s(n,t) - p_avg(n,t), both time-averaged over the last `window` steps and
/// at t_final, for |n| <= n_max.
std::vector<SeriesRecord> run_localization_scan(const std::vector<Spinor3>& initial_states,
                                                const LocalizationScanConfig& config = {});

/// p(site, t) for t in [t_min, t_max] with the smooth prediction p1 + p_avg,
/// the deviation from it, the stationary-phase p_a, eps_r, q1 and q_avg.
SeriesRecord run_time_series(const Spinor3& psi0, std::int64_t site, std::int64_t t_min, std::int64_t t_max,
                             const AnalysisLimits& limits = {});

struct EnvelopeFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double t_min = 0.0;
  double t_max = 0.0;
  std::size_t points = 0;
};

struct EnvelopeOptions {
  /// Abscissa range; 0 means the record's own bound.
  double t_min = 0.0;
  double t_max = 0.0;
  /// Logarithmic bins; each contributes its largest local maximum.
  int bins = 24;
};

inline constexpr std::size_t kMinEnvelopePoints = 8;

/// Log-log least-squares slope through the local maxima of |column|.
/// Throws DiagnosticError with fewer than kMinEnvelopePoints maxima.
EnvelopeFit fit_envelope(const SeriesRecord& series, std::string_view column = "deviation",
                         const EnvelopeOptions& options = {});

/// Plain log-log least squares over every row in range (for non-oscillating
/// leading behaviour).
EnvelopeFit fit_power_law(const SeriesRecord& series, std::string_view column, double t_min, double t_max);

/// Simulated <n>(t), <n^2>(t) against the closed-form rates.
SeriesRecord run_moment_sweep(const Spinor3& psi0, const std::vector<std::int64_t>& times,
                              const AnalysisLimits& limits = {});

}  // namespace qwalk
