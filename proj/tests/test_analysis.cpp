#include <doctest.h>

#include <cmath>

#include "qwalk/analysis.hpp"
#include "qwalk/errors.hpp"
#include "qwalk/localization.hpp"
#include "qwalk/weaklimit.hpp"
#include "test_support.hpp"

using namespace qwalk;

namespace {

SeriesRecord synthetic(double exponent, double t_min, double t_max) {
  SeriesRecord rec;
  rec.abscissa_name = "t";
  rec.columns = {"deviation"};
  for (double t = t_min; t <= t_max; t += 1.0) rec.add_row(t, {std::pow(t, exponent) * std::cos(0.7 * t + 0.3)});
  return rec;
}

}  // namespace

TEST_CASE("series record invariants") {
  SeriesRecord rec;
  rec.abscissa_name = "n";
  rec.columns = {"a", "b"};
  rec.add_row(-1.0, {1.0, 2.0});
  rec.add_row(0.0, {3.0, 4.0});
  CHECK_THROWS_AS(rec.add_row(0.0, {1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(rec.add_row(2.0, {1.0}), DomainError);
  CHECK_THROWS_AS(rec.add_row(3.0, {1.0, std::nan("")}), DomainError);
  CHECK_THROWS_AS(rec.add_row(INFINITY, {1.0, 1.0}), DomainError);
  CHECK(rec.size() == 2);
  CHECK(rec.column("b") == std::vector<double>{2.0, 4.0});
  CHECK_THROWS_AS(rec.column("missing"), DomainError);
}

TEST_CASE("pdf comparison") {
  const SeriesRecord zero = run_pdf_comparison(parse_spinor("0,1i,1", true), 0);
  REQUIRE(zero.size() == 1);
  CHECK(zero.column("eps_r")[0] == 0.0);

  const SeriesRecord sym = run_pdf_comparison(non_localizing_state(), 1024);
  const auto ps = sym.column("p_s");
  for (std::size_t i = 0; i < ps.size(); ++i) CHECK(std::abs(ps[i] - ps[ps.size() - 1 - i]) < 1e-12);

  const SeriesRecord rec = run_pdf_comparison(parse_spinor("1,-3,2+i", true), 512);
  for (double e : rec.column("eps_r")) {
    CHECK(e >= 0.0);
    CHECK(e <= 2.0);
  }
  const auto avg = rec.column("p_avg");
  CHECK(avg[512] == doctest::Approx(p_avg(parse_spinor("1,-3,2+i", true), 0, 512)));
  CHECK_THROWS_AS(run_pdf_comparison(non_localizing_state(), 100, AnalysisLimits{50}), ResourceError);
}

TEST_CASE("localization scan") {
  LocalizationScanConfig cfg;
  cfg.t_final = 4096;
  cfg.window = 256;
  cfg.n_max = 4;
  const auto recs = run_localization_scan({parse_spinor("10,0,1", true), non_localizing_state()}, cfg);
  REQUIRE(recs.size() == 2);
  const auto pred = recs[0].column("p1");
  for (std::int64_t n = 1; n <= 4; ++n) {
    const double right = pred[static_cast<std::size_t>(4 + n)];
    const double left = pred[static_cast<std::size_t>(4 - n)];
    CHECK(std::abs(right - left) > 0.5 * std::max(right, left));
  }
  // The time-averaged excess already sits close to p1 near the origin.
  CHECK(recs[0].column("rel_err_time_avg")[4] < 0.05);
  for (double p : recs[1].column("p1")) CHECK(p == 0.0);

  cfg.window = 5000;
  CHECK_THROWS_AS(run_localization_scan({non_localizing_state()}, cfg), DomainError);
  cfg.window = 16;
  cfg.max_steps = 1000;
  CHECK_THROWS_AS(run_localization_scan({non_localizing_state()}, cfg), ResourceError);
}

TEST_CASE("time series") {
  const Spinor3 psi = parse_spinor("0,1i,1", true);
  const SeriesRecord rec = run_time_series(psi, 0, 100, 160);
  CHECK(rec.size() == 61);
  const auto dev = rec.column("deviation");
  const auto ps = rec.column("p_s");
  const auto smooth = rec.column("p_smooth");
  for (std::size_t i = 0; i < rec.size(); ++i) CHECK(dev[i] == doctest::Approx(ps[i] - smooth[i]));
  CHECK(smooth[0] == doctest::Approx(p1(psi, 0) + p_avg(psi, 0, 100)));
  CHECK_THROWS_AS(run_time_series(psi, 0, 10, 5), DomainError);
}

TEST_CASE("envelope fits recover synthetic exponents") {
  for (double p : {-0.5, -1.5, -3.0}) {
    const EnvelopeFit f = fit_envelope(synthetic(p, 256, 16384));
    CHECK(f.exponent == doctest::Approx(p).epsilon(0.02));
    CHECK(f.points >= kMinEnvelopePoints);
    CHECK(f.r_squared > 0.99);
    CHECK(f.r_squared <= 1.0);
  }
  const EnvelopeFit windowed = fit_envelope(synthetic(-1.0, 100, 5000), "deviation", {1000, 4000, 12});
  CHECK(windowed.t_min == 1000);
  CHECK(windowed.exponent == doctest::Approx(-1.0).epsilon(0.02));

  SeriesRecord mono;
  mono.abscissa_name = "t";
  mono.columns = {"deviation"};
  for (double t = 1; t <= 100; t += 1) mono.add_row(t, {1.0 / t});
  CHECK_THROWS_AS(fit_envelope(mono), DiagnosticError);
  const EnvelopeFit pl = fit_power_law(mono, "deviation", 1, 100);
  CHECK(pl.exponent == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("moment sweep") {
  const SeriesRecord rec = run_moment_sweep(Spinor3{{1.0, 0.0, 1.0}}.normalized(), {64, 128, 256});
  const auto m1 = rec.column("m1_sim");
  for (std::size_t i = 0; i < rec.size(); ++i) CHECK(std::abs(m1[i]) < 1e-10 * rec.abscissa[i]);
  const SeriesRecord generic = run_moment_sweep(parse_spinor("0,1i,1", true), {256, 1024, 4096});
  const auto rel = generic.column("m2_rel_diff");
  CHECK(rel.back() < rel.front());
  CHECK(rel.back() < 0.01);
  CHECK_THROWS_AS(run_moment_sweep(non_localizing_state(), {64, 32}), DomainError);
  CHECK_THROWS_AS(run_moment_sweep(non_localizing_state(), {}), DomainError);
}

TEST_CASE("drivers are deterministic") {
  const Spinor3 psi = parse_spinor("1,-1.9,1", true);
  const SeriesRecord a = run_pdf_comparison(psi, 300);
  const SeriesRecord b = run_pdf_comparison(psi, 300);
  CHECK(a.rows == b.rows);
}
