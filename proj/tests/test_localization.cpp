#include <doctest.h>

#include <cmath>
#include <numbers>

#include "qwalk/errors.hpp"
#include "qwalk/localization.hpp"
#include "qwalk/spectral.hpp"
#include "test_support.hpp"

using namespace qwalk;

namespace {

constexpr double kPi = std::numbers::pi;
const double kRoot6 = std::sqrt(6.0);

// U1(n) as the k-integral of the unit-eigenvalue projector, on a midpoint
// grid that never touches the degenerate point k = 0.
Mat3 u1_by_quadrature(std::int64_t n, int points = 2048) {
  Mat3 acc;
  for (int j = 0; j < points; ++j) {
    const double k = -kPi + (j + 0.5) * 2.0 * kPi / points;
    acc += std::polar(1.0 / points, static_cast<double>(n) * k) * eigensystem(k).projectors[0];
  }
  return acc;
}

// (1/2 pi i) times the contour integral of a kappa^m / (1 + 10 kappa + kappa^2)
// around a circle of radius 0.05, which encloses only the origin.
double residue_by_contour(std::int64_t m, double a, int points = 256) {
  const double r = 0.05;
  Complex acc = 0.0;
  for (int j = 0; j < points; ++j) {
    const Complex z = std::polar(r, 2.0 * kPi * j / points);
    acc += a * std::pow(z, static_cast<double>(m)) / (1.0 + 10.0 * z + z * z) * z;
  }
  return (acc / static_cast<double>(points)).real();
}

}  // namespace

TEST_CASE("stationary matrix entries") {
  const double kp = -5.0 + 2.0 * kRoot6;
  CHECK(kKappaPlus == doctest::Approx(kp).epsilon(1e-15));
  CHECK(kKappaPlus * kKappaMinus == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(u1(0)(0, 0).real() == doctest::Approx(0.4082483).epsilon(1e-7));
  CHECK(u1(1)(0, 0).real() == doctest::Approx(-0.0412414).epsilon(1e-6));
  CHECK(u1(1)(0, 0).real() == doctest::Approx(kp / kRoot6).epsilon(1e-14));
  CHECK(u1(-2)(0, 0).real() == doctest::Approx(kp * kp / kRoot6).epsilon(1e-14));
  // The n > 0 matrix, written in the alternative residue form.
  const double c = 1.0 - std::sqrt(2.0 / 3.0);
  const double d = 2.0 - 5.0 / kRoot6;
  CHECK(max_abs_diff(stationary_matrices().positive.mirrored(), stationary_matrices().negative) < 1e-15);
  CHECK(stationary_matrices().positive(0, 1).real() == doctest::Approx(c).epsilon(1e-14));
  CHECK(stationary_matrices().positive(0, 2).real() == doctest::Approx(d).epsilon(1e-14));
  CHECK(std::isfinite(u1(-2000)(0, 0).real()));
  CHECK(u1(-2000)(0, 0).real() == 0.0);
}

TEST_CASE("closed form matches the integral of the projector") {
  for (std::int64_t n = -6; n <= 6; ++n) CHECK(max_abs_diff(u1(n), u1_by_quadrature(n)) < 1e-11);
}

TEST_CASE("residue at the origin") {
  CHECK(residue_at_zero(0, 3.0) == 0.0);
  CHECK(residue_at_zero(2, 1.0) == 0.0);
  CHECK(residue_formula(0, 7.0) == 0.0);
  CHECK(residue_formula(1, 1.0) == doctest::Approx(-1.0).epsilon(1e-14));
  CHECK(residue_formula(2, 1.0) == doctest::Approx(10.0).epsilon(1e-14));
  CHECK(residue_at_zero(-1, 1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(residue_at_zero(-2, 1.0) == doctest::Approx(-10.0).epsilon(1e-14));
  for (std::int64_t m = -8; m <= 4; ++m) {
    const double expected = residue_by_contour(m, 2.5);
    CHECK(std::abs(residue_at_zero(m, 2.5) - expected) < 1e-9 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("stationary probabilities") {
  const Spinor3 e1{{1.0, 0.0, 0.0}};
  const Spinor3 e2{{0.0, 1.0, 0.0}};
  const double kp = kKappaPlus;
  CHECK(p1(e1, 0) == doctest::Approx(10.0 - 4.0 * kRoot6).epsilon(1e-14));
  CHECK(p1(e1, 0) == doctest::Approx(0.2020410).epsilon(1e-6));
  CHECK(p1(e1, 1) == doctest::Approx(kp * kp * (10.0 + 4.0 * kRoot6)).epsilon(1e-13));
  CHECK(p1(e1, 1) == doctest::Approx(0.2020410).epsilon(1e-6));
  CHECK(p1(e1, -1) == doctest::Approx(kp * kp * (10.0 - 4.0 * kRoot6)).epsilon(1e-13));
  const Spinor3 none = non_localizing_state();
  for (std::int64_t n = -30; n <= 30; ++n) CHECK(p1(none, n) == 0.0);

  CHECK(localization_total(e1) == doctest::Approx(1.0 / kRoot6).epsilon(1e-14));
  CHECK(localization_total(e2) == doctest::Approx(1.0 - std::sqrt(2.0 / 3.0)).epsilon(1e-14));
  CHECK(localization_total(none) < 1e-28);
}

TEST_CASE("exponential decay ratio") {
  testing::SpinorGenerator gen(21);
  const double q = kKappaPlus * kKappaPlus;
  for (int i = 0; i < 50; ++i) {
    const Spinor3 psi = gen.unit();
    for (std::int64_t n = 1; n <= 10; ++n) {
      CHECK(p1(psi, n + 1) / p1(psi, n) == doctest::Approx(q).epsilon(1e-10));
      CHECK(p1(psi, -n - 1) / p1(psi, -n) == doctest::Approx(q).epsilon(1e-10));
    }
  }
}

TEST_CASE("origin value and total weight quadratic forms") {
  const double s = kRoot6;
  const double c = 1.0 - std::sqrt(2.0 / 3.0);
  const double d = 2.0 - 5.0 / s;
  const Mat3 weight = Mat3::from_real({1.0 / s, c, d, c, c, c, d, c, 1.0 / s});
  testing::SpinorGenerator gen(22);
  for (int i = 0; i < 100; ++i) {
    const Spinor3 psi = gen.unit();
    const Complex a = psi[0], b = psi[1], g = psi[2];
    const double origin = (5.0 - 2.0 * s) *
        ((2.0 * a + b) * std::conj(a) + (a + b + g) * std::conj(b) + (b + 2.0 * g) * std::conj(g)).real();
    CHECK(std::abs(p1(psi, 0) - origin) < 1e-12);

    double summed = 0.0;
    for (std::int64_t n = -40; n <= 40; ++n) summed += p1(psi, n);
    CHECK(std::abs(localization_total(psi) - quadratic_form(weight, psi)) < 1e-12);
    CHECK(std::abs(localization_total(psi) - summed) < 1e-12);
  }
}

TEST_CASE("vanishing families") {
  const struct {
    double a, b;
  } cases[] = {{1.0, 0.0}, {0.0, 1.0}, {1.0, 1.0}, {-0.3, 2.0}};
  for (const auto& c : cases) {
    const Spinor3 pos = vanishing_family(c.a, c.b, Side::positive);
    const Spinor3 neg = vanishing_family(c.a, c.b, Side::negative);
    CHECK(pos.norm() == doctest::Approx(1.0).epsilon(1e-14));
    for (std::int64_t n = 1; n <= 20; ++n) {
      CHECK(p1(pos, n) < 1e-12);
      CHECK(p1(neg, -n) < 1e-12);
    }
    CHECK(p1(pos, -1) > 1e-6);
    CHECK(p1(neg, 1) > 1e-6);
  }
  const double r = std::sqrt(1.0 + std::pow((1.0 + kKappaPlus) / 2.0, 2));
  const Spinor3 first = vanishing_family(1.0, 0.0, Side::positive);
  CHECK(first[0].real() == doctest::Approx(-(1.0 + kKappaPlus) / 2.0 / r).epsilon(1e-14));

  // (a, b) proportional to (-2, 1) gives the (1,-2,1) direction on both sides.
  for (Side side : {Side::positive, Side::negative}) {
    const Spinor3 both = vanishing_family(-2.0, 1.0, side);
    CHECK(max_abs_diff(both, non_localizing_state()) < 1e-15);
    for (std::int64_t n = -20; n <= 20; ++n) CHECK(p1(both, n) == 0.0);
  }
  CHECK_THROWS_AS(vanishing_family(0.0, 0.0, Side::positive), DomainError);
}
