#include "qwalk/weaklimit.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <numbers>
#include <string>

#include "qwalk/asymptotics.hpp"
#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

const double kSqrt6 = std::sqrt(6.0);

}  // namespace

Mat3 front_numerator_matrix(double v) {
  const double a = (1 - v) * (1 - v);
  const double b = 2 * v * (1 - v);
  const double c = 1 - 5 * v * v;
  const double d = 2 - 2 * v * v;
  const double e = -2 * v * (1 + v);
  const double f = (1 + v) * (1 + v);
  return Mat3::from_real({a, b, c,
                          b, d, e,
                          c, e, f});
}

Mat3 front_density_matrix(double v) {
  if (!(std::abs(v) < kFrontSpeed)) return {};
  const double prefactor = 1.0 / (std::numbers::pi * std::sqrt(2.0 * (1.0 - 3.0 * v * v)) * (1.0 - v * v));
  return prefactor * front_numerator_matrix(v);
}

double p_avg(const Spinor3& psi0, std::int64_t n, std::int64_t t) {
  if (t < 1) throw DomainError("p_avg needs t >= 1");
  const double v = static_cast<double>(n) / static_cast<double>(t);
  return quadratic_form(front_density_matrix(v), psi0) / static_cast<double>(t);
}

Mat3 localization_weight_matrix() {
  const double diag = 1.0 / kSqrt6;
  const double off = 1.0 - std::sqrt(2.0 / 3.0);
  const double corner = 2.0 - 5.0 / kSqrt6;
  return Mat3::from_real({diag, off, corner,
                          off, off, off,
                          corner, off, diag});
}

double WeakLimitDensity::density(double v) const {
  return quadratic_form(front_density_matrix(v), psi0);
}

double WeakLimitDensity::moment(int k) const { return front_moment_by_quadrature(psi0, k); }

WeakLimitDensity limit_density(const Spinor3& psi0) {
  return WeakLimitDensity{psi0, quadratic_form(localization_weight_matrix(), psi0)};
}

double mixed_state_density(double v) {
  if (!(std::abs(v) < kFrontSpeed)) {
    throw DomainError("mixed-state density is defined only for |v| < 1/sqrt(3), got " + std::to_string(v));
  }
  return 4.0 / (3.0 * std::numbers::pi * (1.0 - v * v) * std::sqrt(2.0 - 6.0 * v * v));
}

Mat3 zeroth_moment_matrix() {
  const double s = kSqrt6;
  return Mat3::from_real({-1 + s, 2 - s, 5 - 2 * s,
                          2 - s, 2, 2 - s,
                          5 - 2 * s, 2 - s, -1 + s}) * (1.0 / s);
}

Mat3 first_moment_matrix() {
  const double s = kSqrt6;
  return Mat3::from_real({2 - s, -2 + s, 0,
                          -2 + s, 0, 2 - s,
                          0, 2 - s, -2 + s}) * (1.0 / s);
}

Mat3 second_moment_matrix() {
  const double s = kSqrt6;
  return Mat3::from_real({-13 + 6 * s, 14 - 6 * s, 29 - 12 * s,
                          14 - 6 * s, 2, 14 - 6 * s,
                          29 - 12 * s, 14 - 6 * s, -13 + 6 * s}) * (1.0 / (6.0 * s));
}

MomentSet moments(const Spinor3& psi0) {
  return MomentSet{quadratic_form(zeroth_moment_matrix(), psi0), quadratic_form(first_moment_matrix(), psi0),
                   quadratic_form(second_moment_matrix(), psi0)};
}

double front_moment_by_quadrature(const Spinor3& psi0, int k) {
  if (k < 0) throw DomainError("moment order must be non-negative");
  // With v = sin(theta)/sqrt(3): f(v) dv = N(v) / (pi sqrt(6) (1 - v^2)) dtheta,
  // N the numerator quadratic form; the cos(theta) factors cancel.
  auto integrand = [&](double theta) {
    const double v = std::sin(theta) / std::sqrt(3.0);
    const double numerator = quadratic_form(front_numerator_matrix(v), psi0);
    return std::pow(v, k) * numerator / (std::numbers::pi * kSqrt6 * (1.0 - v * v));
  };
  using boost::math::quadrature::gauss_kronrod;
  return gauss_kronrod<double, 61>::integrate(integrand, -std::numbers::pi / 2, std::numbers::pi / 2, 15, 1e-14);
}

}  // namespace qwalk
