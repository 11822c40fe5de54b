#include "qwalk/localization.hpp"

#include <cmath>
#include <limits>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

const double kSqrt6 = std::sqrt(6.0);

StationaryMatrixSet build_stationary_matrices() {
  const double s = kSqrt6;
  StationaryMatrixSet set;
  set.negative = Mat3::from_real({1, -2 - s, -5 - 2 * s,
                                  -2 + s, -2, -2 - s,
                                  -5 + 2 * s, -2 + s, 1}) * (1.0 / s);
  set.zero = Mat3::from_real({1, -2 + s, -5 + 2 * s,
                              -2 + s, -2 + s, -2 + s,
                              -5 + 2 * s, -2 + s, 1}) * (1.0 / s);
  set.positive = Mat3::from_real({1, -2 + s, -5 + 2 * s,
                                  -2 - s, -2, -2 + s,
                                  -5 - 2 * s, -2 - s, 1}) * (1.0 / s);
  return set;
}

}  // namespace

const StationaryMatrixSet& stationary_matrices() {
  static const StationaryMatrixSet set = build_stationary_matrices();
  return set;
}

Mat3 u1(std::int64_t n) {
  const auto& set = stationary_matrices();
  if (n == 0) return set.zero;
  const double scale = std::pow(set.kappa_plus, static_cast<double>(n > 0 ? n : -n));
  return scale * (n > 0 ? set.positive : set.negative);
}

double residue_formula(std::int64_t m, double a) {
  // kappa_plus * kappa_minus = 1
  const double minus_pow = m >= 0 ? std::pow(kKappaMinus, static_cast<double>(m))
                                  : std::pow(kKappaPlus, static_cast<double>(-m));
  const double plus_pow = m >= 0 ? std::pow(kKappaPlus, static_cast<double>(m))
                                 : std::pow(kKappaMinus, static_cast<double>(-m));
  return a * (minus_pow - plus_pow) / (4.0 * kSqrt6);
}

double residue_at_zero(std::int64_t m, double a) { return m >= 0 ? 0.0 : residue_formula(m, a); }

double p1(const Spinor3& psi0, std::int64_t n) {
  const Mat3 m = u1(n);
  const double value = (m * psi0).norm_squared();
  // Anything below the rounding level of the product is an exact cancellation.
  double scale = 0.0;
  for (const auto& z : m.e) scale += std::norm(z);
  const double floor = 64.0 * std::numeric_limits<double>::epsilon() * std::numeric_limits<double>::epsilon() *
                       scale * psi0.norm_squared();
  return value <= floor ? 0.0 : value;
}

double localization_total(const Spinor3& psi0) {
  const auto& set = stationary_matrices();
  const double q = set.kappa_plus * set.kappa_plus;
  const double tail = q / (1.0 - q);
  return (set.zero * psi0).norm_squared() + tail * (set.positive * psi0).norm_squared() +
         tail * (set.negative * psi0).norm_squared();
}

Spinor3 vanishing_family(double a, double b, Side side) {
  if (a == 0.0 && b == 0.0) throw DomainError("vanishing family needs (a, b) != (0, 0)");
  const double kappa = side == Side::positive ? kKappaPlus : kKappaMinus;
  return Spinor3{{-a * (1.0 + kappa) / 2.0 - b * kappa, a, b}}.normalized();
}

Spinor3 non_localizing_state() { return Spinor3{{1.0, -2.0, 1.0}}.normalized(); }

}  // namespace qwalk
