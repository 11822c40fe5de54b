#pragma once

// Closed-form stationary (t -> infinity) part of the walk: the inverse
// transform U1(n) of the constant-eigenvalue projector and the localized
// probability profile it produces.

#include <cmath>
#include <cstdint>

#include "qwalk/algebra.hpp"

namespace qwalk {

/// Roots of 1 + 10 kappa + kappa^2; kappa_plus lies inside the unit circle.
inline const double kKappaPlus = -5.0 + 2.0 * std::sqrt(6.0);
inline const double kKappaMinus = -5.0 - 2.0 * std::sqrt(6.0);

/// The three regimes of U1(n), each already divided by sqrt(6):
///   U1(n<0) = kappa_minus^n * negative, U1(0) = zero, U1(n>0) = kappa_plus^n * positive.
struct StationaryMatrixSet {
  Mat3 negative;
  Mat3 zero;
  Mat3 positive;
  double kappa_plus = kKappaPlus;
  double kappa_minus = kKappaMinus;
};

const StationaryMatrixSet& stationary_matrices();

/// U1(n). Negative n uses kappa_minus^n = kappa_plus^{|n|}, so it underflows
/// gracefully instead of overflowing.
Mat3 u1(std::int64_t n);

/// Res_{kappa=0} a kappa^m / (1 + 10 kappa + kappa^2). Zero for m >= 0,
/// where the integrand is analytic at the origin; residue_formula(m, a)
/// otherwise.
double residue_at_zero(std::int64_t m, double a);

/// Partial-fraction expression a (kappa_minus^m - kappa_plus^m) / (4 sqrt 6).
/// Negative powers are taken as kappa^{-1} = the other root, so nothing
/// overflows.
double residue_formula(std::int64_t m, double a);

/// Stationary probability <psi0| U1(n)^dagger U1(n) |psi0>; exactly 0 when
/// the product cancels to within rounding.
double p1(const Spinor3& psi0, std::int64_t n);

/// sum_n p1(n), summed in closed form (two geometric series with ratio
/// kappa_plus^2 plus the n = 0 term).
double localization_total(const Spinor3& psi0);

enum class Side { positive, negative };

/// Normalized member of (-a(1+kappa)/2 - b kappa, a, b) with kappa = kappa_plus
/// for Side::positive and kappa_minus for Side::negative. p1(n) vanishes on
/// the chosen side. Throws DomainError for a = b = 0.
Spinor3 vanishing_family(double a, double b, Side side);

/// Direction with no localization on either side, (1,-2,1)/sqrt(6).
Spinor3 non_localizing_state();

}  // namespace qwalk
