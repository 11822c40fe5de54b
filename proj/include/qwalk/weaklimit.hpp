#pragma once

// Smooth (weak-limit) description of the walk: the non-oscillating front
// density p_avg, the delta weight of the localized part, and the closed-form
// moments that follow from them.

#include <cstdint>

#include "qwalk/algebra.hpp"

namespace qwalk {

/// t * (U2^dagger U2 + U3^dagger U3) at velocity v; zero for |v| >= 1/sqrt(3).
Mat3 front_density_matrix(double v);

/// Real symmetric numerator of front_density_matrix (the matrix without the
/// 1 / (pi sqrt(2(1-3v^2)) (1-v^2)) prefactor).
Mat3 front_numerator_matrix(double v);

/// p_avg(n,t) = <psi0| front_density_matrix(n/t) |psi0> / t.
double p_avg(const Spinor3& psi0, std::int64_t n, std::int64_t t);

/// Matrix whose quadratic form is the delta weight sum_n p1(n).
Mat3 localization_weight_matrix();

struct WeakLimitDensity {
  Spinor3 psi0;
  double delta_weight = 0.0;

  /// f(v); zero outside |v| < 1/sqrt(3).
  double density(double v) const;
  /// int v^k f(v) dv over the front, by quadrature.
  double moment(int k) const;
  double integral() const { return moment(0); }
};

WeakLimitDensity limit_density(const Spinor3& psi0);

/// Continuous part for the incoherent equal mixture of the three basis
/// states; its delta weight is kMixedStateDeltaWeight. Throws DomainError for
/// |v| >= 1/sqrt(3).
double mixed_state_density(double v);
inline constexpr double kMixedStateDeltaWeight = 1.0 / 3.0;

/// Front mass and the leading growth rates of the first two moments.
struct MomentSet {
  double m0 = 0.0;       // front mass
  double m1_rate = 0.0;  // <n> / t
  double m2_rate = 0.0;  // <n^2> / t^2
};

Mat3 zeroth_moment_matrix();
Mat3 first_moment_matrix();
Mat3 second_moment_matrix();

MomentSet moments(const Spinor3& psi0);

/// int v^k f(v) dv for arbitrary k >= 0 by Gauss-Kronrod quadrature in
/// theta, v = sin(theta)/sqrt(3), which removes the endpoint singularity.
double front_moment_by_quadrature(const Spinor3& psi0, int k);

}  // namespace qwalk
