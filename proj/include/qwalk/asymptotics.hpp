#pragma once

// Stationary-phase approximation of the propagating part of the walk, the
// approximate PDF built from it, and the oscillating remainder terms that
// govern convergence to the weak limit.

#include <cmath>
#include <cstdint>

#include "qwalk/algebra.hpp"

namespace qwalk {

/// Largest group velocity; the front lives on |n/t| < 1/sqrt(3).
inline const double kFrontSpeed = 1.0 / std::sqrt(3.0);

/// Default width of the excluded band below the front edge, where the
/// phase curvature vanishes and the Gaussian approximation breaks down.
inline constexpr double kDefaultFrontGuard = 1e-3;

/// Which of the k-dependent eigenvalues e^{+i omega} (plus) or e^{-i omega}
/// (minus) a stationary point belongs to.
enum class Branch { plus, minus };

/// Stationary point of rho(k) = v k +- omega(k).
struct StationaryPoint {
  double v = 0.0;
  Branch branch = Branch::plus;
  double k_star = 0.0;     // in (-pi, pi]
  double rho_star = 0.0;   // rho(k_star)
  double rho2_star = 0.0;  // rho''(k_star)
};

/// rho'(k) and rho''(k) for the given velocity and branch.
double phase_derivative(double k, double v, Branch branch);
double phase_curvature(double k, Branch branch);

/// Throws DomainError for |v| >= 1/sqrt(3). At v = 0 both branches use k* = pi.
StationaryPoint stationary_point(double v, Branch branch);

/// Leading-order approximations of U2(n,t) (eigenvalue e^{i omega}) and
/// U3(n,t) (e^{-i omega}).
struct FrontMatrices {
  Mat3 u2;
  Mat3 u3;
};

/// Zero matrices for |n|/t >= 1/sqrt(3) - guard. Throws DomainError for t < 1.
FrontMatrices u23_asymptotic(std::int64_t n, std::int64_t t, double guard = kDefaultFrontGuard);

/// p_a(n,t) = |(U1 + U2 + U3) psi0|^2.
double asymptotic_pdf(const Spinor3& psi0, std::int64_t n, std::int64_t t,
                      double guard = kDefaultFrontGuard);

/// 2|ps - pa| / (ps + pa), and 0 when both vanish.
double relative_difference(double ps, double pa);

/// Cross term between the localized and the propagating parts.
double q1(const Spinor3& psi0, std::int64_t n, std::int64_t t, double guard = kDefaultFrontGuard);

/// Cross term between the two propagating branches.
double q_avg(const Spinor3& psi0, std::int64_t n, std::int64_t t, double guard = kDefaultFrontGuard);

}  // namespace qwalk
