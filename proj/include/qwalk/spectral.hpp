#pragma once

// Momentum-space picture of the walk: C~(k), its spectral decomposition, and
// an exact inverse-DFT evolution oracle independent of the site-space stepper.

#include <array>
#include <cstdint>

#include "qwalk/algebra.hpp"
#include "qwalk/evolution.hpp"

namespace qwalk {

struct MomentumCoin {
  double k = 0.0;
  Complex kappa{1.0, 0.0};  // e^{ik}
  Mat3 matrix;
};

/// C~(k) = left_hop e^{ik} + stay + right_hop e^{-ik}.
MomentumCoin momentum_coin(double k);

/// Eigenphase omega(k) in [0, pi] with cos(omega) = -2/3 - cos(k)/3.
double dispersion_omega(double k);

/// d omega / dk and d^2 omega / dk^2, valid for k != 0 (mod 2 pi).
double dispersion_slope(double k);
double dispersion_curvature(double k);

/// Spectral data of C~(k). eigenvalues = {1, e^{i omega}, e^{-i omega}} and
/// projectors[j] projects onto eigenvalues[j].
struct Eigensystem {
  double k = 0.0;
  double omega = 0.0;
  std::array<Complex, 3> eigenvalues{};
  std::array<Mat3, 3> projectors{};
};

/// |k mod 2pi| below this is treated as the degenerate point.
inline constexpr double kDegeneracyGuard = 1e-8;

/// Projectors by the Lagrange formula M_j = prod_{i!=j} (C~ - l_i)/(l_j - l_i).
/// Throws DegeneracyError at k = 0 (mod 2 pi), where e^{+-i omega} = -1.
Eigensystem eigensystem(double k);

/// C~(k)^t by binary powering; valid at every k.
Mat3 coin_power(double k, std::int64_t t);

/// Smallest exact sample count for the inverse transform at time t.
constexpr std::int64_t min_samples(std::int64_t t) { return 2 * t + 1; }
constexpr std::int64_t default_samples(std::int64_t t) { return 2 * t + 2; }

/// psi_n(t) = (1/M) sum_j e^{i n k_j} C~(k_j)^t psi0 on k_j = 2 pi j / M - pi.
/// Exact for samples >= 2t + 1; throws DomainError otherwise. Zero outside
/// |n| <= t.
Spinor3 inverse_transform(const Spinor3& psi0, std::int64_t n, std::int64_t t, std::int64_t samples);

/// The same sum evaluated at every site |n| <= t.
AmplitudeLine inverse_transform_line(const Spinor3& psi0, std::int64_t t, std::int64_t samples);

}  // namespace qwalk
