#include "qwalk/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double reduce_angle(double k) { return std::remainder(k, kTwoPi); }

double sin_omega(double k) {
  const double c = std::cos(k);
  return std::abs(std::sin(0.5 * k)) * std::sqrt(2.0 * (5.0 + c)) / 3.0;
}

// Roots of unity e^{2 pi i m / M}, m = 0..M-1.
std::vector<Complex> unit_roots(std::int64_t samples) {
  std::vector<Complex> roots(static_cast<std::size_t>(samples));
  for (std::int64_t m = 0; m < samples; ++m) {
    roots[static_cast<std::size_t>(m)] =
        std::polar(1.0, kTwoPi * static_cast<double>(m) / static_cast<double>(samples));
  }
  return roots;
}

double grid_point(std::int64_t j, std::int64_t samples) {
  return kTwoPi * static_cast<double>(j) / static_cast<double>(samples) - std::numbers::pi;
}

// C~(k_j)^t psi0 on the uniform grid.
std::vector<Spinor3> evolved_in_momentum(const Spinor3& psi0, std::int64_t t, std::int64_t samples) {
  std::vector<Spinor3> phi(static_cast<std::size_t>(samples));
  for (std::int64_t j = 0; j < samples; ++j) {
    phi[static_cast<std::size_t>(j)] = coin_power(grid_point(j, samples), t) * psi0;
  }
  return phi;
}

Spinor3 synthesize(const std::vector<Spinor3>& phi, const std::vector<Complex>& roots, std::int64_t n) {
  const auto samples = static_cast<std::int64_t>(phi.size());
  // e^{i n k_j} = (-1)^n e^{2 pi i n j / M}
  std::int64_t step = n % samples;
  if (step < 0) step += samples;
  Spinor3 acc;
  std::int64_t idx = 0;
  for (std::int64_t j = 0; j < samples; ++j) {
    const Complex w = roots[static_cast<std::size_t>(idx)];
    const Spinor3& p = phi[static_cast<std::size_t>(j)];
    acc[0] += w * p[0];
    acc[1] += w * p[1];
    acc[2] += w * p[2];
    idx += step;
    if (idx >= samples) idx -= samples;
  }
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  return (sign / static_cast<double>(samples)) * acc;
}

void check_samples(std::int64_t t, std::int64_t samples) {
  if (t < 0) throw DomainError("time must be non-negative");
  if (samples < min_samples(t)) {
    throw DomainError("inverse transform needs at least 2t+1 = " + std::to_string(min_samples(t)) +
                      " samples to avoid aliasing, got " + std::to_string(samples));
  }
}

}  // namespace

MomentumCoin momentum_coin(double k) {
  const Complex kappa = std::polar(1.0, k);
  const Complex inv = std::conj(kappa);
  const HopMatrices h = hop_matrices();
  return {k, kappa, kappa * h.left_hop + h.stay + inv * h.right_hop};
}

double dispersion_omega(double k) {
  return std::atan2(sin_omega(k), -(2.0 + std::cos(k)) / 3.0);
}

double dispersion_slope(double k) { return -std::sin(k) / (3.0 * sin_omega(k)); }

double dispersion_curvature(double k) {
  const double so = sin_omega(k);
  const double co = -(2.0 + std::cos(k)) / 3.0;
  const double sk = std::sin(k);
  return -std::cos(k) / (3.0 * so) - sk * sk * co / (9.0 * so * so * so);
}

Eigensystem eigensystem(double k) {
  if (std::abs(reduce_angle(k)) < kDegeneracyGuard) {
    throw DegeneracyError("C~(k) is degenerate at k = 0 (mod 2 pi); use coin_power instead");
  }
  Eigensystem es;
  es.k = k;
  es.omega = dispersion_omega(k);
  es.eigenvalues = {Complex{1.0, 0.0}, std::polar(1.0, es.omega), std::polar(1.0, -es.omega)};

  const Mat3 c = momentum_coin(k).matrix;
  const Mat3 id = Mat3::identity();
  for (std::size_t j = 0; j < 3; ++j) {
    Mat3 m = id;
    for (std::size_t i = 0; i < 3; ++i) {
      if (i == j) continue;
      m = m * ((c - es.eigenvalues[i] * id) * (1.0 / (es.eigenvalues[j] - es.eigenvalues[i])));
    }
    es.projectors[j] = m;
  }
  return es;
}

Mat3 coin_power(double k, std::int64_t t) {
  if (t < 0) throw DomainError("coin power must be non-negative");
  Mat3 result = Mat3::identity();
  Mat3 base = momentum_coin(k).matrix;
  while (t > 0) {
    if (t & 1) result = result * base;
    t >>= 1;
    if (t > 0) base = base * base;
  }
  return result;
}

Spinor3 inverse_transform(const Spinor3& psi0, std::int64_t n, std::int64_t t, std::int64_t samples) {
  check_samples(t, samples);
  if (n < -t || n > t) return Spinor3{};
  return synthesize(evolved_in_momentum(psi0, t, samples), unit_roots(samples), n);
}

AmplitudeLine inverse_transform_line(const Spinor3& psi0, std::int64_t t, std::int64_t samples) {
  check_samples(t, samples);
  const auto phi = evolved_in_momentum(psi0, t, samples);
  const auto roots = unit_roots(samples);
  AmplitudeLine line{-t, {}, t};
  line.amps.reserve(static_cast<std::size_t>(2 * t + 1));
  for (std::int64_t n = -t; n <= t; ++n) line.amps.push_back(synthesize(phi, roots, n));
  return line;
}

}  // namespace qwalk
