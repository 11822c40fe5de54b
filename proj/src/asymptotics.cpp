#include "qwalk/asymptotics.hpp"

#include <numbers>
#include <string>

#include "qwalk/errors.hpp"
#include "qwalk/localization.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk {

namespace {

double branch_sign(Branch b) { return b == Branch::plus ? 1.0 : -1.0; }

void check_time(std::int64_t t) {
  if (t < 1) throw DomainError("asymptotic expressions need t >= 1, got " + std::to_string(t));
}

}  // namespace

double phase_derivative(double k, double v, Branch branch) {
  return v + branch_sign(branch) * dispersion_slope(k);
}

double phase_curvature(double k, Branch branch) {
  return branch_sign(branch) * dispersion_curvature(k);
}

StationaryPoint stationary_point(double v, Branch branch) {
  if (!(std::abs(v) < kFrontSpeed)) {
    throw DomainError("velocity " + std::to_string(v) + " lies outside the front |v| < 1/sqrt(3)");
  }
  // |k*| from cos k* = (1 - 5v^2)/(v^2 - 1), written via atan2 so it stays
  // accurate near k* = pi.
  const double v2 = v * v;
  const double magnitude = std::atan2(2.0 * std::abs(v) * std::sqrt(2.0 - 6.0 * v2), 5.0 * v2 - 1.0);

  double k_star = magnitude;
  if (std::abs(phase_derivative(-magnitude, v, branch)) < std::abs(phase_derivative(magnitude, v, branch))) {
    k_star = -magnitude;
  }
  if (k_star <= -std::numbers::pi) k_star = std::numbers::pi;

  StationaryPoint sp;
  sp.v = v;
  sp.branch = branch;
  sp.k_star = k_star;
  sp.rho_star = v * k_star + branch_sign(branch) * dispersion_omega(k_star);
  sp.rho2_star = phase_curvature(k_star, branch);
  return sp;
}

FrontMatrices u23_asymptotic(std::int64_t n, std::int64_t t, double guard) {
  check_time(t);
  const double v = static_cast<double>(n) / static_cast<double>(t);
  FrontMatrices out;
  if (std::abs(v) >= kFrontSpeed - guard) return out;

  for (Branch b : {Branch::plus, Branch::minus}) {
    const StationaryPoint sp = stationary_point(v, b);
    const Eigensystem es = eigensystem(sp.k_star);
    const double s = branch_sign(b);
    // t rho(k*) = n k* +- t omega(k*)
    const double phase = static_cast<double>(n) * sp.k_star + s * static_cast<double>(t) * es.omega;
    const double rotation = (sp.rho2_star > 0 ? 1.0 : -1.0) * std::numbers::pi / 4.0;
    const double amplitude =
        1.0 / std::sqrt(2.0 * std::numbers::pi * static_cast<double>(t) * std::abs(sp.rho2_star));
    const Complex factor = std::polar(amplitude, phase + rotation);
    if (b == Branch::plus) {
      out.u2 = factor * es.projectors[1];
    } else {
      out.u3 = factor * es.projectors[2];
    }
  }
  return out;
}

double asymptotic_pdf(const Spinor3& psi0, std::int64_t n, std::int64_t t, double guard) {
  const FrontMatrices f = u23_asymptotic(n, t, guard);
  return ((u1(n) + f.u2 + f.u3) * psi0).norm_squared();
}

double relative_difference(double ps, double pa) {
  const double denom = ps + pa;
  if (denom == 0.0) return 0.0;
  return 2.0 * std::abs(ps - pa) / denom;
}

double q1(const Spinor3& psi0, std::int64_t n, std::int64_t t, double guard) {
  const FrontMatrices f = u23_asymptotic(n, t, guard);
  return 2.0 * inner(u1(n) * psi0, (f.u2 + f.u3) * psi0).real();
}

double q_avg(const Spinor3& psi0, std::int64_t n, std::int64_t t, double guard) {
  const FrontMatrices f = u23_asymptotic(n, t, guard);
  return 2.0 * inner(f.u2 * psi0, f.u3 * psi0).real();
}

}  // namespace qwalk
