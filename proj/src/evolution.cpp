#include "qwalk/evolution.hpp"

#include <cmath>
#include <string>

#include "qwalk/errors.hpp"

namespace qwalk {

namespace {

constexpr double kOneThird = 1.0 / 3.0;
constexpr double kTwoThirds = 2.0 / 3.0;

// Writes the successor of `in` (leftmost site `offset`) into `out`, which
// starts at `offset - 1` and is two sites longer.
void apply_master_equation(const std::vector<Spinor3>& in, std::vector<Spinor3>& out) {
  const std::size_t m = in.size();
  out.assign(m + 2, Spinor3{});
  // out[j] is site offset-1+j: it reads in[j-2] (left neighbour),
  // in[j-1] (same site) and in[j] (right neighbour).
  for (std::size_t j = 0; j < m + 2; ++j) {
    Spinor3& o = out[j];
    if (j < m) {
      const Spinor3& r = in[j];
      o[0] = kTwoThirds * (r[1] + r[2]) - kOneThird * r[0];
    }
    if (j >= 1 && j <= m) {
      const Spinor3& s = in[j - 1];
      o[1] = kTwoThirds * (s[0] + s[2]) - kOneThird * s[1];
    }
    if (j >= 2) {
      const Spinor3& l = in[j - 2];
      o[2] = kTwoThirds * (l[0] + l[1]) - kOneThird * l[2];
    }
  }
}

void check_steps(std::int64_t steps, const EvolutionLimits& limits) {
  if (steps < 0) throw DomainError("number of time steps must be non-negative");
  if (steps > limits.max_steps) {
    throw ResourceError("requested " + std::to_string(steps) +
                        " steps exceeds the evolution cap max_steps=" +
                        std::to_string(limits.max_steps));
  }
}

}  // namespace

Spinor3 AmplitudeLine::at(std::int64_t n) const {
  if (n < first_site() || n > last_site()) return {};
  return amps[static_cast<std::size_t>(n - offset)];
}

double AmplitudeLine::total_probability() const {
  double s = 0.0;
  for (const auto& a : amps) s += a.norm_squared();
  return s;
}

double PdfSlice::at(std::int64_t n) const {
  if (n < first_site() || n > last_site()) return 0.0;
  return probs[static_cast<std::size_t>(n - offset)];
}

double PdfSlice::sum() const {
  double s = 0.0;
  for (double p : probs) s += p;
  return s;
}

void require_normalized(const Spinor3& psi) {
  if (!psi.is_finite()) throw DomainError("initial spinor has non-finite components");
  const double n = psi.norm();
  if (std::abs(n - 1.0) > kNormalizationTolerance) {
    throw DomainError("initial spinor is not normalized (norm " + std::to_string(n) + ")");
  }
}

AmplitudeLine init_line(const Spinor3& psi0) {
  require_normalized(psi0);
  return AmplitudeLine{0, {psi0}, 0};
}

AmplitudeLine step(const AmplitudeLine& line) {
  AmplitudeLine next;
  apply_master_equation(line.amps, next.amps);
  next.offset = line.offset - 1;
  next.t = line.t + 1;
  return next;
}

AmplitudeLine evolve(const Spinor3& psi0, std::int64_t steps, const EvolutionLimits& limits) {
  check_steps(steps, limits);
  Walker w(psi0, limits);
  w.advance_to(steps);
  return w.line();
}

PdfSlice pdf(const AmplitudeLine& line) {
  PdfSlice out{line.offset, {}, line.t};
  out.probs.reserve(line.amps.size());
  for (const auto& a : line.amps) out.probs.push_back(a.norm_squared());
  return out;
}

PdfSlice spatial_average(const PdfSlice& slice, int window) {
  if (window < 1) throw DomainError("spatial average window must be >= 1");
  const auto size = static_cast<std::int64_t>(slice.probs.size());
  PdfSlice out{slice.offset, std::vector<double>(slice.probs.size(), 0.0), slice.t};
  // Direct sums rather than prefix differences, which would cancel away the
  // tiny tail probabilities.
  const std::int64_t left = window / 2;
  for (std::int64_t i = 0; i < size; ++i) {
    const std::int64_t lo = std::max<std::int64_t>(i - left, 0);
    const std::int64_t hi = std::min<std::int64_t>(i - left + window - 1, size - 1);
    double s = 0.0;
    for (std::int64_t j = lo; j <= hi; ++j) s += slice.probs[static_cast<std::size_t>(j)];
    out.probs[static_cast<std::size_t>(i)] = window == 1 ? s : s / window;
  }
  return out;
}

double time_average(const Spinor3& psi0, std::int64_t site, std::int64_t t_start,
                    std::int64_t t_end, const EvolutionLimits& limits) {
  if (t_start < 0 || t_end < t_start) throw DomainError("time window must satisfy 0 <= t_start <= t_end");
  check_steps(t_end, limits);
  Walker w(psi0, limits);
  w.advance_to(t_start);
  double s = w.probability(site);
  while (w.time() < t_end) {
    w.advance();
    s += w.probability(site);
  }
  return s / static_cast<double>(t_end - t_start + 1);
}

Walker::Walker(const Spinor3& psi0, const EvolutionLimits& limits) : limits_(limits) {
  require_normalized(psi0);
  cur_.push_back(psi0);
}

void Walker::advance() {
  if (t_ + 1 > limits_.max_steps) check_steps(t_ + 1, limits_);
  apply_master_equation(cur_, next_);
  cur_.swap(next_);
  --offset_;
  ++t_;
}

void Walker::advance_to(std::int64_t t) {
  if (t < t_) throw DomainError("cannot evolve backwards in time");
  check_steps(t, limits_);
  cur_.reserve(static_cast<std::size_t>(2 * t + 1));
  next_.reserve(static_cast<std::size_t>(2 * t + 1));
  while (t_ < t) advance();
}

double Walker::probability(std::int64_t n) const { return amplitude(n).norm_squared(); }

Spinor3 Walker::amplitude(std::int64_t n) const {
  const std::int64_t i = n - offset_;
  if (i < 0 || i >= static_cast<std::int64_t>(cur_.size())) return {};
  return cur_[static_cast<std::size_t>(i)];
}

PdfSlice Walker::pdf() const {
  PdfSlice out{offset_, {}, t_};
  out.probs.reserve(cur_.size());
  for (const auto& a : cur_) out.probs.push_back(a.norm_squared());
  return out;
}

AmplitudeLine Walker::line() const { return AmplitudeLine{offset_, cur_, t_}; }

double Walker::first_moment() const {
  double s = 0.0;
  for (std::size_t i = 0; i < cur_.size(); ++i) {
    s += static_cast<double>(offset_ + static_cast<std::int64_t>(i)) * cur_[i].norm_squared();
  }
  return s;
}

double Walker::second_moment() const {
  double s = 0.0;
  for (std::size_t i = 0; i < cur_.size(); ++i) {
    const auto n = static_cast<double>(offset_ + static_cast<std::int64_t>(i));
    s += n * n * cur_[i].norm_squared();
  }
  return s;
}

}  // namespace qwalk
