#pragma once

// Exact site-space evolution of the walk and the probability profiles derived
// from it.

#include <cstdint>
#include <vector>

#include "qwalk/algebra.hpp"

namespace qwalk {

/// Walker state at one time: a dense run of spinors starting at site `offset`.
/// Sites outside the run carry zero amplitude.
struct AmplitudeLine {
  std::int64_t offset = 0;
  std::vector<Spinor3> amps;
  std::int64_t t = 0;

  std::int64_t first_site() const { return offset; }
  std::int64_t last_site() const { return offset + static_cast<std::int64_t>(amps.size()) - 1; }
  Spinor3 at(std::int64_t n) const;
  double total_probability() const;
};

/// Site probabilities at one time step.
struct PdfSlice {
  std::int64_t offset = 0;
  std::vector<double> probs;
  std::int64_t t = 0;

  std::int64_t first_site() const { return offset; }
  std::int64_t last_site() const { return offset + static_cast<std::int64_t>(probs.size()) - 1; }
  double at(std::int64_t n) const;
  double sum() const;
};

struct EvolutionLimits {
  /// Largest number of steps any single evolution may run.
  std::int64_t max_steps = std::int64_t{1} << 16;
};

/// Tolerance on |psi0| - 1 accepted as "normalized".
inline constexpr double kNormalizationTolerance = 1e-9;

/// Throws DomainError unless `psi` has unit norm within kNormalizationTolerance.
void require_normalized(const Spinor3& psi);

/// Initial condition concentrated on site 0.
AmplitudeLine init_line(const Spinor3& psi0);

/// One application of the master equation; the support grows by one site on
/// each side.
AmplitudeLine step(const AmplitudeLine& line);

/// `steps` applications of `step`, starting at init_line(psi0). Throws
/// ResourceError if steps exceeds limits.max_steps.
AmplitudeLine evolve(const Spinor3& psi0, std::int64_t steps, const EvolutionLimits& limits = {});

PdfSlice pdf(const AmplitudeLine& line);

/// Centered moving average over `window` sites (for even windows the extra
/// site is taken on the left), treating sites outside the slice as zero.
/// The output covers the same sites as the input.
PdfSlice spatial_average(const PdfSlice& slice, int window);

/// Mean of p(site, t) over t in [t_start, t_end].
double time_average(const Spinor3& psi0, std::int64_t site, std::int64_t t_start,
                    std::int64_t t_end, const EvolutionLimits& limits = {});

/// Incremental evolution with buffer reuse, for drivers that observe every
/// step of a long run.
class Walker {
 public:
  explicit Walker(const Spinor3& psi0, const EvolutionLimits& limits = {});

  void advance();
  void advance_to(std::int64_t t);

  std::int64_t time() const { return t_; }
  double probability(std::int64_t n) const;
  Spinor3 amplitude(std::int64_t n) const;
  PdfSlice pdf() const;
  AmplitudeLine line() const;

  /// sum_n n^k p(n,t) for k = 1, 2.
  double first_moment() const;
  double second_moment() const;

 private:
  std::vector<Spinor3> cur_;
  std::vector<Spinor3> next_;
  std::int64_t offset_ = 0;
  std::int64_t t_ = 0;
  EvolutionLimits limits_;
};

}  // namespace qwalk
