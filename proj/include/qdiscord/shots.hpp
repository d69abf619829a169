#pragma once

#include "qdiscord/protocol.hpp"
#include "qdiscord/states.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace qdiscord {

/// Trials are split into fixed chunks of this many; chunk c of a call seeded
/// with s draws from its own std::mt19937_64 seeded with derive_seed(s, c).
/// Counts therefore depend only on (seed, trials), never on the thread count.
constexpr std::uint64_t kTrialsPerChunk = 1u << 16;

/// splitmix64 of seed + (stream + 1)·0x9E3779B97F4A7C15.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Emulates `trials` repetitions: draw component ν with probability w_ν, then
/// the A and B detector clicks independently with the Born probabilities
/// |⟨↑|S^d S^A|A_ν⟩|² and |⟨↑|S^B|B_ν⟩|². Returns the number of coincidences.
std::uint64_t sample_coincidences(const SeparableState& state, const EvolutionParams& params, double phi_d,
                                  std::uint64_t trials, std::uint64_t seed, unsigned threads = 1);

struct ShotConfig {
  SeparableState state;
  EvolutionParams params;
  std::vector<double> phi_d;   // ≥ 3 distinct points
  std::uint64_t trials = 0;    // per φ_d point, ≥ 1
  std::uint64_t seed = 0;
  unsigned threads = 1;

  /// Throws std::invalid_argument when the invariants above fail.
  void validate() const;
};

/// `n` uniform points on [0, 2π).
std::vector<double> uniform_phases(std::size_t n = 24);

struct PointEstimate {
  double phi_d = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t coincidences = 0;
  double k_hat = 0.0;
  double k_stderr = 0.0;  // sqrt(K̂(1 − K̂)/n)
};

struct VisibilityEstimate {
  double visibility = 0.0;  // 2|A|/C of the fitted fringe
  double stderr = 0.0;
  double offset = 0.0;      // C
  double amplitude = 0.0;   // |A|
  double phase = 0.0;       // δ in K = C + 2|A| cos(φ_d + δ)
  std::vector<PointEstimate> points;
};

class FitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Point k is sampled with seed derive_seed(config.seed, k). The fringe is a
/// least-squares fit of C + a cos φ_d + b sin φ_d; the standard error is
/// propagated linearly from the binomial variances. Throws FitError when the
/// fitted C is not positive.
VisibilityEstimate estimate_visibility(const ShotConfig& config);

}  // namespace qdiscord
