#pragma once

#include "qdiscord/qcore.hpp"

#include <array>

namespace qdiscord {

/// Rank-1 projective measurement {|θ,φ⟩⟨θ,φ|, 1 − |θ,φ⟩⟨θ,φ|}.
struct MeasurementBasis {
  double theta = 0.0;
  double phi = 0.0;

  std::array<Mat2, 2> projectors() const;
};

/// S(ρ^A) + S(ρ^B) − S(ρ^{AB}) in bits.
double mutual_information(const Density4& rho);

/// Σ_μ p_μ S(ρ_{other|Π_μ}) for the measurement applied to `measured`.
/// Outcomes with p_μ < 1e-12 contribute nothing.
double conditional_entropy(const Density4& rho, const MeasurementBasis& basis, Subsystem measured);

struct DiscordResult {
  double discord = 0.0;
  MeasurementBasis basis;            // optimising measurement
  double mutual_information = 0.0;
  double conditional_entropy = 0.0;  // minimised
  Subsystem measured = Subsystem::A;
};

/// min over projective measurements on `measured` of
/// S(other | Π) − [S(ρ^{AB}) − S(ρ^measured)].
///
/// A 64 × 32 (θ_m, φ_m) grid scan is followed by Nelder–Mead refinement from
/// the three best nodes until the simplex shrinks below 1e-6 rad.
DiscordResult discord(const Density4& rho, Subsystem measured);

}  // namespace qdiscord
