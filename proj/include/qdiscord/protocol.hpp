#pragma once

#include "qdiscord/qcore.hpp"
#include "qdiscord/states.hpp"

#include <optional>
#include <vector>

namespace qdiscord {

/// Control parameters of the two interferometers. t_A = cos(α/2), t_B = cos(β/2).
struct EvolutionParams {
  double alpha = 0.0;
  double phi_a = 0.0;
  double beta = 0.0;
  double phi_b = 0.0;
};

/// Conditioned coincidence weight below which a point is "dark".
constexpr double kDarkThreshold = 1e-12;

/// [[r, t], [−t, r]] · exp(iσ3 phase/2) with t = cos(angle/2), r = sin(angle/2).
Unitary2 s_matrix(double angle, double phase);

/// 50:50 detecting interferometer: (1 + iσ2)/√2 · exp(iσ3 φ_d/2).
Unitary2 detector_matrix(double phi_d);

/// State of A conditioned on the B detector firing.
struct ConditionedState {
  Density2 rho;
  std::vector<double> weights;  // w^B_ν = w_ν |⟨↑|S^B|B_ν⟩|²
  double total = 0.0;           // W_B
  BlochVector bloch_sum;        // Σ w^B_ν a_ν

  /// Bloch vector of rho, i.e. bloch_sum / W_B.
  BlochVector bloch() const { return (1.0 / total) * bloch_sum; }
};

/// std::nullopt at a dark point (W_B < 1e-12).
std::optional<ConditionedState> conditioned_state(const SeparableState& state, double beta, double phi_b);

/// Conditioned A state for an arbitrary two-qubit density matrix, without the
/// per-component weights. std::nullopt at a dark point.
std::optional<Density2> conditioned_density(const Density4& rho, double beta, double phi_b);

/// Coincidence rate Tr[(Π↑ ⊗ Π↑) S ρ S†] with S = (S^d S^A) ⊗ S^B, evaluated on
/// the full 4×4 density matrix.
double coincidence(const SeparableState& state, const EvolutionParams& params, double phi_d);
double coincidence(const Density4& rho, const EvolutionParams& params, double phi_d);

/// Same quantity through the conditioned state: W_B ⟨↑|S^d S^A ρ^{A|B} (S^d S^A)†|↑⟩.
double coincidence_conditioned(const SeparableState& state, const EvolutionParams& params, double phi_d);

/// K(φ_d) = C + (A e^{iφ_d} + c.c.).
struct Fringe {
  double offset = 0.0;  // C
  Complex amplitude;    // A

  double at(double phi_d) const;
  /// (K_max − K_min)/(K_max + K_min) = 2|A|/C.
  double visibility() const;
};

/// std::nullopt at a dark point.
std::optional<Fringe> fringe(const SeparableState& state, const EvolutionParams& params);

/// Fringe visibility 2|ρ̂_{↑↓}| with ρ̂ = S^A ρ^{A|B} S^A†; std::nullopt at a dark point.
std::optional<double> visibility(const SeparableState& state, const EvolutionParams& params);
/// Visibility for an already conditioned A state.
double visibility(const Density2& conditioned, double alpha, double phi_a);

}  // namespace qdiscord
