#include "qdiscord/protocol.hpp"

#include <cmath>

namespace qdiscord {

namespace {

Mat2 phase_gate(double phase) {
  Mat2 p = Mat2::Zero();
  p(0, 0) = std::polar(1.0, 0.5 * phase);
  p(1, 1) = std::polar(1.0, -0.5 * phase);
  return p;
}

Mat2 hermitize(const Mat2& m) { return 0.5 * (m + m.adjoint()); }

const Mat2& up_projector() {
  static const Mat2 p = (Mat2() << 1, 0, 0, 0).finished();
  return p;
}

}  // namespace

Unitary2 s_matrix(double angle, double phase) {
  const double t = std::cos(0.5 * angle);
  const double r = std::sin(0.5 * angle);
  Mat2 bs;
  bs << r, t, -t, r;
  return Unitary2(bs * phase_gate(phase));
}

Unitary2 detector_matrix(double phi_d) {
  Mat2 bs;
  bs << 1, 1, -1, 1;
  return Unitary2(bs * phase_gate(phi_d) / std::sqrt(2.0));
}

std::optional<ConditionedState> conditioned_state(const SeparableState& state, double beta, double phi_b) {
  const Mat2 sb = s_matrix(beta, phi_b).matrix();
  std::vector<double> weights;
  weights.reserve(state.size());
  double total = 0.0;
  Mat2 rho = Mat2::Zero();
  BlochVector bsum;
  for (const auto& c : state.components()) {
    const double p = std::norm((sb * c.b_ket().amplitudes())(0));
    const double w = c.weight * p;
    weights.push_back(w);
    total += w;
    rho += w * c.a_ket().projector();
    bsum += w * c.a_bloch();
  }
  if (total < kDarkThreshold) return std::nullopt;
  return ConditionedState{Density2(hermitize(rho / total)), std::move(weights), total, bsum};
}

std::optional<Density2> conditioned_density(const Density4& rho, double beta, double phi_b) {
  const Mat4 m = tensor(Mat2::Identity(), up_projector() * s_matrix(beta, phi_b).matrix());
  const Mat2 a = partial_trace(Mat4(m * rho.matrix() * m.adjoint()), Subsystem::B);
  const double total = a.trace().real();
  if (total < kDarkThreshold) return std::nullopt;
  return Density2(hermitize(a / total));
}

double coincidence(const Density4& rho, const EvolutionParams& params, double phi_d) {
  const Mat2 sa = (detector_matrix(phi_d) * s_matrix(params.alpha, params.phi_a)).matrix();
  const Mat4 s = tensor(sa, s_matrix(params.beta, params.phi_b).matrix());
  const Mat4 out = s * rho.matrix() * s.adjoint();
  const Mat4 proj = tensor(up_projector(), up_projector());
  return (proj * out).trace().real();
}

double coincidence(const SeparableState& state, const EvolutionParams& params, double phi_d) {
  return coincidence(assemble_density(state), params, phi_d);
}

double coincidence_conditioned(const SeparableState& state, const EvolutionParams& params, double phi_d) {
  const auto cond = conditioned_state(state, params.beta, params.phi_b);
  if (!cond) return 0.0;
  const Mat2 sa = (detector_matrix(phi_d) * s_matrix(params.alpha, params.phi_a)).matrix();
  return cond->total * (sa * cond->rho.matrix() * sa.adjoint())(0, 0).real();
}

double Fringe::at(double phi_d) const { return offset + 2.0 * (amplitude * std::polar(1.0, phi_d)).real(); }

double Fringe::visibility() const { return 2.0 * std::abs(amplitude) / offset; }

std::optional<Fringe> fringe(const SeparableState& state, const EvolutionParams& params) {
  const auto cond = conditioned_state(state, params.beta, params.phi_b);
  if (!cond) return std::nullopt;
  const Mat2 sa = s_matrix(params.alpha, params.phi_a).matrix();
  const Mat2 rotated = sa * cond->rho.matrix() * sa.adjoint();
  // ⟨↑|S^d = (e^{iφ_d/2}, e^{−iφ_d/2})/√2, so K = (W_B/2)(1 + e^{iφ_d} ρ̂01 + c.c.).
  return Fringe{0.5 * cond->total, 0.5 * cond->total * rotated(0, 1)};
}

double visibility(const Density2& conditioned, double alpha, double phi_a) {
  const Mat2 sa = s_matrix(alpha, phi_a).matrix();
  const Mat2 rotated = sa * conditioned.matrix() * sa.adjoint();
  return 2.0 * std::abs(rotated(0, 1));
}

std::optional<double> visibility(const SeparableState& state, const EvolutionParams& params) {
  const auto cond = conditioned_state(state, params.beta, params.phi_b);
  if (!cond) return std::nullopt;
  return visibility(cond->rho, params.alpha, params.phi_a);
}

}  // namespace qdiscord
