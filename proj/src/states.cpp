#include "qdiscord/states.hpp"

#include <cmath>
#include <numeric>

namespace qdiscord {

SeparableState SeparableState::create(std::vector<PureComponent> components) {
  double total = 0.0;
  for (const auto& c : components) {
    if (!std::isfinite(c.weight) || c.weight < 0.0) throw std::invalid_argument("component weights must be finite and non-negative");
    if (!std::isfinite(c.a.theta) || !std::isfinite(c.a.phi) || !std::isfinite(c.b.theta) || !std::isfinite(c.b.phi))
      throw std::invalid_argument("component angles must be finite");
    total += c.weight;
  }
  if (std::abs(total - 1.0) > kWeightSumTol) throw std::invalid_argument("component weights must sum to 1");
  std::erase_if(components, [](const PureComponent& c) { return c.weight < kNegligibleWeight; });
  if (components.empty()) throw std::invalid_argument("state needs at least one component");
  return SeparableState(std::move(components));
}

Density4 assemble_density(const SeparableState& state) {
  Mat4 rho = Mat4::Zero();
  for (const auto& c : state.components()) rho += c.weight * tensor(c.a_ket().projector(), c.b_ket().projector());
  rho = 0.5 * (rho + rho.adjoint()).eval();
  return Density4(rho);
}

namespace {

constexpr double kHalfPi = 0.5 * kPi;

PureComponent term(double w, double ta, double pa, double tb) { return {w, {ta, pa}, {tb, 0.0}}; }

}  // namespace

const std::vector<PresetInfo>& preset_catalog() {
  static const std::vector<PresetInfo> catalog = {
      {"fig2a", "", "1/2 |up up><up up| + 1/2 |++><++| (discorded)"},
      {"fig2b", "", "1/2 |++><++| + 1/2 |--><--| (not discorded)"},
      {"phase", "phi2", "1/2 |++;0> + 1/2 |--;phi2> (discorded unless phi2 = 0 mod pi)"},
      {"three", "theta", "1/3 |up up> + 1/3 |down down> + 1/3 |theta theta>"},
      {"rho_theta", "theta", "1/2 |up up> + 1/2 |theta theta>"},
      {"fig6a", "phi", "1/5 |++> + 4/5 |--> with common A phase phi (classically correlated)"},
      {"fig6b", "", "(1/2 |up><up| + 1/2 |+><+|) x |down><down| (uncorrelated)"},
  };
  return catalog;
}

SeparableState preset(std::string_view name, const PresetParams& p) {
  if (name == "fig2a") return SeparableState::create({term(0.5, 0, 0, 0), term(0.5, kHalfPi, 0, kHalfPi)});
  if (name == "fig2b") return SeparableState::create({term(0.5, kHalfPi, 0, kHalfPi), term(0.5, -kHalfPi, 0, -kHalfPi)});
  if (name == "phase") {
    const double phi2 = p.phi2.value_or(kHalfPi);
    return SeparableState::create({term(0.5, kHalfPi, 0, kHalfPi), term(0.5, -kHalfPi, phi2, -kHalfPi)});
  }
  if (name == "three") {
    const double t = p.theta.value_or(kHalfPi);
    const double w = 1.0 / 3.0;
    return SeparableState::create({term(w, 0, 0, 0), term(w, kPi, 0, kPi), term(1.0 - 2.0 * w, t, 0, t)});
  }
  if (name == "rho_theta") {
    const double t = p.theta.value_or(kHalfPi);
    return SeparableState::create({term(0.5, 0, 0, 0), term(0.5, t, 0, t)});
  }
  if (name == "fig6a") {
    const double phi = p.phi.value_or(0.0);
    return SeparableState::create({term(0.2, kHalfPi, phi, kHalfPi), term(0.8, -kHalfPi, phi, -kHalfPi)});
  }
  if (name == "fig6b") return SeparableState::create({term(0.5, 0, 0, kPi), term(0.5, kHalfPi, 0, kPi)});
  throw UnknownPresetError("unknown preset '" + std::string(name) + "'");
}

}  // namespace qdiscord
